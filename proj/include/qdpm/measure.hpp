/*
 * Copyright 2026 The qdpm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QDPM_MEASURE_HPP
#define QDPM_MEASURE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "qdpm/game.hpp"

namespace qdpm {

/**
 * An integer vector indexed by priority 0..d.
 *
 * Evaluations form a totally ordered Abelian group under point-wise
 * addition and the alternate lexicographic order: the highest index where
 * two vectors differ decides, with even indices ordered by increasing value
 * and odd indices by decreasing value. Arithmetic is checked and throws
 * std::overflow_error.
 */
class Evaluation {
public:
    Evaluation() = default;
    explicit Evaluation(std::size_t length) : values_(length, 0) {}

    /// Builds from tuple notation, highest priority first: {a_d, ..., a_0}.
    static Evaluation from_tuple(std::initializer_list<std::int64_t> high_to_low);
    static Evaluation from_tuple(const std::vector<std::int64_t>& high_to_low);

    std::size_t size() const noexcept { return values_.size(); }

    /// Entry at the given priority.
    std::int64_t operator[](Priority p) const { return values_.at(p); }
    std::int64_t& operator[](Priority p) { return values_.at(p); }

    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    bool is_zero() const noexcept;

    /// Highest priority with a non-zero entry, or -1 for the zero vector.
    std::int64_t highest_nonzero() const noexcept;

    Evaluation operator-() const;
    Evaluation& operator+=(const Evaluation& other);
    Evaluation& operator-=(const Evaluation& other);
    friend Evaluation operator+(Evaluation a, const Evaluation& b) { return a += b; }
    friend Evaluation operator-(Evaluation a, const Evaluation& b) { return a -= b; }

    /// Alternate lexicographic order. Throws std::invalid_argument on a length mismatch.
    friend std::strong_ordering operator<=>(const Evaluation& a, const Evaluation& b);
    friend bool operator==(const Evaluation& a, const Evaluation& b) { return a.values_ == b.values_; }

    /// "(a_d, ..., a_0)".
    std::string to_string() const;

private:
    std::vector<std::int64_t> values_;
};

/// Kronecker delta of the given length: 1 at priority p, 0 elsewhere.
Evaluation delta(Priority p, std::size_t length);

/// Membership in the non-negative measure set: every entry >= 0 and either the
/// zero vector or the highest non-zero entry sits at an even priority.
bool is_valid_measure(const Evaluation& e) noexcept;

/**
 * A measure: a valid evaluation or the distinguished maximum Top.
 * Bottom is the zero evaluation.
 */
class Measure {
public:
    Measure() = default;  // zero-length bottom

    static Measure top() { return Measure(true, {}); }
    static Measure bottom(std::size_t length) { return Measure(false, Evaluation(length)); }
    static Measure finite(Evaluation e);

    bool is_top() const noexcept { return top_; }
    bool is_bottom() const noexcept { return !top_ && value_.is_zero(); }

    /// The underlying evaluation; throws std::logic_error on Top.
    const Evaluation& evaluation() const;

    friend std::strong_ordering operator<=>(const Measure& a, const Measure& b);
    friend bool operator==(const Measure& a, const Measure& b)
    {
        return a.top_ == b.top_ && (a.top_ || a.value_ == b.value_);
    }

    /// Tuple notation, or "⊤".
    std::string to_string() const;

private:
    Measure(bool top, Evaluation e) : top_(top), value_(std::move(e)) {}

    friend Measure truncate(const Measure& m, Priority p);
    friend Measure stretch(const Measure& m, Priority p);

    bool top_ = false;
    Evaluation value_;
};

std::ostream& operator<<(std::ostream& os, const Evaluation& e);
std::ostream& operator<<(std::ostream& os, const Measure& m);

/// m restricted at a position of priority p: entries below p are zeroed; Top stays Top.
Measure truncate(const Measure& m, Priority p);

/// m stretched by a position of priority p: max{bottom, m + delta_p}; Top stays Top.
Measure stretch(const Measure& m, Priority p);

/// Measure of a finite path: stretches folded right to left from bottom.
Measure path_measure(const ParityGame& game, const Path& path);

/// Total map from positions to measures, ordered point-wise.
class MeasureFunction {
public:
    MeasureFunction() = default;
    explicit MeasureFunction(std::vector<Measure> values) : values_(std::move(values)) {}

    /// Every position at bottom, with evaluations of length max_priority + 1.
    static MeasureFunction bottom(const ParityGame& game);

    std::size_t size() const noexcept { return values_.size(); }
    const Measure& operator[](PositionId v) const { return values_[v]; }
    Measure& operator[](PositionId v) { return values_[v]; }
    const std::vector<Measure>& values() const noexcept { return values_; }

    bool operator==(const MeasureFunction&) const = default;

private:
    std::vector<Measure> values_;
};

/// Point-wise order on measure functions of equal size.
bool pointwise_leq(const MeasureFunction& a, const MeasureFunction& b);

}  // namespace qdpm

#endif
