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

#include "qdpm/measure.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qdpm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("evaluation entry overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("evaluation entry overflow");
    return r;
}

void require_same_length(const Evaluation& a, const Evaluation& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("evaluation length mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
}

// Sign of e relative to the zero vector under the alternate lexicographic order.
int sign(const Evaluation& e) noexcept
{
    auto h = e.highest_nonzero();
    if (h < 0) return 0;
    auto x = e.values()[static_cast<std::size_t>(h)];
    int s = x > 0 ? 1 : -1;
    return (h % 2 == 0) ? s : -s;
}

}  // namespace

Evaluation Evaluation::from_tuple(std::initializer_list<std::int64_t> high_to_low)
{
    return from_tuple(std::vector<std::int64_t>(high_to_low));
}

Evaluation Evaluation::from_tuple(const std::vector<std::int64_t>& high_to_low)
{
    Evaluation e(high_to_low.size());
    for (std::size_t i = 0; i < high_to_low.size(); ++i) e.values_[high_to_low.size() - 1 - i] = high_to_low[i];
    return e;
}

bool Evaluation::is_zero() const noexcept
{
    for (auto x : values_) {
        if (x != 0) return false;
    }
    return true;
}

std::int64_t Evaluation::highest_nonzero() const noexcept
{
    for (auto i = static_cast<std::int64_t>(values_.size()) - 1; i >= 0; --i) {
        if (values_[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

Evaluation Evaluation::operator-() const
{
    Evaluation out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = checked_sub(0, values_[i]);
    return out;
}

Evaluation& Evaluation::operator+=(const Evaluation& other)
{
    require_same_length(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_add(values_[i], other.values_[i]);
    return *this;
}

Evaluation& Evaluation::operator-=(const Evaluation& other)
{
    require_same_length(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_sub(values_[i], other.values_[i]);
    return *this;
}

std::strong_ordering operator<=>(const Evaluation& a, const Evaluation& b)
{
    require_same_length(a, b);
    for (auto i = a.values_.size(); i-- > 0;) {
        auto x = a.values_[i], y = b.values_[i];
        if (x == y) continue;
        bool less = (i % 2 == 0) ? x < y : y < x;
        return less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Evaluation::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (auto i = values_.size(); i-- > 0;) {
        os << values_[i];
        if (i) os << ", ";
    }
    os << ')';
    return os.str();
}

Evaluation delta(Priority p, std::size_t length)
{
    if (p >= length) {
        throw std::out_of_range("priority " + std::to_string(p) + " outside evaluation of length " +
                                std::to_string(length));
    }
    Evaluation e(length);
    e[p] = 1;
    return e;
}

bool is_valid_measure(const Evaluation& e) noexcept
{
    for (auto x : e.values()) {
        if (x < 0) return false;
    }
    auto h = e.highest_nonzero();
    return h < 0 || h % 2 == 0;
}

Measure Measure::finite(Evaluation e)
{
    assert(is_valid_measure(e) && "evaluation outside the measure set");
    return Measure(false, std::move(e));
}

const Evaluation& Measure::evaluation() const
{
    if (top_) throw std::logic_error("Top has no evaluation");
    return value_;
}

std::strong_ordering operator<=>(const Measure& a, const Measure& b)
{
    if (a.top_ || b.top_) {
        if (a.top_ && b.top_) return std::strong_ordering::equal;
        return a.top_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value_ <=> b.value_;
}

std::string Measure::to_string() const
{
    return top_ ? "⊤" : value_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Evaluation& e)
{
    return os << e.to_string();
}

std::ostream& operator<<(std::ostream& os, const Measure& m)
{
    return os << m.to_string();
}

Measure truncate(const Measure& m, Priority p)
{
    if (m.top_) return m;
    Measure out = m;
    auto& vals = out.value_;
    for (Priority i = 0; i < p && i < vals.size(); ++i) vals[i] = 0;
    return out;
}

Measure stretch(const Measure& m, Priority p)
{
    if (m.top_) return m;
    if (p >= m.value_.size()) {
        throw std::out_of_range("priority " + std::to_string(p) + " outside measure of length " +
                                std::to_string(m.value_.size()));
    }
    Measure out = m;
    out.value_[p] = checked_add(out.value_[p], 1);
    if (sign(out.value_) < 0) return Measure::bottom(m.value_.size());
    return out;
}

Measure path_measure(const ParityGame& game, const Path& path)
{
    auto m = Measure::bottom(static_cast<std::size_t>(game.max_priority()) + 1);
    for (auto it = path.rbegin(); it != path.rend(); ++it) m = stretch(m, game.priority(*it));
    return m;
}

MeasureFunction MeasureFunction::bottom(const ParityGame& game)
{
    const auto len = static_cast<std::size_t>(game.max_priority()) + 1;
    return MeasureFunction(std::vector<Measure>(game.size(), Measure::bottom(len)));
}

bool pointwise_leq(const MeasureFunction& a, const MeasureFunction& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("measure functions of different size");
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[static_cast<PositionId>(v)] > b[static_cast<PositionId>(v)]) return false;
    }
    return true;
}

}  // namespace qdpm
