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

#ifndef QDPM_DEADLINE_HPP
#define QDPM_DEADLINE_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>

namespace qdpm {

/// A solver ran past its deadline. lifts() is the work done until then, if
/// the solver reports it.
class SolveTimeout : public std::runtime_error {
public:
    explicit SolveTimeout(std::size_t lifts = 0) : std::runtime_error("solver deadline exceeded"), lifts_(lifts) {}

    std::size_t lifts() const noexcept { return lifts_; }

private:
    std::size_t lifts_;
};

/// Cooperative deadline; solvers poll it at loop boundaries.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}

    static Deadline after(std::chrono::duration<double> d)
    {
        return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(d));
    }

    bool expired() const { return at_ && Clock::now() >= *at_; }
    void check() const
    {
        if (expired()) throw SolveTimeout();
    }

    /// Checks only every `period` calls.
    void tick(std::size_t period = 4096)
    {
        if (at_ && ++ticks_ % period == 0) check();
    }

private:
    std::optional<Clock::time_point> at_;
    std::size_t ticks_ = 0;
};

}  // namespace qdpm

#endif
