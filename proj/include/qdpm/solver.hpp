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

#ifndef QDPM_SOLVER_HPP
#define QDPM_SOLVER_HPP

#include <chrono>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdpm/deadline.hpp"
#include "qdpm/game.hpp"
#include "qdpm/measure.hpp"

namespace qdpm {

/// Positions classified by their measure truncated at themselves.
struct Denotations {
    PositionSet top;     // truncated measure is Top
    PositionSet bottom;  // truncated measure is bottom
    PositionSet plus;    // complement of bottom
};

Denotations denotations(const MeasureFunction& mu, const ParityGame& game);

/// lift() was asked to update a position with no successor in the target set.
class EmptySuccessorSelection : public std::logic_error {
public:
    explicit EmptySuccessorSelection(PositionId v);
    PositionId position;
};

/// An escape forfeit was requested for a position or successor at Top.
class TopOperand : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Measure difference a position incurs by leaving a region, or Top for
 * positions that do not escape. Finite forfeits may have negative entries.
 */
class Forfeit {
public:
    static Forfeit top() { return Forfeit(); }
    static Forfeit finite(Evaluation e) { return Forfeit(std::move(e)); }

    bool is_top() const noexcept { return !value_.has_value(); }
    const Evaluation& evaluation() const { return value_.value(); }

    friend std::strong_ordering operator<=>(const Forfeit& a, const Forfeit& b);
    friend bool operator==(const Forfeit& a, const Forfeit& b) { return a.value_ == b.value_; }

    std::string to_string() const { return is_top() ? "⊤" : value_->to_string(); }

private:
    Forfeit() = default;
    explicit Forfeit(Evaluation e) : value_(std::move(e)) {}

    std::optional<Evaluation> value_;
};

/// Updates positions in `update`: Even ones take the max, Odd ones the min,
/// of the stretches of their successors in `targets`. Others keep their measure.
MeasureFunction lift(const MeasureFunction& mu, const PositionSet& update, const PositionSet& targets,
                     const ParityGame& game);

/// Lifts every bottom-denotation position over all of its successors.
MeasureFunction progress_bottom(const MeasureFunction& mu, const ParityGame& game);

/// Positions of `region` whose owner wants or has to leave it under mu.
PositionSet escapes(const MeasureFunction& mu, const PositionSet& region, const ParityGame& game);

/// Best escape forfeit of v in `region`.
Forfeit escape_forfeit(const MeasureFunction& mu, const PositionSet& region, PositionId v, const ParityGame& game);

/// Escape positions of minimal forfeit; empty when nothing escapes.
PositionSet best_escapes(const MeasureFunction& mu, const PositionSet& region, const ParityGame& game);

/// One extraction round inside progress_plus.
struct ExtractionRound {
    std::vector<PositionId> extracted;
    Forfeit forfeit = Forfeit::top();
};

/**
 * The quasi-dominion progress operator, computed literally from escapes()
 * and best_escapes(): positions leave the current non-bottom region in
 * order of increasing forfeit and are lifted over the outside; whatever is
 * left when nothing escapes becomes Top. `rounds`, if given, receives the
 * extraction rounds in order.
 */
MeasureFunction progress_plus(const MeasureFunction& mu, const ParityGame& game,
                              std::vector<ExtractionRound>* rounds = nullptr);

struct SolveStats {
    std::size_t macro_iterations = 0;
    std::size_t lifts = 0;            // stored measure changes
    std::size_t prg_plus_rounds = 0;  // extraction rounds over all progress_plus calls
    std::chrono::duration<double, std::milli> wall_time{0};
};

enum class Operator { ProgressBottom, ProgressPlus };

std::string to_string(Operator op);

/// One operator application inside solve().
struct TraceEvent {
    Operator op;
    std::size_t macro_iteration;
    std::size_t set_size;  // |bottom| for ProgressBottom, |plus| for ProgressPlus
    std::vector<std::pair<PositionId, Measure>> changes;
    std::vector<ExtractionRound> rounds;  // ProgressPlus only
};

/// Renders one event per line in tuple notation, using position labels.
void write_trace(std::ostream& os, const ParityGame& game, const std::vector<TraceEvent>& events);

struct SolveOptions {
    Deadline deadline;
    bool record_trace = false;
    /// Called after every operator application with the functions before and after.
    std::function<void(Operator, const MeasureFunction&, const MeasureFunction&)> observer;
};

struct Solution {
    PositionSet w_even;
    PositionSet w_odd;
    MeasureFunction final_measure;
    Strategy odd_strategy;   // on w_odd ∩ Odd positions, coherent with final_measure
    Strategy even_strategy;  // on w_even ∩ Even positions
    SolveStats stats;
    std::vector<TraceEvent> trace;  // filled when SolveOptions::record_trace
};

/**
 * Solves a validated game: iterates progress_plus ∘ progress_bottom from the
 * bottom function up to its inflationary fixpoint. Top positions are won by
 * Even, all others by Odd.
 *
 * Throws SolveTimeout when the deadline passes.
 */
Solution solve(const ParityGame& game, const SolveOptions& options = {});

/// Odd strategy choosing, at every non-Top Odd position, the smallest
/// successor whose stretch does not exceed the position's measure.
/// Throws std::logic_error (NoCoherentMove) if some position has none.
Strategy extract_odd_strategy(const MeasureFunction& mu, const ParityGame& game);

/// Winning Even strategy on an Even dominion, from the recursive oracle on
/// the induced subgame.
Strategy extract_even_strategy(const ParityGame& game, const PositionSet& w_even);

struct CheckResult {
    bool ok = true;
    std::optional<PositionId> position;  // first violating position
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

/// Even positions cannot increase along any move; Odd positions have a
/// move that does not increase.
CheckResult check_progress_measure(const MeasureFunction& mu, const ParityGame& game);

/// On plus \ top: Even positions have a move that does not decrease; Odd
/// positions decrease along no move.
CheckResult check_regress_measure(const MeasureFunction& mu, const ParityGame& game);

}  // namespace qdpm

#endif
