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

#ifndef QDPM_ORACLES_HPP
#define QDPM_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "qdpm/deadline.hpp"
#include "qdpm/game.hpp"

namespace qdpm {

/**
 * Least superset of `target` (inside `within`, or the whole game) from which
 * `player` can force a visit to `target`. Moves leaving `within` are
 * ignored. If `strategy` is given it receives an attracting move for every
 * player position added outside the target.
 */
PositionSet attractor(const ParityGame& game, Player player, const PositionSet& target,
                      const PositionSet* within = nullptr, Strategy* strategy = nullptr);

struct OracleSolution {
    PositionSet w_even;
    PositionSet w_odd;
    Strategy even_strategy;
    Strategy odd_strategy;
    std::size_t recursive_calls = 0;
};

/// Recursive (McNaughton/Zielonka) algorithm with winning strategies.
OracleSolution zielonka(const ParityGame& game, Deadline deadline = {});

struct SpmSolution {
    PositionSet w_even;
    PositionSet w_odd;
    std::size_t lifts = 0;          // successful measure increases
    std::size_t lift_attempts = 0;
};

/**
 * Small progress measures, dualised so that Top marks Even's region: the
 * tuples count even priorities (each bounded by how many positions carry
 * that priority), Even positions take the max and Odd positions the min of
 * the progressed successor measures. Worklist least-fixpoint iteration.
 */
SpmSolution spm(const ParityGame& game, Deadline deadline = {});

/// Winning strategy for `player` on `region`, from the recursive oracle on
/// the induced subgame. Throws std::logic_error if the subgame has a sink or
/// `player` does not win all of it.
Strategy dominion_strategy(const ParityGame& game, Player player, const PositionSet& region);

/// brute_force() would exceed its strategy-pair budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Regions {
    PositionSet w_even;
    PositionSet w_odd;
};

/// Exact regions by enumerating every pair of positional strategies.
/// Throws BudgetExceeded when the product of out-degrees exceeds `budget`.
Regions brute_force(const ParityGame& game, std::uint64_t budget = 1'000'000);

}  // namespace qdpm

#endif
