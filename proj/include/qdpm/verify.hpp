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

#ifndef QDPM_VERIFY_HPP
#define QDPM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdpm/game.hpp"

namespace qdpm {

/// A retained edge of the induced graph leaves the region under inspection.
class RegionNotClosed : public GameError {
public:
    RegionNotClosed(PositionId from, PositionId to);

    PositionId from;
    PositionId to;
};

/**
 * Looks for a cycle inside `region` whose maximal priority has the parity of
 * for_player's opponent, i.e. a play for_player would lose.
 *
 * Edges of positions owned by for_player are restricted to `strategy` where
 * it is defined. Priorities of the opponent's parity are tried in descending
 * order; for each one the graph is cut down to priorities <= p and a strongly
 * connected component (non-trivial, or a self-loop) containing a p-position
 * is reported as an explicit cycle v0 v1 ... vk with (vk, v0) a move.
 *
 * Throws RegionNotClosed if some retained edge leaves the region.
 */
std::optional<Path> bad_cycle(const ParityGame& game,
                              const PositionSet& region,
                              Player for_player,
                              const Strategy* strategy = nullptr);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> diagnostics;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks that `strategy` wins every play from `region` for `player`: it is
/// defined and stays inside on player positions, opponent moves cannot
/// leave, and the induced graph has no losing cycle.
VerifyResult verify_winning(const ParityGame& game,
                            Player player,
                            const PositionSet& region,
                            const Strategy& strategy);

}  // namespace qdpm

#endif
