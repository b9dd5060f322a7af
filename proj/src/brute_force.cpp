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

#include <vector>

#include "qdpm/oracles.hpp"

namespace qdpm {

namespace {

// Winner of the play from every start under the successor function `next`.
std::vector<Player> play_winners(const ParityGame& game, const std::vector<PositionId>& next)
{
    const auto n = game.size();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current walk, 2 resolved
    std::vector<Player> winner(n, Player::Even);
    std::vector<PositionId> walk;
    for (PositionId s = 0; s < n; ++s) {
        if (state[s] == 2) continue;
        walk.clear();
        auto v = s;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = next[v];
        }
        Player result;
        if (state[v] == 1) {
            // new cycle closes at v
            Priority top = game.priority(v);
            for (auto u = next[v]; u != v; u = next[u]) top = std::max(top, game.priority(u));
            result = parity_player(top);
        } else {
            result = winner[v];
        }
        for (auto u : walk) {
            winner[u] = result;
            state[u] = 2;
        }
    }
    return winner;
}

}  // namespace

Regions brute_force(const ParityGame& game, std::uint64_t budget)
{
    const auto n = game.size();
    std::uint64_t product = 1;
    for (PositionId v = 0; v < n; ++v) {
        const auto deg = game.successors(v).size();
        if (deg == 0) throw GameError("brute_force needs a sink-free game");
        if (product > budget / deg) throw BudgetExceeded("strategy pairs exceed budget of " + std::to_string(budget));
        product *= deg;
    }

    std::vector<PositionId> even_positions, odd_positions;
    for (PositionId v = 0; v < n; ++v) (game.owner(v) == Player::Even ? even_positions : odd_positions).push_back(v);

    // Odometer over the choices of one player.
    auto advance = [&](const std::vector<PositionId>& owned, std::vector<std::size_t>& idx) {
        for (auto i = owned.size(); i-- > 0;) {
            if (++idx[i] < game.successors(owned[i]).size()) return true;
            idx[i] = 0;
        }
        return false;
    };

    std::vector<bool> even_wins(n, false);
    std::vector<std::size_t> even_idx(even_positions.size(), 0);
    std::vector<PositionId> next(n);
    do {
        for (std::size_t i = 0; i < even_positions.size(); ++i) {
            next[even_positions[i]] = game.successors(even_positions[i])[even_idx[i]];
        }
        std::vector<bool> survives(n, true);  // Even wins from v against every Odd reply so far
        std::vector<std::size_t> odd_idx(odd_positions.size(), 0);
        do {
            for (std::size_t i = 0; i < odd_positions.size(); ++i) {
                next[odd_positions[i]] = game.successors(odd_positions[i])[odd_idx[i]];
            }
            auto winner = play_winners(game, next);
            for (PositionId v = 0; v < n; ++v) {
                if (winner[v] == Player::Odd) survives[v] = false;
            }
        } while (advance(odd_positions, odd_idx));
        for (PositionId v = 0; v < n; ++v) {
            if (survives[v]) even_wins[v] = true;
        }
    } while (advance(even_positions, even_idx));

    Regions out{PositionSet(n), PositionSet(n)};
    for (PositionId v = 0; v < n; ++v) (even_wins[v] ? out.w_even : out.w_odd).insert(v);
    return out;
}

}  // namespace qdpm
