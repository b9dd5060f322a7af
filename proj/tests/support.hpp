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

#ifndef QDPM_TESTS_SUPPORT_HPP
#define QDPM_TESTS_SUPPORT_HPP

// Builders and brute-force oracles shared by the test binaries. Everything
// here is deliberately naive: it enumerates instead of reasoning.

#include <cstdint>
#include <functional>
#include <random>
#include <tuple>
#include <vector>

#include "qdpm/game.hpp"
#include "qdpm/gamegen.hpp"
#include "qdpm/measure.hpp"

namespace qdpm::testing {

using Spec = std::tuple<Priority, Player, std::vector<PositionId>>;

inline ParityGame make_game(const std::vector<Spec>& specs)
{
    std::vector<Position> positions;
    for (const auto& [prio, owner, succ] : specs) positions.push_back({prio, owner, succ, {}});
    return ParityGame::checked(std::move(positions));
}

inline PositionSet set_of(std::size_t universe, std::vector<PositionId> ids)
{
    return PositionSet(universe, ids);
}

inline ParityGame small_random_game(std::uint64_t seed, std::size_t n_max, std::size_t outdeg_max = 4,
                                    std::size_t n_min = 1)
{
    std::mt19937_64 rng(seed);
    GenParams p;
    p.n = n_min + rng() % (n_max - n_min + 1);
    p.max_prio = static_cast<Priority>(rng() % (p.n + 1));
    p.outdeg_min = 1;
    p.outdeg_max = outdeg_max;
    p.seed = seed;
    return random_game(p);
}

/// Calls `visit` for every simple cycle v0..vk (listed from its least id)
/// using only positions of `region` and moves allowed by `allowed`.
inline void for_each_simple_cycle(const ParityGame& game, const PositionSet& region,
                                  const std::function<bool(PositionId, PositionId)>& allowed,
                                  const std::function<void(const Path&)>& visit)
{
    const auto n = game.size();
    Path path;
    std::vector<bool> on_path(n, false);
    std::function<void(PositionId, PositionId)> extend = [&](PositionId start, PositionId v) {
        for (auto w : game.successors(v)) {
            if (!region.contains(w) || !allowed(v, w) || w < start) continue;
            if (w == start) {
                visit(path);
            } else if (!on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                extend(start, w);
                path.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (PositionId s = 0; s < n; ++s) {
        if (!region.contains(s)) continue;
        path = {s};
        on_path[s] = true;
        extend(s, s);
        on_path[s] = false;
    }
}

/// True iff some cycle in the region (under the strategy, if any) has a
/// maximal priority of the opponent's parity.
inline bool has_bad_cycle_oracle(const ParityGame& game, const PositionSet& region, Player for_player,
                                 const Strategy* strategy)
{
    auto allowed = [&](PositionId v, PositionId w) {
        if (strategy && game.owner(v) == for_player && strategy->defined(v)) return *strategy->at(v) == w;
        return true;
    };
    bool found = false;
    for_each_simple_cycle(game, region, allowed, [&](const Path& cycle) {
        Priority top = 0;
        for (auto v : cycle) top = std::max(top, game.priority(v));
        if (parity_player(top) != for_player) found = true;
    });
    return found;
}

/// Every simple path starting at `from` whose positions all lie in `within`
/// (including the trivial one-position path).
inline void for_each_simple_path(const ParityGame& game, PositionId from, const PositionSet& within,
                                 const std::function<void(const Path&)>& visit)
{
    if (!within.contains(from)) return;
    Path path{from};
    std::vector<bool> on_path(game.size(), false);
    on_path[from] = true;
    std::function<void()> extend = [&] {
        visit(path);
        for (auto w : game.successors(path.back())) {
            if (!within.contains(w) || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            extend();
            path.pop_back();
            on_path[w] = false;
        }
    };
    extend();
}

inline Evaluation random_evaluation(std::mt19937_64& rng, std::size_t length, std::int64_t lo, std::int64_t hi)
{
    Evaluation e(length);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    for (Priority p = 0; p < length; ++p) e[p] = dist(rng);
    return e;
}

/// A valid finite measure: random non-negative entries, then entries above a
/// random even cut-off are zeroed so the highest non-zero index is even.
inline Evaluation random_measure_evaluation(std::mt19937_64& rng, std::size_t length, std::int64_t hi = 3)
{
    auto e = random_evaluation(rng, length, 0, hi);
    auto top = static_cast<Priority>(rng() % length);
    if (top % 2 == 1) --top;
    for (Priority p = top + 1; p < length; ++p) e[p] = 0;
    for (auto h = e.highest_nonzero(); h >= 0 && h % 2 == 1; h = e.highest_nonzero()) e[static_cast<Priority>(h)] = 0;
    if (rng() % 4 == 0) e = Evaluation(length);
    return e;
}

inline Measure random_measure(std::mt19937_64& rng, std::size_t length, bool allow_top = true)
{
    if (allow_top && rng() % 10 == 0) return Measure::top();
    return Measure::finite(random_measure_evaluation(rng, length));
}

}  // namespace qdpm::testing

#endif
