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

#include <deque>
#include <stdexcept>

#include "qdpm/oracles.hpp"

namespace qdpm {

PositionSet attractor(const ParityGame& game, Player player, const PositionSet& target, const PositionSet* within,
                      Strategy* strategy)
{
    const auto n = game.size();
    const PositionSet all = within ? PositionSet() : PositionSet::full(n);
    const PositionSet& arena = within ? *within : all;

    PositionSet attr(n);
    std::deque<PositionId> queue;
    for (auto v : target.ids()) {
        if (!arena.contains(v)) continue;
        attr.insert(v);
        queue.push_back(v);
    }
    // remaining escape moves of opponent positions
    std::vector<std::size_t> remaining(n, 0);
    for (auto v : arena.ids()) {
        if (game.owner(v) == player) continue;
        for (auto w : game.successors(v)) {
            if (arena.contains(w)) ++remaining[v];
        }
    }
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        for (auto v : game.predecessors(w)) {
            if (!arena.contains(v) || attr.contains(v)) continue;
            if (game.owner(v) == player) {
                if (strategy) strategy->set(v, w);
            } else if (--remaining[v] > 0) {
                continue;
            }
            attr.insert(v);
            queue.push_back(v);
        }
    }
    return attr;
}

namespace {

class Recursive {
public:
    Recursive(const ParityGame& game, Deadline deadline) : game_(game), deadline_(deadline) {}

    OracleSolution solve(const PositionSet& arena)
    {
        ++calls_;
        deadline_.check();
        const auto n = game_.size();
        OracleSolution out{PositionSet(n), PositionSet(n), Strategy(n), Strategy(n), 0};
        if (arena.empty()) return out;

        Priority top = 0;
        for (auto v : arena.ids()) top = std::max(top, game_.priority(v));
        const Player alpha = parity_player(top);
        const Player beta = opponent(alpha);

        PositionSet heads(n);
        for (auto v : arena.ids()) {
            if (game_.priority(v) == top) heads.insert(v);
        }
        Strategy attract_alpha(n);
        auto attr = attractor(game_, alpha, heads, &arena, &attract_alpha);
        auto sub = solve(set_difference(arena, attr));

        if (region(sub, beta).empty()) {
            region(out, alpha) = arena;
            auto& sigma = strategy(out, alpha);
            copy(strategy(sub, alpha), sigma);
            copy(attract_alpha, sigma);
            for (auto v : heads.ids()) {
                if (game_.owner(v) != alpha) continue;
                for (auto w : game_.successors(v)) {
                    if (arena.contains(w)) {
                        sigma.set(v, w);
                        break;
                    }
                }
            }
            return out;
        }

        Strategy attract_beta(n);
        auto lost = attractor(game_, beta, region(sub, beta), &arena, &attract_beta);
        auto rest = solve(set_difference(arena, lost));
        region(out, alpha) = region(rest, alpha);
        copy(strategy(rest, alpha), strategy(out, alpha));
        region(out, beta) = set_union(region(rest, beta), lost);
        auto& sigma = strategy(out, beta);
        copy(strategy(rest, beta), sigma);
        copy(attract_beta, sigma);
        copy(strategy(sub, beta), sigma);
        return out;
    }

    std::size_t calls() const { return calls_; }

private:
    static PositionSet& region(OracleSolution& s, Player p) { return p == Player::Even ? s.w_even : s.w_odd; }
    static Strategy& strategy(OracleSolution& s, Player p) { return p == Player::Even ? s.even_strategy : s.odd_strategy; }

    static void copy(const Strategy& from, Strategy& to)
    {
        for (auto v : from.domain()) to.set(v, *from.at(v));
    }

    const ParityGame& game_;
    Deadline deadline_;
    std::size_t calls_ = 0;
};

}  // namespace

OracleSolution zielonka(const ParityGame& game, Deadline deadline)
{
    Recursive rec(game, deadline);
    auto out = rec.solve(PositionSet::full(game.size()));
    out.recursive_calls = rec.calls();
    // keep only choices inside each player's own region
    for (auto v : out.even_strategy.domain()) {
        if (!out.w_even.contains(v) || game.owner(v) != Player::Even) out.even_strategy.clear(v);
    }
    for (auto v : out.odd_strategy.domain()) {
        if (!out.w_odd.contains(v) || game.owner(v) != Player::Odd) out.odd_strategy.clear(v);
    }
    return out;
}

Strategy dominion_strategy(const ParityGame& game, Player player, const PositionSet& region)
{
    Strategy sigma(game.size());
    if (region.empty()) return sigma;
    auto sub = restrict_to(game, region);
    if (!sub.ok()) throw std::logic_error("region is not closed: " + sub.violations.front().describe());
    auto result = zielonka(sub.subgame->game);
    const auto& won = player == Player::Even ? result.w_even : result.w_odd;
    if (won.size() != region.size()) throw std::logic_error("region is not a " + to_string(player) + " dominion");
    const auto& local = player == Player::Even ? result.even_strategy : result.odd_strategy;
    const auto& ids = sub.subgame->original_id;
    for (auto v : local.domain()) sigma.set(ids[v], ids[*local.at(v)]);
    return sigma;
}

}  // namespace qdpm
