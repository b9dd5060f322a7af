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

#include "qdpm/verify.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qdpm {

RegionNotClosed::RegionNotClosed(PositionId from_, PositionId to_)
    : GameError("edge (" + std::to_string(from_) + ", " + std::to_string(to_) + ") leaves the region"),
      from(from_),
      to(to_)
{
}

namespace {

using Adjacency = std::vector<std::vector<PositionId>>;

// Iterative Tarjan over the vertices flagged in `alive`; returns component ids (or -1).
std::vector<int> strongly_connected(const Adjacency& adj, const std::vector<bool>& alive)
{
    const auto n = adj.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<PositionId> stack;
    std::vector<std::pair<PositionId, std::size_t>> call;
    int next_index = 0, next_comp = 0;

    for (PositionId root = 0; root < n; ++root) {
        if (!alive[root] || index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < adj[v].size()) {
                auto w = adj[v][i++];
                if (!alive[w]) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                while (true) {
                    auto w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if (w == v) break;
                }
                ++next_comp;
            }
            auto done = v;
            call.pop_back();
            if (!call.empty()) {
                auto parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

// Shortest cycle through `start` staying inside component `c`.
Path cycle_through(const Adjacency& adj, const std::vector<int>& comp, PositionId start)
{
    const int c = comp[start];
    std::vector<PositionId> parent(adj.size(), static_cast<PositionId>(-1));
    std::vector<bool> seen(adj.size(), false);
    std::deque<PositionId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v]) {
            if (comp[w] != c) continue;
            if (w == start) {
                Path cycle{v};
                while (cycle.back() != start) cycle.push_back(parent[cycle.back()]);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return {};
}

}  // namespace

std::optional<Path> bad_cycle(const ParityGame& game, const PositionSet& region, Player for_player, const Strategy* strategy)
{
    const auto n = game.size();
    if (region.universe() != n) throw std::invalid_argument("region does not match game size");

    Adjacency adj(n);
    std::set<Priority, std::greater<>> losing;
    for (auto v : region.ids()) {
        if (game.owner(v) == for_player && strategy != nullptr && strategy->defined(v)) {
            adj[v] = {*strategy->at(v)};
        } else {
            adj[v] = game.successors(v);
        }
        for (auto w : adj[v]) {
            if (!region.contains(w)) throw RegionNotClosed(v, w);
        }
        if (parity_player(game.priority(v)) != for_player) losing.insert(game.priority(v));
    }

    for (auto p : losing) {
        std::vector<bool> alive(n, false);
        for (auto v : region.ids()) alive[v] = game.priority(v) <= p;
        auto comp = strongly_connected(adj, alive);
        std::vector<std::size_t> comp_size;
        for (PositionId v = 0; v < n; ++v) {
            if (comp[v] < 0) continue;
            if (comp_size.size() <= static_cast<std::size_t>(comp[v])) comp_size.resize(comp[v] + 1, 0);
            ++comp_size[comp[v]];
        }
        for (auto v : region.ids()) {
            if (!alive[v] || game.priority(v) != p) continue;
            bool self_loop = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
            if (self_loop) return Path{v};
            if (comp_size[comp[v]] > 1) return cycle_through(adj, comp, v);
        }
    }
    return std::nullopt;
}

VerifyResult verify_winning(const ParityGame& game, Player player, const PositionSet& region, const Strategy& strategy)
{
    VerifyResult result;
    auto fail = [&](std::string msg) {
        result.ok = false;
        result.diagnostics.push_back(std::move(msg));
    };
    if (region.universe() != game.size()) {
        fail("region does not match game size");
        return result;
    }
    for (auto v : region.ids()) {
        if (game.owner(v) == player) {
            auto w = strategy.at(v);
            if (!w) {
                fail("no strategy choice at " + game.label(v));
            } else if (!game.has_move(v, *w)) {
                fail("strategy move (" + game.label(v) + ", " + std::to_string(*w) + ") is not a move");
            } else if (!region.contains(*w)) {
                fail("strategy move (" + game.label(v) + ", " + game.label(*w) + ") leaves the region");
            }
        } else {
            for (auto w : game.successors(v)) {
                if (!region.contains(w)) {
                    fail("opponent move (" + game.label(v) + ", " + game.label(w) + ") leaves the region");
                }
            }
        }
    }
    if (!result.ok) return result;

    auto cycle = bad_cycle(game, region, player, &strategy);
    if (cycle) {
        std::string text = "losing cycle:";
        for (auto v : *cycle) text += " " + game.label(v);
        fail(std::move(text));
    }
    return result;
}

}  // namespace qdpm
