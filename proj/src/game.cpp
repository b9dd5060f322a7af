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

#include "qdpm/game.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace qdpm {

std::string to_string(Player p)
{
    return p == Player::Even ? "Even" : "Odd";
}

ParityGame::ParityGame(std::vector<Position> positions) : positions_(std::move(positions))
{
    const auto n = positions_.size();
    predecessors_.assign(n, {});
    for (auto& pos : positions_) {
        // parallel edges collapse; first occurrence wins
        std::vector<PositionId> unique;
        unique.reserve(pos.successors.size());
        std::unordered_set<PositionId> seen;
        for (auto w : pos.successors) {
            if (seen.insert(w).second) unique.push_back(w);
        }
        pos.successors = std::move(unique);
        max_priority_ = std::max(max_priority_, pos.priority);
    }
    for (PositionId v = 0; v < n; ++v) {
        for (auto w : positions_[v].successors) {
            if (w < n) predecessors_[w].push_back(v);
        }
    }
}

ParityGame ParityGame::checked(std::vector<Position> positions)
{
    ParityGame game(std::move(positions));
    auto violations = validate(game);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid game:";
        for (const auto& v : violations) msg << ' ' << v.describe() << ';';
        throw GameError(msg.str());
    }
    return game;
}

bool ParityGame::has_move(PositionId from, PositionId to) const
{
    const auto& succ = positions_.at(from).successors;
    return std::find(succ.begin(), succ.end(), to) != succ.end();
}

std::string ParityGame::label(PositionId v) const
{
    const auto& nm = positions_.at(v).name;
    return nm.empty() ? std::to_string(v) : nm;
}

std::optional<PositionId> ParityGame::find(const std::string& name) const
{
    for (PositionId v = 0; v < positions_.size(); ++v) {
        if (positions_[v].name == name) return v;
    }
    return std::nullopt;
}

std::size_t ParityGame::edge_count() const noexcept
{
    std::size_t m = 0;
    for (const auto& p : positions_) m += p.successors.size();
    return m;
}

PositionSet::PositionSet(std::size_t universe, const std::vector<PositionId>& ids) : bits_(universe, false)
{
    for (auto v : ids) insert(v);
}

PositionSet PositionSet::full(std::size_t universe)
{
    PositionSet s(universe);
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
}

void PositionSet::insert(PositionId v)
{
    if (v >= bits_.size()) throw std::out_of_range("position " + std::to_string(v) + " outside set universe");
    if (!bits_[v]) {
        bits_[v] = true;
        ++count_;
    }
}

void PositionSet::erase(PositionId v)
{
    if (v < bits_.size() && bits_[v]) {
        bits_[v] = false;
        --count_;
    }
}

std::vector<PositionId> PositionSet::ids() const
{
    std::vector<PositionId> out;
    out.reserve(count_);
    for (PositionId v = 0; v < bits_.size(); ++v) {
        if (bits_[v]) out.push_back(v);
    }
    return out;
}

PositionSet PositionSet::complement() const
{
    PositionSet out(bits_.size());
    for (PositionId v = 0; v < bits_.size(); ++v) {
        if (!bits_[v]) out.insert(v);
    }
    return out;
}

namespace {

void require_same_universe(const PositionSet& a, const PositionSet& b)
{
    if (a.universe() != b.universe()) throw std::invalid_argument("position sets over different universes");
}

}  // namespace

PositionSet set_union(const PositionSet& a, const PositionSet& b)
{
    require_same_universe(a, b);
    PositionSet out = a;
    for (auto v : b.ids()) out.insert(v);
    return out;
}

PositionSet set_difference(const PositionSet& a, const PositionSet& b)
{
    require_same_universe(a, b);
    PositionSet out = a;
    for (auto v : b.ids()) out.erase(v);
    return out;
}

PositionSet set_intersection(const PositionSet& a, const PositionSet& b)
{
    require_same_universe(a, b);
    PositionSet out(a.universe());
    for (auto v : a.ids()) {
        if (b.contains(v)) out.insert(v);
    }
    return out;
}

std::vector<PositionId> Strategy::domain() const
{
    std::vector<PositionId> out;
    for (PositionId v = 0; v < choice_.size(); ++v) {
        if (choice_[v] != kNone) out.push_back(v);
    }
    return out;
}

bool is_path(const ParityGame& game, const Path& path)
{
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= game.size()) return false;
        if (i + 1 < path.size() && !game.has_move(path[i], path[i + 1])) return false;
    }
    return true;
}

bool is_simple_path(const ParityGame& game, const Path& path)
{
    if (!is_path(game, path)) return false;
    std::vector<bool> seen(game.size(), false);
    for (auto v : path) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::NoSuccessors:
        return "NoSuccessors(" + std::to_string(position) + ")";
    case Kind::DanglingEdge:
        return "DanglingEdge(" + std::to_string(position) + ", " + std::to_string(target) + ")";
    case Kind::SinkCreated:
        return "SinkCreated(" + std::to_string(position) + ")";
    }
    return "?";
}

std::vector<Violation> validate(const ParityGame& game)
{
    std::vector<Violation> out;
    const auto n = game.size();
    for (PositionId v = 0; v < n; ++v) {
        const auto& succ = game.successors(v);
        if (succ.empty()) out.push_back({Violation::Kind::NoSuccessors, v});
        for (auto w : succ) {
            if (w >= n) out.push_back({Violation::Kind::DanglingEdge, v, w});
        }
    }
    return out;
}

SubgameResult subgame(const ParityGame& game, const PositionSet& removed)
{
    if (removed.universe() != game.size()) throw std::invalid_argument("removal set does not match game size");
    const auto n = game.size();
    std::vector<PositionId> new_id(n, static_cast<PositionId>(-1));
    SubgameResult result;
    Subgame sub;
    for (PositionId v = 0; v < n; ++v) {
        if (!removed.contains(v)) {
            new_id[v] = static_cast<PositionId>(sub.original_id.size());
            sub.original_id.push_back(v);
        }
    }
    std::vector<Position> positions;
    positions.reserve(sub.original_id.size());
    for (auto v : sub.original_id) {
        Position p = game.position(v);
        p.successors.clear();
        for (auto w : game.successors(v)) {
            if (!removed.contains(w)) p.successors.push_back(new_id[w]);
        }
        if (p.successors.empty()) result.violations.push_back({Violation::Kind::SinkCreated, v});
        positions.push_back(std::move(p));
    }
    if (!result.violations.empty()) return result;
    sub.game = ParityGame(std::move(positions));
    result.subgame = std::move(sub);
    return result;
}

SubgameResult restrict_to(const ParityGame& game, const PositionSet& kept)
{
    return subgame(game, kept.complement());
}

}  // namespace qdpm
