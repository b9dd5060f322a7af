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

#ifndef QDPM_GAME_HPP
#define QDPM_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdpm {

using PositionId = std::uint32_t;
using Priority = std::uint32_t;

/// The two players. Even wins a play when the maximal priority seen infinitely
/// often is even; Odd wins otherwise.
enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Even ? Player::Odd : Player::Even;
}

/// The player favoured by a priority of the given parity.
constexpr Player parity_player(Priority p) noexcept
{
    return (p % 2 == 0) ? Player::Even : Player::Odd;
}

constexpr bool is_even(Priority p) noexcept { return p % 2 == 0; }

std::string to_string(Player p);

/// Thrown when a game cannot be built or a structural precondition fails.
class GameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Position {
    Priority priority = 0;
    Player owner = Player::Even;
    std::vector<PositionId> successors;
    std::string name;

    bool operator==(const Position&) const = default;
};

/**
 * A finite parity-game arena with dense position ids 0..n-1.
 *
 * Construction normalises the move relation (parallel edges are dropped,
 * keeping first occurrences) and caches predecessors and the maximal
 * priority. It does not reject malformed input; use validate() or
 * ParityGame::checked() for that. The object is immutable afterwards.
 */
class ParityGame {
public:
    ParityGame() = default;
    explicit ParityGame(std::vector<Position> positions);

    /// Builds a game and throws GameError listing every violation.
    static ParityGame checked(std::vector<Position> positions);

    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }

    const Position& position(PositionId v) const { return positions_.at(v); }
    const std::vector<Position>& positions() const noexcept { return positions_; }

    Priority priority(PositionId v) const noexcept { return positions_[v].priority; }
    Player owner(PositionId v) const noexcept { return positions_[v].owner; }
    const std::vector<PositionId>& successors(PositionId v) const noexcept
    {
        return positions_[v].successors;
    }
    const std::vector<PositionId>& predecessors(PositionId v) const noexcept
    {
        return predecessors_[v];
    }
    const std::string& name(PositionId v) const noexcept { return positions_[v].name; }

    /// Maximal priority over all positions (0 for the empty game).
    Priority max_priority() const noexcept { return max_priority_; }

    bool has_move(PositionId from, PositionId to) const;

    /// Display label: the position's name if set, its id otherwise.
    std::string label(PositionId v) const;

    /// Position id with the given name, if any.
    std::optional<PositionId> find(const std::string& name) const;

    std::size_t edge_count() const noexcept;

    bool operator==(const ParityGame& other) const { return positions_ == other.positions_; }

private:
    std::vector<Position> positions_;
    std::vector<std::vector<PositionId>> predecessors_;
    Priority max_priority_ = 0;
};

/// Membership set over the positions of a fixed game.
class PositionSet {
public:
    PositionSet() = default;
    explicit PositionSet(std::size_t universe) : bits_(universe, false) {}
    PositionSet(std::size_t universe, const std::vector<PositionId>& ids);

    static PositionSet full(std::size_t universe);

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(PositionId v) const noexcept { return v < bits_.size() && bits_[v]; }
    void insert(PositionId v);
    void erase(PositionId v);

    /// Member ids in ascending order.
    std::vector<PositionId> ids() const;
    PositionSet complement() const;

    bool operator==(const PositionSet& other) const = default;

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

PositionSet set_union(const PositionSet& a, const PositionSet& b);
PositionSet set_difference(const PositionSet& a, const PositionSet& b);
PositionSet set_intersection(const PositionSet& a, const PositionSet& b);

/// Positional strategy: a partial map from positions to chosen successors.
class Strategy {
public:
    Strategy() = default;
    explicit Strategy(std::size_t universe) : choice_(universe, kNone) {}

    std::size_t universe() const noexcept { return choice_.size(); }
    void set(PositionId v, PositionId w) { choice_.at(v) = w; }
    void clear(PositionId v) { choice_.at(v) = kNone; }
    std::optional<PositionId> at(PositionId v) const
    {
        if (v >= choice_.size() || choice_[v] == kNone) return std::nullopt;
        return choice_[v];
    }
    bool defined(PositionId v) const noexcept { return v < choice_.size() && choice_[v] != kNone; }

    /// Positions with a recorded choice, ascending.
    std::vector<PositionId> domain() const;

    bool operator==(const Strategy&) const = default;

private:
    static constexpr PositionId kNone = static_cast<PositionId>(-1);
    std::vector<PositionId> choice_;
};

/// A finite sequence of positions connected by moves.
using Path = std::vector<PositionId>;

bool is_path(const ParityGame& game, const Path& path);
bool is_simple_path(const ParityGame& game, const Path& path);

struct Violation {
    enum class Kind { NoSuccessors, DanglingEdge, SinkCreated };

    Kind kind;
    PositionId position;
    PositionId target = 0;  // DanglingEdge only

    std::string describe() const;
    bool operator==(const Violation&) const = default;
};

/// Empty iff the game is sink-free with no dangling successor ids.
std::vector<Violation> validate(const ParityGame& game);

struct Subgame {
    ParityGame game;
    /// original_id[i] is the id in the parent game of subgame position i.
    std::vector<PositionId> original_id;
};

struct SubgameResult {
    std::optional<Subgame> subgame;
    std::vector<Violation> violations;  // SinkCreated, in parent ids

    bool ok() const noexcept { return subgame.has_value(); }
};

/// Maximal subgame on positions \ removed, re-indexed densely in id order.
SubgameResult subgame(const ParityGame& game, const PositionSet& removed);

/// Subgame induced by `kept` (complement of subgame's removal set).
SubgameResult restrict_to(const ParityGame& game, const PositionSet& kept);

}  // namespace qdpm

#endif
