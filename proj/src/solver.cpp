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

#include "qdpm/solver.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

#include "qdpm/oracles.hpp"

namespace qdpm {

EmptySuccessorSelection::EmptySuccessorSelection(PositionId v)
    : std::logic_error("position " + std::to_string(v) + " has no successor in the target set"), position(v)
{
}

std::strong_ordering operator<=>(const Forfeit& a, const Forfeit& b)
{
    if (a.is_top() || b.is_top()) {
        if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
        return a.is_top() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
}

std::string to_string(Operator op)
{
    return op == Operator::ProgressBottom ? "prg_bot" : "prg_plus";
}

namespace {

// Whether m truncated at priority p is bottom, without materialising the truncation.
bool truncates_to_bottom(const Measure& m, Priority p)
{
    if (m.is_top()) return false;
    const auto& vals = m.evaluation().values();
    for (auto i = static_cast<std::size_t>(p); i < vals.size(); ++i) {
        if (vals[i] != 0) return false;
    }
    return true;
}

void require_sizes(const MeasureFunction& mu, const ParityGame& game)
{
    if (mu.size() != game.size()) throw std::invalid_argument("measure function does not match game size");
}

bool escapes_one(const MeasureFunction& mu, const PositionSet& region, PositionId v, const ParityGame& game)
{
    if (game.owner(v) == Player::Odd) {
        for (auto w : game.successors(v)) {
            if (!region.contains(w)) return true;
        }
        return false;
    }
    for (auto w : game.successors(v)) {
        if (region.contains(w) && !(stretch(mu[w], game.priority(v)) < mu[v])) return false;
    }
    return true;
}

}  // namespace

Denotations denotations(const MeasureFunction& mu, const ParityGame& game)
{
    require_sizes(mu, game);
    const auto n = game.size();
    Denotations d{PositionSet(n), PositionSet(n), PositionSet(n)};
    for (PositionId v = 0; v < n; ++v) {
        if (mu[v].is_top()) {
            d.top.insert(v);
            d.plus.insert(v);
        } else if (truncates_to_bottom(mu[v], game.priority(v))) {
            d.bottom.insert(v);
        } else {
            d.plus.insert(v);
        }
    }
    return d;
}

MeasureFunction lift(const MeasureFunction& mu, const PositionSet& update, const PositionSet& targets,
                     const ParityGame& game)
{
    require_sizes(mu, game);
    MeasureFunction out = mu;
    for (auto v : update.ids()) {
        std::optional<Measure> best;
        const bool maximise = game.owner(v) == Player::Even;
        for (auto w : game.successors(v)) {
            if (!targets.contains(w)) continue;
            auto s = stretch(mu[w], game.priority(v));
            if (!best || (maximise ? s > *best : s < *best)) best = std::move(s);
        }
        if (!best) throw EmptySuccessorSelection(v);
        out[v] = std::move(*best);
    }
    return out;
}

MeasureFunction progress_bottom(const MeasureFunction& mu, const ParityGame& game)
{
    return lift(mu, denotations(mu, game).bottom, PositionSet::full(game.size()), game);
}

PositionSet escapes(const MeasureFunction& mu, const PositionSet& region, const ParityGame& game)
{
    require_sizes(mu, game);
    PositionSet out(game.size());
    for (auto v : region.ids()) {
        if (escapes_one(mu, region, v, game)) out.insert(v);
    }
    return out;
}

Forfeit escape_forfeit(const MeasureFunction& mu, const PositionSet& region, PositionId v, const ParityGame& game)
{
    require_sizes(mu, game);
    if (!region.contains(v) || !escapes_one(mu, region, v, game)) return Forfeit::top();
    if (mu[v].is_top()) throw TopOperand("escape forfeit of a Top position " + std::to_string(v));
    const bool maximise = game.owner(v) == Player::Even;
    std::optional<Evaluation> best;
    for (auto w : game.successors(v)) {
        if (region.contains(w)) continue;
        if (mu[w].is_top()) throw TopOperand("escape forfeit through a Top successor " + std::to_string(w));
        auto diff = stretch(mu[w], game.priority(v)).evaluation() - mu[v].evaluation();
        if (!best || (maximise ? diff > *best : diff < *best)) best = std::move(diff);
    }
    return best ? Forfeit::finite(std::move(*best)) : Forfeit::top();
}

PositionSet best_escapes(const MeasureFunction& mu, const PositionSet& region, const ParityGame& game)
{
    auto esc = escapes(mu, region, game);
    PositionSet out(game.size());
    if (esc.empty()) return out;
    std::optional<Forfeit> least;
    std::vector<std::pair<PositionId, Forfeit>> forfeits;
    for (auto v : esc.ids()) {
        auto f = escape_forfeit(mu, region, v, game);
        if (!least || f < *least) least = f;
        forfeits.emplace_back(v, std::move(f));
    }
    for (const auto& [v, f] : forfeits) {
        if (f == *least) out.insert(v);
    }
    return out;
}

MeasureFunction progress_plus(const MeasureFunction& mu, const ParityGame& game, std::vector<ExtractionRound>* rounds)
{
    auto region = denotations(mu, game).plus;
    MeasureFunction current = mu;
    while (true) {
        auto extracted = best_escapes(current, region, game);
        if (extracted.empty()) break;
        if (rounds) {
            auto first = extracted.ids().front();
            rounds->push_back({extracted.ids(), escape_forfeit(current, region, first, game)});
        }
        current = lift(current, extracted, region.complement(), game);
        region = set_difference(region, extracted);
    }
    for (auto v : region.ids()) current[v] = Measure::top();
    return current;
}

namespace {

/**
 * Incremental implementation of the solver loop.
 *
 * progress_plus is run as a best-first extraction: each position of the
 * region keeps its best stretch over already-extracted successors and, for
 * Even positions, the number of in-region successors still supporting its
 * measure. A lazy heap ordered by forfeit yields the next extraction round.
 */
class Engine {
public:
    Engine(const ParityGame& game, const SolveOptions& options, SolveStats& stats, std::vector<TraceEvent>* trace)
        : game_(game),
          options_(options),
          deadline_(options.deadline),
          stats_(stats),
          trace_(trace),
          mu_(MeasureFunction::bottom(game))
    {
    }

    MeasureFunction run()
    {
        while (true) {
            ++stats_.macro_iterations;
            deadline_.check();
            bool changed = step(Operator::ProgressBottom);
            changed = step(Operator::ProgressPlus) || changed;
            if (!changed) break;
        }
        return std::move(mu_);
    }

private:
    struct HeapEntry {
        Evaluation forfeit;
        std::uint64_t version;
        PositionId position;
    };
    struct HeapOrder {
        bool operator()(const HeapEntry& a, const HeapEntry& b) const
        {
            auto c = a.forfeit <=> b.forfeit;
            if (c != 0) return c > 0;
            return a.position > b.position;
        }
    };

    bool step(Operator op)
    {
        std::optional<MeasureFunction> before;
        if (options_.observer) before = mu_;
        TraceEvent event{op, stats_.macro_iterations, 0, {}, {}};
        bool changed = op == Operator::ProgressBottom ? bottom_step(event) : plus_step(event);
        if (options_.observer) options_.observer(op, *before, mu_);
        if (trace_) trace_->push_back(std::move(event));
        return changed;
    }

    void assign(PositionId v, Measure m, TraceEvent& event, bool& changed)
    {
        if (mu_[v] == m) return;
        ++stats_.lifts;
        changed = true;
        if (trace_) event.changes.emplace_back(v, m);
        mu_[v] = std::move(m);
    }

    bool bottom_step(TraceEvent& event)
    {
        const auto n = game_.size();
        std::vector<std::pair<PositionId, Measure>> updates;
        for (PositionId v = 0; v < n; ++v) {
            if (!truncates_to_bottom(mu_[v], game_.priority(v))) continue;
            ++event.set_size;
            const bool maximise = game_.owner(v) == Player::Even;
            std::optional<Measure> best;
            for (auto w : game_.successors(v)) {
                deadline_.tick();
                auto s = stretch(mu_[w], game_.priority(v));
                if (!best || (maximise ? s > *best : s < *best)) best = std::move(s);
            }
            if (!best) throw EmptySuccessorSelection(v);
            if (*best != mu_[v]) updates.emplace_back(v, std::move(*best));
        }
        bool changed = false;
        for (auto& [v, m] : updates) assign(v, std::move(m), event, changed);
        return changed;
    }

    Evaluation forfeit_of(PositionId v) const
    {
        if (mu_[v].is_top() || best_[v]->is_top()) throw TopOperand("escape forfeit involves Top at " + std::to_string(v));
        return best_[v]->evaluation() - mu_[v].evaluation();
    }

    void push(PositionId v)
    {
        heap_.push({forfeit_of(v), ++version_[v], v});
    }

    bool is_escaping(PositionId v) const
    {
        return game_.owner(v) == Player::Odd ? best_[v].has_value() : support_[v] == 0;
    }

    // Folds a new outside stretch into v's best; returns whether it changed.
    bool offer(PositionId v, Measure s)
    {
        auto& best = best_[v];
        const bool maximise = game_.owner(v) == Player::Even;
        if (best && (maximise ? !(s > *best) : !(s < *best))) return false;
        best = std::move(s);
        return true;
    }

    bool plus_step(TraceEvent& event)
    {
        const auto n = game_.size();
        in_region_.assign(n, false);
        support_.assign(n, 0);
        best_.assign(n, std::nullopt);
        version_.assign(n, 0);
        heap_ = {};

        std::size_t region_size = 0;
        for (PositionId v = 0; v < n; ++v) {
            if (!truncates_to_bottom(mu_[v], game_.priority(v))) {
                in_region_[v] = true;
                ++region_size;
            }
        }
        event.set_size = region_size;
        if (region_size == 0) return false;

        for (PositionId v = 0; v < n; ++v) {
            if (!in_region_[v]) continue;
            const auto p = game_.priority(v);
            const bool even = game_.owner(v) == Player::Even;
            for (auto w : game_.successors(v)) {
                deadline_.tick();
                auto s = stretch(mu_[w], p);
                if (in_region_[w]) {
                    if (even && !(s < mu_[v])) ++support_[v];
                } else {
                    offer(v, std::move(s));
                }
            }
        }
        std::vector<PositionId> top_forfeit;  // escaping with nowhere to go
        for (PositionId v = 0; v < n; ++v) {
            if (!in_region_[v] || !is_escaping(v)) continue;
            if (best_[v]) {
                push(v);
            } else {
                top_forfeit.push_back(v);
            }
        }

        bool changed = false;
        std::optional<Evaluation> last_forfeit;
        while (true) {
            discard_stale();
            if (heap_.empty()) {
                // Only positions with Top forfeit could still be selected; lifting them is undefined.
                for (auto v : top_forfeit) {
                    if (in_region_[v] && support_[v] == 0 && !best_[v]) throw EmptySuccessorSelection(v);
                }
                break;
            }
            ExtractionRound round;
            Evaluation forfeit = heap_.top().forfeit;
            while (!heap_.empty()) {
                discard_stale();
                if (heap_.empty() || heap_.top().forfeit != forfeit) break;
                round.extracted.push_back(heap_.top().position);
                heap_.pop();
            }
            std::sort(round.extracted.begin(), round.extracted.end());
            assert(!last_forfeit || *last_forfeit <= forfeit);
            assert(!(forfeit < Evaluation(forfeit.size())));
            last_forfeit = forfeit;
            ++stats_.prg_plus_rounds;

            std::vector<Measure> old_values;
            old_values.reserve(round.extracted.size());
            for (auto v : round.extracted) {
                in_region_[v] = false;
                old_values.push_back(mu_[v]);
            }
            for (auto v : round.extracted) assign(v, *best_[v], event, changed);
            for (std::size_t i = 0; i < round.extracted.size(); ++i) {
                const auto v = round.extracted[i];
                for (auto u : game_.predecessors(v)) {
                    if (!in_region_[u]) continue;
                    deadline_.tick();
                    const auto p = game_.priority(u);
                    bool was_escaping = is_escaping(u);
                    if (game_.owner(u) == Player::Even && !(stretch(old_values[i], p) < mu_[u])) --support_[u];
                    bool improved = offer(u, stretch(mu_[v], p));
                    if (is_escaping(u) && (improved || !was_escaping)) push(u);
                }
            }
            if (trace_) {
                round.forfeit = Forfeit::finite(std::move(forfeit));
                event.rounds.push_back(std::move(round));
            }
        }
        for (PositionId v = 0; v < n; ++v) {
            if (in_region_[v]) assign(v, Measure::top(), event, changed);
        }
        return changed;
    }

    void discard_stale()
    {
        while (!heap_.empty()) {
            const auto& top = heap_.top();
            if (in_region_[top.position] && version_[top.position] == top.version) return;
            heap_.pop();
        }
    }

    const ParityGame& game_;
    const SolveOptions& options_;
    Deadline deadline_;
    SolveStats& stats_;
    std::vector<TraceEvent>* trace_;
    MeasureFunction mu_;

    std::vector<bool> in_region_;
    std::vector<std::uint32_t> support_;
    std::vector<std::optional<Measure>> best_;
    std::vector<std::uint64_t> version_;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap_;
};

std::string join_labels(const ParityGame& game, const std::vector<PositionId>& ids, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += game.label(ids[i]);
    }
    return out;
}

}  // namespace

void write_trace(std::ostream& os, const ParityGame& game, const std::vector<TraceEvent>& events)
{
    for (const auto& e : events) {
        os << '[' << e.macro_iteration << "] " << to_string(e.op) << " |S|=" << e.set_size;
        if (e.op == Operator::ProgressPlus && !e.rounds.empty()) {
            os << " order:";
            for (std::size_t i = 0; i < e.rounds.size(); ++i) {
                os << (i ? " | " : " ") << join_labels(game, e.rounds[i].extracted, ",");
            }
        }
        os << " changed:";
        if (e.changes.empty()) os << " none";
        for (const auto& [v, m] : e.changes) os << ' ' << game.label(v) << '=' << m;
        os << '\n';
    }
}

Strategy extract_odd_strategy(const MeasureFunction& mu, const ParityGame& game)
{
    require_sizes(mu, game);
    Strategy sigma(game.size());
    for (PositionId v = 0; v < game.size(); ++v) {
        if (game.owner(v) != Player::Odd || mu[v].is_top()) continue;
        std::optional<PositionId> choice;
        for (auto w : game.successors(v)) {
            if (stretch(mu[w], game.priority(v)) <= mu[v] && (!choice || w < *choice)) choice = w;
        }
        if (!choice) throw std::logic_error("NoCoherentMove(" + std::to_string(v) + ")");
        sigma.set(v, *choice);
    }
    return sigma;
}

Strategy extract_even_strategy(const ParityGame& game, const PositionSet& w_even)
{
    return dominion_strategy(game, Player::Even, w_even);
}

Solution solve(const ParityGame& game, const SolveOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    Solution sol;
    Engine engine(game, options, sol.stats, options.record_trace ? &sol.trace : nullptr);
    try {
        sol.final_measure = engine.run();
    } catch (const SolveTimeout&) {
        throw SolveTimeout(sol.stats.lifts);
    }
    const auto n = game.size();
    sol.w_even = PositionSet(n);
    sol.w_odd = PositionSet(n);
    for (PositionId v = 0; v < n; ++v) {
        if (sol.final_measure[v].is_top()) {
            sol.w_even.insert(v);
        } else {
            sol.w_odd.insert(v);
        }
    }
    sol.odd_strategy = extract_odd_strategy(sol.final_measure, game);
    sol.even_strategy = extract_even_strategy(game, sol.w_even);
    sol.stats.wall_time = std::chrono::steady_clock::now() - start;
    return sol;
}

CheckResult check_progress_measure(const MeasureFunction& mu, const ParityGame& game)
{
    require_sizes(mu, game);
    for (PositionId v = 0; v < game.size(); ++v) {
        const auto p = game.priority(v);
        if (game.owner(v) == Player::Even) {
            for (auto w : game.successors(v)) {
                if (stretch(mu[w], p) > mu[v]) {
                    return {false, v, "Even position " + game.label(v) + " increases along (" + game.label(v) + ", " +
                                           game.label(w) + ")"};
                }
            }
        } else {
            bool ok = std::any_of(game.successors(v).begin(), game.successors(v).end(),
                                  [&](PositionId w) { return stretch(mu[w], p) <= mu[v]; });
            if (!ok) return {false, v, "Odd position " + game.label(v) + " has no non-increasing move"};
        }
    }
    return {};
}

CheckResult check_regress_measure(const MeasureFunction& mu, const ParityGame& game)
{
    auto den = denotations(mu, game);
    for (auto v : set_difference(den.plus, den.top).ids()) {
        const auto p = game.priority(v);
        const auto& succ = game.successors(v);
        if (game.owner(v) == Player::Even) {
            bool ok = std::any_of(succ.begin(), succ.end(), [&](PositionId w) { return mu[v] <= stretch(mu[w], p); });
            if (!ok) return {false, v, "Even position " + game.label(v) + " decreases along every move"};
        } else {
            for (auto w : succ) {
                if (stretch(mu[w], p) < mu[v]) {
                    return {false, v, "Odd position " + game.label(v) + " decreases along (" + game.label(v) + ", " +
                                          game.label(w) + ")"};
                }
            }
        }
    }
    return {};
}

}  // namespace qdpm
