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

#include <algorithm>
#include <deque>
#include <vector>

#include "qdpm/oracles.hpp"

namespace qdpm {

namespace {

// Measures are stored densely by priority in one flat array; odd slots stay
// zero. Top is a separate flag.
class SmallProgressMeasures {
public:
    SmallProgressMeasures(const ParityGame& game, Deadline deadline)
        : game_(game),
          deadline_(deadline),
          length_(static_cast<std::size_t>(game.max_priority()) + 1),
          bound_(length_, 0),
          rho_(game.size() * length_, 0),
          top_(game.size(), false),
          best_(length_),
          cand_(length_)
    {
        for (PositionId v = 0; v < game.size(); ++v) {
            if (is_even(game.priority(v))) ++bound_[game.priority(v)];
        }
    }

    SpmSolution run()
    {
        const auto n = game_.size();
        std::deque<PositionId> work;
        std::vector<bool> queued(n, true);
        for (PositionId v = 0; v < n; ++v) work.push_back(v);

        SpmSolution out{PositionSet(n), PositionSet(n), 0, 0};
        while (!work.empty()) {
            auto v = work.front();
            work.pop_front();
            queued[v] = false;
            ++out.lift_attempts;
            try {
                deadline_.tick();
            } catch (const SolveTimeout&) {
                throw SolveTimeout(out.lifts);
            }
            if (top_[v] || !lift(v)) continue;
            ++out.lifts;
            for (auto u : game_.predecessors(v)) {
                if (!queued[u] && !top_[u]) {
                    queued[u] = true;
                    work.push_back(u);
                }
            }
        }
        for (PositionId v = 0; v < n; ++v) {
            if (top_[v]) {
                out.w_even.insert(v);
            } else {
                out.w_odd.insert(v);
            }
        }
        return out;
    }

private:
    const std::int64_t* rho(PositionId v) const { return rho_.data() + v * length_; }
    std::int64_t* rho(PositionId v) { return rho_.data() + v * length_; }

    // Lexicographic from the highest slot down to `from`.
    int compare(const std::int64_t* a, const std::int64_t* b, std::size_t from) const
    {
        for (auto i = length_; i-- > from;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    // Least tuple that agrees with rho(w) from priority p upwards, strictly
    // greater there when p is even. Slots below p are left untouched: callers
    // only compare from p up. Returns false for Top.
    bool progress(std::size_t p, PositionId w, std::int64_t* out) const
    {
        if (top_[w]) return false;
        const auto* src = rho(w);
        std::copy(src + p, src + length_, out + p);
        if (p % 2 == 1) return true;
        for (auto i = p; i < length_; i += 2) {
            if (out[i] < bound_[i]) {
                ++out[i];
                return true;
            }
            out[i] = 0;
        }
        return false;
    }

    // Replaces rho(v) by the best progressed successor if that is larger.
    bool lift(PositionId v)
    {
        const bool maximise = game_.owner(v) == Player::Even;
        const auto p = static_cast<std::size_t>(game_.priority(v));
        bool have = false, best_finite = false;
        for (auto w : game_.successors(v)) {
            const bool finite = progress(p, w, cand_.data());
            bool better;
            if (!have) {
                better = true;
            } else if (finite != best_finite) {
                better = maximise ? !finite : finite;
            } else {
                const int c = finite ? compare(cand_.data(), best_.data(), p) : 0;
                better = maximise ? c > 0 : c < 0;
            }
            if (better) {
                std::swap(best_, cand_);
                best_finite = finite;
                have = true;
            }
            if (maximise && have && !best_finite) break;
        }
        if (!best_finite) {
            top_[v] = true;
            return true;
        }
        auto* cur = rho(v);
        // the candidate is zero below p, so a tie from p up is never an increase
        if (compare(best_.data(), cur, p) <= 0) return false;
        std::copy(best_.begin() + static_cast<std::ptrdiff_t>(p), best_.end(), cur + p);
        std::fill(cur, cur + p, 0);
        return true;
    }

    const ParityGame& game_;
    Deadline deadline_;
    std::size_t length_;
    std::vector<std::int64_t> bound_;
    std::vector<std::int64_t> rho_;
    std::vector<bool> top_;
    std::vector<std::int64_t> best_, cand_;  // scratch
};

}  // namespace

SpmSolution spm(const ParityGame& game, Deadline deadline)
{
    return SmallProgressMeasures(game, deadline).run();
}

}  // namespace qdpm
