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

#include "qdpm/gamegen.hpp"

#include <algorithm>
#include <random>

namespace qdpm {

void GenParams::validate() const
{
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (outdeg_min < 1 || outdeg_min > outdeg_max) throw std::invalid_argument("need 1 <= outdeg_min <= outdeg_max");
    if (cluster.min_depth < 1 || cluster.min_depth > cluster.max_depth) throw std::invalid_argument("bad depth range");
    if (cluster.min_cluster < 2 || cluster.min_cluster > cluster.max_cluster) {
        throw std::invalid_argument("bad cluster count range");
    }
    if (cluster.min_bridges > cluster.max_bridges) throw std::invalid_argument("bad bridge range");
}

Priority default_priority_bound(std::size_t n)
{
    return static_cast<Priority>(std::max<std::size_t>(1, n / 10));
}

namespace {

using Rng = std::mt19937_64;

// Uniform in [0, bound) by rejection; stable across standard libraries.
std::uint64_t below(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t between(Rng& rng, std::uint64_t lo, std::uint64_t hi)
{
    return lo + below(rng, hi - lo + 1);
}

// Random arena on ids [offset, offset + size) with successors inside the same range.
void fill_random(std::vector<Position>& out, std::size_t offset, std::size_t size, const GenParams& params, Rng& rng)
{
    std::vector<PositionId> pool(size > 64 ? 0 : size);
    for (std::size_t i = 0; i < size; ++i) {
        Position p;
        p.priority = static_cast<Priority>(below(rng, static_cast<std::uint64_t>(params.max_prio) + 1));
        p.owner = below(rng, 2) == 0 ? Player::Even : Player::Odd;
        const auto hi = std::min(params.outdeg_max, size);
        const auto lo = std::min(params.outdeg_min, hi);
        const auto degree = between(rng, lo, hi);
        if (size > 64) {
            while (p.successors.size() < degree) {
                auto w = static_cast<PositionId>(offset + below(rng, size));
                if (std::find(p.successors.begin(), p.successors.end(), w) == p.successors.end()) {
                    p.successors.push_back(w);
                }
            }
        } else {
            // partial Fisher-Yates
            for (std::size_t j = 0; j < size; ++j) pool[j] = static_cast<PositionId>(offset + j);
            for (std::size_t j = 0; j < degree; ++j) {
                auto k = j + below(rng, size - j);
                std::swap(pool[j], pool[k]);
                p.successors.push_back(pool[j]);
            }
        }
        out[offset + i] = std::move(p);
    }
}

void fill_clustered(std::vector<Position>& out, std::size_t offset, std::size_t size, std::size_t depth,
                    const GenParams& params, Rng& rng)
{
    const auto& spec = params.cluster;
    // children get at least outdeg_max positions so leaves can honour the degree range
    const auto min_size = std::max<std::size_t>(params.outdeg_max, 1);
    if (depth <= 1 || size < spec.min_cluster * min_size) {
        fill_random(out, offset, size, params, rng);
        return;
    }
    const auto k = std::min(between(rng, spec.min_cluster, spec.max_cluster), size / min_size);
    // child sizes min_size + gap, with the gaps a uniform composition of the slack:
    // k - 1 distinct bars among slack + k - 1 slots
    const auto slack = size - k * min_size;
    std::vector<std::size_t> bars;
    {
        std::vector<std::size_t> slots(slack + k - 1);
        for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i + 1;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            auto j = i + below(rng, slots.size() - i);
            std::swap(slots[i], slots[j]);
            bars.push_back(slots[i]);
        }
    }
    std::sort(bars.begin(), bars.end());
    bars.insert(bars.begin(), 0);
    bars.push_back(slack + k);
    std::vector<std::size_t> starts{0};
    for (std::size_t c = 0; c < k; ++c) starts.push_back(starts.back() + min_size + (bars[c + 1] - bars[c] - 1));

    for (std::size_t c = 0; c < k; ++c) {
        fill_clustered(out, offset + starts[c], starts[c + 1] - starts[c], depth - 1, params, rng);
    }
    // bridges only point forward, so clusters stay separate components
    for (std::size_t c = 0; c + 1 < k; ++c) {
        const auto lo = offset + starts[c], len = starts[c + 1] - starts[c];
        const auto later = offset + starts[c + 1], later_len = size - starts[c + 1];
        const auto bridges = between(rng, spec.min_bridges, spec.max_bridges);
        for (std::size_t b = 0; b < bridges; ++b) {
            auto& from = out[lo + below(rng, len)];
            auto target = static_cast<PositionId>(later + below(rng, later_len));
            auto slot = below(rng, from.successors.size());
            if (std::find(from.successors.begin(), from.successors.end(), target) != from.successors.end()) continue;
            from.successors[slot] = target;
        }
    }
}

}  // namespace

ParityGame random_game(const GenParams& params)
{
    params.validate();
    Rng rng(params.seed);
    std::vector<Position> positions(params.n);
    fill_random(positions, 0, params.n, params, rng);
    return ParityGame(std::move(positions));
}

ParityGame clustered_random_game(const GenParams& params)
{
    params.validate();
    if (params.cluster.max_depth <= 1) return random_game(params);
    Rng rng(params.seed);
    const auto depth = between(rng, params.cluster.min_depth, params.cluster.max_depth);
    if (depth <= 1) return random_game(params);
    std::vector<Position> positions(params.n);
    fill_clustered(positions, 0, params.n, depth, params, rng);
    return ParityGame(std::move(positions));
}

ParityGame figure1_game()
{
    constexpr auto E = Player::Even;
    constexpr auto O = Player::Odd;
    // ids:        a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7
    // (g,d), (d,d), (e,a), (a,e) are the moves named in the trace; b and e
    // leave the full non-bottom region through f and b respectively. f never
    // leaves bottom (Odd self-loop on an odd priority).
    std::vector<Position> positions{
        {2, E, {3, 4}, "a"},
        {6, O, {2, 5}, "b"},
        {4, O, {1, 3}, "c"},
        {1, E, {3, 7}, "d"},
        {1, E, {0, 1}, "e"},
        {5, O, {5}, "f"},
        {3, E, {2, 3}, "g"},
        {2, E, {6}, "h"},
    };
    return ParityGame::checked(std::move(positions));
}

}  // namespace qdpm
