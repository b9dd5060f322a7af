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

#ifndef QDPM_GAMEGEN_HPP
#define QDPM_GAMEGEN_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "qdpm/game.hpp"

namespace qdpm {

struct ClusterSpec {
    std::size_t min_depth = 1;  // recursion depth range; 1 = a single random game
    std::size_t max_depth = 3;
    std::size_t min_cluster = 3;  // child cluster count range per internal level
    std::size_t max_cluster = 7;
    std::size_t min_bridges = 3;  // inter-cluster edges per child cluster
    std::size_t max_bridges = 7;
};

struct GenParams {
    std::size_t n = 10;
    Priority max_prio = 3;
    std::size_t outdeg_min = 1;
    std::size_t outdeg_max = 3;
    std::uint64_t seed = 0;
    ClusterSpec cluster;

    /// Throws std::invalid_argument unless n >= 1 and 1 <= outdeg_min <= outdeg_max.
    void validate() const;
};

/// Priority bound used by the benchmarks: n / 10, at least 1.
Priority default_priority_bound(std::size_t n);

/// Uniform arena: priorities in [0, max_prio], owners uniform, out-degree
/// uniform in [outdeg_min, outdeg_max] (capped at n), distinct successors.
ParityGame random_game(const GenParams& params);

/**
 * Tree-like nesting of random clusters. A depth is drawn from the depth
 * range; internal levels split their positions into child clusters and
 * redirect a bounded number of moves from each child to later children, so
 * clusters form a DAG with cycles only inside the leaves. Out-degrees are
 * preserved. Depth 1 is exactly random_game(params).
 */
ParityGame clustered_random_game(const GenParams& params);

/// The 8-position example game behind the worked solver trace (a..h).
ParityGame figure1_game();

}  // namespace qdpm

#endif
