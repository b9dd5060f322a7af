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

#ifndef QDPM_BENCH_HPP
#define QDPM_BENCH_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdpm/deadline.hpp"
#include "qdpm/game.hpp"

namespace qdpm {

enum class Algo { Qdpm, Spm, Zielonka };

std::string to_string(Algo algo);
std::optional<Algo> parse_algo(const std::string& name);

/// Regions plus the counters a benchmark row reports.
struct AlgoResult {
    PositionSet w_even;
    PositionSet w_odd;
    std::size_t lifts = 0;             // qdpm: measure changes, spm: successful lifts
    std::size_t macro_iterations = 0;  // qdpm: solver rounds, zielonka: recursive calls
};

/// Runs one solver. Throws SolveTimeout past the deadline.
AlgoResult run_algo(const ParityGame& game, Algo algo, Deadline deadline = {});

struct BenchRecord {
    enum class Status { Ok, Timeout };

    std::string game_name;
    std::size_t n = 0;
    std::size_t d = 0;  // maximal priority
    std::string algo;
    double wall_time_ms = 0;
    std::size_t lifts = 0;  // on timeout: lifts performed before the deadline
    std::size_t macro_iterations = 0;
    std::size_t w_even_size = 0;
    std::size_t w_odd_size = 0;
    Status status = Status::Ok;
};

struct BenchGame {
    std::string name;
    ParityGame game;
};

struct BenchOptions {
    std::vector<Algo> algos{Algo::Qdpm};
    double timeout_sec = 120;
    std::size_t jobs = 1;
};

/// One record per (game, algo), sorted by (game_name, algo). Timeouts are
/// recorded, never thrown. Parallel across tasks when jobs > 1.
std::vector<BenchRecord> run_bench(const std::vector<BenchGame>& games, const BenchOptions& options);

/// RFC 4180 CSV with a fixed header row and CRLF line breaks.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

struct SizeSummary {
    std::size_t n;
    std::string algo;
    std::size_t runs;
    std::size_t timeouts;
    // Timed-out runs contribute their partial figures, so medians are lower
    // bounds once timeouts > 0.
    double median_ms;
    double median_lifts;
};

/// Medians grouped by (n, algo), ascending.
std::vector<SizeSummary> summarize(const std::vector<BenchRecord>& records);

void write_summary(std::ostream& os, const std::vector<SizeSummary>& summary);

double median(std::vector<double> values);

}  // namespace qdpm

#endif
