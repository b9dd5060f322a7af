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

#include "qdpm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <thread>
#include <tuple>

#include "qdpm/oracles.hpp"
#include "qdpm/solver.hpp"

namespace qdpm {

std::string to_string(Algo algo)
{
    switch (algo) {
    case Algo::Qdpm:
        return "qdpm";
    case Algo::Spm:
        return "spm";
    case Algo::Zielonka:
        return "zielonka";
    }
    return "?";
}

std::optional<Algo> parse_algo(const std::string& name)
{
    if (name == "qdpm") return Algo::Qdpm;
    if (name == "spm") return Algo::Spm;
    if (name == "zielonka") return Algo::Zielonka;
    return std::nullopt;
}

AlgoResult run_algo(const ParityGame& game, Algo algo, Deadline deadline)
{
    switch (algo) {
    case Algo::Qdpm: {
        SolveOptions opts;
        opts.deadline = deadline;
        auto s = solve(game, opts);
        return {std::move(s.w_even), std::move(s.w_odd), s.stats.lifts, s.stats.macro_iterations};
    }
    case Algo::Spm: {
        auto s = spm(game, deadline);
        return {std::move(s.w_even), std::move(s.w_odd), s.lifts, 0};
    }
    case Algo::Zielonka: {
        auto s = zielonka(game, deadline);
        return {std::move(s.w_even), std::move(s.w_odd), 0, s.recursive_calls};
    }
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace {

BenchRecord run_task(const BenchGame& g, Algo algo, double timeout_sec)
{
    BenchRecord r;
    r.game_name = g.name;
    r.n = g.game.size();
    r.d = g.game.max_priority();
    r.algo = to_string(algo);
    const auto start = std::chrono::steady_clock::now();
    try {
        auto res = run_algo(g.game, algo, Deadline::after(std::chrono::duration<double>(timeout_sec)));
        r.lifts = res.lifts;
        r.macro_iterations = res.macro_iterations;
        r.w_even_size = res.w_even.size();
        r.w_odd_size = res.w_odd.size();
    } catch (const SolveTimeout& e) {
        r.lifts = e.lifts();
        r.status = BenchRecord::Status::Timeout;
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchGame>& games, const BenchOptions& options)
{
    const auto tasks = games.size() * options.algos.size();
    std::vector<BenchRecord> records(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < tasks; i = next++) {
            const auto& g = games[i / options.algos.size()];
            records[i] = run_task(g, options.algos[i % options.algos.size()], options.timeout_sec);
        }
    };
    const auto jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.game_name, a.algo) < std::tie(b.game_name, b.algo);
    });
    return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records)
{
    os << "game_name,n,d,algo,wall_time_ms,lifts,macro_iterations,w_even_size,w_odd_size,status\r\n";
    for (const auto& r : records) {
        os << csv_field(r.game_name) << ',' << r.n << ',' << r.d << ',' << csv_field(r.algo) << ',' << std::fixed
           << std::setprecision(3) << r.wall_time_ms << std::defaultfloat << ',' << r.lifts << ',' << r.macro_iterations
           << ',' << r.w_even_size << ',' << r.w_odd_size << ','
           << (r.status == BenchRecord::Status::Ok ? "ok" : "timeout") << "\r\n";
    }
}

double median(std::vector<double> values)
{
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const auto mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

std::vector<SizeSummary> summarize(const std::vector<BenchRecord>& records)
{
    struct Acc {
        std::size_t runs = 0, timeouts = 0;
        std::vector<double> ms, lifts;
    };
    std::map<std::pair<std::size_t, std::string>, Acc> groups;
    for (const auto& r : records) {
        auto& acc = groups[{r.n, r.algo}];
        ++acc.runs;
        if (r.status == BenchRecord::Status::Timeout) ++acc.timeouts;
        acc.ms.push_back(r.wall_time_ms);
        acc.lifts.push_back(static_cast<double>(r.lifts));
    }
    std::vector<SizeSummary> out;
    for (auto& [key, acc] : groups) {
        out.push_back({key.first, key.second, acc.runs, acc.timeouts, median(acc.ms), median(acc.lifts)});
    }
    return out;
}

void write_summary(std::ostream& os, const std::vector<SizeSummary>& summary)
{
    os << std::left << std::setw(8) << "n" << std::setw(10) << "algo" << std::setw(6) << "runs" << std::setw(10)
       << "timeouts" << std::setw(14) << "median_ms" << "median_lifts\n";
    for (const auto& s : summary) {
        os << std::left << std::setw(8) << s.n << std::setw(10) << s.algo << std::setw(6) << s.runs << std::setw(10)
           << s.timeouts << std::setw(14) << std::fixed << std::setprecision(3) << s.median_ms << std::defaultfloat
           << s.median_lifts << '\n';
    }
}

}  // namespace qdpm
