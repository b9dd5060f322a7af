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

// qdpm: solve, generate and benchmark parity games.
//
// Exit codes: 0 success, 1 usage, parse, validation or I/O failure,
// 2 verification failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdpm/bench.hpp"
#include "qdpm/gamegen.hpp"
#include "qdpm/oracles.hpp"
#include "qdpm/pgsolver.hpp"
#include "qdpm/solver.hpp"
#include "qdpm/verify.hpp"

namespace fs = std::filesystem;
using namespace qdpm;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kVerifyFailed = 2;

struct SolveArgs {
    std::string input;
    std::string algo = "qdpm";
    bool verify = false;
    bool trace = false;
    bool stats = false;
};

struct GenArgs {
    std::string kind;
    std::size_t n = 10;
    long max_prio = -1;  // negative: default bound for n
    std::size_t outdeg_min = 1;
    std::size_t outdeg_max = 3;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    ClusterSpec cluster;
    std::string out = "-";
};

struct BenchArgs {
    std::string dir;
    std::string gen;
    std::vector<std::size_t> sizes;
    std::size_t per_size = 10;
    std::uint64_t seed = 0;
    long max_prio = -1;
    std::size_t outdeg_min = 2;
    std::size_t outdeg_max = 2;
    std::vector<std::string> algos{"qdpm", "spm"};
    double timeout_sec = 120;
    std::string out = "-";
    std::size_t jobs = 1;
};

std::string region_list(const ParityGame& game, const PositionSet& region)
{
    std::string s;
    for (auto v : region.ids()) {
        if (!s.empty()) s += ',';
        s += game.label(v);
    }
    return s;
}

bool load_game(const std::string& path, ParityGame& game)
{
    try {
        game = read_pgsolver_file(path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return false;
    } catch (const std::exception& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return false;
    }
    auto violations = validate(game);
    for (const auto& v : violations) std::cerr << "error: " << path << ": " << v.describe() << '\n';
    return violations.empty();
}

bool verify_player(const ParityGame& game, Player player, const PositionSet& region, const Strategy& strategy)
{
    auto result = verify_winning(game, player, region, strategy);
    for (const auto& d : result.diagnostics) std::cerr << "verify " << to_string(player) << ": " << d << '\n';
    return result.ok;
}

int cmd_solve(const SolveArgs& args)
{
    auto algo = parse_algo(args.algo);
    if (!algo) {
        std::cerr << "error: unknown algorithm '" << args.algo << "'\n";
        return kFailure;
    }
    if (args.trace && *algo != Algo::Qdpm) {
        std::cerr << "error: --trace is only available with --algo qdpm\n";
        return kFailure;
    }
    ParityGame game;
    if (!load_game(args.input, game)) return kFailure;

    PositionSet w_even, w_odd;
    Strategy even_strategy, odd_strategy;
    bool have_strategies = true;
    std::ostringstream stats;
    const auto start = std::chrono::steady_clock::now();

    switch (*algo) {
    case Algo::Qdpm: {
        SolveOptions opts;
        opts.record_trace = args.trace;
        auto sol = solve(game, opts);
        if (args.trace) write_trace(std::cout, game, sol.trace);
        stats << " macro_iterations=" << sol.stats.macro_iterations << " lifts=" << sol.stats.lifts
              << " prg_plus_rounds=" << sol.stats.prg_plus_rounds;
        w_even = std::move(sol.w_even);
        w_odd = std::move(sol.w_odd);
        even_strategy = std::move(sol.even_strategy);
        odd_strategy = std::move(sol.odd_strategy);
        break;
    }
    case Algo::Zielonka: {
        auto sol = zielonka(game);
        stats << " recursive_calls=" << sol.recursive_calls;
        w_even = std::move(sol.w_even);
        w_odd = std::move(sol.w_odd);
        even_strategy = std::move(sol.even_strategy);
        odd_strategy = std::move(sol.odd_strategy);
        break;
    }
    case Algo::Spm: {
        auto sol = spm(game);
        stats << " lifts=" << sol.lifts << " lift_attempts=" << sol.lift_attempts;
        w_even = std::move(sol.w_even);
        w_odd = std::move(sol.w_odd);
        have_strategies = false;
        break;
    }
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

    std::cout << "W_even:" << (w_even.empty() ? "" : " ") << region_list(game, w_even) << '\n';
    std::cout << "W_odd:" << (w_odd.empty() ? "" : " ") << region_list(game, w_odd) << '\n';
    if (args.stats) {
        std::cout << "stats: algo=" << args.algo << " n=" << game.size() << " d=" << game.max_priority()
                  << stats.str() << " wall_time_ms=" << elapsed.count() << '\n';
    }

    if (!args.verify) return kOk;
    if (!have_strategies) {
        // spm yields regions only; witnesses come from the oracle on each region
        try {
            even_strategy = dominion_strategy(game, Player::Even, w_even);
            odd_strategy = dominion_strategy(game, Player::Odd, w_odd);
        } catch (const std::exception& e) {
            std::cerr << "verify: " << e.what() << '\n';
            std::cout << "verify: FAILED\n";
            return kVerifyFailed;
        }
    }
    const bool ok = verify_player(game, Player::Even, w_even, even_strategy) &&
                    verify_player(game, Player::Odd, w_odd, odd_strategy);
    std::cout << "verify: " << (ok ? "ok" : "FAILED") << '\n';
    return ok ? kOk : kVerifyFailed;
}

GenParams gen_params(std::size_t n, long max_prio, std::size_t outdeg_min, std::size_t outdeg_max, std::uint64_t seed,
                     const ClusterSpec& cluster)
{
    GenParams p;
    p.n = n;
    p.max_prio = max_prio < 0 ? default_priority_bound(n) : static_cast<Priority>(max_prio);
    p.outdeg_min = outdeg_min;
    p.outdeg_max = outdeg_max;
    p.seed = seed;
    p.cluster = cluster;
    p.validate();
    return p;
}

bool write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return false;
    }
    return true;
}

int cmd_gen(const GenArgs& args)
{
    if (args.kind == "figure1") return write_text(args.out, write_pgsolver(figure1_game())) ? kOk : kFailure;

    std::vector<std::pair<std::string, ParityGame>> games;
    try {
        for (std::size_t i = 0; i < args.count; ++i) {
            const auto seed = args.seed + i;
            auto p = gen_params(args.n, args.max_prio, args.outdeg_min, args.outdeg_max, seed, args.cluster);
            auto game = args.kind == "random" ? random_game(p) : clustered_random_game(p);
            games.emplace_back(args.kind + "-n" + std::to_string(args.n) + "-s" + std::to_string(seed) + ".gm",
                               std::move(game));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }

    if (args.count == 1) return write_text(args.out, write_pgsolver(games.front().second)) ? kOk : kFailure;
    if (args.out == "-") {
        std::cerr << "error: --count > 1 needs --out <directory>\n";
        return kFailure;
    }
    std::error_code ec;
    fs::create_directories(args.out, ec);
    if (ec) {
        std::cerr << "error: cannot create " << args.out << ": " << ec.message() << '\n';
        return kFailure;
    }
    for (const auto& [name, game] : games) {
        if (!write_text((fs::path(args.out) / name).string(), write_pgsolver(game))) return kFailure;
    }
    return kOk;
}

int cmd_bench(const BenchArgs& args)
{
    BenchOptions opts;
    opts.timeout_sec = args.timeout_sec;
    opts.jobs = args.jobs;
    opts.algos.clear();
    for (const auto& name : args.algos) {
        auto algo = parse_algo(name);
        if (!algo) {
            std::cerr << "error: unknown algorithm '" << name << "'\n";
            return kFailure;
        }
        opts.algos.push_back(*algo);
    }

    std::vector<BenchGame> games;
    if (!args.dir.empty()) {
        std::error_code ec;
        std::vector<fs::path> files;
        for (fs::directory_iterator it(args.dir, ec), end; !ec && it != end; it.increment(ec)) {
            if (it->is_regular_file()) files.push_back(it->path());
        }
        if (ec) {
            std::cerr << "error: cannot read directory " << args.dir << ": " << ec.message() << '\n';
            return kFailure;
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            BenchGame g{f.filename().string(), {}};
            if (!load_game(f.string(), g.game)) return kFailure;
            games.push_back(std::move(g));
        }
    } else {
        try {
            for (auto n : args.sizes) {
                for (std::size_t i = 0; i < args.per_size; ++i) {
                    auto p = gen_params(n, args.max_prio, args.outdeg_min, args.outdeg_max, args.seed + i, ClusterSpec{});
                    char name[64];
                    std::snprintf(name, sizeof name, "%s-n%07zu-%04zu", args.gen.c_str(), n, i);
                    games.push_back({name, args.gen == "random" ? random_game(p) : clustered_random_game(p)});
                }
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kFailure;
        }
    }

    auto records = run_bench(games, opts);
    if (args.out == "-") {
        write_csv(std::cout, records);
        write_summary(std::cerr, summarize(records));
    } else {
        std::ofstream out(args.out, std::ios::binary);
        write_csv(out, records);
        if (!out) {
            std::cerr << "error: cannot write " << args.out << '\n';
            return kFailure;
        }
        write_summary(std::cout, summarize(records));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parity game solver based on quasi-dominion progress measures"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game in PGSolver format");
    solve_cmd->add_option("--input,-i", solve_args.input, "PGSolver file, or - for standard input")->required();
    solve_cmd->add_option("--algo", solve_args.algo, "qdpm, spm or zielonka")
        ->check(CLI::IsMember({"qdpm", "spm", "zielonka"}))
        ->capture_default_str();
    solve_cmd->add_flag("--verify", solve_args.verify, "Check winning strategies for both players");
    solve_cmd->add_flag("--trace", solve_args.trace, "Print one line per operator application");
    solve_cmd->add_flag("--stats", solve_args.stats, "Print solver statistics");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate games in PGSolver format");
    gen_cmd->add_option("--kind", gen_args.kind, "random, clustered or figure1")
        ->required()
        ->check(CLI::IsMember({"random", "clustered", "figure1"}));
    gen_cmd->add_option("--n", gen_args.n, "Number of positions")->capture_default_str();
    gen_cmd->add_option("--max-prio", gen_args.max_prio, "Largest priority (default: n/10, at least 1)");
    gen_cmd->add_option("--outdeg-min", gen_args.outdeg_min)->capture_default_str();
    gen_cmd->add_option("--outdeg-max", gen_args.outdeg_max)->capture_default_str();
    gen_cmd->add_option("--seed", gen_args.seed)->capture_default_str();
    gen_cmd->add_option("--count", gen_args.count, "Games to generate, seeds seed..seed+count-1")->capture_default_str();
    gen_cmd->add_option("--depth-min", gen_args.cluster.min_depth)->capture_default_str();
    gen_cmd->add_option("--depth-max", gen_args.cluster.max_depth)->capture_default_str();
    gen_cmd->add_option("--clusters-min", gen_args.cluster.min_cluster)->capture_default_str();
    gen_cmd->add_option("--clusters-max", gen_args.cluster.max_cluster)->capture_default_str();
    gen_cmd->add_option("--bridges-min", gen_args.cluster.min_bridges)->capture_default_str();
    gen_cmd->add_option("--bridges-max", gen_args.cluster.max_bridges)->capture_default_str();
    gen_cmd->add_option("--out,-o", gen_args.out, "Output file (- for stdout), or a directory with --count > 1")
        ->capture_default_str();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Run solvers over a set of games and write CSV");
    auto* dir_opt = bench_cmd->add_option("--dir", bench_args.dir, "Directory of PGSolver files");
    auto* gen_opt = bench_cmd->add_option("--gen", bench_args.gen, "Generate games: random or clustered")
                        ->check(CLI::IsMember({"random", "clustered"}));
    dir_opt->excludes(gen_opt);
    bench_cmd->add_option("--sizes", bench_args.sizes, "Game sizes, comma separated")->delimiter(',');
    bench_cmd->add_option("--per-size", bench_args.per_size)->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed)->capture_default_str();
    bench_cmd->add_option("--max-prio", bench_args.max_prio, "Largest priority (default: n/10, at least 1)");
    bench_cmd->add_option("--outdeg-min", bench_args.outdeg_min)->capture_default_str();
    bench_cmd->add_option("--outdeg-max", bench_args.outdeg_max)->capture_default_str();
    bench_cmd->add_option("--algos", bench_args.algos, "Solvers, comma separated")
        ->delimiter(',')
        ->check(CLI::IsMember({"qdpm", "spm", "zielonka"}))
        ->capture_default_str();
    bench_cmd->add_option("--timeout-sec", bench_args.timeout_sec)->capture_default_str();
    bench_cmd->add_option("--out,-o", bench_args.out, "CSV file, or - for stdout")->capture_default_str();
    bench_cmd->add_option("--jobs,-j", bench_args.jobs, "Parallel solver runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (bench_cmd->parsed()) {
            if (bench_args.dir.empty() && bench_args.gen.empty()) throw CLI::RequiredError("--dir or --gen");
            if (!bench_args.gen.empty() && bench_args.sizes.empty()) throw CLI::RequiredError("--sizes");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kFailure;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_args);
        return cmd_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
