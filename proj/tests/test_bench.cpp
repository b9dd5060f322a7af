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

#include <doctest.h>

#include <sstream>
#include <tuple>

#include "qdpm/bench.hpp"
#include "qdpm/gamegen.hpp"

using namespace qdpm;

namespace {

std::vector<BenchGame> clustered(std::size_t count, std::size_t n)
{
    std::vector<BenchGame> games;
    for (std::size_t i = 0; i < count; ++i) {
        GenParams p;
        p.n = n;
        p.max_prio = default_priority_bound(n);
        p.outdeg_min = p.outdeg_max = 2;
        p.seed = i;
        games.push_back({"g" + std::to_string(count - i), clustered_random_game(p)});
    }
    return games;
}

const char* const kHeader = "game_name,n,d,algo,wall_time_ms,lifts,macro_iterations,w_even_size,w_odd_size,status\r\n";

}  // namespace

TEST_CASE("algorithm names")
{
    for (auto a : {Algo::Qdpm, Algo::Spm, Algo::Zielonka}) CHECK(parse_algo(to_string(a)) == a);
    CHECK_FALSE(parse_algo("pp"));
}

TEST_CASE("empty sweep writes only the header")
{
    std::ostringstream os;
    write_csv(os, run_bench({}, {}));
    CHECK(os.str() == kHeader);
}

TEST_CASE("csv quoting")
{
    BenchRecord r;
    r.game_name = "odd \"name\", here";
    r.algo = "qdpm";
    std::ostringstream os;
    write_csv(os, {r});
    CHECK(os.str() == std::string(kHeader) + "\"odd \"\"name\"\", here\",0,0,qdpm,0.000,0,0,0,0,ok\r\n");
}

TEST_CASE("one row per game and algorithm, sorted, regions agree")
{
    BenchOptions opts;
    opts.algos = {Algo::Zielonka, Algo::Qdpm};
    auto games = clustered(10, 120);
    auto rows = run_bench(games, opts);
    REQUIRE(rows.size() == 20);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(std::tie(rows[i].game_name, rows[i].algo) < std::tie(rows[i + 1].game_name, rows[i + 1].algo));
    }
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].algo == "qdpm");
        CHECK(rows[i + 1].algo == "zielonka");
        CHECK(rows[i].w_even_size == rows[i + 1].w_even_size);
        CHECK(rows[i].w_even_size + rows[i].w_odd_size == rows[i].n);
        CHECK(rows[i].status == BenchRecord::Status::Ok);
    }

    opts.jobs = 3;
    auto parallel = run_bench(games, opts);
    REQUIRE(parallel.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parallel[i].game_name == rows[i].game_name);
        CHECK(parallel[i].lifts == rows[i].lifts);
        CHECK(parallel[i].w_even_size == rows[i].w_even_size);
    }
}

TEST_CASE("timeouts become rows")
{
    BenchOptions opts;
    opts.algos = {Algo::Spm, Algo::Qdpm};
    opts.timeout_sec = 0.001;
    auto rows = run_bench(clustered(2, 3000), opts);
    REQUIRE(rows.size() == 4);
    std::size_t timeouts = 0;
    for (const auto& r : rows) timeouts += r.status == BenchRecord::Status::Timeout;
    CHECK(timeouts >= 1);
    std::ostringstream os;
    write_csv(os, rows);
    CHECK(os.str().find(",timeout\r\n") != std::string::npos);
}

TEST_CASE("summary medians per size")
{
    std::vector<BenchRecord> rows(4);
    const double times[] = {1, 3, 10, 7};
    for (std::size_t i = 0; i < 4; ++i) {
        rows[i].n = i < 3 ? 50 : 500;
        rows[i].algo = "qdpm";
        rows[i].wall_time_ms = times[i];
        rows[i].lifts = i;
    }
    rows[2].status = BenchRecord::Status::Timeout;
    auto s = summarize(rows);
    REQUIRE(s.size() == 2);
    CHECK(s[0].n == 50);
    CHECK(s[0].runs == 3);
    CHECK(s[0].timeouts == 1);
    CHECK(s[0].median_ms == 3);
    CHECK(s[1].median_ms == 7);
    CHECK(median({}) == 0);
    CHECK(median({4, 1, 2, 3}) == 2.5);
}
