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

#include <random>
#include <sstream>

#include "qdpm/gamegen.hpp"
#include "qdpm/oracles.hpp"
#include "qdpm/solver.hpp"
#include "qdpm/verify.hpp"
#include "support.hpp"

using namespace qdpm;
using namespace qdpm::testing;

namespace {

constexpr auto E = Player::Even;
constexpr auto O = Player::Odd;

Measure tup(std::initializer_list<std::int64_t> t)
{
    return Measure::finite(Evaluation::from_tuple(t));
}

struct Fig {
    ParityGame g = figure1_game();
    PositionId a = *g.find("a"), b = *g.find("b"), c = *g.find("c"), d = *g.find("d"), e = *g.find("e"),
               f = *g.find("f"), gg = *g.find("g"), h = *g.find("h");
};

}  // namespace

TEST_CASE("denotations")
{
    Fig fig;
    auto bot = MeasureFunction::bottom(fig.g);
    auto d0 = denotations(bot, fig.g);
    CHECK(d0.top.empty());
    CHECK(d0.plus.empty());
    CHECK(d0.bottom == PositionSet::full(8));

    auto mu1 = progress_bottom(bot, fig.g);
    CHECK(denotations(mu1, fig.g).plus == set_of(8, {fig.a, fig.b, fig.c, fig.h}));

    MeasureFunction all_top(std::vector<Measure>(8, Measure::top()));
    CHECK(denotations(all_top, fig.g).top == PositionSet::full(8));
}

TEST_CASE("lift")
{
    Fig fig;
    auto bot = MeasureFunction::bottom(fig.g);
    CHECK(lift(bot, PositionSet(8), PositionSet::full(8), fig.g) == bot);

    auto mu1 = lift(bot, set_of(8, {fig.a, fig.b, fig.c, fig.h}), PositionSet::full(8), fig.g);
    CHECK(mu1[fig.a] == tup({0, 0, 0, 0, 1, 0, 0}));
    CHECK(mu1[fig.h] == tup({0, 0, 0, 0, 1, 0, 0}));
    CHECK(mu1[fig.b] == tup({1, 0, 0, 0, 0, 0, 0}));
    CHECK(mu1[fig.c] == tup({0, 0, 1, 0, 0, 0, 0}));

    auto g = make_game({{0, E, {1, 2}}, {0, E, {1}}, {2, E, {2}}});
    MeasureFunction mu({Measure::bottom(3), Measure::bottom(3), tup({1, 0, 0})});
    // the larger stretch wins, and stretching through v adds delta_0
    CHECK(lift(mu, set_of(3, {0}), PositionSet::full(3), g)[0] == tup({1, 0, 1}));
    CHECK_THROWS_AS(lift(mu, set_of(3, {1}), set_of(3, {0, 2}), g), EmptySuccessorSelection);
}

TEST_CASE("progress_bottom")
{
    Fig fig;
    auto mu1 = progress_bottom(MeasureFunction::bottom(fig.g), fig.g);
    for (auto v : {fig.d, fig.e, fig.gg, fig.f}) CHECK(mu1[v].is_bottom());
    auto mu2 = progress_bottom(progress_plus(mu1, fig.g), fig.g);
    CHECK(mu2[fig.d] == tup({0, 0, 0, 0, 1, 1, 0}));
    CHECK(mu2[fig.e] == tup({1, 0, 0, 0, 0, 1, 0}));
    CHECK(mu2[fig.gg] == tup({0, 0, 1, 1, 0, 0, 0}));

    MeasureFunction no_bottom(std::vector<Measure>(8, Measure::top()));
    CHECK(progress_bottom(no_bottom, fig.g) == no_bottom);
}

TEST_CASE("escapes, forfeits and best escapes on the example")
{
    Fig fig;
    auto mu1 = progress_bottom(MeasureFunction::bottom(fig.g), fig.g);
    auto mu2 = progress_bottom(progress_plus(mu1, fig.g), fig.g);
    auto q0 = denotations(mu2, fig.g).plus;
    CHECK(q0.size() == 7);
    CHECK(escapes(mu2, q0, fig.g) == set_of(8, {fig.b}));
    auto q1 = q0;
    q1.erase(fig.b);
    CHECK(escapes(mu2, q1, fig.g) == set_of(8, {fig.c, fig.e}));
    auto bef_e = escape_forfeit(mu2, q1, fig.e, fig.g);
    REQUIRE_FALSE(bef_e.is_top());
    CHECK(bef_e.evaluation().is_zero());
    CHECK(escape_forfeit(mu2, q1, fig.a, fig.g).is_top());
    CHECK(best_escapes(mu2, q1, fig.g) == set_of(8, {fig.e}));
    CHECK(escapes(mu2, PositionSet(8), fig.g).empty());
}

TEST_CASE("forfeit of a single exit")
{
    // v leaves {v} towards w; stretching w's measure through v overshoots by delta_2
    auto g = make_game({{2, E, {1}}, {2, E, {1}}, {0, O, {2}}});
    MeasureFunction mu({tup({1, 0, 0}), tup({1, 0, 0}), Measure::bottom(3)});
    auto f = escape_forfeit(mu, set_of(3, {0}), 0, g);
    REQUIRE_FALSE(f.is_top());
    CHECK(f.evaluation() == delta(2, 3));

    MeasureFunction with_top({tup({1, 0, 0}), Measure::top(), Measure::bottom(3)});
    CHECK_THROWS_AS(escape_forfeit(with_top, set_of(3, {0}), 0, g), TopOperand);
}

TEST_CASE("best escapes keeps ties")
{
    auto g = make_game({{2, O, {2, 0}}, {2, O, {2, 1}}, {2, E, {2}}});
    MeasureFunction mu(std::vector<Measure>(3, tup({1, 0, 0})));
    const auto q = set_of(3, {0, 1});
    CHECK(best_escapes(mu, q, g) == q);
    auto closed = make_game({{2, E, {0}}});
    MeasureFunction one({tup({1, 0, 0})});
    CHECK(best_escapes(one, PositionSet::full(1), closed).empty());
}

TEST_CASE("forfeit order puts Top last")
{
    auto f = Forfeit::finite(Evaluation::from_tuple({5, 0}));
    CHECK(f < Forfeit::top());
    CHECK(Forfeit::finite(Evaluation::from_tuple({0, 0, 1})) < Forfeit::finite(Evaluation::from_tuple({1, 0, 0})));
    CHECK(Forfeit::finite(Evaluation::from_tuple({-1, 0, 0})) < Forfeit::finite(Evaluation(3)));
    // a negative odd entry is a gain
    CHECK(Forfeit::finite(Evaluation::from_tuple({0, -1, 0})) > Forfeit::finite(Evaluation(3)));
}

TEST_CASE("progress_plus on the example")
{
    Fig fig;
    auto bot = MeasureFunction::bottom(fig.g);
    CHECK(progress_plus(bot, fig.g) == bot);

    auto mu1 = progress_bottom(bot, fig.g);
    CHECK(progress_plus(mu1, fig.g) == mu1);
    auto mu2 = progress_bottom(mu1, fig.g);

    std::vector<ExtractionRound> rounds;
    auto mu3 = progress_plus(mu2, fig.g, &rounds);
    std::vector<PositionId> order;
    for (const auto& r : rounds) {
        REQUIRE(r.extracted.size() == 1);
        order.push_back(r.extracted.front());
    }
    CHECK(order == std::vector<PositionId>{fig.b, fig.e, fig.c, fig.gg, fig.h, fig.d, fig.a});
    CHECK(mu3[fig.c] == tup({1, 0, 1, 0, 0, 0, 0}));
    CHECK(mu3[fig.gg] == tup({1, 0, 1, 1, 0, 0, 0}));
    CHECK(mu3[fig.h] == tup({1, 0, 1, 1, 1, 0, 0}));
    CHECK(mu3[fig.d] == tup({1, 0, 1, 1, 1, 1, 0}));
    CHECK(mu3[fig.a] == tup({1, 0, 1, 1, 2, 1, 0}));

    auto mu4 = progress_plus(progress_bottom(mu3, fig.g), fig.g);
    CHECK(mu4[fig.e] == tup({1, 0, 1, 1, 2, 2, 0}));
    auto mu5 = progress_plus(progress_bottom(mu4, fig.g), fig.g);
    CHECK(mu5[fig.a].is_top());
    CHECK(mu5[fig.e].is_top());
    CHECK(denotations(mu5, fig.g).top == set_of(8, {fig.a, fig.e}));
}

TEST_CASE("solve on the example")
{
    Fig fig;
    SolveOptions opts;
    opts.record_trace = true;
    auto sol = solve(fig.g, opts);
    CHECK(sol.w_even == set_of(8, {fig.a, fig.e}));
    CHECK(sol.w_odd == set_of(8, {fig.b, fig.c, fig.d, fig.f, fig.gg, fig.h}));
    CHECK(check_progress_measure(sol.final_measure, fig.g).ok);
    CHECK(verify_winning(fig.g, O, sol.w_odd, sol.odd_strategy).ok);
    CHECK(verify_winning(fig.g, E, sol.w_even, sol.even_strategy).ok);
    CHECK(sol.stats.macro_iterations >= 4);
    CHECK(sol.stats.lifts == 15);

    std::ostringstream text;
    write_trace(text, fig.g, sol.trace);
    CHECK(text.str().find("order: b | e | c | g | h | d | a") != std::string::npos);
    CHECK(text.str().find("a=⊤ e=⊤") != std::string::npos);
}

TEST_CASE("solve on trivial games")
{
    auto even_loop = make_game({{0, E, {0}}});
    CHECK(solve(even_loop).w_even == PositionSet::full(1));
    auto odd_loop = make_game({{1, O, {0}}});
    auto sol = solve(odd_loop);
    CHECK(sol.w_odd == PositionSet::full(1));
    CHECK(sol.odd_strategy.at(0) == PositionId{0});
    CHECK(extract_odd_strategy(sol.final_measure, odd_loop).at(0) == PositionId{0});
}

TEST_CASE("measure checks")
{
    auto g = make_game({{2, E, {0}}});
    CHECK_FALSE(check_progress_measure(MeasureFunction::bottom(g), g).ok);
    MeasureFunction all_top({Measure::top()});
    CHECK(check_progress_measure(all_top, g).ok);

    auto fig = figure1_game();
    CHECK(check_regress_measure(MeasureFunction::bottom(fig), fig).ok);

    auto h = make_game({{2, O, {1}}, {0, E, {1}}});
    MeasureFunction mu({tup({2, 0, 0}), Measure::bottom(3)});
    auto r = check_regress_measure(mu, h);
    CHECK_FALSE(r.ok);
    CHECK(r.position == PositionId{0});
}

TEST_CASE("engine matches the literal operators step by step")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = seed % 3 ? small_random_game(seed, 25) : [&] {
            GenParams p;
            p.n = 40 + seed % 60;
            p.max_prio = static_cast<Priority>(2 + seed % 9);
            p.outdeg_min = 1;
            p.outdeg_max = 3;
            p.seed = seed;
            return clustered_random_game(p);
        }();
        std::size_t steps = 0;
        SolveOptions opts;
        opts.observer = [&](Operator op, const MeasureFunction& before, const MeasureFunction& after) {
            ++steps;
            auto expected = op == Operator::ProgressBottom ? progress_bottom(before, g) : progress_plus(before, g);
            REQUIRE(after == expected);
        };
        auto sol = solve(g, opts);
        CHECK(steps == 2 * sol.stats.macro_iterations);

        // literal fixpoint iteration from bottom
        auto mu = MeasureFunction::bottom(g);
        while (true) {
            auto next = progress_plus(progress_bottom(mu, g), g);
            if (next == mu) break;
            mu = std::move(next);
        }
        CHECK(mu == sol.final_measure);
    }
}

TEST_CASE("operators are idempotent at the fixpoint")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = small_random_game(seed + 1000, 30);
        auto sol = solve(g);
        CHECK(progress_bottom(sol.final_measure, g) == sol.final_measure);
        CHECK(progress_plus(sol.final_measure, g) == sol.final_measure);
    }
}

TEST_CASE("solve honours the deadline")
{
    GenParams p;
    p.n = 3000;
    p.max_prio = 300;
    p.outdeg_min = 2;
    p.outdeg_max = 2;
    p.seed = 1;
    auto g = clustered_random_game(p);
    SolveOptions opts;
    opts.deadline = Deadline(Deadline::Clock::now());
    CHECK_THROWS_AS(solve(g, opts), SolveTimeout);
}
