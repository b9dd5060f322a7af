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

// Python bindings. Position sets become sorted id lists, strategies become
// dicts, measures their tuple strings.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "qdpm/gamegen.hpp"
#include "qdpm/oracles.hpp"
#include "qdpm/pgsolver.hpp"
#include "qdpm/solver.hpp"
#include "qdpm/verify.hpp"

namespace py = pybind11;
using namespace qdpm;

namespace {

std::map<PositionId, PositionId> as_dict(const Strategy& s)
{
    std::map<PositionId, PositionId> out;
    for (auto v : s.domain()) out[v] = *s.at(v);
    return out;
}

Strategy from_dict(std::size_t n, const std::map<PositionId, PositionId>& choices)
{
    Strategy s(n);
    for (const auto& [v, w] : choices) s.set(v, w);
    return s;
}

PositionSet from_ids(std::size_t n, const std::vector<PositionId>& ids)
{
    for (auto v : ids) {
        if (v >= n) throw py::index_error("position " + std::to_string(v) + " out of range");
    }
    return PositionSet(n, ids);
}

Deadline deadline_from(std::optional<double> timeout)
{
    return timeout ? Deadline::after(std::chrono::duration<double>(*timeout)) : Deadline();
}

GenParams params(std::size_t n, std::optional<Priority> max_prio, std::size_t outdeg_min, std::size_t outdeg_max,
                 std::uint64_t seed)
{
    GenParams p;
    p.n = n;
    p.max_prio = max_prio ? *max_prio : default_priority_bound(n);
    p.outdeg_min = outdeg_min;
    p.outdeg_max = outdeg_max;
    p.seed = seed;
    return p;
}

}  // namespace

PYBIND11_MODULE(_qdpm, m)
{
    m.doc() = "Parity game solving by quasi-dominion progress measures";

    py::register_exception<GameError>(m, "GameError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SolveTimeout>(m, "SolveTimeout", PyExc_TimeoutError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::enum_<Player>(m, "Player").value("EVEN", Player::Even).value("ODD", Player::Odd);

    py::class_<ParityGame>(m, "ParityGame")
        .def(py::init([](const std::vector<std::tuple<Priority, Player, std::vector<PositionId>>>& spec,
                         std::optional<std::vector<std::string>> names) {
                 std::vector<Position> ps;
                 for (std::size_t i = 0; i < spec.size(); ++i) {
                     auto& [prio, owner, succ] = spec[i];
                     ps.push_back({prio, owner, succ, names ? names->at(i) : std::string()});
                 }
                 return ParityGame::checked(std::move(ps));
             }),
             py::arg("positions"), py::arg("names") = py::none(),
             "Builds a validated game from (priority, owner, successors) triples.")
        .def("__len__", &ParityGame::size)
        .def("priority", &ParityGame::priority)
        .def("owner", &ParityGame::owner)
        .def("successors", &ParityGame::successors)
        .def("label", &ParityGame::label)
        .def("find", &ParityGame::find)
        .def_property_readonly("max_priority", &ParityGame::max_priority)
        .def_property_readonly("edge_count", &ParityGame::edge_count)
        .def("__eq__", &ParityGame::operator==)
        .def("__repr__", [](const ParityGame& g) {
            return "<ParityGame n=" + std::to_string(g.size()) + " d=" + std::to_string(g.max_priority()) + ">";
        });

    m.def("parse_pgsolver", [](const std::string& text) { return parse_pgsolver(text); }, py::arg("text"));
    m.def("read_pgsolver", &read_pgsolver_file, py::arg("path"));
    m.def("write_pgsolver", &write_pgsolver, py::arg("game"));
    m.def(
        "validate",
        [](const ParityGame& g) {
            std::vector<std::string> out;
            for (const auto& v : validate(g)) out.push_back(v.describe());
            return out;
        },
        py::arg("game"), "Violation messages; empty for a well-formed game.");

    m.def(
        "random_game",
        [](std::size_t n, std::optional<Priority> max_prio, std::size_t lo, std::size_t hi, std::uint64_t seed) {
            return random_game(params(n, max_prio, lo, hi, seed));
        },
        py::arg("n"), py::arg("max_prio") = py::none(), py::arg("outdeg_min") = 1, py::arg("outdeg_max") = 3,
        py::arg("seed") = 0);
    m.def(
        "clustered_game",
        [](std::size_t n, std::optional<Priority> max_prio, std::size_t lo, std::size_t hi, std::uint64_t seed) {
            return clustered_random_game(params(n, max_prio, lo, hi, seed));
        },
        py::arg("n"), py::arg("max_prio") = py::none(), py::arg("outdeg_min") = 1, py::arg("outdeg_max") = 3,
        py::arg("seed") = 0);
    m.def("figure1_game", &figure1_game);

    m.def(
        "solve",
        [](const ParityGame& g, bool trace, std::optional<double> timeout) {
            SolveOptions opts;
            opts.record_trace = trace;
            opts.deadline = deadline_from(timeout);
            const auto sol = [&] {
                py::gil_scoped_release release;
                return solve(g, opts);
            }();
            std::vector<std::string> measures;
            for (PositionId v = 0; v < g.size(); ++v) measures.push_back(sol.final_measure[v].to_string());
            py::dict out;
            out["w_even"] = sol.w_even.ids();
            out["w_odd"] = sol.w_odd.ids();
            out["measures"] = measures;
            out["even_strategy"] = as_dict(sol.even_strategy);
            out["odd_strategy"] = as_dict(sol.odd_strategy);
            out["macro_iterations"] = sol.stats.macro_iterations;
            out["lifts"] = sol.stats.lifts;
            out["wall_time_ms"] = sol.stats.wall_time.count();
            if (trace) {
                std::ostringstream os;
                write_trace(os, g, sol.trace);
                out["trace"] = os.str();
            }
            return out;
        },
        py::arg("game"), py::arg("trace") = false, py::arg("timeout") = py::none(),
        "Quasi-dominion progress-measure solver.");

    m.def(
        "zielonka",
        [](const ParityGame& g, std::optional<double> timeout) {
            const auto s = zielonka(g, deadline_from(timeout));
            py::dict out;
            out["w_even"] = s.w_even.ids();
            out["w_odd"] = s.w_odd.ids();
            out["even_strategy"] = as_dict(s.even_strategy);
            out["odd_strategy"] = as_dict(s.odd_strategy);
            out["recursive_calls"] = s.recursive_calls;
            return out;
        },
        py::arg("game"), py::arg("timeout") = py::none());
    m.def(
        "spm",
        [](const ParityGame& g, std::optional<double> timeout) {
            const auto s = [&] {
                py::gil_scoped_release release;
                return spm(g, deadline_from(timeout));
            }();
            py::dict out;
            out["w_even"] = s.w_even.ids();
            out["w_odd"] = s.w_odd.ids();
            out["lifts"] = s.lifts;
            return out;
        },
        py::arg("game"), py::arg("timeout") = py::none());
    m.def(
        "brute_force",
        [](const ParityGame& g, std::uint64_t budget) {
            const auto r = brute_force(g, budget);
            py::dict out;
            out["w_even"] = r.w_even.ids();
            out["w_odd"] = r.w_odd.ids();
            return out;
        },
        py::arg("game"), py::arg("budget") = 1'000'000);

    m.def(
        "verify_winning",
        [](const ParityGame& g, Player player, const std::vector<PositionId>& region,
           const std::map<PositionId, PositionId>& strategy) {
            const auto r = verify_winning(g, player, from_ids(g.size(), region), from_dict(g.size(), strategy));
            return py::make_tuple(r.ok, r.diagnostics);
        },
        py::arg("game"), py::arg("player"), py::arg("region"), py::arg("strategy"),
        "Returns (ok, diagnostics).");
}
