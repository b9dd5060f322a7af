import pytest

import qdpm


def test_figure1_regions_and_trace():
    g = qdpm.figure1_game()
    sol = qdpm.solve(g, trace=True)
    assert [g.label(v) for v in sol["w_even"]] == ["a", "e"]
    assert sorted(sol["w_even"] + sol["w_odd"]) == list(range(len(g)))
    assert sol["measures"][g.find("a")] == "⊤"
    assert "prg_plus" in sol["trace"]
    assert sol["macro_iterations"] >= 1


def test_round_trip():
    g = qdpm.clustered_game(200, outdeg_min=2, outdeg_max=2, seed=3)
    text = qdpm.write_pgsolver(g)
    assert qdpm.parse_pgsolver(text) == g
    assert qdpm.validate(g) == []


@pytest.mark.parametrize("seed", range(20))
def test_solvers_agree(seed):
    g = qdpm.random_game(12, max_prio=5, outdeg_min=1, outdeg_max=3, seed=seed)
    q = qdpm.solve(g)
    z = qdpm.zielonka(g)
    s = qdpm.spm(g)
    b = qdpm.brute_force(g)
    assert q["w_even"] == z["w_even"] == s["w_even"] == b["w_even"]
    ok, diag = qdpm.verify_winning(g, qdpm.Player.ODD, q["w_odd"], q["odd_strategy"])
    assert ok, diag
    ok, diag = qdpm.verify_winning(g, qdpm.Player.EVEN, q["w_even"], q["even_strategy"])
    assert ok, diag


def test_bad_strategy_is_reported():
    g = qdpm.ParityGame([(1, qdpm.Player.EVEN, [0, 1]), (2, qdpm.Player.EVEN, [1])], names=["x", "y"])
    ok, diag = qdpm.verify_winning(g, qdpm.Player.EVEN, [0, 1], {0: 0, 1: 1})
    assert not ok and diag
    ok, _ = qdpm.verify_winning(g, qdpm.Player.EVEN, [0, 1], {0: 1, 1: 1})
    assert ok


def test_errors():
    with pytest.raises(qdpm.ParseError):
        qdpm.parse_pgsolver("parity 1;\n0 2 0 x;\n")
    with pytest.raises(qdpm.GameError):
        qdpm.ParityGame([(0, qdpm.Player.EVEN, [])])
    with pytest.raises(qdpm.SolveTimeout):
        qdpm.spm(qdpm.clustered_game(3000, outdeg_min=2, outdeg_max=2), timeout=0.001)
