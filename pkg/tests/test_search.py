import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_solve_all, fraction_pd
from strategies import multigraphs
from zemm import search
from zemm.catalog import FIXTURES, GENUS7, get
from zemm.constraints import Unsat
from zemm.homology import cycle_matrix, spanning_forest
from zemm.lattice import classify
from zemm.multigraph import Multigraph, bridges, genus
from zemm.search import (GramMatrix, Status, is_positive_definite, leading_minors, solve_all,
                         solve_zemm, verify_zemm)


def nonbridge_columns(g, forest):
    br = bridges(g)
    return [col for eid, col in cycle_matrix(g, forest).columns() if eid not in br]


def test_positive_definite_examples():
    assert is_positive_definite(get("G").paper_gram.entries)
    assert leading_minors([[2, 1], [1, 2]]) == [2, 3]
    ones = [[2 if i == j else 1 for j in range(6)] for i in range(6)]
    assert is_positive_definite(ones)  # all-ones off-diagonal is J + I, still PD
    bad = [list(r) for r in get("G").paper_gram.entries]
    for i in range(6):
        for j in range(6):
            if i != j and bad[i][j] == 0:
                bad[i][j] = 1
    assert is_positive_definite(bad) == fraction_pd(bad) is False


def test_entries_of_size_two_are_never_pd():
    for a in (2, -2, 3):
        assert not is_positive_definite([[2, a], [a, 2]])
        assert not is_positive_definite([[2, 0, a], [0, 2, 0], [a, 0, 2]])


def test_gram_matrix_validation():
    GramMatrix(((2, 1), (1, 2)))
    for bad in [((2, 1), (0, 2)), ((1, 0), (0, 2)), ((2, 2), (2, 2)), ((2, 0),)]:
        with pytest.raises(ValueError):
            GramMatrix(bad)
    m = GramMatrix(((2, 1), (1, 2)))
    assert m.q((1, -1)) == 1 and m.dim == 2


def test_solve_g_reproduces_stored_matrix():
    e = get("G")
    r = solve_zemm(e.graph, e.forest)
    assert r.status is Status.FOUND
    assert r.gram == e.paper_gram
    assert r.lattice.name == "E6"
    assert r.fixed_by_propagation == 7
    assert solve_all(e.graph, e.forest, limit=1) == [e.paper_gram]


@pytest.mark.parametrize("name", GENUS7)
def test_solve_genus7(name):
    e = get(name)
    r = solve_zemm(e.graph, e.forest)
    assert r.status is Status.FOUND and r.lattice.name == "E7"
    assert verify_zemm(e.graph, e.forest, r.gram)


def test_k4_is_a3_and_matches_brute_force():
    g = get("K4").graph
    f = spanning_forest(g)
    r = solve_zemm(g)
    assert r.status is Status.FOUND and r.lattice.name == "A3"
    brute = brute_solve_all(g, nonbridge_columns(g, f), 3)
    assert r.gram.entries in brute
    assert all(classify(m).name == "A3" for m in brute)


def test_theta_and_tree():
    theta = get("theta").graph
    assert solve_all(theta) == [GramMatrix(((2, 1), (1, 2)))]
    tree = Multigraph.from_pairs("tree", [(0, 1), (1, 2)])
    assert solve_all(tree) == [GramMatrix(())]
    r = solve_zemm(tree)
    assert r.status is Status.TRIVIAL and r.gram.dim == 0
    with pytest.raises(ValueError):
        solve_all(theta, limit=0)


def test_unsat_from_propagation_is_a_status(monkeypatch):
    def boom(system, fixed=None):
        raise Unsat("edge 0: 0 = 1")

    monkeypatch.setattr(search, "propagate", boom)
    r = solve_zemm(get("theta").graph)
    assert r.status is Status.UNSAT and r.gram is None and "0 = 1" in r.reason
    assert r.to_json()["status"] == "Unsat"


def test_verify_examples():
    f11 = get("F11")
    assert verify_zemm(f11.graph, f11.forest, f11.paper_gram)
    g = get("G")
    diag = [[2 * (i == j) for j in range(6)] for i in range(6)]
    v = verify_zemm(g.graph, g.forest, diag)
    assert not v
    assert g.graph.edge(v.failing_edges[0]).label == "7"
    assert 11 in v.failing_edges  # e_12, whose equation is 1 = 2 - a_{1,2}
    assert any(msg.startswith("edge 12:") for msg in v.failures)
    loop = get("loop").graph
    assert verify_zemm(loop, spanning_forest(loop), [[2]])
    with pytest.raises(ValueError):
        verify_zemm(loop, spanning_forest(loop), [[2, 0], [0, 2]])


def test_verify_reports_bad_entries():
    theta = get("theta")
    v = verify_zemm(theta.graph, theta.forest, [[2, 3], [3, 2]])
    assert not v and any("outside" in m for m in v.failures) and "not positive definite" in v.failures


def test_result_json_shape():
    e = get("G")
    data = solve_zemm(e.graph, e.forest).to_json()
    assert set(data) >= {"graph", "status", "gram", "lattice", "nodes_explored"}
    assert data["gram"] == [x for row in e.paper_gram.entries for x in row]
    assert data["lattice"]["name"] == "E6"


@settings(max_examples=60)
@given(multigraphs(max_genus=3))
def test_solve_all_matches_brute_force(g):
    f = spanning_forest(g)
    ours = solve_all(g, f)
    assert len(ours) == len(set(ours))
    brute = brute_solve_all(g, nonbridge_columns(g, f), genus(g))
    assert {m.entries for m in ours} == brute


@settings(max_examples=80)
@given(multigraphs(max_edges=14, max_genus=6))
def test_found_results_verify(g):
    r = solve_zemm(g)
    assert r.status in (Status.FOUND, Status.TRIVIAL)
    assert verify_zemm(g, spanning_forest(g), r.gram)


def test_pd_agrees_with_rational_oracle():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 8)
        m = [[2] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = m[j][i] = rng.choice((-1, 0, 1))
        assert is_positive_definite(m) == fraction_pd(m)


@given(st.sampled_from(FIXTURES))
def test_determinism(name):
    e = get(name)
    assert solve_zemm(e.graph, e.forest).to_json() == solve_zemm(e.graph, e.forest).to_json()
