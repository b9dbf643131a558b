import dataclasses

import pytest

from zemm.catalog import (AUXILIARY, FIXTURES, GENUS7, NAMES, UnknownGraph, gram_from_form, get,
                          verify_catalog, verify_entry)
from zemm.homology import spanning_forest
from zemm.multigraph import bridges, genus, irreducible_components, is_trivalent
from zemm.search import GramMatrix


def test_names():
    assert len(FIXTURES) == 15 and len(GENUS7) == 14
    assert set(NAMES) == set(FIXTURES) | {"E42"} | set(AUXILIARY)
    with pytest.raises(UnknownGraph):
        get("G11")


def test_g_entry():
    e = get("G")
    assert (e.graph.num_vertices, len(e.graph.edges), genus(e.graph)) == (10, 15, 6)
    assert sorted(int(e.graph.edge_label(i)) for i in e.prescribed_tree) == list(range(7, 16))


def test_e42_entry():
    e = get("E42")
    assert e.graph.num_vertices == 12 and e.expected_genus == genus(e.graph)
    assert "excluded from corpus" in e.notes and not e.in_corpus
    assert is_trivalent(e.graph)


def test_loop_entry():
    e = get("loop")
    assert (e.graph.num_vertices, len(e.graph.edges), e.expected_genus) == (1, 1, 1)


@pytest.mark.parametrize("name", NAMES)
def test_entry_invariants(name):
    e = get(name)
    assert e.expected_genus == genus(e.graph)
    f = spanning_forest(e.graph, e.prescribed_tree)
    assert f.tree_edge_ids == tuple(sorted(e.prescribed_tree))


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_graphs_are_irreducible(name):
    g = get(name).graph
    assert is_trivalent(g) and not bridges(g)
    assert len(irreducible_components(g)) == 1
    assert genus(g) == (6 if name == "G" else 7)


def test_verify_catalog_all_pass():
    report = verify_catalog()
    assert report.ok and report.passed == report.total == 15
    assert [c.lattice for c in report.checks] == ["E6"] + ["E7"] * 14


def test_stored_form_of_f12():
    e = get("F12")
    assert gram_from_form(e.form, 7) == e.paper_gram
    assert verify_catalog("F12").checks[0].lattice == "E7"


def test_auxiliary_is_skipped():
    check = verify_catalog("K4").checks[0]
    assert check.skipped and check.ok


def test_perturbed_fixture_is_reported():
    e = get("F13")
    rows = [list(r) for r in e.paper_gram.entries]
    i, j = next((i, j) for i in range(7) for j in range(i + 1, 7) if rows[i][j])
    rows[i][j] = rows[j][i] = -rows[i][j]
    bad = dataclasses.replace(e, paper_gram=GramMatrix(tuple(map(tuple, rows))), form=None)
    check = verify_entry(bad)
    assert not check.ok
    assert any(f.startswith("edge ") for f in check.failures)


def test_gram_from_form():
    m = gram_from_form("x1^2 + x1x2 - x2x3 + x2^2\t+ x3^2", 3)
    assert m == GramMatrix(((2, 1, 0), (1, 2, -1), (0, -1, 2)))
    with pytest.raises(ValueError):
        gram_from_form("x1^2 + y", 1)
