import pytest
from hypothesis import given, strategies as st

from oracles import brute_bridges, cycle_space_dim, is_two_connected
from strategies import multigraphs
from zemm.catalog import get
from zemm.multigraph import (ComponentKind, Edge, GraphError, Multigraph, ParseError, bridges,
                             contract, genus, irreducible_components, is_trivalent, subdivide)

TRIANGLE = Multigraph.from_pairs("tri", [(0, 1), (1, 2), (2, 0)])
LOOP = Multigraph.from_pairs("loop", [(0, 0)])


def test_genus_examples():
    assert genus(get("G").graph) == 6
    assert genus(LOOP) == 1
    assert genus(Multigraph.from_pairs("tree", [(0, 1), (1, 2), (1, 3)])) == 0


def test_bridge_examples():
    two_triangles = Multigraph.from_pairs(
        "tt", [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    assert bridges(two_triangles) == {3}
    assert bridges(get("G").graph) == brute_bridges(get("G").graph) == set()
    assert bridges(Multigraph.from_pairs("p3", [(0, 1), (1, 2)])) == {0, 1}
    assert bridges(LOOP) == set()


def test_parallel_edges_are_not_bridges():
    g = Multigraph.from_pairs("dbl", [(0, 1), (0, 1), (1, 2)])
    assert bridges(g) == {2}


def test_trivalence():
    assert is_trivalent(get("F11").graph)
    assert is_trivalent(get("K4").graph)
    assert not is_trivalent(get("K5").graph)
    assert is_trivalent(Multigraph.from_pairs("d", [(0, 0), (0, 1), (1, 1)]))


def test_components_two_triangles_sharing_vertex():
    g = Multigraph.from_pairs("bowtie", [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    comps = irreducible_components(g)
    assert [c.kind for c in comps] == [ComponentKind.TWO_CONNECTED_LOOPLESS] * 2
    assert [c.genus for c in comps] == [1, 1]
    assert [c.edge_ids for c in comps] == [(0, 1, 2), (3, 4, 5)]


def test_components_of_g_is_whole_graph():
    g = get("G").graph
    (comp,) = irreducible_components(g)
    assert comp.edge_ids == g.edge_ids
    assert is_two_connected(g, comp.edge_ids)


def test_components_loop_on_bridge():
    g = Multigraph.from_pairs("lt", [(0, 0), (0, 1), (1, 2), (2, 3), (3, 1)])
    comps = irreducible_components(g)
    assert [(c.kind, c.edge_ids) for c in comps] == [
        (ComponentKind.SIMPLE_LOOP, (0,)), (ComponentKind.TWO_CONNECTED_LOOPLESS, (2, 3, 4))]


def test_subdivide_examples():
    h, mid = subdivide(TRIANGLE, 1)
    assert (h.num_vertices, len(h.edges), genus(h), mid) == (4, 4, 1, 3)
    assert h.edge(1) == Edge(1, 1, 3) and h.edge(3) == Edge(3, 3, 2)
    h, mid = subdivide(LOOP, 0)
    assert sorted((e.tail, e.head) for e in h.edges) == [(0, 1), (1, 0)]
    assert genus(h) == 1
    assert genus(subdivide(get("K4").graph, 2)[0]) == 3
    with pytest.raises(GraphError):
        subdivide(TRIANGLE, 9)


def test_contract_examples():
    h = contract(TRIANGLE, 0)
    assert (h.num_vertices, len(h.edges), genus(h)) == (2, 2, 1)
    assert h.edge(1).tail != h.edge(1).head and h.edge(2).tail != h.edge(2).head
    two_cycle = Multigraph.from_pairs("c2", [(0, 1), (1, 0)])
    h = contract(two_cycle, 0)
    assert h.num_vertices == 1 and h.edge(1).is_loop and genus(h) == 1
    h = contract(get("K4").graph, 0)
    assert (h.num_vertices, len(h.edges), genus(h)) == (3, 5, 3)
    with pytest.raises(GraphError):
        contract(LOOP, 0)


def test_text_round_trip_and_errors():
    g = Multigraph("iso", 3, (Edge(4, 0, 1, "e5"), Edge(7, 1, 1)))
    assert Multigraph.from_text(g.to_text()) == g
    assert Multigraph.from_text(g.to_text()).to_text() == g.to_text()
    parsed = Multigraph.from_text("# c\ngraph x\nedge 0 0 1  # tail head\nedge 1 1 0 lab\n")
    assert parsed.edge_label(1) == "lab" and parsed.num_vertices == 2
    with pytest.raises(ParseError) as exc:
        Multigraph.from_text("graph x\nedge 0 a 1\n")
    assert exc.value.lineno == 2
    with pytest.raises(ParseError):
        Multigraph.from_text("edge 0 0 1\n")
    with pytest.raises(ParseError):
        Multigraph.from_text("graph x\nedge 0 0 1\nedge 0 1 0\n")


def test_constructor_rejects_bad_endpoints():
    with pytest.raises(GraphError):
        Multigraph("x", 2, (Edge(0, 0, 2),))


@given(multigraphs())
def test_genus_equals_cycle_space_dimension(g):
    assert genus(g) == cycle_space_dim(g)


@given(multigraphs())
def test_bridges_match_brute_force(g):
    assert bridges(g) == brute_bridges(g)


@given(multigraphs())
def test_components_partition_nonbridge_edges(g):
    comps = irreducible_components(g)
    ids = [i for c in comps for i in c.edge_ids]
    assert len(ids) == len(set(ids))
    assert set(ids) == set(g.edge_ids) - bridges(g)
    assert sum(c.genus for c in comps) == genus(g)
    for c in comps:
        assert c.genus == cycle_space_dim(c.subgraph(g))
        if c.kind is ComponentKind.SIMPLE_LOOP:
            assert len(c.edge_ids) == 1 and g.edge(c.edge_ids[0]).is_loop
        else:
            assert not any(g.edge(i).is_loop for i in c.edge_ids)
            assert is_two_connected(g, c.edge_ids)


@given(multigraphs(min_edges=1), st.data())
def test_subdivide_and_contract_preserve_genus(g, data):
    e = data.draw(st.sampled_from(g.edge_ids))
    h, _ = subdivide(g, e)
    assert genus(h) == genus(g)
    if not g.edge(e).is_loop:
        assert genus(contract(g, e)) == genus(g)


@given(multigraphs())
def test_text_round_trip(g):
    assert Multigraph.from_text(g.to_text()) == g
