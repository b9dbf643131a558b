"""Directed multigraphs with loops and parallel edges.

Vertices are the dense integers ``0 .. n-1``.  Edges carry a stable integer
id, a fixed orientation ``tail -> head`` and an optional text label (the
display name such as "7").  Graphs are immutable; every
operation that changes the shape returns a new graph.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs and invalid edge references."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    label: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def other(self, v: int) -> int:
        """Endpoint opposite to ``v``."""
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise GraphError(f"vertex {v} is not an endpoint of edge {self.id}")


@dataclass(frozen=True)
class Multigraph:
    name: str
    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple(sorted(self.edges, key=lambda e: e.id))
        object.__setattr__(self, "edges", edges)
        if self.num_vertices < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for e in edges:
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if e.id < 0:
                raise GraphError(f"negative edge id {e.id}")
            for v in (e.tail, e.head):
                if not 0 <= v < self.num_vertices:
                    raise GraphError(f"edge {e.id} refers to missing vertex {v}")

    @classmethod
    def from_pairs(cls, name: str, pairs: Iterable[Sequence[int]],
                   num_vertices: int | None = None) -> "Multigraph":
        """Build a graph from ``(tail, head)`` pairs; ids follow list order."""
        edges = tuple(Edge(i, int(p[0]), int(p[1])) for i, p in enumerate(pairs))
        if num_vertices is None:
            num_vertices = 1 + max((max(e.tail, e.head) for e in edges), default=-1)
        return cls(name, num_vertices, edges)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for e in self.edges:
            inc[e.tail].append(e.id)
            if not e.is_loop:
                inc[e.head].append(e.id)
        return tuple(tuple(x) for x in inc)

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge id {edge_id}") from None

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of the edges at ``v`` (a loop is listed once)."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return sum(2 if self._by_id[i].is_loop else 1 for i in self._incidence[v])

    def degree_sequence(self) -> list[int]:
        return sorted(self.degree(v) for v in self.vertices)

    def edge_label(self, edge_id: int) -> str:
        e = self.edge(edge_id)
        return e.label if e.label is not None else str(e.id)

    def next_edge_id(self) -> int:
        return self.edges[-1].id + 1 if self.edges else 0

    def renamed(self, name: str) -> "Multigraph":
        return Multigraph(name, self.num_vertices, self.edges)

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = [f"graph {self.name}", f"vertices {self.num_vertices}"]
        for e in self.edges:
            rec = f"edge {e.id} {e.tail} {e.head}"
            if e.label is not None:
                rec += f" {e.label}"
            lines.append(rec)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Multigraph":
        name = None
        nv = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kw = parts[0]
            if kw == "graph":
                if len(parts) != 2:
                    raise ParseError(lineno, "expected 'graph <name>'")
                if name is not None:
                    raise ParseError(lineno, "duplicate graph record")
                name = parts[1]
            elif kw == "vertices":
                if len(parts) != 2 or not _is_int(parts[1]):
                    raise ParseError(lineno, "expected 'vertices <count>'")
                nv = int(parts[1])
            elif kw == "edge":
                if len(parts) not in (4, 5) or not all(_is_int(p) for p in parts[1:4]):
                    raise ParseError(lineno, "expected 'edge <id> <tail> <head> [<label>]'")
                if name is None:
                    raise ParseError(lineno, "edge record before 'graph' record")
                label = parts[4] if len(parts) == 5 else None
                edges.append(Edge(int(parts[1]), int(parts[2]), int(parts[3]), label))
            else:
                raise ParseError(lineno, f"unknown record {kw!r}")
        if name is None:
            raise ParseError(0, "missing 'graph' record")
        if nv is None:
            nv = 1 + max((max(e.tail, e.head) for e in edges), default=-1)
        try:
            return cls(name, nv, tuple(edges))
        except GraphError as exc:
            raise ParseError(0, str(exc)) from None

    def checksum(self) -> str:
        """SHA-256 of the canonical edge-list serialization."""
        return hashlib.sha256(self.to_text().encode()).hexdigest()


def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


# -- structural queries --------------------------------------------------


def _components(g: Multigraph, skip: frozenset[int] = frozenset()) -> list[int]:
    """Component index per vertex, ignoring edges in ``skip``."""
    parent = list(g.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        if e.id in skip:
            continue
        a, b = find(e.tail), find(e.head)
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots: dict[int, int] = {}
    return [roots.setdefault(find(v), len(roots)) for v in g.vertices]


def num_components(g: Multigraph) -> int:
    comp = _components(g)
    return len(set(comp))


def genus(g: Multigraph) -> int:
    """First Betti number |E| - |V| + #components."""
    return len(g.edges) - g.num_vertices + num_components(g)


def bridges(g: Multigraph) -> frozenset[int]:
    """Edges whose removal disconnects their component.

    Iterative low-link DFS keyed on edge ids, so a parallel edge back to the
    parent counts as a back edge.
    """
    pre = [-1] * g.num_vertices
    low = [0] * g.num_vertices
    out = set()
    counter = 0
    for root in g.vertices:
        if pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            for eid in it:
                if eid == via:
                    continue
                e = g.edge(eid)
                if e.is_loop:
                    continue
                w = e.other(v)
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, iter(g.incident(w))))
                    break
                low[v] = min(low[v], pre[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > pre[u]:
                        out.add(via)
    return frozenset(out)


def is_trivalent(g: Multigraph) -> bool:
    return all(g.degree(v) == 3 for v in g.vertices)


class ComponentKind(enum.Enum):
    SIMPLE_LOOP = "SimpleLoop"
    TWO_CONNECTED_LOOPLESS = "TwoConnectedLoopless"


@dataclass(frozen=True)
class IrreducibleComponent:
    kind: ComponentKind
    edge_ids: tuple[int, ...]
    genus: int = field(default=0)

    def subgraph(self, g: Multigraph) -> Multigraph:
        """The component as a stand-alone graph (vertices renumbered)."""
        return induced_subgraph(g, self.edge_ids, f"{g.name}.{self.edge_ids[0]}")


def induced_subgraph(g: Multigraph, edge_ids: Iterable[int], name: str) -> Multigraph:
    chosen = [g.edge(i) for i in sorted(edge_ids)]
    verts = sorted({v for e in chosen for v in (e.tail, e.head)})
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(Edge(e.id, index[e.tail], index[e.head], e.label) for e in chosen)
    return Multigraph(name, len(verts), edges)


def _blocks(g: Multigraph) -> list[list[int]]:
    """Edge sets of the biconnected blocks of the loopless part of ``g``."""
    pre = [-1] * g.num_vertices
    low = [0] * g.num_vertices
    blocks = []
    counter = 0
    edge_stack: list[int] = []
    for root in g.vertices:
        if pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            for eid in it:
                if eid == via:
                    continue
                e = g.edge(eid)
                if e.is_loop:
                    continue
                w = e.other(v)
                if pre[w] == -1:
                    edge_stack.append(eid)
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, iter(g.incident(w))))
                    break
                if pre[w] < pre[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], pre[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= pre[u]:
                        block = []
                        while True:
                            x = edge_stack.pop()
                            block.append(x)
                            if x == via:
                                break
                        blocks.append(sorted(block))
    return blocks


def irreducible_components(g: Multigraph) -> list[IrreducibleComponent]:
    """Split H^1 into cohomology-irreducible summands.

    Loops become SimpleLoop components, bridges are dropped, and every other
    biconnected block is a loopless 2-connected component.  Components are
    ordered by their least edge id.
    """
    out = []
    for e in g.edges:
        if e.is_loop:
            out.append(IrreducibleComponent(ComponentKind.SIMPLE_LOOP, (e.id,), 1))
    for block in _blocks(g):
        nverts = len({v for i in block for v in (g.edge(i).tail, g.edge(i).head)})
        gen = len(block) - nverts + 1
        if gen == 0:
            continue  # a lone bridge
        out.append(IrreducibleComponent(ComponentKind.TWO_CONNECTED_LOOPLESS, tuple(block), gen))
    out.sort(key=lambda c: c.edge_ids[0])
    return out


# -- elementary surgery --------------------------------------------------


def subdivide(g: Multigraph, edge_id: int, name: str | None = None) -> tuple[Multigraph, int]:
    """Insert a new vertex in the middle of an edge.

    The edge keeps its id for the tail half ``tail -> mid``; the head half
    ``mid -> head`` gets the next free id.  Returns the new graph and the new
    vertex.
    """
    e = g.edge(edge_id)
    mid = g.num_vertices
    new_id = g.next_edge_id()
    edges = [x for x in g.edges if x.id != edge_id]
    edges.append(Edge(e.id, e.tail, mid, e.label))
    edges.append(Edge(new_id, mid, e.head))
    return Multigraph(name or g.name, g.num_vertices + 1, tuple(edges)), mid


def add_edge(g: Multigraph, tail: int, head: int, name: str | None = None,
             label: str | None = None) -> tuple[Multigraph, int]:
    new_id = g.next_edge_id()
    nv = max(g.num_vertices, tail + 1, head + 1)
    return Multigraph(name or g.name, nv, g.edges + (Edge(new_id, tail, head, label),)), new_id


def add_vertex(g: Multigraph) -> tuple[Multigraph, int]:
    return Multigraph(g.name, g.num_vertices + 1, g.edges), g.num_vertices


def delete_edge(g: Multigraph, edge_id: int, name: str | None = None) -> Multigraph:
    g.edge(edge_id)
    return Multigraph(name or g.name, g.num_vertices,
                      tuple(e for e in g.edges if e.id != edge_id))


def contract(g: Multigraph, edge_id: int, name: str | None = None) -> Multigraph:
    """Merge the endpoints of a non-loop edge.

    The head is merged into the tail; parallel edges and loops created by the
    merge are kept.  Vertices above the removed one shift down by one.
    """
    e = g.edge(edge_id)
    if e.is_loop:
        raise GraphError(f"cannot contract loop {edge_id}")
    keep, gone = e.tail, e.head

    def relabel(v):
        if v == gone:
            v = keep
        return v - 1 if v > gone else v

    edges = tuple(Edge(x.id, relabel(x.tail), relabel(x.head), x.label)
                  for x in g.edges if x.id != edge_id)
    return Multigraph(name or g.name, g.num_vertices - 1, edges)


def iter_edges_between(g: Multigraph, u: int, v: int) -> Iterator[Edge]:
    for i in g.incident(u):
        e = g.edge(i)
        if {e.tail, e.head} == {u, v} and not e.is_loop:
            yield e
