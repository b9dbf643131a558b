"""Graph surgery for the genus reduction and the genus-8 corpus.

The reductions R3a/R3b/R3c delete an edge from a trivalent graph and
smooth the resulting degree-2 vertices; ops a/b/c are their inverses and
each raise the genus by one.
"""

from __future__ import annotations

import enum
import hashlib
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterator

from .catalog import GENUS7, get
from .multigraph import (GraphError, Multigraph, add_edge, add_vertex, contract, delete_edge,
                         is_trivalent, iter_edges_between, subdivide)


class SurgeryError(GraphError):
    pass


class StepKind(enum.Enum):
    A_JoinMidpoints = "a"
    B_AddHandle = "b"
    C_LoopPendant = "c"
    R3a = "3a"
    R3b = "3b"
    R3c = "3c"


_ARITY = {StepKind.A_JoinMidpoints: 2, StepKind.B_AddHandle: 1, StepKind.C_LoopPendant: 1}


@total_ordering
@dataclass(frozen=True)
class SurgeryStep:
    kind: StepKind
    args: tuple[int, ...]

    def __post_init__(self):
        n = _ARITY.get(self.kind)
        if n is not None and len(self.args) != n:
            raise SurgeryError(f"op {self.kind.value} takes {n} edge(s), got {len(self.args)}")
        if self.kind is StepKind.A_JoinMidpoints and self.args[0] == self.args[1]:
            raise SurgeryError("op a needs two distinct edges")

    def __lt__(self, other):
        order = list(StepKind)
        return (order.index(self.kind), self.args) < (order.index(other.kind), other.args)

    def apply(self, g: Multigraph, name: str | None = None) -> Multigraph:
        fn = {
            StepKind.A_JoinMidpoints: op_a,
            StepKind.B_AddHandle: op_b,
            StepKind.C_LoopPendant: op_c,
            StepKind.R3a: op_3a,
            StepKind.R3b: op_3b,
            StepKind.R3c: op_3c,
        }[self.kind]
        return fn(g, *self.args, name=name)

    def tag(self, g: Multigraph) -> str:
        """``<kind>_<labels>`` using the edges' display labels."""
        return "_".join([self.kind.value] + [g.edge_label(e) for e in self.args])


def op_a(g: Multigraph, e1: int, e2: int, name: str | None = None) -> Multigraph:
    """Join the midpoints of two distinct edges by a new edge."""
    if e1 == e2:
        raise SurgeryError("op a needs two distinct edges")
    g.edge(e1), g.edge(e2)
    h, m1 = subdivide(g, e1, name)
    h, m2 = subdivide(h, e2)
    h, _ = add_edge(h, m1, m2)
    return h


def op_b(g: Multigraph, e: int, name: str | None = None) -> Multigraph:
    """Add a handle: subdivide ``e`` twice and double its middle segment."""
    h, m1 = subdivide(g, e, name)
    middle = h.next_edge_id() - 1  # the m1 -> head half
    h, m2 = subdivide(h, middle)
    h, _ = add_edge(h, m1, m2)
    return h


def op_c(g: Multigraph, e: int, name: str | None = None, vertex: int | None = None) -> Multigraph:
    """Hang a loop off the midpoint of ``e`` through a new bridge.

    ``vertex`` may name an existing isolated vertex to carry the loop;
    otherwise a fresh vertex is added.
    """
    h, mid = subdivide(g, e, name)
    if vertex is None:
        h, vertex = add_vertex(h)
    elif h.degree(vertex) != 0:
        raise SurgeryError(f"vertex {vertex} is not isolated")
    h, _ = add_edge(h, mid, vertex)
    h, _ = add_edge(h, vertex, vertex)
    return h


def _require_trivalent(g: Multigraph) -> None:
    if not is_trivalent(g):
        raise SurgeryError(f"{g.name} is not trivalent")


def _smooth_at(g: Multigraph, v: int, avoid: int | None, choice: int | None) -> int | None:
    """Pick the edge at ``v`` to contract: ``choice`` or the least non-loop id.

    None means ``v`` only carries a loop, which is already a smooth circle.
    """
    options = [i for i in g.incident(v) if i != avoid and not g.edge(i).is_loop]
    if choice is not None:
        if choice not in options:
            raise SurgeryError(f"edge {choice} cannot be contracted at vertex {v}")
        return choice
    return min(options) if options else None


def _contract_ids(g: Multigraph, ids: list[int | None], name: str | None) -> Multigraph:
    done = {None}
    for i in ids:
        if i in done:
            continue
        done.add(i)
        g = contract(g, i, name)
    return g


def op_3a(g: Multigraph, e: int, c1: int | None = None, c2: int | None = None,
          name: str | None = None) -> Multigraph:
    """Delete a non-loop edge without a parallel and smooth both ends.

    ``c1``/``c2`` choose the contracted edge at the tail/head; by default the
    least-id non-loop edge there.
    """
    _require_trivalent(g)
    edge = g.edge(e)
    if edge.is_loop:
        raise SurgeryError(f"edge {e} is a loop; use op 3c")
    if sum(1 for _ in iter_edges_between(g, edge.tail, edge.head)) > 1:
        raise SurgeryError(f"edge {e} has a parallel edge; use op 3b")
    h = delete_edge(g, e, name)
    k1 = _smooth_at(h, edge.tail, None, c1)
    k2 = _smooth_at(h, edge.head, None, c2)
    return _contract_ids(h, [k1, k2], name)


def op_3b(g: Multigraph, e: int, name: str | None = None) -> Multigraph:
    """Delete one of a pair of parallel edges and smooth both ends."""
    _require_trivalent(g)
    edge = g.edge(e)
    if edge.is_loop:
        raise SurgeryError(f"edge {e} is a loop; use op 3c")
    parallel = [x.id for x in iter_edges_between(g, edge.tail, edge.head) if x.id != e]
    if not parallel:
        raise SurgeryError(f"edge {e} has no parallel edge; use op 3a")
    f = min(parallel)
    h = delete_edge(g, e, name)
    k1 = _smooth_at(h, edge.tail, f, None)
    k2 = _smooth_at(h, edge.head, f, None)
    return _contract_ids(h, [k1, k2], name)


def op_3c(g: Multigraph, e: int, c: int | None = None, name: str | None = None) -> Multigraph:
    """Delete a loop and its stem, leave the loop vertex isolated, smooth the stem's foot."""
    _require_trivalent(g)
    edge = g.edge(e)
    if not edge.is_loop:
        raise SurgeryError(f"edge {e} is not a loop; use op 3a or 3b")
    v = edge.tail
    stems = [i for i in g.incident(v) if i != e]
    if len(stems) != 1 or g.edge(stems[0]).is_loop:
        raise SurgeryError(f"loop {e} has no single stem edge")
    f = stems[0]
    w = g.edge(f).other(v)
    h = delete_edge(delete_edge(g, e, name), f)
    return _contract_ids(h, [_smooth_at(h, w, None, c)], name)


def _distance_profile(g: Multigraph, v: int) -> str:
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for i in g.incident(u):
                w = g.edge(i).other(u)
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    hist = Counter(dist.values())
    parallel = sum(1 for i in g.incident(v) for j in g.incident(v)
                   if i < j and g.edge(i).other(v) == g.edge(j).other(v))
    return ".".join(str(hist[d]) for d in sorted(hist)) + f"p{parallel}"


def invariant_hash(g: Multigraph, rounds: int = 4) -> str:
    """Isomorphism-invariant fingerprint by colour refinement.

    Equal graphs always collide; distinct hashes prove non-isomorphism, but
    equal hashes do not prove isomorphism.
    """
    # refinement alone cannot split regular graphs, so seed it with each
    # vertex's distance profile and parallel-edge count
    colours = [f"{g.degree(v)}/{_distance_profile(g, v)}" for v in g.vertices]
    for _ in range(rounds):
        nxt = []
        for v in g.vertices:
            seen = sorted(("L" if g.edge(i).is_loop else "") + colours[g.edge(i).other(v)]
                          for i in g.incident(v))
            nxt.append(hashlib.sha256((colours[v] + "|" + ",".join(seen)).encode()).hexdigest()[:16])
        colours = nxt
    summary = f"{g.num_vertices}:{len(g.edges)}:" + ",".join(sorted(colours))
    return hashlib.sha256(summary.encode()).hexdigest()


def enumerate_extensions(g: Multigraph, dedup: bool = False) -> list[tuple[SurgeryStep, Multigraph]]:
    """Every op a (unordered edge pairs) then every op b.

    With ``dedup`` only the first graph of each invariant hash is kept; this
    may merge non-isomorphic graphs and is never used for the corpus.
    """
    out = []
    ids = g.edge_ids
    for e1, e2 in combinations(ids, 2):
        step = SurgeryStep(StepKind.A_JoinMidpoints, (e1, e2))
        out.append((step, op_a(g, e1, e2, name=f"{g.name}_{step.tag(g)}")))
    for e in ids:
        step = SurgeryStep(StepKind.B_AddHandle, (e,))
        out.append((step, op_b(g, e, name=f"{g.name}_{step.tag(g)}")))
    if dedup:
        seen: set[str] = set()
        kept = []
        for step, h in out:
            key = invariant_hash(h)
            if key not in seen:
                seen.add(key)
                kept.append((step, h))
        out = kept
    return out


def genus8_corpus(bases: tuple[str, ...] = GENUS7) -> Iterator[Multigraph]:
    """Extensions of the genus-7 base graphs, named ``<base>_<kind>_<labels>``."""
    for base in bases:
        for _, h in enumerate_extensions(get(base).graph):
            yield h
