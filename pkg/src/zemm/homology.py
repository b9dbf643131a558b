"""Spanning forests, fundamental cycles and the coedge matrix.

For a spanning forest T the non-tree edges e_1..e_g index a basis f_1..f_g
of H_1: f_i is the unique cycle through e_i and tree edges, traversed in the
direction of e_i.  Writing the f_i as rows over all edges gives a g x n
matrix whose columns are the coedges e_j* in the dual basis of H^1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .multigraph import GraphError, Multigraph, num_components


@dataclass(frozen=True)
class SpanningForest:
    tree_edge_ids: tuple[int, ...]
    nontree_edge_ids: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.nontree_edge_ids)


def spanning_forest(g: Multigraph, prescribed: Iterable[int] | None = None) -> SpanningForest:
    """Breadth-first spanning forest, or validate a prescribed tree edge set.

    The default search starts at the least unvisited vertex and scans
    incident edges by ascending id.
    """
    if prescribed is not None:
        tree = sorted(set(prescribed))
        _check_forest(g, tree)
    else:
        seen = [False] * g.num_vertices
        tree = []
        for root in g.vertices:
            if seen[root]:
                continue
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for eid in sorted(g.incident(v)):
                    e = g.edge(eid)
                    if e.is_loop:
                        continue
                    w = e.other(v)
                    if not seen[w]:
                        seen[w] = True
                        tree.append(eid)
                        queue.append(w)
        tree.sort()
    in_tree = set(tree)
    nontree = tuple(e.id for e in g.edges if e.id not in in_tree)
    return SpanningForest(tuple(tree), nontree)


def _check_forest(g: Multigraph, tree: Sequence[int]) -> None:
    parent = list(g.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in tree:
        if not g.has_edge(eid):
            raise GraphError(f"prescribed tree uses unknown edge {eid}")
        e = g.edge(eid)
        if e.is_loop:
            raise GraphError(f"prescribed tree contains loop {eid}")
        a, b = find(e.tail), find(e.head)
        if a == b:
            raise GraphError(f"prescribed tree has a cycle through edge {eid}")
        parent[a] = b
    if len(tree) != g.num_vertices - num_components(g):
        raise GraphError("prescribed tree does not span the graph")


@dataclass(frozen=True)
class CycleMatrix:
    rows: int
    cols: int
    col_order: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def column(self, edge_id: int) -> tuple[int, ...]:
        j = self.col_order.index(edge_id)
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(eid, tuple(r[j] for r in self.entries)) for j, eid in enumerate(self.col_order)]

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "col_order": list(self.col_order),
            "entries": [x for r in self.entries for x in r],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CycleMatrix":
        r, c = data["rows"], data["cols"]
        flat = data["entries"]
        return cls(r, c, tuple(data["col_order"]),
                   tuple(tuple(flat[i * c:(i + 1) * c]) for i in range(r)))


def cycle_matrix(g: Multigraph, forest: SpanningForest) -> CycleMatrix:
    """Signed fundamental-cycle incidence matrix; columns non-tree first."""
    # Root every tree component and record, per vertex, the edge to its parent
    # and the sign of traversing that edge from child to parent.
    up: dict[int, tuple[int, int, int]] = {}
    depth = [0] * g.num_vertices
    tree = set(forest.tree_edge_ids)
    seen = [False] * g.num_vertices
    for root in g.vertices:
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for eid in g.incident(v):
                if eid not in tree:
                    continue
                e = g.edge(eid)
                w = e.other(v)
                if seen[w]:
                    continue
                seen[w] = True
                # child w -> parent v runs along e iff w is e's tail
                up[w] = (v, eid, 1 if e.tail == w else -1)
                depth[w] = depth[v] + 1
                queue.append(w)

    col_order = forest.nontree_edge_ids + forest.tree_edge_ids
    index = {eid: j for j, eid in enumerate(col_order)}
    rows = []
    for eid in forest.nontree_edge_ids:
        e = g.edge(eid)
        row = [0] * len(col_order)
        row[index[eid]] = 1
        # walk head -> tail through the tree: up from head, then down to tail
        a, b = e.head, e.tail
        down = []
        while depth[a] > depth[b]:
            p, t, s = up[a]
            row[index[t]] += s
            a = p
        while depth[b] > depth[a]:
            p, t, s = up[b]
            down.append((t, -s))
            b = p
        while a != b:
            p, t, s = up[a]
            row[index[t]] += s
            a = p
            p, t, s = up[b]
            down.append((t, -s))
            b = p
        for t, s in down:
            row[index[t]] += s
        rows.append(tuple(row))
    return CycleMatrix(len(rows), len(col_order), col_order, tuple(rows))
