"""Named graphs: the base graphs of the genus 6-8 reduction plus small helpers.

Edge ids are ``label - 1`` so that ascending id order is the label
order e_1, e_2, ...; the first ``g`` ids are the non-tree edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import _catalog_data as data
from .homology import CycleMatrix, SpanningForest, cycle_matrix, spanning_forest
from .lattice import classify
from .multigraph import Edge, Multigraph, genus
from .search import GramMatrix, verify_zemm

GENUS7 = ("F11", "F12", "F13", "F14", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10")
FIXTURES = ("G",) + GENUS7
AUXILIARY = ("K4", "K5", "K33", "theta", "loop")
NAMES = FIXTURES + ("E42",) + AUXILIARY


@dataclass(frozen=True)
class CatalogEntry:
    graph: Multigraph
    prescribed_tree: tuple[int, ...]
    expected_genus: int
    paper_cycle_matrix: CycleMatrix | None = None
    paper_gram: GramMatrix | None = None
    form: str | None = None
    trivalent: bool = False
    in_corpus: bool = False
    # edges whose orientation was taken from the stored record, not an arrow
    unoriented_edges: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.graph.name

    @property
    def forest(self) -> SpanningForest:
        return spanning_forest(self.graph, self.prescribed_tree)


class UnknownGraph(KeyError):
    pass


def _table(text: str) -> list[list[int]]:
    return [[int(x) for x in line.split()] for line in text.strip().splitlines()]


def gram_from_form(form: str, dim: int) -> GramMatrix:
    """Gram matrix of a form written like ``x1^2+x1x2-x2x3+...``.

    The coefficient of x_i x_j becomes a_ij and twice the coefficient of
    x_i^2 becomes a_ii.
    """
    m = [[0] * dim for _ in range(dim)]
    text = re.sub(r"\s+", "", form)
    pos = 0
    term = re.compile(r"([+-]?)(\d*)x(\d+)(?:\^2|x(\d+))")
    while pos < len(text):
        t = term.match(text, pos)
        if t is None:
            raise ValueError(f"cannot parse form at {text[pos:pos + 10]!r}")
        sign = -1 if t.group(1) == "-" else 1
        coef = sign * int(t.group(2) or 1)
        i = int(t.group(3)) - 1
        if t.group(4):
            j = int(t.group(4)) - 1
            m[i][j] += coef
            m[j][i] += coef
        else:
            m[i][i] += 2 * coef
        pos = t.end()
    return GramMatrix(tuple(map(tuple, m)))


def _fixture_entry(name: str) -> CatalogEntry:
    raw = getattr(data, name)
    rows = _table(raw["edges"])
    edges = tuple(Edge(lab - 1, t, h, str(lab)) for lab, t, h, _ in rows)
    graph = Multigraph(name, raw["vertices"], edges)
    tree = tuple(lab - 1 for lab, _, _, bold in rows if bold)
    g = len(edges) - len(tree)
    tail = _table(raw["array"])
    full = tuple(tuple([int(i == j) for j in range(g)] + r) for i, r in enumerate(tail))
    order = tuple(sorted(e.id for e in edges if e.id not in tree)) + tuple(sorted(tree))
    cm = CycleMatrix(g, len(edges), order, full)
    gram = GramMatrix(tuple(map(tuple, _table(raw["gram"]))))
    return CatalogEntry(graph, tree, g, cm, gram, raw["form"], trivalent=True,
                        in_corpus=name in GENUS7)


def _pairs_entry(name: str, pairs, trivalent=False, notes=()) -> CatalogEntry:
    graph = Multigraph.from_pairs(name, pairs)
    tree = spanning_forest(graph).tree_edge_ids
    return CatalogEntry(graph, tree, genus(graph), trivalent=trivalent,
                        unoriented_edges=graph.edge_ids, notes=tuple(notes))


def _build(name: str) -> CatalogEntry:
    if name in FIXTURES:
        return _fixture_entry(name)
    if name == "E42":
        pairs = _table(data.E42["pairs"])
        return _pairs_entry("E42", pairs, trivalent=True,
                            notes=("excluded from corpus", "no stored orientation or tree"))
    if name == "K4":
        return _pairs_entry(name, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], trivalent=True)
    if name == "K5":
        return _pairs_entry(name, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    if name == "K33":
        return _pairs_entry(name, [(i, j) for i in range(3) for j in range(3, 6)], trivalent=True)
    if name == "theta":
        # middle edge reversed so the single equation reads 1 = 2 - a_{1,2}
        return _pairs_entry(name, [(0, 1), (1, 0), (0, 1)], trivalent=True)
    if name == "loop":
        return _pairs_entry(name, [(0, 0)])
    raise UnknownGraph(name)


_CACHE: dict[str, CatalogEntry] = {}


def get(name: str) -> CatalogEntry:
    if name not in NAMES:
        raise UnknownGraph(f"unknown catalog graph {name!r}; choose from {', '.join(NAMES)}")
    if name not in _CACHE:
        _CACHE[name] = _build(name)
    return _CACHE[name]


def names() -> tuple[str, ...]:
    return NAMES


@dataclass
class FixtureCheck:
    name: str
    skipped: bool = False
    failures: list[str] = field(default_factory=list)
    lattice: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class CatalogReport:
    checks: list[FixtureCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if not c.skipped and c.ok)

    @property
    def total(self) -> int:
        return sum(1 for c in self.checks if not c.skipped)


def verify_entry(entry: CatalogEntry) -> FixtureCheck:
    """Cross-check an entry's transcription against its stored fixtures."""
    check = FixtureCheck(entry.name)
    if entry.paper_cycle_matrix is None and entry.paper_gram is None:
        check.skipped = True
        return check
    g = genus(entry.graph)
    if g != entry.expected_genus:
        check.failures.append(f"genus {g}, expected {entry.expected_genus}")
    forest = entry.forest
    if entry.paper_cycle_matrix is not None:
        ours = cycle_matrix(entry.graph, forest)
        theirs = entry.paper_cycle_matrix
        if ours.col_order != theirs.col_order:
            check.failures.append("cycle matrix column order differs")
        else:
            for i, (r1, r2) in enumerate(zip(ours.entries, theirs.entries)):
                for eid, x, y in zip(ours.col_order, r1, r2):
                    if x != y:
                        check.failures.append(
                            f"cycle matrix f_{i + 1} at e_{entry.graph.edge_label(eid)}: {x} != {y}")
    if entry.paper_gram is not None:
        if entry.form is not None and gram_from_form(entry.form, g) != entry.paper_gram:
            check.failures.append("stored form and Gram matrix disagree")
        result = verify_zemm(entry.graph, forest, entry.paper_gram)
        check.failures.extend(result.failures)
        if result.ok:
            cls = classify(entry.paper_gram)
            check.lattice = cls.name
            if cls.name != f"E{g}":
                check.failures.append(f"lattice is {cls.name}, expected E{g}")
    return check


def verify_catalog(only: str | list[str] | None = None,
                   entries: list[CatalogEntry] | None = None) -> CatalogReport:
    if entries is None:
        wanted = [only] if isinstance(only, str) else (only or list(FIXTURES))
        entries = [get(n) for n in wanted]
    return CatalogReport([verify_entry(e) for e in entries])
