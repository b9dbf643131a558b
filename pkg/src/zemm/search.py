"""Backtracking search for integral edge-minimizing metrics.

A Z-emm on a graph of genus g is a positive definite Gram matrix with 2 on
the diagonal and entries in {-1, 0, 1} off it, such that every non-bridge
coedge has q-value 1.  The search fixes what the equations force, branches
on the most constrained equation, and prunes with exact integer minors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .constraints import ConstraintSystem, Pair, Unsat, all_pairs, build_constraints, propagate
from .homology import CycleMatrix, SpanningForest, cycle_matrix, spanning_forest
from .multigraph import Multigraph, bridges, genus

VALUE_ORDER = (0, 1, -1)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer matrix with 2 on the diagonal, off-diagonal in {-1,0,1}."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError("Gram matrix must be square")
            if r[i] != 2:
                raise ValueError(f"diagonal entry {i + 1} is {r[i]}, expected 2")
            for j in range(n):
                if r[j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i + 1},{j + 1})")
                if i != j and r[j] not in (-1, 0, 1):
                    raise ValueError(f"off-diagonal entry ({i + 1},{j + 1}) = {r[j]}")

    @classmethod
    def from_pairs(cls, g: int, values: dict[Pair, int]) -> "GramMatrix":
        m = [[2 if i == j else 0 for j in range(g)] for i in range(g)]
        for (i, j), v in values.items():
            m[i][j] = m[j][i] = v
        return cls(tuple(map(tuple, m)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def q(self, x: Sequence[int]) -> int:
        """Value of the quadratic form x . (M/2) . x^T."""
        s = sum(x[i] * self.entries[i][j] * x[j] for i in range(len(x)) for j in range(len(x)))
        return s // 2

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def leading_minors(m: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors by fraction-free (Bareiss) elimination.

    Stops after the first non-positive minor, since nothing later is needed
    to decide positive definiteness.
    """
    n = len(m)
    a = [list(map(int, r)) for r in m]
    out = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        out.append(pivot)
        if pivot <= 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return out


def is_positive_definite(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion in exact integer arithmetic."""
    minors = leading_minors(m)
    return len(minors) == len(m) and all(d > 0 for d in minors)


class Status(enum.Enum):
    FOUND = "Found"
    UNSAT = "Unsat"
    TRIVIAL = "Trivial"


@dataclass
class ZemmResult:
    graph: str
    status: Status
    gram: GramMatrix | None = None
    fixed_by_propagation: int = 0
    nodes_explored: int = 0
    lattice: object | None = None  # LatticeClass
    reason: str | None = None

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "status": self.status.value,
            "gram": [x for r in self.gram.entries for x in r] if self.gram is not None else None,
            "genus": self.gram.dim if self.gram is not None else None,
            "lattice": self.lattice.to_json() if self.lattice is not None else None,
            "fixed_by_propagation": self.fixed_by_propagation,
            "nodes_explored": self.nodes_explored,
        }


class _Search:
    """Depth-first search over unknown off-diagonal entries.

    Variables are branched on in an equation-driven order: the open equation
    with the fewest free unknowns first (ties by source edge), and within it
    the term with the smallest coefficient first, then the least pair.  Once
    every equation is closed, the remaining unknowns follow in lexicographic
    order.  Values are tried as 0, 1, -1.
    """

    def __init__(self, system: ConstraintSystem):
        self.g = g = system.g
        self.pairs = all_pairs(g)
        self.index = {p: k for k, p in enumerate(self.pairs)}
        self.eqs = [([(self.index[p], c) for p, c in e.terms], e.constant) for e in system.equations]
        self.var_eqs: list[list[int]] = [[] for _ in self.pairs]
        for k, (terms, _) in enumerate(self.eqs):
            for v, _ in terms:
                self.var_eqs[v].append(k)
        # branching order inside each equation
        self.eq_branch = [[v for c, v in sorted((c, v) for v, c in terms)] for terms, _ in self.eqs]
        self.nodes = 0

    def _assign(self, vals: list, v: int, x: int) -> bool:
        """Set v = x and propagate; False on any contradiction."""
        g = self.g
        pending = [(v, x)]
        while pending:
            v, x = pending.pop()
            cur = vals[v]
            if cur is not None:
                if cur != x:
                    return False
                continue
            vals[v] = x
            i, j = self.pairs[v]
            # a 3x3 principal block [[2,a,b],[a,2,c],[b,c,2]] has determinant
            # 2 + 2abc when a, b, c are all +-1, so abc = -1 is never allowed
            if x:
                for k in range(g):
                    if k == i or k == j:
                        continue
                    a = vals[self.index[(i, k) if i < k else (k, i)]]
                    b = vals[self.index[(j, k) if j < k else (k, j)]]
                    if a and b and a * b * x == -1:
                        return False
            for e in self.var_eqs[v]:
                terms, const = self.eqs[e]
                rem = const
                free = None
                nfree = 0
                for w, c in terms:
                    val = vals[w]
                    if val is None:
                        nfree += 1
                        free = (w, c)
                    else:
                        rem -= c * val
                if nfree == 0:
                    if rem:
                        return False
                elif abs(rem) > nfree:
                    return False
                elif nfree == 1:
                    w, c = free
                    pending.append((w, rem * c))
        return True

    def _initial(self) -> list | None:
        vals: list = [None] * len(self.pairs)
        for terms, const in self.eqs:
            if not terms:
                if const:
                    return None
            elif abs(const) > len(terms):
                return None
            elif len(terms) == 1:
                (w, c), = terms
                if not self._assign(vals, w, const * c):
                    return None
        return vals

    def _leading_ok(self, vals: list) -> bool:
        g = self.g
        k = 0
        # largest leading block with every entry assigned
        while k < g and all(vals[self.index[(i, k)]] is not None for i in range(k)):
            k += 1
        if k < 3:
            return True
        m = self._matrix(vals, k)
        return is_positive_definite(m)

    def _matrix(self, vals: list, k: int) -> list[list[int]]:
        m = [[2] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                m[i][j] = m[j][i] = vals[self.index[(i, j)]]
        return m

    def _pick(self, vals: list) -> int | None:
        best = None
        for e, (terms, _) in enumerate(self.eqs):
            nfree = sum(1 for w, _ in terms if vals[w] is None)
            if nfree and (best is None or nfree < best[0]):
                best = (nfree, e)
        if best is not None:
            for w in self.eq_branch[best[1]]:
                if vals[w] is None:
                    return w
        for w, val in enumerate(vals):
            if val is None:
                return w
        return None

    def solutions(self) -> Iterator[list[int]]:
        vals = self._initial()
        self.fixed = 0 if vals is None else sum(v is not None for v in vals)
        if vals is None:
            return
        yield from self._dfs(vals)

    def _dfs(self, vals: list) -> Iterator[list[int]]:
        self.nodes += 1
        if not self._leading_ok(vals):
            return
        w = self._pick(vals)
        if w is None:
            if is_positive_definite(self._matrix(vals, self.g)):
                yield list(vals)
            return
        for x in VALUE_ORDER:
            child = list(vals)
            if self._assign(child, w, x):
                yield from self._dfs(child)

    def gram(self, vals: list[int]) -> GramMatrix:
        return GramMatrix(tuple(map(tuple, self._matrix(vals, self.g))))


def _prepare(g: Multigraph, forest: SpanningForest | None) -> tuple[SpanningForest, CycleMatrix, ConstraintSystem]:
    if forest is None:
        forest = spanning_forest(g)
    m = cycle_matrix(g, forest)
    return forest, m, build_constraints(m, bridges(g))


def solve_all(g: Multigraph, forest: SpanningForest | None = None, limit: int | None = None) -> list[GramMatrix]:
    """Every Z-emm Gram matrix in search order, truncated at ``limit``."""
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    _, _, system = _prepare(g, forest)
    if system.g == 0:
        return [GramMatrix(())]
    search = _Search(system)
    out = []
    for vals in search.solutions():
        out.append(search.gram(vals))
        if limit is not None and len(out) >= limit:
            break
    return out


def solve_zemm(g: Multigraph, forest: SpanningForest | None = None, classify_lattice: bool = True) -> ZemmResult:
    """First Z-emm in the canonical search order, or Unsat."""
    from .lattice import classify

    _, _, system = _prepare(g, forest)
    if system.g == 0:
        return ZemmResult(g.name, Status.TRIVIAL, GramMatrix(()),
                          lattice=classify(GramMatrix(())) if classify_lattice else None)
    try:
        fixed = len(propagate(system).fixed)
    except Unsat as exc:
        return ZemmResult(g.name, Status.UNSAT, reason=str(exc))
    search = _Search(system)
    first = next(search.solutions(), None)
    if first is None:
        return ZemmResult(g.name, Status.UNSAT, fixed_by_propagation=fixed,
                          nodes_explored=search.nodes, reason="search exhausted")
    gram = search.gram(first)
    return ZemmResult(g.name, Status.FOUND, gram, fixed, search.nodes,
                      classify(gram) if classify_lattice else None)


@dataclass
class Verification:
    ok: bool
    failures: list[str] = field(default_factory=list)
    failing_edges: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def verify_zemm(g: Multigraph, forest: SpanningForest, m: Sequence[Sequence[int]]) -> Verification:
    """Check a candidate Gram matrix against the definition of a Z-emm.

    Reports every failing certificate component: diagonal, off-diagonal
    range, symmetry, positive definiteness, then q(e*) = 1 per non-bridge
    column in column order.
    """
    rows = [list(r) for r in (m.entries if isinstance(m, GramMatrix) else m)]
    gen = genus(g)
    if len(rows) != gen or any(len(r) != gen for r in rows):
        raise ValueError(f"Gram matrix is {len(rows)}-dimensional but the genus is {gen}")
    out = Verification(True)
    for i in range(gen):
        if rows[i][i] != 2:
            out.failures.append(f"diagonal entry a_{{{i + 1},{i + 1}}} = {rows[i][i]}, expected 2")
        for j in range(i + 1, gen):
            if rows[i][j] != rows[j][i]:
                out.failures.append(f"a_{{{i + 1},{j + 1}}} != a_{{{j + 1},{i + 1}}}")
            if rows[i][j] not in (-1, 0, 1):
                out.failures.append(f"a_{{{i + 1},{j + 1}}} = {rows[i][j]} is outside {{-1,0,1}}")
    if not is_positive_definite(rows):
        out.failures.append("not positive definite")
    cm = cycle_matrix(g, forest)
    br = bridges(g)
    for eid, col in cm.columns():
        if eid in br:
            continue
        value = sum(col[i] * rows[i][j] * col[j] for i in range(gen) for j in range(gen))
        if value != 2:
            out.failing_edges.append(eid)
            out.failures.append(f"edge {g.edge_label(eid)}: q(e*) = {value}/2, expected 1")
    out.ok = not out.failures
    return out
