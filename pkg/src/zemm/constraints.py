"""Linear equations on the off-diagonal Gram entries.

A column c of the cycle matrix is the coedge e* in the basis e_1*..e_g*.
With a_ii = 2 the condition q(e*) = 1 reads

    1 = sum_i c_i^2 + sum_{i<j} c_i c_j a_ij,

so each equation is stored as ``sum(terms) == constant`` with
``constant = 1 - sum c_i^2``.  Unknown pairs are 0-based; the text rendering
uses the 1-based ``a_{i,j}`` names.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .homology import CycleMatrix

Pair = tuple[int, int]


class Unsat(Exception):
    """The equations have no solution with entries in {-1, 0, 1}."""


@dataclass(frozen=True)
class LinearEquation:
    constant: int
    terms: tuple[tuple[Pair, int], ...]
    source_edge: int

    @property
    def diagonal(self) -> int:
        """The ``sum c_i^2`` part of the original equation."""
        return 1 - self.constant

    def unknowns(self) -> tuple[Pair, ...]:
        return tuple(p for p, _ in self.terms)

    def residual(self, gram) -> int:
        """``sum(terms) - constant`` evaluated on a full matrix."""
        return sum(c * gram[i][j] for (i, j), c in self.terms) - self.constant

    def __str__(self) -> str:
        parts = []
        if self.diagonal or not self.terms:
            parts.append(str(self.diagonal))
        for (i, j), c in self.terms:
            name = f"a_{{{i + 1},{j + 1}}}"
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else str(abs(c))
            if not parts:
                parts.append(("" if c > 0 else "-") + mag + name)
            else:
                parts.append(f"{sign}{mag}{name}")
        return "1=" + "".join(parts)

    def to_json(self) -> dict:
        return {
            "source_edge": self.source_edge,
            "constant": self.constant,
            "terms": [[i + 1, j + 1, c] for (i, j), c in self.terms],
            "text": str(self),
        }


def make_equation(constant: int, terms: Mapping[Pair, int] | Iterable[tuple[Pair, int]],
                  source_edge: int) -> LinearEquation:
    """Merge duplicate pairs, drop zero coefficients, sort pairs."""
    acc: dict[Pair, int] = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for (i, j), c in items:
        key = (i, j) if i < j else (j, i)
        acc[key] = acc.get(key, 0) + c
    return LinearEquation(constant, tuple(sorted((p, c) for p, c in acc.items() if c)),
                          source_edge)


@dataclass(frozen=True)
class ConstraintSystem:
    g: int
    equations: tuple[LinearEquation, ...]
    unknowns: tuple[Pair, ...]
    # non-bridge columns whose equation is the tautology 0 = 0
    tautologies: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"g": self.g, "equations": [e.to_json() for e in self.equations]}


def all_pairs(g: int) -> tuple[Pair, ...]:
    return tuple((i, j) for i in range(g) for j in range(i + 1, g))


def build_constraints(m: CycleMatrix, bridge_cols: Iterable[int] = ()) -> ConstraintSystem:
    """One equation per non-bridge column outside the identity block."""
    g = m.rows
    bridge_cols = set(bridge_cols)
    equations = []
    tautologies = []
    for eid, col in m.columns()[g:]:
        if eid in bridge_cols:
            continue
        support = [i for i, c in enumerate(col) if c]
        terms = {(i, j): col[i] * col[j] for a, i in enumerate(support) for j in support[a + 1:]}
        eq = make_equation(1 - sum(c * c for c in col), terms, eid)
        if not eq.terms and eq.constant == 0:
            tautologies.append(eid)
            continue
        equations.append(eq)
    equations.sort(key=lambda e: e.source_edge)
    return ConstraintSystem(g, tuple(equations), all_pairs(g), tuple(sorted(tautologies)))


@dataclass
class Propagation:
    fixed: dict[Pair, int] = field(default_factory=dict)
    equations: list[LinearEquation] = field(default_factory=list)


def substitute(eq: LinearEquation, values: Mapping[Pair, int]) -> LinearEquation:
    constant = eq.constant
    rest = []
    for p, c in eq.terms:
        if p in values:
            constant -= c * values[p]
        else:
            rest.append((p, c))
    return LinearEquation(constant, tuple(rest), eq.source_edge)


def propagate(system: ConstraintSystem, fixed: Mapping[Pair, int] | None = None) -> Propagation:
    """Fix every unknown that is alone in an equation, to a fixpoint.

    Raises ``Unsat`` when an equation reduces to a false constant, forces a
    value outside {-1, 0, 1}, or cannot be met even with every remaining
    unknown at +-1.
    """
    values: dict[Pair, int] = dict(fixed or {})
    eqs = [substitute(e, values) for e in system.equations]
    by_unknown: dict[Pair, list[int]] = {}
    for k, e in enumerate(eqs):
        for p, _ in e.terms:
            by_unknown.setdefault(p, []).append(k)
    queue = deque(range(len(eqs)))
    queued = set(queue)
    while queue:
        k = queue.popleft()
        queued.discard(k)
        e = eqs[k] = substitute(eqs[k], values)
        if len(e.terms) == 0:
            if e.constant != 0:
                raise Unsat(f"edge {e.source_edge}: 0 = {e.constant}")
            continue
        if abs(e.constant) > sum(abs(c) for _, c in e.terms):
            raise Unsat(f"edge {e.source_edge}: {e} cannot be met with entries in {{-1,0,1}}")
        if len(e.terms) == 1:
            (p, c), = e.terms
            value, rem = divmod(e.constant, c)
            if rem or abs(value) > 1:
                raise Unsat(f"edge {e.source_edge}: forces a_{{{p[0] + 1},{p[1] + 1}}} = {e.constant}/{c}")
            values[p] = value
            for k2 in by_unknown.get(p, ()):
                if k2 not in queued:
                    queue.append(k2)
                    queued.add(k2)
    return Propagation(values, [e for e in eqs if e.terms])
