"""Recognition of the even lattice (H^1, 2q) behind a Z-emm.

The lattice is identified by (rank, determinant, number of norm-2 vectors),
which separates A_n, D_n and E_6, E_7, E_8 from one another in rank <= 8.
Everything is exact: determinants by Bareiss elimination, roots by a
Fincke-Pohst style enumeration over an LDL^T decomposition in rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Sequence

Matrix = Sequence[Sequence[int]]


class NotPositiveDefinite(ValueError):
    pass


def _rows(m) -> list[list[int]]:
    entries = getattr(m, "entries", m)
    return [list(map(int, r)) for r in entries]


def determinant(m: Matrix) -> int:
    """Exact determinant via fraction-free elimination with row pivoting."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def ldl(m: Matrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Rational LDL^T factorization ``m = L D L^T`` with unit lower L.

    Raises NotPositiveDefinite if a pivot is not positive.
    """
    a = _rows(m)
    n = len(a)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for j in range(n):
        dj = Fraction(a[j][j]) - sum(L[j][k] ** 2 * d[k] for k in range(j))
        if dj <= 0:
            raise NotPositiveDefinite("matrix is not positive definite")
        d.append(dj)
        for i in range(j + 1, n):
            L[i][j] = (Fraction(a[i][j]) - sum(L[i][k] * L[j][k] * d[k] for k in range(j))) / dj
    return d, L


def short_vectors(m: Matrix, norm: int) -> list[tuple[int, ...]]:
    """All integer x != 0 with x . m . x^T == norm, sorted.

    Writes x m x^T = sum_i d_i (x_i + sum_{k>i} L_ki x_k)^2 and fixes the
    coordinates from the last one down; at each level the partial sum bounds
    the admissible integers exactly.
    """
    d, L = ldl(m)
    n = len(d)
    out: list[tuple[int, ...]] = []
    x = [0] * n
    target = Fraction(norm)

    def level(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining == 0 and any(x):
                out.append(tuple(x))
            return
        centre = -sum((L[k][i] * x[k] for k in range(i + 1, n)), Fraction(0))
        # (x_i - centre)^2 <= remaining / d_i
        r2 = remaining / d[i]
        radius = isqrt(floor(r2)) + 1
        lo = floor(centre) - radius
        hi = floor(centre) + radius + 1
        for xi in range(lo, hi + 1):
            t = xi - centre
            used = d[i] * t * t
            if used <= remaining:
                x[i] = xi
                level(i - 1, remaining - used)
        x[i] = 0

    if n:
        level(n - 1, target)
    return sorted(out)


def roots(m: Matrix) -> list[tuple[int, ...]]:
    """Vectors of norm 2 for the Gram matrix m (so q(x) = 1)."""
    return short_vectors(m, 2)


@dataclass(frozen=True)
class LatticeClass:
    kind: str  # "A", "D", "E", "Trivial" or "Other"
    rank: int
    determinant: int
    root_count: int

    @property
    def name(self) -> str:
        if self.kind in ("A", "D", "E"):
            return f"{self.kind}{self.rank}"
        return self.kind

    def to_json(self) -> dict:
        return {"kind": self.kind, "name": self.name, "rank": self.rank,
                "determinant": self.determinant, "root_count": self.root_count}


def _table(rank: int) -> dict[tuple[int, int], str]:
    """(determinant, root count) -> kind for the irreducible root lattices."""
    table = {(rank + 1, rank * (rank + 1)): "A"}
    if rank >= 4:
        table[(4, 2 * rank * (rank - 1))] = "D"
    exceptional = {6: (3, 72), 7: (2, 126), 8: (1, 240)}
    if rank in exceptional:
        table[exceptional[rank]] = "E"
    return table


def classify(m: Matrix) -> LatticeClass:
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return LatticeClass("Trivial", 0, 1, 0)
    det = determinant(rows)
    if det <= 0:
        raise NotPositiveDefinite("matrix is not positive definite")
    count = len(roots(rows))
    kind = _table(n).get((det, count), "Other")
    return LatticeClass(kind, n, det, count)


def cartan_matrix(kind: str, rank: int) -> list[list[int]]:
    """Standard Gram matrix of the root lattice A_n, D_n or E_n."""
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i, j):
        m[i][j] = m[j][i] = -1

    if kind == "A" and rank >= 1:
        for i in range(rank - 1):
            join(i, i + 1)
    elif kind == "D" and rank >= 4:
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    elif kind == "E" and rank in (6, 7, 8):
        # chain 0-1-...-(rank-2) with the last node attached to node 2
        for i in range(rank - 2):
            join(i, i + 1)
        join(2, rank - 1)
    else:
        raise ValueError(f"no root lattice {kind}{rank}")
    return m
