"""Exact integer linear algebra.

Matrices are plain lists of rows of Python ints.  Lattices are row spans
and a bilinear form with Gram matrix ``G`` evaluates as ``v G w^T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]


def _copy(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(e) for e in row] for row in m]


def shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def transpose(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = _copy(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _hnf_with_transform(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Return ``(H, U)`` with ``U`` unimodular and ``U m = H`` in row HNF."""
    rows, cols = shape(m)
    a = _copy(m)
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # Euclid down column c on rows r.. until a single nonzero entry remains.
        while True:
            nz = [i for i in range(r, rows) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, rows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < rows and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    return a, u


def hnf(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form, zero rows kept at the bottom.

    >>> hnf([[2, 4], [1, 1]])
    [[1, 1], [0, 2]]
    """
    return _hnf_with_transform(m)[0]


def hnf_basis(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Nonzero rows of the HNF: a basis of the row span."""
    return [row for row in hnf(m) if any(row)]


def rank(m: Sequence[Sequence[int]]) -> int:
    return len(hnf_basis(m)) if m else 0


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith invariant factors ``d_1 | d_2 | ...``."""
    a = [row for row in hnf_basis(m)]
    rows = len(a)
    if rows == 0:
        return []
    cols = len(a[0])
    out = []
    t = 0
    while t < rows:
        # find smallest nonzero entry in the trailing block
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        p = a[t][t]
        clean = True
        for i in range(t + 1, rows):
            q = a[i][t] // p
            a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            clean &= a[i][t] == 0
        for j in range(t + 1, cols):
            q = a[t][j] // p
            for row in a:
                row[j] -= q * row[t]
            clean &= a[t][j] == 0
        if not clean:
            continue
        bad = next(
            ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
            None,
        )
        if bad is not None:
            # fold the offending row into row t so p is no longer minimal
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
            continue
        out.append(abs(p))
        t += 1
    return out


def saturated_kernel(m: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF basis of the integer right kernel ``{v : m v = 0}``.

    The kernel of an integer matrix is automatically saturated; it is read
    off from a unimodular reduction of ``m^T``.
    """
    rows, cols = shape(m)
    if rows == 0:
        return identity(cols)
    h, u = _hnf_with_transform(transpose(m))
    kernel = [u[i] for i in range(cols) if not any(h[i])]
    if not kernel:
        return []
    return hnf_basis(kernel)


def saturate(vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF basis of ``(Q span) intersected with Z^n``."""
    if not vectors:
        return []
    # the saturation is the kernel of the kernel
    k = saturated_kernel(vectors)
    if not k:
        return identity(len(vectors[0]))
    return saturated_kernel(k)


def solve_integer(basis: Sequence[Sequence[int]], v: Sequence) -> list[int] | None:
    """Integer ``c`` with ``c . basis = v``, or ``None`` if there is none."""
    coeffs = solve_rational(basis, v)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        return None
    return [int(c) for c in coeffs]


def solve_rational(basis: Sequence[Sequence[int]], v: Sequence) -> list[Fraction] | None:
    k = len(basis)
    n = len(v)
    # augmented system basis^T c = v
    a = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][k] != 0 for i in range(r, n)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = a[i][k]
    return sol


@dataclass(frozen=True)
class BilinearLattice:
    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram: Sequence[Sequence[int]]):
        g = tuple(tuple(int(e) for e in row) for row in gram)
        n, c = shape(g)
        if n != c or n == 0:
            raise ValueError(f"Gram matrix must be square and non-empty, got {n}x{c}")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def form(self, v: Sequence[int], w: Sequence[int]) -> int:
        return sum(v[i] * self.gram[i][j] * w[j] for i in range(self.rank) for j in range(self.rank))

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [[str(e) for e in row] for row in self.gram]}

    @classmethod
    def from_json(cls, obj: dict) -> "BilinearLattice":
        lat = cls([[int(e) for e in row] for row in obj["gram"]])
        if "rank" in obj and int(obj["rank"]) != lat.rank:
            raise ValueError(f"declared rank {obj['rank']} does not match Gram size {lat.rank}")
        return lat


def is_isometry(a: Sequence[Sequence[int]], g1: BilinearLattice, g2: BilinearLattice) -> bool:
    """``|det a| = 1`` and ``a^T G2 a = G1``."""
    n, c = shape(a)
    if n != c or n != g1.rank or n != g2.rank:
        raise ValueError("isometry matrix must be square of the lattice rank")
    if abs(det(a)) != 1:
        return False
    return matmul(matmul(transpose(a), g2.gram), a) == [list(r) for r in g1.gram]


def find_isometries(g1: BilinearLattice, g2: BilinearLattice, bound: int = 3) -> list[IntMatrix]:
    """All ``a`` with entries in ``[-bound, bound]`` and ``is_isometry(a, g1, g2)``.

    Columns ``a_j`` must satisfy ``a_i^T G2 a_j = G1[i][j]``; candidates are
    bucketed by their diagonal value and combined column by column.  Output
    is sorted lexicographically on the row-major flattening.
    """
    if g1.rank != g2.rank:
        raise ValueError("lattices of different rank")
    if bound < 1:
        raise ValueError("bound must be positive")
    n = g1.rank
    box = list(itertools.product(range(-bound, bound + 1), repeat=n))
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for v in box:
        by_norm.setdefault(g2.form(v, v), []).append(v)
    cands = [by_norm.get(g1.gram[j][j], []) for j in range(n)]

    found: list[IntMatrix] = []

    def extend(cols: list[tuple[int, ...]]) -> None:
        j = len(cols)
        if j == n:
            a = [[cols[c][r] for c in range(n)] for r in range(n)]
            if abs(det(a)) == 1:
                found.append(a)
            return
        for v in cands[j]:
            if all(
                g2.form(cols[i], v) == g1.gram[i][j] and g2.form(v, cols[i]) == g1.gram[j][i]
                for i in range(j)
            ):
                extend(cols + [v])

    extend([])
    found.sort(key=lambda a: [e for row in a for e in row])
    return found


def matrix_to_json(m: Sequence[Sequence[int]]) -> list[list[str]]:
    return [[str(int(e)) for e in row] for row in m]


def matrix_from_json(obj) -> IntMatrix:
    return [[int(e) for e in row] for row in obj]
