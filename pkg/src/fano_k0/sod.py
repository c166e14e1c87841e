"""Numerical shadows of semiorthogonal decompositions.

Only Euler characteristics are visible here, so "exceptional" always means
numerically exceptional: ``chi(F, F) = 1`` and ``chi(F_l, F_k) = 0`` for
``l > k``.  Orthogonal complements are right orthogonals,
``{v : chi(c, v) = 0 for every generator c}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import lattice
from .chow import CycleClass, ParentMismatchError
from .ktheory import (
    EulerGram,
    KClass,
    euler,
    euler_rational,
    from_coordinates,
    line_bundle,
    mukai_ch,
    structure_sheaf_basis,
)
from .registry import FanoDescriptor, from_genus, validate


def _common_parent(classes: list[KClass]) -> FanoDescriptor:
    if not classes:
        raise ValueError("empty collection")
    parent = classes[0].parent
    for c in classes[1:]:
        if c.parent != parent:
            raise ParentMismatchError(f"mixed parents {parent} and {c.parent}")
    return parent


@dataclass(frozen=True)
class ExceptionalSequenceReport:
    classes: list[KClass]
    self_chis: list[int]
    offending_pairs: list[tuple[int, int, int]]

    @property
    def numerically_exceptional(self) -> bool:
        return not self.offending_pairs

    @property
    def verdict(self) -> str:
        if self.numerically_exceptional:
            return "numerically exceptional"
        return "not numerically exceptional"

    def to_json(self) -> dict:
        return {
            "classes": [c.to_json() for c in self.classes],
            "self_chis": self.self_chis,
            "offending_pairs": [list(p) for p in self.offending_pairs],
            "verdict": self.verdict,
        }


def check_exceptional(classes: list[KClass]) -> ExceptionalSequenceReport:
    """Necessary conditions for ``(F_1, ..., F_m)`` to be an exceptional sequence.

    ``offending_pairs`` lists ``(l, k, value)`` for ``l > k`` with
    ``chi(F_l, F_k) != 0``, and ``(j, j, value)`` for ``chi(F_j, F_j) != 1``.
    Indices are 0-based.
    """
    classes = list(classes)
    _common_parent(classes)
    self_chis = [euler(c, c) for c in classes]
    bad = [(j, j, v) for j, v in enumerate(self_chis) if v != 1]
    for l, fl in enumerate(classes):
        for k in range(l):
            v = euler(fl, classes[k])
            if v:
                bad.append((l, k, v))
    bad.sort()
    return ExceptionalSequenceReport(classes, self_chis, bad)


@dataclass(frozen=True)
class ComplementResult:
    generators: list[KClass]
    basis: list[KClass]
    coordinates: list[list[int]]
    gram: EulerGram

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: KClass) -> bool:
        try:
            coords = v.coordinates()
        except ValueError:
            return False
        return lattice.solve_integer(self.coordinates, coords) is not None

    def change_of_basis(self, vectors: list[KClass]) -> list[list[int]] | None:
        """Integer matrix expressing ``vectors`` in ``basis``, or ``None``."""
        rows = []
        for v in vectors:
            try:
                coords = v.coordinates()
            except ValueError:
                return None
            c = lattice.solve_integer(self.coordinates, coords)
            if c is None:
                return None
            rows.append(c)
        return rows

    def spanned_by(self, vectors: list[KClass]) -> bool:
        """True iff ``vectors`` is a Z-basis of this complement."""
        m = self.change_of_basis(vectors)
        return m is not None and len(m) == self.rank and abs(lattice.det(m)) == 1

    def to_json(self) -> dict:
        return {
            "generators": [g.to_json() for g in self.generators],
            "basis": [b.to_json() for b in self.basis],
            "coordinates": lattice.matrix_to_json(self.coordinates),
            "gram": lattice.matrix_to_json(self.gram.matrix),
        }


def pairing_matrix(classes: list[KClass]) -> list[list[int]]:
    """Rows ``chi(c, O_Z)`` over the structure-sheaf basis, denominators cleared."""
    f = _common_parent(classes)
    basis = structure_sheaf_basis(f)
    rows = []
    for c in classes:
        row = [euler_rational(c, b) for b in basis]
        den = lcm(*(q.denominator for q in row))
        rows.append([int(q * den) for q in row])
    return rows


def right_orthogonal(classes: list[KClass]) -> ComplementResult:
    """Saturated sublattice of ``K_0(X)_num`` right orthogonal to ``classes``."""
    classes = list(classes)
    f = _common_parent(classes)
    coords = lattice.saturated_kernel(pairing_matrix(classes))
    basis = [from_coordinates(f, row) for row in coords]
    return ComplementResult(classes, basis, coords, EulerGram(basis))


def index2_complement_generators(d: int) -> list[KClass]:
    """``1 - L`` and ``H - (d/2)L + ((d-6)/6)P`` on ``Y_d``."""
    y = validate(2, d)
    return [
        KClass(CycleClass(1, 0, -1, 0, y)),
        KClass(CycleClass(0, 1, Fraction(-d, 2), Fraction(d - 6, 6), y)),
    ]


def index1_complement_generators(g: int) -> list[KClass]:
    """``1 - (g/2)L + ((g-4)/4)P`` and ``H - ((3g-6)/2)L + ((7g-40)/12)P`` on ``X_{2g-2}``."""
    x = from_genus(g)
    return [
        KClass(CycleClass(1, 0, Fraction(-g, 2), Fraction(g - 4, 4), x)),
        KClass(CycleClass(0, 1, Fraction(-(3 * g - 6), 2), Fraction(7 * g - 40, 12), x)),
    ]


def standard_collection(f: FanoDescriptor, kind: str | None = None) -> list[KClass]:
    """Distinguished exceptional sequence whose complement is studied.

    ``"lines"``: ``O, O(H), ..., O((i-1)H)``.  ``"mukai"`` (index 1, even
    genus): ``E_2, O``.  The default is ``"mukai"`` when available.
    """
    if kind is None:
        kind = "mukai" if f.index == 1 and f.genus % 2 == 0 else "lines"
    if kind == "lines":
        return [line_bundle(f, m) for m in range(f.index)]
    if kind == "mukai":
        if f.index != 1 or f.genus % 2:
            raise ValueError(f"the rank 2 Mukai bundle needs index 1 and even genus, got {f}")
        return [mukai_ch(f, 2, f.genus // 2), line_bundle(f, 0)]
    raise ValueError(f"unknown collection kind {kind!r}")


@dataclass(frozen=True)
class ComplementIsometryReport:
    d: int
    g: int
    gram_a: list[list[int]]
    gram_b: list[list[int]]
    witnesses: list[list[list[int]]]
    basis_a: list[KClass]
    basis_b: list[KClass]
    complement_a: ComplementResult
    complement_b: ComplementResult
    spans_ok: bool
    product: list[list[int]]
    expected_product: list[list[int]]

    WITNESS = [[0, 1], [-1, -2]]

    @property
    def passed(self) -> bool:
        return (
            self.spans_ok
            and self.WITNESS in self.witnesses
            and self.product == self.expected_product == self.gram_a
            and self.gram_b == [[-1, -1], [1 - self.d, -self.d]]
            and self.gram_a == [[1 - self.g // 2, -self.g // 2], [3 - self.g, 1 - self.g]]
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "g": self.g,
            "gramA": lattice.matrix_to_json(self.gram_a),
            "gramB": lattice.matrix_to_json(self.gram_b),
            "witnesses": [lattice.matrix_to_json(w) for w in self.witnesses],
            "basisA": [b.ch.to_json() for b in self.basis_a],
            "basisB": [b.ch.to_json() for b in self.basis_b],
            "hnfA": lattice.matrix_to_json(self.complement_a.coordinates),
            "hnfB": lattice.matrix_to_json(self.complement_b.coordinates),
            "product": lattice.matrix_to_json(self.product),
            "passed": self.passed,
        }


def verify_complement_isometry(d: int, bound: int = 3) -> ComplementIsometryReport:
    """Compare the complements on ``Y_d`` and ``X_{4d+2}`` as lattices with forms.

    Both complements are computed from scratch, the reference generators
    are checked to be Z-bases of them, and the exhaustive isometry search is
    run between the resulting Gram matrices.
    """
    if not 1 <= d <= 5:
        raise ValueError(f"d must lie in [1, 5], got {d}")
    g = 2 * d + 2
    y = validate(2, d)
    x = validate(1, 4 * d + 2)

    comp_b = right_orthogonal(standard_collection(y, "lines"))
    comp_a = right_orthogonal(standard_collection(x, "mukai"))
    basis_b = index2_complement_generators(d)
    basis_a = index1_complement_generators(g)
    spans_ok = comp_a.spanned_by(basis_a) and comp_b.spanned_by(basis_b)

    gram_a = EulerGram(basis_a).matrix
    gram_b = EulerGram(basis_b).matrix
    witnesses = lattice.find_isometries(
        lattice.BilinearLattice(gram_a), lattice.BilinearLattice(gram_b), bound
    )
    a = ComplementIsometryReport.WITNESS
    product = lattice.matmul(lattice.matmul(lattice.transpose(a), gram_b), a)
    expected = [[-d, -1 - d], [1 - 2 * d, -1 - 2 * d]]
    return ComplementIsometryReport(
        d, g, gram_a, gram_b, witnesses, basis_a, basis_b, comp_a, comp_b, spans_ok, product, expected
    )
