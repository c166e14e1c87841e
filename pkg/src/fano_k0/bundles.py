"""Chern-class numerology of rank 2 bundles on index 1 and index 2 threefolds.

Two families are compared.  On ``X = X_{4d+2}`` (genus ``2d+2``): bundles
``F`` with ``c1 = -H``, ``c2 = (d+2+t)L``, through ``H^0(X, F^*)``.  On
``Y = Y_d``: instantons ``E`` with ``c1 = 0``, ``c2 = kL``, through
``H^0(Y, E^*(1))``.  The degree of the image of the projectivization of a
rank 2 bundle ``G`` under its sections is ``c1(G)^3 - 2 c1(G) c2(G)``.

The degree printed in the literature for the index 1 side uses
``c2(F^*) = (d+2-t)L``.  Rank 2 duality gives ``c2(F^*) = c2(F)``, so the
computed degree is ``2d - 2 - 2t`` and the printed one ``2d - 2 + 2t`` is
carried along as an annotation with a discrepancy flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import CycleClass
from .ktheory import chi0
from .registry import FanoDescriptor, validate


@dataclass(frozen=True)
class RankTwoBundle:
    """Rank 2 Chern data: ``c1 = a H``, ``c2 = b L``, ``c3 = c P``."""

    parent: FanoDescriptor
    c1: int
    c2: int
    c3: int = 0

    rank = 2

    def ch(self) -> CycleClass:
        return ch_of(self)

    def dual(self) -> "RankTwoBundle":
        return dualize(self)

    def twist(self, m: int) -> "RankTwoBundle":
        return twist(self, m)

    def chi(self) -> int:
        val = chi0(ch_of(self))
        assert val.denominator == 1, f"chi of {self} is not integral: {val}"
        return int(val)

    def projective_degree(self) -> int:
        """``c1^3 - 2 c1 c2`` as a number."""
        d = self.parent.degree
        return self.c1**3 * d - 2 * self.c1 * self.c2


def ch_of(b: RankTwoBundle) -> CycleClass:
    """``2 + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2 + 3c3)/6``."""
    d = b.parent.degree
    c1sq = b.c1 * b.c1 * d  # multiple of L
    c1cube = b.c1**3 * d  # multiple of P
    ch2 = Fraction(c1sq - 2 * b.c2, 2)
    ch3 = Fraction(c1cube - 3 * b.c1 * b.c2 + 3 * b.c3, 6)
    return CycleClass(2, b.c1, ch2, ch3, b.parent)


def dualize(b: RankTwoBundle) -> RankTwoBundle:
    return RankTwoBundle(b.parent, -b.c1, b.c2, -b.c3)


def twist(b: RankTwoBundle, m: int) -> RankTwoBundle:
    """Tensor with ``O(mH)``.

    ``c1 + 2mH``, ``c2 + m c1 H + m^2 H^2``; ``c3`` follows from
    ``ch(G(m)) = ch(G) exp(mH)``, which leaves it unchanged for rank 2.
    """
    d = b.parent.degree
    return RankTwoBundle(b.parent, b.c1 + 2 * m, b.c2 + m * b.c1 * d + m * m * d, b.c3)


@dataclass(frozen=True)
class NumerologyReport:
    side: str
    inputs: dict
    chi: int
    degree: int
    printed_degree: int | None = None

    @property
    def discrepancy(self) -> bool:
        return self.printed_degree is not None and self.printed_degree != self.degree

    def to_json(self) -> dict:
        out = {
            "side": self.side,
            "inputs": self.inputs,
            "chi": self.chi,
            "degree_computed": self.degree,
        }
        if self.printed_degree is not None:
            out["degree_paper"] = self.printed_degree
            out["discrepancy"] = self.discrepancy
        return out


def _check_d(d: int) -> None:
    if not 1 <= d <= 5:
        raise ValueError(f"d must lie in [1, 5], got {d}")


def index1_bundle(d: int, t: int) -> RankTwoBundle:
    """``F`` on ``X_{4d+2}`` with ``c1 = -H``, ``c2 = (d+2+t)L``."""
    _check_d(d)
    return RankTwoBundle(validate(1, 4 * d + 2), -1, d + 2 + t)


def instanton(d: int, k: int) -> RankTwoBundle:
    _check_d(d)
    return RankTwoBundle(validate(2, d), 0, k)


def numerology_index1(d: int, t: int) -> NumerologyReport:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    fdual = dualize(index1_bundle(d, t))
    return NumerologyReport(
        "index1",
        {"d": d, "t": t},
        fdual.chi(),
        fdual.projective_degree(),
        printed_degree=2 * d - 2 + 2 * t,
    )


def numerology_index2(d: int, k: int) -> NumerologyReport:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    e = twist(dualize(instanton(d, k)), 1)
    return NumerologyReport("index2", {"d": d, "k": k}, e.chi(), e.projective_degree())


@dataclass(frozen=True)
class CoincidenceReport:
    d: int
    k: int
    t: int
    dim_index1: int
    dim_index2: int
    degree_index1: int
    degree_index2: int
    printed_degree_index1: int

    @property
    def condition(self) -> bool:
        return self.d + 1 == 2 * self.k - self.t

    @property
    def dimensions_coincide(self) -> bool:
        return self.dim_index1 == self.dim_index2

    @property
    def degrees_coincide(self) -> bool:
        return self.degree_index1 == self.degree_index2

    @property
    def printed_degrees_coincide(self) -> bool:
        return self.printed_degree_index1 == self.degree_index2

    def to_json(self) -> dict:
        return {
            "inputs": {"d": self.d, "k": self.k, "t": self.t},
            "condition": self.condition,
            "dimensions": [self.dim_index1, self.dim_index2],
            "dimensions_coincide": self.dimensions_coincide,
            "degrees_computed": [self.degree_index1, self.degree_index2],
            "degrees_coincide": self.degrees_coincide,
            "degree_printed_index1": self.printed_degree_index1,
            "printed_degrees_coincide": self.printed_degrees_coincide,
            "discrepancy": self.printed_degree_index1 != self.degree_index1,
        }


def coincidence_check(d: int, k: int, t: int) -> CoincidenceReport:
    a = numerology_index1(d, t)
    b = numerology_index2(d, k)
    return CoincidenceReport(d, k, t, a.chi, b.chi, a.degree, b.degree, a.printed_degree)
