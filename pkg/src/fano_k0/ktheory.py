"""Numerical Grothendieck group via Chern characters.

Every K-class is stored through its Chern character.  The Euler form is
evaluated with Riemann-Roch as ``chi(u, v) = chi0(u* . v)`` where ``u*`` is
the ``(-1)^p`` involution and ``chi0(v) = deg(v . td)``.

The lattice ``K_0(X)_num`` is spanned by the structure sheaves of
``X``, a hyperplane section, a line and a point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chow import CycleClass, ParentMismatchError, dual, exp_h, format_rational
from .registry import FanoDescriptor


class LatticeMembershipError(ValueError):
    """A class is not an integer combination of the structure-sheaf basis."""

    def __init__(self, message: str, rational_coordinates: tuple[Fraction, ...]):
        super().__init__(message)
        self.rational_coordinates = rational_coordinates


class NonIntegralPairingError(ValueError):
    """The Euler form returned a non-integer; an argument is off the lattice."""


STRUCTURE_SHEAF_KINDS = ("X", "H", "L", "P")


def todd(f: FanoDescriptor) -> CycleClass:
    """Todd class ``1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24`` with ``c1 = iH``.

    ``deg(c1 c2) = 24`` (equivalently ``chi(O_X) = 1``) fixes ``c2 = (24/i) L``.
    """
    i, d = f.index, f.degree
    return CycleClass(1, Fraction(i, 2), (Fraction(i * i * d) + Fraction(24, i)) / 12, 1, f)


def chi0(v: CycleClass) -> Fraction:
    """Holomorphic Euler characteristic ``deg(v . td)`` of a Chern character."""
    return (v * todd(v.parent)).top_degree()


def chi0_coefficients(f: FanoDescriptor) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients ``(a, b, c, e)`` with ``chi0(x + yH + zL + wP) = ax + by + cz + ew``."""
    td = todd(f)
    return (Fraction(1), td.z, td.y, Fraction(1))


@dataclass(frozen=True)
class KClass:
    ch: CycleClass

    @property
    def parent(self) -> FanoDescriptor:
        return self.ch.parent

    def __add__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.ch + other.ch)

    def __sub__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.ch - other.ch)

    def __neg__(self):
        return KClass(-self.ch)

    def __rmul__(self, n):
        if isinstance(n, int):
            return KClass(self.ch.scale(n))
        return NotImplemented

    def rational_coordinates(self) -> tuple[Fraction, ...]:
        return rational_coordinates(self.ch)

    def coordinates(self) -> tuple[int, int, int, int]:
        return lattice_coordinates(self.ch)

    @property
    def in_lattice(self) -> bool:
        return all(c.denominator == 1 for c in self.rational_coordinates())

    def to_json(self) -> dict:
        out = {"ch": self.ch.to_json()}
        if self.in_lattice:
            out["coordinates"] = [str(c) for c in self.coordinates()]
        return out

    def __str__(self) -> str:
        return f"[{self.ch}]"


def structure_sheaf(f: FanoDescriptor, kind: str) -> KClass:
    """Class of ``O_X``, ``O_H``, ``O_L`` or ``O_P``.

    ``ch(O_H) = 1 - exp(-H)``; the point coefficient of ``ch(O_L)`` is the
    one making ``chi(O_L) = 1`` for a rational curve.
    """
    d, i = f.degree, f.index
    if kind == "X":
        ch = CycleClass(1, 0, 0, 0, f)
    elif kind == "H":
        ch = CycleClass(0, 1, Fraction(-d, 2), Fraction(d, 6), f)
    elif kind == "L":
        ch = CycleClass(0, 0, 1, 1 - Fraction(i, 2), f)
    elif kind == "P":
        ch = CycleClass(0, 0, 0, 1, f)
    else:
        raise ValueError(f"unknown structure sheaf kind {kind!r}; expected one of {STRUCTURE_SHEAF_KINDS}")
    return KClass(ch)


def structure_sheaf_basis(f: FanoDescriptor) -> list[KClass]:
    return [structure_sheaf(f, k) for k in STRUCTURE_SHEAF_KINDS]


def line_bundle(f: FanoDescriptor, m: int) -> KClass:
    """``[O(mH)]``."""
    return KClass(exp_h(f, m))


def rational_coordinates(v: CycleClass) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    # The basis is unitriangular in (1, H, L, P); back-substitute from the top.
    _, oh, ol, _ = (b.ch for b in structure_sheaf_basis(v.parent))
    a = v.x
    b = v.y
    c = v.z - b * oh.z
    e = v.w - b * oh.w - c * ol.w
    return (a, b, c, e)


def lattice_coordinates(v: CycleClass) -> tuple[int, int, int, int]:
    """Integer coordinates on ``[O_X], [O_H], [O_L], [O_P]``.

    Raises ``LatticeMembershipError`` carrying the rational coordinates when
    some coordinate is not integral.
    """
    coords = rational_coordinates(v)
    if any(c.denominator != 1 for c in coords):
        shown = ", ".join(format_rational(c) for c in coords)
        raise LatticeMembershipError(f"{v} is not in K_0(X)_num: coordinates ({shown})", coords)
    return tuple(int(c) for c in coords)  # type: ignore[return-value]


def from_coordinates(f: FanoDescriptor, coords) -> KClass:
    out = CycleClass(0, 0, 0, 0, f)
    for n, b in zip(coords, structure_sheaf_basis(f)):
        out = out + b.ch.scale(n)
    return KClass(out)


def euler_rational(u: KClass, v: KClass) -> Fraction:
    if u.parent != v.parent:
        raise ParentMismatchError(f"Euler form between {u.parent} and {v.parent}")
    return chi0(dual(u.ch) * v.ch)


def euler(u: KClass, v: KClass) -> int:
    """``chi(u, v) = sum (-1)^i dim Ext^i(u, v)``, computed by Riemann-Roch."""
    val = euler_rational(u, v)
    if val.denominator != 1:
        raise NonIntegralPairingError(f"chi({u}, {v}) = {val} is not an integer")
    return int(val)


@dataclass(frozen=True)
class EulerGram:
    basis: list[KClass]
    matrix: list[list[int]] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.matrix is None:
            object.__setattr__(self, "matrix", [[euler(a, b) for b in self.basis] for a in self.basis])

    def to_json(self) -> dict:
        return {
            "basis": [b.to_json() for b in self.basis],
            "matrix": [[str(e) for e in row] for row in self.matrix],
        }


def gram(classes: list[KClass]) -> list[list[int]]:
    return EulerGram(list(classes)).matrix


def mukai_ch(f: FanoDescriptor, r: int, s) -> KClass:
    """Chern character of the rank ``r`` Mukai bundle on ``X_{2g-2}`` with ``g = r s``.

    ``c1 = -H``, ``c2 = H^2/2 + (r - s)L``; ``ch_3`` is the multiple of ``P``
    forcing ``chi0 = 0``.  ``s`` may be a fraction (e.g. ``g/2`` for odd
    ``g``), in which case the class generally falls off the lattice.
    """
    if f.index != 1:
        raise ValueError(f"Mukai bundles live on index 1 threefolds, got index {f.index}")
    s = Fraction(s)
    g = f.genus
    if r < 1 or s <= 0 or r * s != g:
        raise ValueError(f"genus {g} is not r*s for r={r}, s={s}")
    ch2 = -(r - s)
    partial = CycleClass(r, -1, ch2, 0, f)
    ch3 = -chi0(partial)
    return KClass(CycleClass(r, -1, ch2, ch3, f))


def serre_twist(u: KClass) -> KClass:
    """``u . exp(-iH)``, the twist by the canonical class."""
    f = u.parent
    return KClass(u.ch * exp_h(f, -f.index))
