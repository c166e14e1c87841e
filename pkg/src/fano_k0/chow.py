"""Rational numerical Chow ring of a Picard-rank-1 Fano threefold.

Classes are written ``x + yH + zL + wP`` where ``H`` is the hyperplane
class, ``L`` the class of a line and ``P`` the class of a point.  The ring
structure is ``H*H = dL``, ``H*L = P`` and everything of codimension > 3
vanishes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .registry import FanoDescriptor


class ParentMismatchError(ValueError):
    """Arithmetic between classes living on different threefolds."""


def _q(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"exact rational expected, got {type(v).__name__}")


def format_rational(q: Fraction) -> str:
    """Reduced ``num/den`` string with positive denominator; integers print bare."""
    return str(Fraction(q))


@dataclass(frozen=True)
class CycleClass:
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction
    parent: FanoDescriptor

    def __post_init__(self):
        for name in "xyzw":
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, parent: FanoDescriptor, x=0, y=0, z=0, w=0) -> "CycleClass":
        return cls(x, y, z, w, parent)

    @classmethod
    def one(cls, parent: FanoDescriptor) -> "CycleClass":
        return cls(1, 0, 0, 0, parent)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z, self.w)

    def component(self, p: int) -> Fraction:
        """Coefficient in codimension ``p``."""
        return self.coeffs[p]

    def leading_degree(self) -> int | None:
        for p, c in enumerate(self.coeffs):
            if c:
                return p
        return None

    def _check(self, other: "CycleClass") -> None:
        if self.parent != other.parent:
            raise ParentMismatchError(f"classes on {self.parent} and {other.parent} cannot be combined")

    def __add__(self, other):
        if not isinstance(other, CycleClass):
            return NotImplemented
        self._check(other)
        return CycleClass(*(a + b for a, b in zip(self.coeffs, other.coeffs)), self.parent)

    def __sub__(self, other):
        if not isinstance(other, CycleClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CycleClass(-self.x, -self.y, -self.z, -self.w, self.parent)

    def scale(self, c) -> "CycleClass":
        c = _q(c)
        return CycleClass(c * self.x, c * self.y, c * self.z, c * self.w, self.parent)

    def __mul__(self, other):
        if isinstance(other, CycleClass):
            return mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def dual(self) -> "CycleClass":
        return dual(self)

    def top_degree(self) -> Fraction:
        return self.w

    def to_json(self) -> dict:
        return {
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "z": format_rational(self.z),
            "w": format_rational(self.w),
            "parent": {"index": self.parent.index, "degree": self.parent.degree},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycleClass":
        from .registry import validate

        parent = validate(int(obj["parent"]["index"]), int(obj["parent"]["degree"]))
        return cls(obj["x"], obj["y"], obj["z"], obj["w"], parent)

    def __str__(self) -> str:
        terms = []
        for c, sym in zip(self.coeffs, ("", "H", "L", "P")):
            if not c:
                continue
            mag = abs(c)
            if sym and mag == 1:
                body = sym
            elif sym:
                body = f"({mag}){sym}" if mag.denominator != 1 else f"{mag}{sym}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def basis(parent: FanoDescriptor) -> tuple[CycleClass, CycleClass, CycleClass, CycleClass]:
    """The classes ``1, H, L, P``."""
    return tuple(
        CycleClass(*(int(i == j) for j in range(4)), parent) for i in range(4)
    )  # type: ignore[return-value]


def mul(a: CycleClass, b: CycleClass) -> CycleClass:
    a._check(b)
    d = a.parent.degree
    x1, y1, z1, w1 = a.coeffs
    x2, y2, z2, w2 = b.coeffs
    return CycleClass(
        x1 * x2,
        x1 * y2 + y1 * x2,
        x1 * z2 + z1 * x2 + d * y1 * y2,
        x1 * w2 + w1 * x2 + y1 * z2 + z1 * y2,
        a.parent,
    )


def dual(a: CycleClass) -> CycleClass:
    """The involution acting by ``(-1)^p`` in codimension ``p``."""
    return CycleClass(a.x, -a.y, a.z, -a.w, a.parent)


def top_degree(a: CycleClass) -> Fraction:
    return a.w


def exp_h(parent: FanoDescriptor, m=1) -> CycleClass:
    """``exp(mH)``, the Chern character of ``O(mH)``."""
    m = _q(m)
    d = parent.degree
    return CycleClass(1, m, m * m * d / 2, m**3 * d / 6, parent)


def random_class(parent: FanoDescriptor, rng: random.Random, size: int = 12, den: int = 12) -> CycleClass:
    """Random class with numerators in [-size, size] and denominators dividing ``den``."""
    return CycleClass(
        *(Fraction(rng.randint(-size, size), rng.choice([d for d in range(1, den + 1) if den % d == 0])) for _ in range(4)),
        parent,
    )
