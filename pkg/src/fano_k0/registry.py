"""Deformation classes of Fano threefolds with Picard group Z.

A class is named by its index ``i`` (with ``-K = iH``) and its degree
``d = H^3``.  Index 1 threefolds additionally carry the genus ``g`` with
``d = 2g - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class ClassificationError(ValueError):
    """The (index, degree) pair does not name a deformation class."""


_DESCRIPTIONS: dict[tuple[int, int], tuple[str, str]] = {
    (4, 1): ("P^3", "projective space P^3"),
    (3, 2): ("Q^3", "smooth quadric hypersurface in P^4"),
    (2, 5): ("Y_5", "linear section of codimension 3 of Gr(2,5) in the Pluecker embedding"),
    (2, 4): ("Y_4", "intersection of two 4-dimensional quadrics in P^5"),
    (2, 3): ("Y_3", "cubic hypersurface in P^4"),
    (2, 2): ("Y_2", "double covering ramified in a quartic surface of P^3"),
    (2, 1): ("Y_1", "hypersurface of degree 6 in the weighted projective space P(3,2,1,1,1)"),
    (1, 22): (
        "X_22",
        "zero locus of a global section of Lambda^2 U* + Lambda^2 U* + Lambda^2 U* "
        "on Gr(3,7), U the tautological rank 3 bundle",
    ),
    (1, 18): ("X_18", "linear section of codimension 2 of the G2-Grassmannian G2Gr(2,7) in P^13"),
    (1, 16): ("X_16", "linear section of codimension 3 of the Lagrangian Grassmannian LGr(3,6)"),
    (1, 14): ("X_14", "linear section of codimension 5 of Gr(2,6) in the Pluecker embedding"),
    (1, 12): (
        "X_12",
        "linear section of codimension 7 of the orthogonal Grassmannian OGr_+(5,10) "
        "in the half-spinor embedding",
    ),
    (1, 10): (
        "X_10",
        "quadric section of a linear section of codimension 2 of Gr(2,5); "
        "or a double cover of Y_5 ramified in a quadric",
    ),
    (1, 8): ("X_8", "intersection of three 5-dimensional quadrics in P^6"),
    (1, 6): ("X_6", "intersection of a quadric and a cubic in P^5"),
    (1, 4): (
        "X_4",
        "quartic hypersurface in P^4; or a double cover of a quadric Q in P^4 "
        "ramified in the intersection of Q with a quartic",
    ),
    (1, 2): ("X_2", "double covering ramified in a sextic surface of P^3"),
}


@dataclass(frozen=True, order=True)
class FanoDescriptor:
    index: int
    degree: int

    @property
    def genus(self) -> int | None:
        if self.index != 1:
            return None
        return self.degree // 2 + 1

    @property
    def name(self) -> str:
        return _DESCRIPTIONS[self.index, self.degree][0]

    def describe(self) -> dict:
        return describe(self)

    def to_json(self) -> dict:
        out: dict = {"index": self.index, "degree": self.degree}
        if self.genus is not None:
            out["genus"] = self.genus
        out["description"] = _DESCRIPTIONS[self.index, self.degree][1]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FanoDescriptor":
        return validate(int(obj["index"]), int(obj["degree"]))

    def __str__(self) -> str:
        return self.name


def validate(index: int, degree: int) -> FanoDescriptor:
    """Return the descriptor for ``(index, degree)`` or raise ``ClassificationError``.

    >>> validate(1, 22).genus
    12
    """
    if index < 1 or degree < 1:
        raise ClassificationError(f"index and degree must be positive, got ({index}, {degree})")
    if index > 4:
        raise ClassificationError(f"a Fano threefold has index at most 4, got {index}")
    if index == 4 and degree != 1:
        raise ClassificationError(f"index 4 forces P^3 of degree 1, got degree {degree}")
    if index == 3 and degree != 2:
        raise ClassificationError(f"index 3 forces the quadric Q^3 of degree 2, got degree {degree}")
    if index == 2 and not 1 <= degree <= 5:
        raise ClassificationError(f"index 2 requires 1 <= degree <= 5, got {degree}")
    if index == 1:
        if degree % 2:
            raise ClassificationError(f"index 1 requires even degree 2g - 2, got {degree}")
        g = degree // 2 + 1
        if not 2 <= g <= 12:
            raise ClassificationError(f"index 1 requires 2 <= genus <= 12, got genus {g}")
        if g == 11:
            raise ClassificationError("index 1, genus 11 (degree 20) does not occur")
    return FanoDescriptor(index, degree)


def from_genus(genus: int) -> FanoDescriptor:
    """Index 1 descriptor of the given genus."""
    return validate(1, 2 * genus - 2)


def describe(f: FanoDescriptor) -> dict:
    name, text = _DESCRIPTIONS[f.index, f.degree]
    return {
        "name": name,
        "description": text,
        "invariants": (f.index, f.degree, f.genus),
    }


def all_descriptors(index: int | None = None) -> Iterator[FanoDescriptor]:
    """All 17 classes, ordered by decreasing index then increasing degree."""
    for i, d in sorted(_DESCRIPTIONS, key=lambda k: (-k[0], k[1])):
        if index is None or i == index:
            yield FanoDescriptor(i, d)
