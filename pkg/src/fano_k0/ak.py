"""Decidable criteria for AK-compatibility.

A variety is AK-compatible when structure sheaves of numerical bases of
cycles form a Z-basis of ``K_0(X)_num``.  The checks here only see the
intersection pairings ``A^p(X)_num x A^{n-p}(X)_num -> Z`` between chosen
bases, supplied as integer matrices.

* ``n <= 3``: always AK-compatible.
* otherwise it suffices that the pairing is perfect (square and
  unimodular) for every ``3 <= p <= n - 1``.

Both criteria are sufficient, not necessary: a ``False`` verdict means the
criteria do not apply.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .ktheory import KClass, gram, structure_sheaf_basis
from .lattice import det, transpose
from .registry import FanoDescriptor


class MalformedPairingData(ValueError):
    pass


@dataclass(frozen=True)
class PairingData:
    n: int
    ranks: list[int]
    pairings: dict[int, list[list[int]]] = field(default_factory=dict)

    def __post_init__(self):
        n, ranks, pairings = self.n, self.ranks, self.pairings
        if n < 1:
            raise MalformedPairingData(f"dimension must be positive, got {n}")
        if len(ranks) != n + 1:
            raise MalformedPairingData(f"expected {n + 1} ranks m_0..m_n, got {len(ranks)}")
        if any(m < 0 for m in ranks):
            raise MalformedPairingData("ranks must be non-negative")
        if ranks[0] != 1 or ranks[n] != 1:
            raise MalformedPairingData("m_0 and m_n must both be 1")
        if set(pairings) != set(range(n + 1)):
            raise MalformedPairingData(f"pairings must be given for every p in [0, {n}]")
        for p, m in pairings.items():
            rows, cols = ranks[p], ranks[n - p]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise MalformedPairingData(f"pairing at p={p} must be {rows}x{cols}")
        if pairings[0] != [[1]] or pairings[n] != [[1]]:
            raise MalformedPairingData("pairings at p=0 and p=n must be (1)")
        for p in range(n + 1):
            if ranks[p] == 0 or ranks[n - p] == 0:
                continue
            if pairings[n - p] != transpose(pairings[p]):
                raise MalformedPairingData(f"pairing at p={n - p} is not the transpose of p={p}")

    @classmethod
    def from_json(cls, obj: dict) -> "PairingData":
        try:
            n = int(obj["n"])
            ranks = [int(m) for m in obj["ranks"]]
            pairings = {int(p): [[int(e) for e in row] for row in m] for p, m in obj["pairings"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise MalformedPairingData(f"cannot read pairing data: {exc}") from exc
        return cls(n, ranks, pairings)

    @classmethod
    def load(cls, path: str | Path) -> "PairingData":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ranks": list(self.ranks),
            "pairings": {str(p): self.pairings[p] for p in sorted(self.pairings)},
        }


def fano_threefold_pairing_data() -> PairingData:
    """Bases ``1, H, L, P`` with ``H . L = P``: every pairing is ``(1)``."""
    return PairingData(3, [1, 1, 1, 1], {p: [[1]] for p in range(4)})


def pairing_is_perfect(data: PairingData, p: int) -> bool:
    """Whether the codimension ``p`` pairing identifies ``A^p`` with ``(A^{n-p})^*``."""
    if not 0 <= p <= data.n:
        raise MalformedPairingData(f"p must lie in [0, {data.n}], got {p}")
    m = data.pairings[p]
    rows, cols = data.ranks[p], data.ranks[data.n - p]
    if rows != cols:
        return False
    return abs(det(m)) == 1


@dataclass(frozen=True)
class AKVerdict:
    verdict: bool
    reason: str
    failing_p: int | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict, "reason": self.reason}
        if self.failing_p is not None:
            out["failing_p"] = self.failing_p
        return out


def ak_compatible(data: PairingData) -> AKVerdict:
    n = data.n
    if n <= 3:
        return AKVerdict(True, "dimension ≤ 3")
    for p in range(3, n):
        if not pairing_is_perfect(data, p):
            return AKVerdict(False, f"pairing at p = {p} is not perfect", failing_p=p)
    return AKVerdict(True, f"perfect pairing for every p in [3, {n - 1}]")


def k0_basis_from_cycles(f: FanoDescriptor) -> list[KClass]:
    """Structure sheaves of ``V``, ``H``, ``L``, ``P`` as a basis of ``K_0(V)_num``.

    Each ``ch(O_Z)`` must start with ``Z`` in codimension ``p`` and the
    Euler Gram must be unimodular.
    """
    basis = structure_sheaf_basis(f)
    for p, b in enumerate(basis):
        if b.ch.leading_degree() != p or b.ch.component(p) != 1:
            raise AssertionError(f"ch of the codimension {p} structure sheaf has leading term {b.ch}")
    g = gram(basis)
    if abs(det(g)) != 1:
        raise AssertionError(f"structure-sheaf Gram on {f} has determinant {det(g)}")
    return basis
