"""Deciding AK-compatibility from intersection pairings.

Run with ``python demos/05_ak_compatibility.py``.
"""

from fano_k0.ak import PairingData, ak_compatible, fano_threefold_pairing_data

print("Fano threefold:", ak_compatible(fano_threefold_pairing_data()).to_json())

# A fourfold whose middle pairing is the intersection form [[3, 1], [1, 3]].
cubic_like = PairingData(4, [1, 1, 2, 1, 1], {
    0: [[1]], 1: [[1]], 2: [[3, 1], [1, 3]], 3: [[1]], 4: [[1]],
})
print("fourfold, unimodular p = 3:", ak_compatible(cubic_like).to_json())

# Same fourfold but with a degree 3 pairing between divisors and curves.
bad = PairingData(4, [1, 1, 2, 1, 1], {
    0: [[1]], 1: [[3]], 2: [[3, 1], [1, 3]], 3: [[3]], 4: [[1]],
})
print("fourfold, pairing 3 at p = 3:", ak_compatible(bad).to_json())
