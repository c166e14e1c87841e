"""Matching moduli numerology of rank 2 bundles on both sides.

Run with ``python demos/04_bundle_numerology.py``.
"""

from fano_k0.bundles import coincidence_check, numerology_index1, numerology_index2

d, k, t = 5, 4, 2
left = numerology_index1(d, t)
right = numerology_index2(d, k)
print(f"X_{4 * d + 2}, t = {t}: h^0(F^*) = {left.chi}, degree {left.degree} (printed {left.printed_degree})")
print(f"Y_{d}, k = {k}: h^0(E^*(1)) = {right.chi}, degree {right.degree}")

rep = coincidence_check(d, k, t)
print(f"d + 1 = 2k - t holds: {rep.condition}")
print(f"dimensions agree: {rep.dimensions_coincide}, degrees agree: {rep.degrees_coincide}")

# Sweep the whole admissible range and count how often everything lines up.
hits = [
    (d, k, 2 * k - d - 1)
    for d in range(1, 6)
    for k in range(1, 10)
    if 2 * k - d - 1 >= 0
]
agree = sum(coincidence_check(*triple).dimensions_coincide for triple in hits)
print(f"\n{agree} of {len(hits)} triples on the line d + 1 = 2k - t have equal dimensions")
