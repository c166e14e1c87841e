"""Riemann-Roch in action: the Euler form and the rank 2 Mukai bundle.

Run with ``python demos/02_euler_form_and_mukai_bundle.py``.
"""

from fractions import Fraction

from fano_k0.registry import from_genus
from fano_k0.ktheory import chi0, gram, line_bundle, mukai_ch, structure_sheaf_basis, todd
from fano_k0.lattice import det

x = from_genus(12)
print(f"{x.name}: td = {todd(x)}")
for m in range(4):
    print(f"  chi(O({m}H)) = {chi0(line_bundle(x, m).ch)}")

basis = structure_sheaf_basis(x)
g = gram(basis)
print("\nEuler Gram on O_X, O_H, O_L, O_P:")
for row in g:
    print("  ", row)
print(f"determinant {det(g)}, so these four sheaves are a Z-basis of K_0(X)_num")

e2 = mukai_ch(x, 2, 6)
print(f"\nch(E_2) = {e2.ch}")
print(f"coordinates in the structure-sheaf basis: {e2.coordinates()}")

# For odd genus, g/2 is not an integer and the class leaves the lattice.
odd = from_genus(7)
coords = mukai_ch(odd, 2, Fraction(7, 2)).rational_coordinates()
print(f"genus 7 analogue has coordinates ({', '.join(map(str, coords))}), off the lattice")
