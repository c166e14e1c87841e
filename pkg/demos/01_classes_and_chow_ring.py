"""Walk through the seventeen deformation classes and their Chow rings.

Run with ``python demos/01_classes_and_chow_ring.py``.
"""

from fano_k0.registry import all_descriptors, from_genus
from fano_k0.chow import basis, exp_h

print("Deformation classes with Picard rank one")
for f in all_descriptors():
    genus = f"  genus {f.genus}" if f.index == 1 else ""
    print(f"  {f.name:<8} index {f.index}  degree {f.degree:>2}{genus}")

# The Chow ring only remembers the degree: H^2 = d L and H . L = P.
x = from_genus(8)
one, h, l, p = basis(x)
print(f"\nOn {x.name}: H*H = {h * h}, H*L = {h * l}, H*H*H has degree {(h * h * h).top_degree()}")
print(f"ch(O(H)) = exp(H) = {exp_h(x, 1)}")
print(f"dual of exp(H) is exp(-H) = {exp_h(x, 1).dual()}")
