"""
Faithful irreducible characters and the socle
=============================================

Sums of chi(C) * conj(chi(D)) over faithful irreducibles vanish when C and
D differ modulo the socle, and on the diagonal they have a product formula
whenever C meets each socle coset at most once.
"""

# %%
from normlat import (
    character_table,
    enumerate_normal_subgroups,
    faithful_norm_product,
    group_from_catalog,
    socle_decomposition,
)
from normlat.chartable import (
    class_extends_socle,
    faithful_pair_sum,
    faithful_square_sum,
    has_faithful_irrep_structural,
)

for name in ["SL23", "A4", "C2^2", "Q8", "S4", "C5xD5"]:
    g = group_from_catalog(name)
    dec = socle_decomposition(g, enumerate_normal_subgroups(g))
    ct = character_table(g)
    print(f"{name}: faithful square sum {faithful_square_sum(ct)}, "
          f"product {faithful_norm_product(g, dec, g.classes[0])}, "
          f"faithful irreducible exists: {has_faithful_irrep_structural(dec)}")

# %%
# Class by class on SL(2,3).
g = group_from_catalog("SL23")
dec = socle_decomposition(g, enumerate_normal_subgroups(g))
ct = character_table(g)
for k, c in enumerate(g.classes):
    if class_extends_socle(g, c, dec.socle):
        print(k, c.size, round(faithful_pair_sum(ct, k, k).real, 10), faithful_norm_product(g, dec, c))
