"""
A tour of normal subgroup lattices
==================================

Build a few small groups, list their normal subgroups and look at the
two ends of each lattice: the radical (meet of the coatoms) and the
socle (join of the atoms).
"""

# %%
from normlat import enumerate_normal_subgroups, group_from_catalog, radical, socle_decomposition

for name in ["S4", "SL23", "C2^2xS3", "A5xC3"]:
    g = group_from_catalog(name)
    lat = enumerate_normal_subgroups(g)
    print(f"{name}: order {g.order}, {len(g.classes)} classes, {len(lat)} normal subgroups")
    print("  orders:", [s.order for s in lat.nodes])
    print("  radical order", radical(lat).order)

# %%
# The socle splits into homogeneous pieces. For an abelian piece we get its
# prime-power order |A|, the multiplicity d, and q, the size of the field of
# module endomorphisms. The piece holds (q^d - 1)/(q - 1) minimal normal
# subgroups.
for name in ["C2^2", "A4", "C2^3xC3", "A5xC3"]:
    g = group_from_catalog(name)
    dec = socle_decomposition(g, enumerate_normal_subgroups(g))
    parts = [f"|A|={c.order} d={c.d} q={c.q} ({len(c.members)} minimal)" for c in dec.abelian_classes]
    parts += [f"non-abelian of order {s.order}" for s in dec.non_abelian]
    print(f"{name}: socle order {dec.socle.order}: " + "; ".join(parts))

# %%
# Permutation input works too. Two 3-cycles on disjoint blocks plus the block
# swap generate the wreath product C3 wr C2.
g = group_from_catalog("perm:(1 2 3);(4 5 6);(1 4)(2 5)(3 6)")
lat = enumerate_normal_subgroups(g)
print(g.order, [s.order for s in lat.nodes])
for lo, hi in lat.covers:
    print(f"  {lat.nodes[lo].order} < {lat.nodes[hi].order}")
