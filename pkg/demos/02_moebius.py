"""
Möbius functions on normal subgroup lattices
============================================

The Möbius function of L(G) can be computed by the defining recursion,
or read off from the socle of a quotient. This script compares the two.
"""

# %%
from normlat import (
    ClosedFormMoebius,
    enumerate_normal_subgroups,
    group_from_catalog,
    moebius_recursive,
)
from normlat.moebius import mu_one_semisimple

g = group_from_catalog("C2^3")
lat = enumerate_normal_subgroups(g)
table = moebius_recursive(lat)
print("mu(1, C2^3) =", table.mu(g.trivial, g.whole), "(expected -2^3 = -8)")

# %%
# Closed form against recursion on every comparable pair.
for name in ["S4", "D4xS3", "C2^2xC3", "A4xS3"]:
    g = group_from_catalog(name)
    lat = enumerate_normal_subgroups(g)
    closed = ClosedFormMoebius(g, lat)
    pairs = list(moebius_recursive(lat).pairs())
    bad = sum(closed(lat.nodes[i], lat.nodes[j]) != v for i, j, v in pairs)
    print(f"{name}: {len(pairs)} pairs, {bad} mismatches")

# %%
# For a direct product of simple groups, mu(1, G) only depends on how many
# non-abelian factors there are and on the elementary abelian part.
for name in ["A5", "C2^2xA5", "C3^2", "A5xC2xC3"]:
    print(name, mu_one_semisimple(group_from_catalog(name)))
