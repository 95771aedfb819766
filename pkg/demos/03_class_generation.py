"""
Generating a group by conjugacy classes
=======================================

How many conjugacy classes does it take to generate a group, and how many
ordered tuples of distinct classes do it?
"""

# %%
from normlat import (
    abelian_pgroup_tuple_count,
    class_generating_number_bruteforce,
    class_generating_number_structural,
    f_k_bruteforce,
    f_k_inversion,
    group_from_catalog,
)

for name in ["S3", "C2^2", "A5", "SL23", "C2^3xC3", "S4xC2"]:
    g = group_from_catalog(name)
    print(f"{name}: structural {class_generating_number_structural(g)}, "
          f"search {class_generating_number_bruteforce(g)}")

# %%
# Möbius inversion over the normal subgroups that contain the radical gives
# the tuple counts without enumerating tuples at all.
g = group_from_catalog("D4xC3")
for k in range(len(g.classes) + 1):
    print(k, f_k_inversion(g, k), f_k_bruteforce(g, g.whole, k))

# %%
# For an abelian p-group the count has a closed form in Gaussian binomials.
print([abelian_pgroup_tuple_count(2, 4, 2, k) for k in range(5)])  # C4xC4
