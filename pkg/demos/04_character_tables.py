"""
Character tables by Dixon's method
==================================

Exact eigenvalue data mod a prime, lifted to complex values at the end.
"""

# %%
import numpy as np

from normlat import character_table, group_from_catalog
from normlat.chartable import orthogonality_errors, vertical_cut_number

g = group_from_catalog("SL23")
ct = character_table(g)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print("prime used:", ct.prime)
print("class sizes:", ct.class_sizes)
print(ct.values)
print("degrees:", ct.degrees)
print("kernel orders:", [ch.kernel.order for ch in ct.characters])

# %%
# Orthogonality holds to rounding error.
for name in ["A5", "S4xC3", "SL23xC2"]:
    print(name, orthogonality_errors(character_table(group_from_catalog(name))))

# %%
# A set of d columns beside the identity column on which no non-principal
# row is constant: the smallest such d is the class generating number.
for name in ["S3", "C2^2", "C2^3xC3", "A5"]:
    print(name, vertical_cut_number(character_table(group_from_catalog(name))))
