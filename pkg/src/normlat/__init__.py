"""Normal subgroup lattices of small finite groups and what they say about
Möbius functions, generation by conjugacy classes and faithful characters."""
from .catalog import STANDARD_CATALOG, group_from_catalog
from .chartable import CharacterTable, character_table, faithful_norm_product, theorem5_product
from .errors import GroupError
from .generation import (
    abelian_pgroup_tuple_count,
    class_generating_number_bruteforce,
    class_generating_number_structural,
    f_k_bruteforce,
    f_k_inversion,
)
from .groups import Group, Subgroup, cyclic_group, direct_product, group_from_permutations, quotient
from .lattice import (
    NormalLattice,
    enumerate_normal_subgroups,
    radical,
    socle,
    socle_decomposition,
)
from .moebius import ClosedFormMoebius, gaussian_binomial, moebius_recursive

__all__ = [
    "STANDARD_CATALOG", "group_from_catalog", "CharacterTable", "character_table",
    "faithful_norm_product", "theorem5_product", "GroupError", "abelian_pgroup_tuple_count",
    "class_generating_number_bruteforce", "class_generating_number_structural",
    "f_k_bruteforce", "f_k_inversion", "Group", "Subgroup", "cyclic_group",
    "direct_product", "group_from_permutations", "quotient", "NormalLattice",
    "enumerate_normal_subgroups", "radical", "socle", "socle_decomposition",
    "ClosedFormMoebius", "gaussian_binomial", "moebius_recursive",
]
