from functools import lru_cache

from normlat.catalog import STANDARD_CATALOG, group_from_catalog
from normlat.lattice import enumerate_normal_subgroups


@lru_cache(maxsize=None)
def grp(name: str):
    return group_from_catalog(name)


@lru_cache(maxsize=None)
def lat(name: str):
    return enumerate_normal_subgroups(grp(name))


CATALOG = STANDARD_CATALOG


def upto(n: int) -> list[str]:
    return [c for c in CATALOG if grp(c).order <= n]
