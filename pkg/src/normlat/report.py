"""Assemble analysis results as plain JSON-ready dicts, plus the oracle
cross-checks behind ``--verify``."""
from __future__ import annotations

import itertools

import numpy as np

from .chartable import (
    CharacterTable,
    character_table,
    class_extends_socle,
    classes_distinct_modulo,
    faithful_norm_product,
    faithful_pair_sum,
    faithful_square_sum,
    has_faithful_irrep_structural,
    orthogonality_errors,
    vertical_cut_number,
)
from .errors import BudgetExceeded
from .generation import (
    class_count_in,
    class_generating_number_bruteforce,
    class_generating_number_structural,
    f_k_bruteforce,
    f_k_inversion,
    major_subgroups,
)
from .groups import Group, generate, has_cyclic_center, is_nilpotent, mask_from_bool
from .lattice import (
    NormalLattice,
    SocleDecomposition,
    maximal_normal_subgroups,
    radical,
    socle_decomposition,
)
from .moebius import ClosedFormMoebius, moebius_recursive

JSON_INT_LIMIT = 2 ** 53


def json_int(v: int):
    return str(v) if abs(v) >= JSON_INT_LIMIT else v


def _cplx(z: complex, digits: int = 12) -> list[float]:
    re, im = round(z.real, digits), round(z.imag, digits)
    return [re + 0.0, im + 0.0]


class Analysis:
    """Lazily computed pieces shared by the report sections."""

    def __init__(self, spec: str, g: Group, lat: NormalLattice, tolerance: float = 1e-8):
        self.spec = spec
        self.group = g
        self.lattice = lat
        self.tolerance = tolerance
        self._dec = None
        self._ct = None
        self._mu = None

    @property
    def decomposition(self) -> SocleDecomposition:
        if self._dec is None:
            self._dec = socle_decomposition(self.group, self.lattice)
        return self._dec

    @property
    def table(self) -> CharacterTable:
        if self._ct is None:
            self._ct = character_table(self.group)
            self._ct.__dict__["lattice"] = self.lattice
        return self._ct

    @property
    def closed_mu(self) -> ClosedFormMoebius:
        if self._mu is None:
            self._mu = ClosedFormMoebius(self.group, self.lattice, self.decomposition)
        return self._mu

    # ------------------------------------------------------------------
    def lattice_section(self) -> dict:
        lat, g = self.lattice, self.group
        return {
            "nodeCount": len(lat),
            "nodes": [{"index": i, "order": s.order, "classCount": class_count_in(g, s)}
                      for i, s in enumerate(lat.nodes)],
            "covers": [[i, j] for i, j in lat.covers],
        }

    def socle_section(self) -> dict:
        dec = self.decomposition
        return {
            "a": dec.a,
            "b": dec.b,
            "abelian": [{"order": c.order, "prime": c.prime, "d": c.d, "q": c.q,
                         "minimalCount": len(c.members)} for c in dec.abelian_classes],
            "nonAbelianOrders": [s.order for s in dec.non_abelian],
        }

    def moebius_section(self) -> dict:
        maximal_normal_subgroups(self.lattice)  # rejects the trivial group
        rec = moebius_recursive(self.lattice)
        pairs, mismatches = [], 0
        for i, j, v in rec.pairs():
            c = self.closed_mu(self.lattice.nodes[i], self.lattice.nodes[j])
            mismatches += c != v
            pairs.append({"lower": i, "upper": j, "recursive": json_int(v), "closed": json_int(c)})
        return {"pairs": pairs, "mismatches": mismatches}

    def cgn_section(self) -> dict:
        g = self.group
        return {
            "structural": class_generating_number_structural(g),
            "bruteForce": class_generating_number_bruteforce(g),
            "verticalCut": vertical_cut_number(self.table),
        }

    def fk_section(self, kmax: int | None = None) -> dict:
        if kmax is None:
            kmax = len(self.group.classes)
        return {str(k): json_int(f_k_inversion(self.group, k, self.lattice, self.closed_mu))
                for k in range(kmax + 1)}

    def majors_section(self) -> list[dict]:
        return [{"index": self.lattice.index(t), "order": t.order,
                 "classCount": class_count_in(self.group, t)}
                for t in major_subgroups(self.lattice)]

    def chartable_section(self) -> dict:
        ct = self.table
        return {
            "prime": ct.prime,
            "classes": [{"representative": ct.group.labels[c.representative], "size": c.size,
                         "elementOrder": c.element_order} for c in ct.classes],
            "characters": [{"degree": chi.degree, "kernelOrder": chi.kernel.order,
                            "kernelNode": self.lattice.index(chi.kernel),
                            "values": [_cplx(v) for v in chi.values]} for chi in ct.characters],
        }

    def faithful_section(self) -> dict:
        g, ct, dec = self.group, self.table, self.decomposition
        per_class = []
        total = faithful_square_sum(ct)
        for k, c in enumerate(ct.classes):
            ext = class_extends_socle(g, c, dec.socle)
            entry = {"class": k, "size": c.size, "extendsSocle": ext,
                     "faithfulSum": _cplx(faithful_pair_sum(ct, k, k))}
            if ext:
                prod = faithful_norm_product(g, dec, c)
                entry["product"] = str(prod)
                entry["divides"] = total % c.size == 0
            per_class.append(entry)
        return {
            "faithfulSumSquares": total,
            "hasFaithfulIrrep": any(chi.is_faithful for chi in ct.characters),
            "hasFaithfulIrrepStructural": has_faithful_irrep_structural(dec),
            "classes": per_class,
        }

    def full(self) -> dict:
        g, lat = self.group, self.lattice
        cgn = self.cgn_section()
        return {
            "groupSpec": self.spec,
            "order": g.order,
            "classCount": len(g.classes),
            "lattice": self.lattice_section(),
            "radicalOrder": radical(lat).order,
            "socleOrder": self.decomposition.socle.order,
            "socleDecomposition": self.socle_section(),
            "moebius": self.moebius_section(),
            "classGeneratingNumber": cgn,
            "majorSubgroups": self.majors_section(),
            "fk": self.fk_section(),
            "faithful": self.faithful_section(),
        }

    # ------------------------------------------------------------------
    # oracle cross-checks; each returns a list of failure messages

    def verify_lattice(self) -> list[str]:
        lat, g = self.lattice, self.group
        bad = []
        masks = {s.mask for s in lat.nodes}
        for a, b in itertools.combinations(lat.nodes, 2):
            if (a & b).mask not in masks:
                bad.append("lattice not closed under meet")
                break
        lat.join_table  # raises KeyError if a join is missing
        if len(g.classes) <= 16:
            for bits in range(1 << (len(g.classes) - 1)):
                members = np.zeros(g.order, dtype=bool)
                members[0] = True
                for k in range(1, len(g.classes)):
                    if bits >> (k - 1) & 1:
                        members[g.classes[k].member_indices] = True
                if (generate(g, np.flatnonzero(members)) == members).all():
                    if mask_from_bool(members) not in masks:
                        bad.append("a normal subgroup is missing from the lattice")
                        break
        return bad

    def verify_moebius(self) -> list[str]:
        sec = self.moebius_section()
        return [f"{sec['mismatches']} closed/recursive Möbius mismatches"] if sec["mismatches"] else []

    def verify_generation(self, kmax: int | None = None) -> list[str]:
        bad = []
        cgn = self.cgn_section()
        if len(set(cgn.values())) != 1:
            bad.append(f"class generating numbers disagree: {cgn}")
        g, lat = self.group, self.lattice
        top = lat.nodes[-1]
        if kmax is None:
            kmax = len(g.classes)
        try:
            for k in range(kmax + 1):
                inv = f_k_inversion(g, k, lat, self.closed_mu)
                bf = f_k_bruteforce(g, top, k, lat)
                if inv != bf:
                    bad.append(f"f_{k}: inversion {inv} != brute force {bf}")
                if k < cgn["structural"] and inv != 0:
                    bad.append(f"f_{k} should vanish below the class generating number")
        except BudgetExceeded:
            pass
        return bad

    def verify_chartable(self) -> list[str]:
        ct = self.table
        bad = []
        row, col = orthogonality_errors(ct)
        if max(row, col) > self.tolerance:
            bad.append(f"orthogonality error {max(row, col):.3g}")
        if sum(d * d for d in ct.degrees) != self.group.order:
            bad.append("squared degrees do not sum to |G|")
        for chi in ct.characters:
            if chi.kernel not in self.lattice:
                bad.append("a kernel is not a normal subgroup")
        return bad

    def verify_faithful(self) -> list[str]:
        g, ct, dec = self.group, self.table, self.decomposition
        tol = self.tolerance
        bad = []
        total = faithful_square_sum(ct)
        for a, b in itertools.combinations(range(len(ct.classes)), 2):
            if classes_distinct_modulo(g, ct.classes[a], ct.classes[b], dec.socle):
                if abs(faithful_pair_sum(ct, a, b)) > tol:
                    bad.append(f"classes {a},{b} distinct mod socle but faithful sum nonzero")
        for k, c in enumerate(ct.classes):
            if class_extends_socle(g, c, dec.socle):
                prod = faithful_norm_product(g, dec, c)
                s = faithful_pair_sum(ct, k, k)
                if abs(s - float(prod)) > tol:
                    bad.append(f"class {k}: faithful sum {s} != product {prod}")
                if total % c.size:
                    bad.append(f"class {k}: |C| does not divide the faithful square sum")
        has = any(chi.is_faithful for chi in ct.characters)
        if has != has_faithful_irrep_structural(dec):
            bad.append("structural faithful-irrep test disagrees with the table")
        if is_nilpotent(g) and has != has_cyclic_center(g):
            bad.append("nilpotent group: faithful irrep exists but center is not cyclic (or vice versa)")
        return bad

