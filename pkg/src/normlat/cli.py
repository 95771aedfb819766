"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 computation error, 4 verification
mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import group_from_catalog
from .errors import GroupError, ParseError
from .lattice import enumerate_normal_subgroups, radical
from .report import Analysis

EXIT_OK, EXIT_PARSE, EXIT_COMPUTE, EXIT_VERIFY = 0, 2, 3, 4
DEFAULT_CAP = 2000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="group spec, e.g. S4, C2^2xS3, SL23, 'perm:(1 2 3);(1 2)'")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tolerance", type=float, default=1e-8)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest group order accepted")
    common.add_argument("--verify", action="store_true", help="run oracle cross-checks")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="normlat", description="Normal subgroup lattices, Möbius functions "
                     "and faithful characters of small finite groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common], help="full report")
    sub.add_parser("lattice", parents=[common], help="normal subgroups and Hasse diagram")
    sub.add_parser("moebius", parents=[common], help="Möbius table, closed form vs recursion")
    gen = sub.add_parser("generate", parents=[common], help="class generating number and f_k")
    gen.add_argument("--k", type=int, default=None, help="largest tuple length (default: class count)")
    sub.add_parser("chartable", parents=[common], help="character table and kernels")
    sub.add_parser("faithful", parents=[common], help="faithful character sums")
    return parser


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# text rendering

def _render_lattice(data: dict) -> list[str]:
    lines = [f"normal subgroups: {data['nodeCount']}"]
    ups: dict[int, list[int]] = {}
    for i, j in data["covers"]:
        ups.setdefault(i, []).append(j)
    for node in data["nodes"]:
        i = node["index"]
        lines.append(f"  N{i}  order {node['order']}  classes {node['classCount']}")
        for j in ups.get(i, []):
            lines.append(f"    < N{j}")
    return lines


def _render_moebius(data: dict) -> list[str]:
    lines = ["mu(lower, upper): recursive / closed"]
    for p in data["pairs"]:
        flag = "" if p["recursive"] == p["closed"] else "   MISMATCH"
        lines.append(f"  mu(N{p['lower']}, N{p['upper']}) = {p['recursive']} / {p['closed']}{flag}")
    lines.append(f"mismatches: {data['mismatches']}")
    return lines


def _render_socle(data: dict) -> list[str]:
    lines = [f"socle decomposition: a={data['a']} b={data['b']}"]
    for i, c in enumerate(data["abelian"], 1):
        lines.append(f"  A_{i}: |A|={c['order']} d={c['d']} q={c['q']} "
                     f"({c['minimalCount']} minimal normal subgroups)")
    for s in data["nonAbelianOrders"]:
        lines.append(f"  non-abelian minimal normal of order {s}")
    return lines


def _render_cgn(cgn: dict, fk: dict | None) -> list[str]:
    lines = [f"class generating number: structural={cgn['structural']} "
             f"brute-force={cgn.get('bruteForce', '-')} vertical-cut={cgn.get('verticalCut', '-')}"]
    if fk is not None:
        lines.append("generating class tuples f_k:")
        lines += [f"  f_{k} = {v}" for k, v in fk.items()]
    return lines


def _fmt_c(z) -> str:
    re, im = z
    if abs(im) < 1e-9:
        return f"{re:g}"
    return f"{re:g}{im:+g}i"


def _render_chartable(data: dict) -> list[str]:
    lines = [f"character table (Dixon prime {data['prime']})",
             "  classes: " + "  ".join(f"{c['representative']}[{c['size']}]" for c in data["classes"])]
    for i, chi in enumerate(data["characters"]):
        vals = "  ".join(_fmt_c(v) for v in chi["values"])
        lines.append(f"  chi_{i} (deg {chi['degree']}, kernel N{chi['kernelNode']} "
                     f"of order {chi['kernelOrder']}): {vals}")
    return lines


def _render_faithful(data: dict) -> list[str]:
    lines = [f"sum of squared degrees of faithful irreducibles: {data['faithfulSumSquares']}",
             f"faithful irreducible exists: {data['hasFaithfulIrrep']} "
             f"(socle criterion: {data['hasFaithfulIrrepStructural']})"]
    for c in data["classes"]:
        if c["extendsSocle"]:
            lines.append(f"  class {c['class']} (size {c['size']}): faithful sum "
                         f"{_fmt_c(c['faithfulSum'])}, product {c['product']}, "
                         f"divides: {c['divides']}")
    return lines


def _render_analysis(r: dict) -> list[str]:
    lines = [f"group {r['groupSpec']}: order {r['order']}, {r['classCount']} classes",
             f"radical order {r['radicalOrder']}, socle order {r['socleOrder']}"]
    lines += _render_socle(r["socleDecomposition"])
    lines += _render_lattice(r["lattice"])
    lines += _render_moebius(r["moebius"])
    lines += _render_cgn(r["classGeneratingNumber"], r["fk"])
    lines += _render_faithful(r["faithful"])
    return lines


# --------------------------------------------------------------------------

def _run(args) -> tuple[dict, list[str], list[str]]:
    """Returns (payload, text lines, verification failures)."""
    g = group_from_catalog(args.spec, cap=max(args.cap, 1))
    if g.order > args.cap:
        raise GroupError(f"group order {g.order} exceeds cap {args.cap}")
    lat = enumerate_normal_subgroups(g)
    an = Analysis(args.spec, g, lat, args.tolerance)
    failures: list[str] = []
    cmd = args.command
    head = {"groupSpec": args.spec, "order": g.order}

    if cmd == "analyze":
        payload = an.full()
        lines = _render_analysis(payload)
        if payload["moebius"]["mismatches"]:
            failures.append("Möbius mismatch")
        cgn = payload["classGeneratingNumber"]
        if len(set(cgn.values())) != 1:
            failures.append("class generating numbers disagree")
        if args.verify:
            failures += (an.verify_lattice() + an.verify_generation() + an.verify_chartable()
                         + an.verify_faithful())
    elif cmd == "lattice":
        sec = an.lattice_section()
        payload = {**head, "lattice": sec}
        lines = [f"group {args.spec}: order {g.order}"] + _render_lattice(sec)
        if g.order > 1:
            payload["radicalOrder"] = radical(lat).order
            payload["socleOrder"] = an.decomposition.socle.order
            lines.append(f"radical order {payload['radicalOrder']}, socle order {payload['socleOrder']}")
        if args.verify:
            failures += an.verify_lattice()
    elif cmd == "moebius":
        sec = an.moebius_section()
        payload = {**head, "moebius": sec}
        lines = [f"group {args.spec}: order {g.order}"] + _render_moebius(sec)
        if sec["mismatches"]:
            failures.append("Möbius mismatch")
    elif cmd == "generate":
        cgn = an.cgn_section()
        fk = an.fk_section(args.k)
        payload = {**head, "classGeneratingNumber": cgn["structural"], "classGeneratingNumbers": cgn,
                   "majorSubgroups": an.majors_section(), "fk": fk}
        lines = [f"group {args.spec}: order {g.order}"] + _render_cgn(cgn, fk)
        if len(set(cgn.values())) != 1:
            failures.append("class generating numbers disagree")
        if args.verify:
            failures += an.verify_generation(args.k)
    elif cmd == "chartable":
        sec = an.chartable_section()
        payload = {**head, "characterTable": sec}
        lines = [f"group {args.spec}: order {g.order}"] + _render_chartable(sec)
        if args.verify:
            failures += an.verify_chartable()
    elif cmd == "faithful":
        sec = an.faithful_section()
        payload = {**head, "socleDecomposition": an.socle_section(), "faithful": sec}
        lines = ([f"group {args.spec}: order {g.order}"] + _render_socle(payload["socleDecomposition"])
                 + _render_faithful(sec))
        if args.verify:
            failures += an.verify_faithful()
    else:  # pragma: no cover - argparse rejects unknown commands
        raise AssertionError(cmd)
    return payload, lines, failures


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, lines, failures = _run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except GroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_COMPUTE
    if args.json:
        if args.verify or failures:
            payload["verification"] = {"passed": not failures, "failures": failures}
        text = dumps(payload)
    else:
        if args.verify or failures:
            lines.append("verification: " + ("passed" if not failures else "FAILED"))
            lines += [f"  - {f}" for f in failures]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if failures:
        for f in failures:
            print(f"mismatch: {f}", file=stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
