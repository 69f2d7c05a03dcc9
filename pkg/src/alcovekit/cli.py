"""Command-line entry point: ``alcovekit <subcommand> ...``.

Exit status is 0 on success and 2 on usage, input or scope errors.
Negative vectors may be passed as ``--point -1/2,1/2``; the argument is
re-attached to its flag before argparse sees it.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import rational as rq
from .affine_weyl import fold_to_alcove
from .alcove import build_alcove
from .center import (CenterElement, center_affine_map, center_elements, cycle_notation,
                     dynkin_automorphism, fixed_locus, fixed_locus_su_n, known_word, order,
                     subgroup_generated, vertex_permutation, weyl_element_for_center)
from .lie_data import build_root_system
from .prequant import ModuliQuery, theorem_obs_check
from .verify import run_checks

_VALUE_FLAGS = ("--point", "--class")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _emit(obj) -> str:
    return json.dumps(obj, indent=2)


def _matrix_rows(M) -> list[list[str]]:
    return [rq.format_vector(r) for r in M]


def _format_matrix(M) -> str:
    cells = _matrix_rows(M)
    width = max(len(c) for r in cells for c in r)
    return "\n".join("  [" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def cmd_roots(args) -> str:
    rs = build_root_system(args.type)
    if args.json:
        return _emit(rs.to_json())
    lines = [f"{rs.type}: rank {rs.rank}, ambient R^{rs.ambient_dim}"]
    for i, a in enumerate(rs.simple_roots, 1):
        lines.append(f"  alpha_{i} = {rq.pretty_vector(a)}   mark {rs.marks[i - 1]}")
    lines.append(f"  highest root = {rq.pretty_vector(rs.highest_root)}")
    for i, c in enumerate(rs.fundamental_coweights, 1):
        lines.append(f"  lambda_{i}^vee = {rq.pretty_vector(c)}")
    lines.append(f"  dual Coxeter number {rs.dual_coxeter}, |Z(G)| = {rs.center_order}, "
                 f"special roots {list(rs.special_root_indices)}")
    return "\n".join(lines)


def cmd_alcove(args) -> str:
    rs = build_root_system(args.type)
    alc = build_alcove(rs)
    if args.json:
        verts = {f"v{j}": rq.format_vector(v) for j, v in enumerate(alc.vertices)}
        return _emit({"type": str(rs.type), "vertices": verts})
    rows = [(f"alpha_{j} = {rq.pretty_vector(rs.root(j))}", f"v_{j} = {rq.pretty_vector(v)}")
            for j, v in list(enumerate(alc.vertices))[1:]]
    rows.append((f"highest root = {rq.pretty_vector(rs.highest_root)}", "v_0 = 0"))
    width = max(len(r[0]) for r in rows + [("Simple or dominant root", "")])
    lines = [f"Alcove data for {rs.type}",
             f"{'Simple or dominant root'.ljust(width)}  Opposite vertex"]
    lines += [f"{a.ljust(width)}  {b}" for a, b in rows]
    return "\n".join(lines)


def cmd_fold(args) -> str:
    rs = build_root_system(args.type)
    point = rq.parse_vector(args.point)
    folded, g = fold_to_alcove(build_alcove(rs), point)
    if args.json:
        return _emit({
            "input": rq.format_vector(point),
            "point": rq.format_vector(folded.cartesian),
            "barycentric": rq.format_vector(folded.barycentric),
            "witness": {
                "word": list(g.word),
                "matrix": _matrix_rows(g.linear.matrix),
                "translation": rq.format_vector(g.translation),
            },
        })
    return "\n".join([
        f"folded point: {rq.pretty_vector(folded.cartesian)}",
        f"barycentric:  {rq.pretty_vector(folded.barycentric)}",
        f"witness word (0 = affine wall): {list(g.word)}",
        f"witness translation: {rq.pretty_vector(g.translation)}",
        "witness linear part:",
        _format_matrix(g.linear.matrix),
    ])


def _center_record(z: CenterElement) -> dict:
    w = weyl_element_for_center(z)
    return {
        "element": z.index,
        "order": order(z),
        "coweight": rq.format_vector(z.coweight),
        "vertex_permutation": cycle_notation(vertex_permutation(z)),
        "dynkin_permutation": cycle_notation(dynkin_automorphism(z)),
        "weyl_matrix": _matrix_rows(w.matrix),
        "weyl_word": list(known_word(z)) if known_word(z) else None,
        "translation": rq.format_vector(center_affine_map(z).translation),
    }


def cmd_center(args) -> str:
    rs = build_root_system(args.type)
    if args.element is not None:
        elements = [CenterElement(rs, args.element)]
    else:
        elements = list(center_elements(rs)[1:])
    records = [_center_record(z) for z in elements]
    if args.json:
        return _emit({"type": str(rs.type), "center_order": rs.center_order,
                      "elements": records})
    if not records:
        return f"{rs.type}: trivial center"
    lines = [f"{rs.type}: |Z(G)| = {rs.center_order}"]
    for z, r in zip(elements, records):
        lines.append(f"exp(lambda_{z.index}^vee), lambda = {rq.pretty_vector(z.coweight)}, "
                     f"order {r['order']}")
        lines.append(f"  vertex permutation: {r['vertex_permutation']}")
        lines.append(f"  Dynkin node permutation: {r['dynkin_permutation']}")
        if r["weyl_word"]:
            lines.append("  Weyl element: " + " ".join(f"s{i}" for i in r["weyl_word"]))
        lines.append("  Weyl matrix:")
        lines.append(_format_matrix(weyl_element_for_center(z).matrix))
    return "\n".join(lines)


def _subgroups_of_order(rs, nu):
    seen, out = set(), []
    elems = center_elements(rs)
    candidates = [subgroup_generated([z], rs) for z in elems] + [elems]
    for H in candidates:
        key = tuple(z.index for z in H)
        if len(H) == nu and key not in seen:
            seen.add(key)
            out.append(H)
    return out


def cmd_fixed(args) -> str:
    rs = build_root_system(args.type)
    if rs.type.series == "A":
        loci = [fixed_locus_su_n(rs.rank + 1, args.nu)]
    else:
        groups = _subgroups_of_order(rs, args.nu)
        if not groups:
            raise ValueError(f"Z({rs.type}) has no cyclic subgroup of order {args.nu}")
        loci = [fixed_locus(H) for H in groups]
    payload = [{
        "order": L.order,
        "orbits": [list(o) for o in L.orbits],
        "generators": [rq.format_vector(v) for v in L.generators],
        "generators_barycentric": [rq.format_vector(t) for t in L.generators_barycentric],
    } for L in loci]
    if args.json:
        return _emit({"type": str(rs.type), "nu": args.nu, "loci": payload})
    lines = []
    for L, p in zip(loci, payload):
        lines.append(f"{rs.type}, subgroup of order {L.order}: fixed locus of dimension "
                     f"{L.dimension}, vertex orbits {p['orbits']}")
        for v, t in zip(L.generators, L.generators_barycentric):
            lines.append(f"  {rq.pretty_vector(v)}   barycentric {rq.pretty_vector(t)}")
    return "\n".join(lines)


def _query(args, level=None) -> ModuliQuery:
    points = [rq.parse_vector(c) for c in args.classes]
    for pt in points:
        if len(pt) != args.p:
            raise ValueError(f"class {rq.pretty_vector(pt)} needs {args.p} coordinates for SU({args.p})")
    return ModuliQuery.from_points(args.p, args.genus, points, level)


def cmd_prequant(args) -> str:
    report = theorem_obs_check(_query(args, args.k))
    if args.json:
        return _emit(report.to_json())
    lines = [f"PU({report.p}), genus {report.genus}, {len(report.classes)} marked class(es)"]
    lines.append(f"  condition (i): k must be a multiple of {report.double_level}"
                 + ("" if report.level is None else f" -> {'pass' if report.condition_i else 'fail'}"))
    for c in report.classes:
        tail = "" if c.passes is None else f" -> {'pass' if c.passes else 'fail'}"
        lines.append(f"  class {rq.pretty_vector(c.xi)}: minimal level {c.min_level}, "
                     f"stabilizer order {c.stabilizer_order}{tail}")
    lines.append(f"  k_min = {report.k_min}")
    if report.level is not None:
        lines.append(f"  level {report.level}: "
                     + ("prequantizable" if report.prequantizable else "not prequantizable"))
    lines.append(f"  components = {report.components}, |Gamma| = {report.gamma_order}")
    lines.append(f"  ({report.caveat})")
    return "\n".join(lines)


def cmd_components(args) -> str:
    report = theorem_obs_check(_query(args))
    if args.json:
        return _emit({"components": report.components, "gamma_order": report.gamma_order})
    return f"{report.components}\n|Gamma| = {report.gamma_order}"


def cmd_verify(args) -> str:
    results = run_checks()
    width = max(len(r.name) for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.detail}".rstrip()
             for r in results]
    args._failed = not all(r.passed for r in results)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alcovekit", description="Center actions on alcoves and PU(p) prequantization.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    sp = with_json(sub.add_parser("roots", help="root-system catalog"))
    sp.add_argument("type")
    sp.set_defaults(func=cmd_roots)

    sp = with_json(sub.add_parser("alcove", help="alcove vertices keyed by opposite root"))
    sp.add_argument("type")
    sp.set_defaults(func=cmd_alcove)

    sp = with_json(sub.add_parser("fold", help="fold a point into the alcove"))
    sp.add_argument("type")
    sp.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1/2,0,-1/2")
    sp.set_defaults(func=cmd_fold)

    sp = with_json(sub.add_parser("center", help="center action on the alcove"))
    sp.add_argument("type")
    sp.add_argument("--element", type=int, help="special-root index i of exp(lambda_i^vee)")
    sp.set_defaults(func=cmd_center)

    sp = with_json(sub.add_parser("fixed", help="fixed locus of a central subgroup"))
    sp.add_argument("type")
    sp.add_argument("--nu", type=int, required=True, help="subgroup order")
    sp.set_defaults(func=cmd_fixed)

    for name, func, doc in (("prequant", cmd_prequant, "prequantization report for PU(p)"),
                            ("components", cmd_components, "component count for PU(p)")):
        sp = with_json(sub.add_parser(name, help=doc))
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--genus", type=int, required=True)
        sp.add_argument("--class", dest="classes", action="append", default=[],
                        help="SU(p) alcove point of a boundary class (repeatable)")
        if name == "prequant":
            sp.add_argument("--k", type=int, help="level to test")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="run the golden reproduction checks")
    sp.set_defaults(func=cmd_verify)
    return p


def _attach_values(argv: Sequence[str]) -> list[str]:
    out, it = [], iter(argv)
    for a in it:
        if a in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_attach_values(argv))
        text = args.func(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ValueError, IndexError, ArithmeticError) as exc:
        print(f"alcovekit: error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return 1 if getattr(args, "_failed", False) else 0


def main() -> None:
    sys.exit(run())
