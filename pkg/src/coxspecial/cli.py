"""Command-line interface: ``coxspecial {roots,involutions,verify,character} ...``.

Exit codes: 0 all checks pass, 1 mathematical counterexample, 2 usage or
configuration error, 3 an explicitly requested oracle exceeds its size limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any

from .coxgroup import DEFAULT_ORACLE_THRESHOLD
from .errors import DomainError, SizeExceededError
from .exactfield import FieldSpec, Scalar, format_fraction
from .fvcharacters import conjugacy_classes, fv_character, inner_product, trivial_character
from .involutions import involution_classes, special_class_reps
from .normalizers import bulky_fast
from .rootsystem import RootSystem, build, format_components, parse_type
from .verify import default_sweep, dihedral_consistency, verify_type

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3

log = logging.getLogger("coxspecial")


def _field_json(F: FieldSpec) -> dict:
    return {
        "descriptor": F.describe(),
        "minpoly": [format_fraction(c) for c in F.minpoly],
        "m": F.m,
    }


def _scalar_json(x: Scalar) -> list[str]:
    return x.coeff_strings()


def _labels(J) -> str:
    return "{" + ",".join(str(s) for s in J) + "}"


def _doc(rs: RootSystem | None, type_name: str, classes: list, verdicts: dict, **extra) -> dict:
    doc: dict[str, Any] = {
        "type": type_name,
        "field": _field_json(rs.field) if rs is not None else None,
        "classes": classes,
        "verdicts": verdicts,
    }
    doc.update(extra)
    return doc


def _emit(doc: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _table(headers: list[str], rows: list[list]) -> list[str]:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return [fmt.format(*headers), fmt.format(*("-" * w for w in widths))] + [fmt.format(*r) for r in cells]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_roots(args) -> int:
    rs = build(parse_type(args.type))
    simple = []
    for i in range(rs.rank):
        if rs.ambient_simple is not None:
            simple.append(rs.root_str(i))
    gram = [[str(x) for x in row] for row in rs.gram]
    verdicts = {"num_roots": len(rs.roots), "num_positive": len(rs.positive), "order": rs.order}
    extra = {
        "simple_roots_ambient": [[format_fraction(c) for c in a] for a in rs.ambient_simple] if rs.ambient_simple else None,
        "gram": [[_scalar_json(x) for x in row] for row in rs.gram],
        "positive_roots": [[_scalar_json(c) for c in rs.roots[i]] for i in sorted(rs.positive)],
    }
    lines = [
        f"type {rs.ctype}   field {rs.field.describe()}",
        f"|Phi| = {len(rs.roots)}   |Phi+| = {len(rs.positive)}   |W| = {rs.order}",
    ]
    if simple:
        lines.append("simple roots: " + ", ".join(f"a{i + 1} = {s}" for i, s in enumerate(simple)))
    lines.append("Gram matrix of the simple roots:")
    lines += ["  " + "  ".join(f"{c:>8}" for c in row) for row in gram]
    if args.all:
        lines.append("positive roots (simple-root coordinates):")
        for i in sorted(rs.positive):
            lines.append(f"  {i:4d}: {rs.root_str(i)}")
    _emit(_doc(rs, str(rs.ctype), [], verdicts, **extra), args.format, lines)
    return EXIT_OK


def _involution_rows(rs: RootSystem) -> list[dict]:
    rows = []
    for c in involution_classes(rs):
        fast = bulky_fast(rs, c.J)
        rows.append(
            {
                "J": list(c.J),
                "components": format_components(c.components),
                "central": True,
                "special": c.special,
                "bulky": fast.bulky,
                "even": c.even,
                "dim_V1": c.eig.dim1,
                "dim_Vm1": c.eig.dimM1,
                "identity": c.is_identity,
                "witness": fast.witness.as_dict() if fast.witness else None,
            }
        )
    return rows


def cmd_involutions(args) -> int:
    rs = build(parse_type(args.type))
    rows = _involution_rows(rs)
    mismatch = [r for r in rows if r["special"] != r["bulky"]]
    n_special = sum(r["special"] for r in rows)
    verdicts = {
        "classes": len(rows),
        "special_classes": n_special,
        "special_nontrivial": n_special - 1,
        "special_equals_bulky": not mismatch,
    }
    table = [
        [
            _labels(r["J"]),
            r["components"],
            r["dim_V1"],
            r["dim_Vm1"],
            r["special"],
            r["bulky"],
            r["even"],
            _witness_str(r["witness"]),
        ]
        for r in rows
    ]
    lines = [f"involution classes of {rs.ctype} (w_J central in W_J)"]
    lines += _table(["J", "type", "dimV1", "dimV-1", "special", "bulky", "even", "witness"], table)
    lines.append(f"|X_W| = {n_special} (identity included; {n_special - 1} non-trivial)")
    if mismatch:
        lines.append(f"COUNTEREXAMPLE: special != bulky on {[r['J'] for r in mismatch]}")
    _emit(_doc(rs, str(rs.ctype), rows, verdicts), args.format, lines)
    return EXIT_COUNTEREXAMPLE if mismatch else EXIT_OK


def _witness_str(w: dict | None) -> str:
    if not w:
        return "-"
    return f"L={_labels(w['L'])} K={_labels(w['K'])} s{w['t']}->s{w['image']} ({w['kind']})"


def cmd_verify(args) -> int:
    if args.types and args.types != ["all"]:
        types = [parse_type(t) for t in args.types]
        scope = ",".join(str(t) for t in types)
    else:
        types = default_sweep(args.max_rank)
        scope = "all"
    results = []
    for ct in sorted(types, key=str):
        results.append(verify_type(ct, args.oracle_threshold, args.seed, args.samples))
    extra_checks = dihedral_consistency() if scope == "all" else []

    classes, verdicts, lines = [], {}, []
    for v in results:
        name = str(v.rs.ctype)
        for r in v.theorem.rows:
            classes.append(
                {
                    "type": name,
                    "J": list(r.J),
                    "components": r.components,
                    "special": r.special,
                    "bulky": r.bulky,
                    "bulky_brute": r.bulky_brute,
                    "even": r.even,
                    "dim_V1": r.dim1,
                    "dim_Vm1": r.dimM1,
                    "agree": r.agree,
                    "witness": r.witness.as_dict() if r.witness else None,
                }
            )
        verdicts[name] = {
            "theorem": v.theorem.ok,
            "oracle": v.oracle,
            "w0_central": v.remark.w0_central,
            "bulky_noncentral": [list(J) for J in v.remark.bulky_noncentral],
            "checks": {c.name: c.ok for c in v.checks},
            "ok": v.ok,
        }
        status = "ok" if v.ok else "FAIL"
        lines.append(
            f"{name:8s} {status:4s} classes={len(v.theorem.rows):2d} "
            f"special={sum(r.special for r in v.theorem.rows):2d} "
            f"oracle={'yes' if v.oracle else 'no '} checks={sum(c.ok for c in v.checks)}/{len(v.checks)}"
        )
        for r in v.theorem.rows:
            if not r.agree or args.verbose:
                lines.append(
                    f"    J={_labels(r.J):18s} {r.components:12s} special={r.special!s:5s} bulky={r.bulky!s:5s} "
                    f"brute={r.bulky_brute!s:5s} even={r.even!s:5s} witness={_witness_str(r.witness.as_dict() if r.witness else None)}"
                )
        if not v.remark.w0_central:
            lines.append(f"    remark: w_S non-central; bulky classes with non-central w_J: {[list(J) for J in v.remark.bulky_noncentral]}")
        for c in v.checks:
            if not c.ok:
                lines.append(f"    FAILED {c.name}: {c.detail}")
    for c in extra_checks:
        verdicts[c.name] = c.ok
        lines.append(f"{'ok' if c.ok else 'FAIL':4s} {c.name}")
    counterexamples = sum(len(v.counterexamples) for v in results)
    all_ok = all(v.ok for v in results) and all(c.ok for c in extra_checks)
    verdicts["summary"] = {"types": len(results), "counterexamples": counterexamples, "ok": all_ok}
    lines.append(f"{len(results)} types, {counterexamples} counterexamples, {'PASS' if all_ok else 'FAIL'}")
    rs0 = results[0].rs if len(results) == 1 else None
    _emit(_doc(rs0, scope, classes, verdicts), args.format, lines)
    return EXIT_OK if all_ok else EXIT_COUNTEREXAMPLE


def cmd_character(args) -> int:
    rs = build(parse_type(args.type))
    limit = args.oracle_threshold
    cd = conjugacy_classes(rs, limit)
    chi = fv_character(rs, args.twisted, limit)
    triv = trivial_character(cd)
    specials = special_class_reps(rs)
    used = [c for c in specials if c.even or not args.twisted]
    ip = inner_product(cd, chi, triv)
    classes = [
        {"size": n, "value": v, "rep_order_class": i} for i, (n, v) in enumerate(zip(cd.sizes, chi.values))
    ]
    verdicts = {
        "twisted": args.twisted,
        "order": cd.order,
        "values": list(chi.values),
        "degree": chi.degree,
        "inner_with_trivial": format_fraction(ip),
        "X_W": [list(c.J) for c in used],
        "degree_ok": chi.degree == cd.order,
        "reciprocity_ok": ip == len(used),
    }
    lines = [
        f"{'twisted ' if args.twisted else ''}virtual character of {rs.ctype}, |W| = {cd.order}",
        "summed over J = " + ", ".join(_labels(c.J) for c in used),
    ]
    lines += _table(["class", "size", "chi"], [[i, n, v] for i, (n, v) in enumerate(zip(cd.sizes, chi.values))])
    lines.append("values: (" + ", ".join(str(v) for v in chi.values) + ")")
    lines.append(f"<chi, 1> = {format_fraction(ip)}")
    _emit(_doc(rs, str(rs.ctype), classes, verdicts), args.format, lines)
    ok = verdicts["degree_ok"] and verdicts["reciprocity_ok"]
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--oracle-threshold", type=_positive_int, default=DEFAULT_ORACLE_THRESHOLD)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="coxspecial", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", parents=[common], help="root system summary")
    r.add_argument("type")
    r.add_argument("--all", action="store_true", help="list every positive root")
    r.set_defaults(func=cmd_roots)

    i = sub.add_parser("involutions", parents=[common], help="involution classes with special/bulky verdicts")
    i.add_argument("type")
    i.set_defaults(func=cmd_involutions)

    v = sub.add_parser("verify", parents=[common], help="verify special == bulky and the supporting checks")
    v.add_argument("types", nargs="*", help='types such as "D5", or "all" (default)')
    v.add_argument("--max-rank", type=_positive_int, default=None)
    v.add_argument("--samples", type=_positive_int, default=100, help="random conjugators per class")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("character", parents=[common], help="the virtual character sum of 2 Ind 1 - rho")
    c.add_argument("type")
    c.add_argument("--twisted", action="store_true")
    c.set_defaults(func=cmd_character)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except SizeExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
