"""Command-line entry point ``lcg``.

Exit codes: 0 every verdict passed, 1 some verdict failed, 2 usage or
configuration error (bad arguments, unknown algebra, inadmissible parameters).
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .catalog import CATALOG, AlgebraId, admissible_params, inadmissible_reason, instantiate, parse_id
from .errors import LCGError
from .field import parse_field
from .graph import CommutingGraph, write_edges_csv, write_labels_csv
from .lie import load_algebra
from .verify import (
    MAX_Q_BOUND,
    compute_report,
    sweep,
    verify,
    write_json,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _field(args):
    try:
        return parse_field(args.q, args.poly)
    except (LCGError, ValueError) as exc:
        raise _UsageError(f"bad field {args.q!r}: {exc}") from exc


def _algebra_id(args) -> AlgebraId:
    try:
        name = parse_id(args.algebra).name
    except KeyError as exc:
        raise _UsageError(str(exc.args[0])) from exc
    slots = CATALOG[name].slots
    given = {"alpha": args.alpha, "beta": args.beta}
    missing = [s for s in slots if given[s] is None]
    if missing:
        raise _UsageError(f"{name} needs --{' --'.join(missing)} (field-element indices)")
    extra = [s for s in ("alpha", "beta") if s not in slots and given[s] is not None]
    if extra:
        raise _UsageError(f"{name} takes no --{extra[0]}")
    return AlgebraId(name, tuple(given[s] for s in slots))


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(sorted({int(d) for d in text.split(",") if d.strip()}))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad --dims {text!r}") from exc
    if not dims or any(d not in (2, 3, 4) for d in dims):
        raise argparse.ArgumentTypeError("--dims takes a comma list drawn from 2,3,4")
    return dims


def cmd_list(args) -> int:
    F = _field(args) if args.q else None
    for name, entry in CATALOG.items():
        line = f"{name:6s} {entry.label:14s} dim {entry.dim}  {entry.brackets_text}"
        if entry.conditions_text:
            line += f"  [{entry.conditions_text}]"
        print(line)
        if F is not None:
            ids = admissible_params(name, F)
            if ids:
                counts = sorted({_count(a, F) for a in ids})
                print(f"       over GF({F.label()}): {len(ids)} admissible parameter choice(s), components {counts}")
            else:
                status, reason = inadmissible_reason(name, F)
                print(f"       over GF({F.label()}): {status}: {reason}")
    return EXIT_PASS


def _count(aid, F):
    entry = CATALOG[aid.name]
    return entry.count(F.q, F, *aid.params)[0]


def _print_report(doc: dict):
    v = doc["verdict"]
    head = f"{doc['algebra']['id']} {doc['params'] or ''} over GF({doc['field']['label']}): {v['status']}"
    print(head)
    if doc.get("computed"):
        c, p = doc["computed"], doc["predicted"]
        print(f"  vertices   computed {c['vertices']:>6}  predicted {p['vertices']:>6}")
        print(f"  components computed {c['cc_count']:>6}  predicted {p['cc_count']:>6}  ({p['cc_formula']})")
        print(f"  sizes      computed {c['sizes']}")
        print(f"             predicted {p['sizes']}")
        if "shapes" in c:
            ok = sum(s["matched"] for s in c["shapes"])
            print(f"  shapes     {ok}/{len(c['shapes'])} predicted components matched")
        if v.get("first_divergence"):
            print(f"  first divergence: {v['first_divergence']}")
    elif "reason" in v:
        print(f"  {v['error']}: {v['reason']}")


def cmd_verify(args) -> int:
    if args.algebra_json:
        L = load_algebra(args.algebra_json)
        doc = compute_report(L)
        if args.json:
            write_json(doc, args.json)
        c = doc["computed"]
        print(f"{doc['algebra']['id']} over GF({doc['field']['label']}): {c['cc_count']} components, sizes {c['sizes']}")
        return EXIT_PASS
    if not args.algebra or not args.q:
        raise _UsageError("verify needs --algebra and --q, or --algebra-json")
    F = _field(args)
    aid = _algebra_id(args)
    for p in aid.params:
        if not 0 <= p < F.q:
            raise _UsageError(f"parameter {p} is not an element index of GF({F.label()})")
    report = verify(aid, F, args.shapes)
    doc = report.to_dict()
    if args.json:
        write_json(doc, args.json)
    _print_report(doc)
    if report.status == "pass":
        return EXIT_PASS
    if report.status == "fail":
        return EXIT_FAIL
    return EXIT_USAGE


def cmd_sweep(args) -> int:
    if not 2 <= args.max_q <= MAX_Q_BOUND:
        raise _UsageError(f"--max-q must lie in [2, {MAX_Q_BOUND}]")
    doc = sweep(args.max_q, args.dims, args.json, shapes=not args.no_shapes)
    s = doc["summary"]
    print(f"sweep q <= {args.max_q}, dims {list(args.dims)}: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    for f in doc["failures"]:
        print(f"  FAIL {f['algebra']} {f['params']} GF({f['field']}): {f['first_divergence']}")
    for sk in doc["skipped"]:
        print(f"  skip {sk['algebra']} GF({sk['field']}): {sk['status']}")
    return EXIT_FAIL if s["fail"] else EXIT_PASS


def cmd_graph(args) -> int:
    F = _field(args)
    aid = _algebra_id(args)
    L = instantiate(aid, F)
    g = CommutingGraph(L)
    n_edges = write_edges_csv(g, args.edges)
    write_labels_csv(g, args.labels)
    print(f"{aid} over GF({F.label()}): {g.vertex_count} vertices, {n_edges} edges, {len(g.partition)} components")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lcg",
        description="Commuting graphs of solvable Lie algebras of dimension <= 4 over finite fields.",
    )
    ap.add_argument("--version", action="version", version=f"lcg {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def field_args(p, required):
        p.add_argument("--q", required=required, help="field as p, p^k or a prime power such as 9")
        p.add_argument("--poly", help="modulus coefficients c_k,...,c_0 (default: smallest irreducible)")

    def algebra_args(p, required):
        p.add_argument("--algebra", required=required, help="catalog id such as N4_8 (see `lcg list`)")
        p.add_argument("--alpha", type=int, help="alpha as a field-element index")
        p.add_argument("--beta", type=int, help="beta as a field-element index")

    p = sub.add_parser("list", help="show the catalog")
    p.add_argument("--field", dest="q", help="also report admissibility over this field")
    p.set_defaults(poly=None, func=cmd_list)

    p = sub.add_parser("verify", help="compare one algebra with its prediction")
    algebra_args(p, False)
    field_args(p, False)
    p.add_argument("--shapes", action="store_true", help="also check the shape of every component")
    p.add_argument("--json", help="write the report to this path")
    p.add_argument("--algebra-json", help="compute components of an algebra given as JSON instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every admissible catalog instance for q <= max-q")
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--dims", type=_dims, default=(2, 3, 4), help="comma list, default 2,3,4")
    p.add_argument("--json", required=True, help="output path")
    p.add_argument("--no-shapes", action="store_true", help="skip shape checks")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("graph", help="export the commuting graph as CSV")
    algebra_args(p, True)
    field_args(p, True)
    p.add_argument("--edges", required=True, help="edge list path")
    p.add_argument("--labels", required=True, help="component label path")
    p.set_defaults(func=cmd_graph)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"lcg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LCGError, ValueError, OSError) as exc:
        print(f"lcg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
