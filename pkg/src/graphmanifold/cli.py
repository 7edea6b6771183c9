"""Command-line surface.

Commands: validate, info, compare, genus, census, moves.  Reports go to
stdout in a canonical byte-stable form; diagnostics to stderr.  Exit codes
(honoured with or without --quiet): 0 success / equivalent, 1 distinct or
not rigid, 2 input error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .model import degree
from .invariants import bipartition, is_residually_p, orbifold_euler_char, total_slope
from .invariants import fiber_flip, twist_move
from .decider import check_homeomorphic, check_profinite_iso
from .genus import profinite_genus, is_profinitely_rigid
from .presentation import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    builtin_catalogue,
    build_presentation,
    count_index_subgroups,
    hom_census,
)
from .serialization import (
    ManifoldError,
    canonical_json,
    dumps_manifold,
    frac_str,
    kappa_str,
    manifold_to_doc,
    parse_manifold,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _load(path):
    return parse_manifold(_read(path))


def _iso_dict(iso):
    return {
        "vertex_map": {a: b for a, b in iso.vertex_map},
        "edge_map": {a: {"edge": b, "reversed": r} for a, b, r in iso.edge_map},
    }


def _homeo_dict(w):
    return {
        "iso": _iso_dict(w.iso),
        "flips": list(w.flips),
        "mirrored": w.mirrored,
        "cone_matchings": {v: [list(p) for p in pairs] for v, pairs in w.cone_matchings},
        "twists": {"%s:%s" % (eid, role): r for (eid, role), r in w.twists},
    }


def _profinite_dict(w):
    return {
        "iso": _iso_dict(w.iso),
        "flips": list(w.flips),
        "edge_signs": {e: s for e, s in w.edge_signs},
        "kappa": kappa_str(w.kappa, w.modulus),
        "bipartite_orientation": {"scaled_class": list(w.bipartite_orientation[0]),
                                  "image_class": list(w.bipartite_orientation[1])},
    }


def _emit(report, fmt):
    if fmt == "json":
        sys.stdout.write(canonical_json(report))
    else:
        _emit_text(report, "")


def _emit_text(obj, indent):
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)):
                print("%s%s:" % (indent, key))
                _emit_text(val, indent + "  ")
            else:
                print("%s%s: %s" % (indent, key, val))
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                _emit_text(val, indent + "  ")
            else:
                print("%s- %s" % (indent, val))
    else:
        print("%s%s" % (indent, obj))


def cmd_validate(args):
    m = _load(args.file)  # parse_manifold already rejects invalid manifolds
    if not args.quiet:
        _emit({"name": m.name, "ok": True, "violations": []}, args.format)
    return EXIT_OK


def cmd_info(args):
    m = _load(args.file)
    primes = [args.prime] if args.prime else [2, 3, 5]
    verts = {}
    for v in sorted(m.vertices):
        piece = m.vertices[v]
        entry = {"kind": "minor" if piece.minor else "major",
                 "degree": degree(m, v),
                 "total_slope": frac_str(total_slope(m, v))}
        if not piece.minor:
            entry["euler_char"] = frac_str(orbifold_euler_char(piece, degree(m, v)))
        entry["residually_p"] = {str(p): is_residually_p(piece, p) for p in primes}
        verts[v] = entry
    bip = bipartition(m)
    report = {
        "name": m.name,
        "vertices": verts,
        "bipartition": None if bip is None else {
            "classR": sorted(bip.classR), "classB": sorted(bip.classB)},
    }
    if not args.quiet:
        _emit(report, args.format)
    return EXIT_OK


def cmd_compare(args):
    m1, m2 = _load(args.file1), _load(args.file2)
    if args.mode == "homeo":
        w = check_homeomorphic(m1, m2)
        report = {"mode": "homeo", "verdict": "homeomorphic" if w else "distinct"}
        if w:
            report["witness"] = _homeo_dict(w)
        code = EXIT_OK if w else EXIT_NEGATIVE
    else:
        v = check_profinite_iso(m1, m2)
        report = {"mode": "profinite", "verdict": v.kind}
        if v.homeo:
            report["witness"] = _homeo_dict(v.homeo)
        if v.profinite:
            report["witness"] = _profinite_dict(v.profinite)
        code = EXIT_NEGATIVE if v.distinct else EXIT_OK
    if not args.quiet:
        _emit(report, args.format)
    return code


def cmd_genus(args):
    m = _load(args.file)
    result = profinite_genus(m)
    rigid, reason = is_profinitely_rigid(m)
    kappas = dict(result.kappas)
    report = {
        "name": m.name,
        "rigid": rigid,
        "reason": reason,
        "genus": len(result.representatives),
        "representatives": [
            {"kappa": kappas[r.name], "document": manifold_to_doc(r)}
            for r in result.representatives],
    }
    if not args.quiet:
        _emit(report, args.format)
    return EXIT_OK if rigid else EXIT_NEGATIVE


def cmd_census(args):
    m = _load(args.file)
    catalogue = builtin_catalogue()
    if args.groups:
        wanted = args.groups.split(",")
        by_name = {s.name: s for s in catalogue}
        unknown = [n for n in wanted if n not in by_name]
        if unknown:
            raise ManifoldError("SCHEMA", "unknown census groups %s" % unknown)
        catalogue = [by_name[n] for n in wanted]
    vec = hom_census(m, catalogue, budget=args.budget)
    report = {"name": m.name,
              "hom_counts": {name: c for name, c in vec.entries}}
    if args.max_index:
        p = build_presentation(m)
        report["subgroup_counts"] = {
            str(n): count_index_subgroups(p, n, budget=args.budget)
            for n in range(1, args.max_index + 1)}
    if not args.quiet:
        _emit(report, args.format)
    return EXIT_OK


def _parse_target(text):
    parts = text.split(":")
    if parts[0] == "cone" and len(parts) == 2:
        return ("cone", int(parts[1]))
    if parts[0] == "end" and len(parts) == 3 and parts[2] in ("from", "to"):
        return ("end", parts[1], parts[2])
    raise ManifoldError("SCHEMA", "bad twist target %r (use cone:I or end:EDGE:from|to)" % text)


def cmd_moves(args):
    m = _load(args.file)
    try:
        if args.flip:
            out = fiber_flip(m, args.flip)
        else:
            v, ta, tb, k = args.twist
            out = twist_move(m, v, _parse_target(ta), _parse_target(tb), int(k))
    except (KeyError, ValueError) as exc:
        raise ManifoldError("SCHEMA", str(exc))
    sys.stdout.write(dumps_manifold(out))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="gmtool",
        description="Homeomorphism and profinite-isomorphism decisions for "
                    "closed orientable graph manifolds given as decorated JSJ graphs.")
    ap.add_argument("--quiet", action="store_true", help="suppress reports, use exit codes")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="node budget for census searches")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a manifold document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="slopes, Euler characteristics, bipartition")
    p.add_argument("file")
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("compare", help="decide homeomorphism or profinite isomorphism")
    p.add_argument("--mode", choices=("homeo", "profinite"), default="profinite")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("genus", help="enumerate the profinite genus")
    p.add_argument("file")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("census", help="finite-quotient fingerprint")
    p.add_argument("file")
    p.add_argument("--groups", default=None, help="comma-separated catalogue names")
    p.add_argument("--max-index", type=int, default=0)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("moves", help="apply a fibre flip or Dehn twist pair")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--flip", metavar="VERTEX")
    g.add_argument("--twist", nargs=4, metavar=("VERTEX", "TARGET_A", "TARGET_B", "K"))
    p.set_defaults(func=cmd_moves)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ManifoldError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
