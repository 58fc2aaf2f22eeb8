"""Batch command line front end with stable machine-readable output.

Subcommands: compose, basis, gamma, module, gram, bratteli, structure,
verify.  All JSON output is emitted with sorted keys so identical inputs
produce byte-identical output.  The evaluation point is always parsed as an
exact rational p/q, never as a float.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import diagram as dg
from . import gamma as gamma_mod
from .algebra import enumerate_basis
from .branching import bratteli
from .gram import gram_report
from .standard_modules import standard_module, generator_diagrams
from .structure import structure_report
from .verify import run_verify, CHECK_NAMES


def parse_mu(text, l):
    """Multipartition syntax: components separated by |, parts by commas,
    empty component written as - (e.g. "2,1|1")."""
    comps = text.split("|")
    if len(comps) != l:
        raise ValueError("expected %d components separated by |, got %r" % (l, text))
    out = []
    for comp in comps:
        comp = comp.strip()
        if comp.startswith("(") and comp.endswith(")"):
            comp = comp[1:-1].strip()
        if comp in ("-", ""):
            out.append(())
            continue
        parts = tuple(int(p) for p in comp.split(","))
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError("component %r is not a partition" % comp)
        out.append(parts)
    return tuple(out)


def parse_rational(text):
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cmd_compose(args):
    p = dg.parse(args.p)
    q = dg.parse(args.q)
    k, d = dg.compose(p, q)
    _emit(args, _json({"delta_exponent": k, "diagram": dg.serialize(d)}))
    return 0


def cmd_basis(args):
    m = args.n if args.m is None else args.m
    basis = enumerate_basis(args.l, args.n, m)
    if args.format == "csv":
        lines = ["diagram"] + [dg.serialize(d) for d in basis]
        _emit(args, "\n".join(lines))
    else:
        _emit(
            args,
            _json(
                {
                    "l": args.l,
                    "n": args.n,
                    "m": m,
                    "count": len(basis),
                    "diagrams": [dg.serialize(d) for d in basis],
                }
            ),
        )
    return 0


def cmd_gamma(args):
    if args.format == "dot":
        _emit(args, gamma_mod.hasse_dot(args.l, args.n))
    else:
        _emit(args, _json(gamma_mod.gamma_report(args.l, args.n)))
    return 0


def cmd_module(args):
    mu = parse_mu(args.mu, args.l)
    mod = standard_module(mu, args.l, args.n)
    out = {
        "mu": [list(x) for x in mod.mu],
        "l": args.l,
        "n": args.n,
        "vector": list(mod.mvec),
        "dim": mod.dim,
        "transversal_size": len(mod.profiles),
        "tableau_dim": mod.rep.dim,
    }
    if args.matrices:
        out["generators"] = {
            name: [[e.to_json() for e in row] for row in mod.action_matrix(d)]
            for name, d in sorted(generator_diagrams(args.l, args.n).items())
        }
    _emit(args, _json(out))
    return 0


def cmd_gram(args):
    mu = parse_mu(args.mu, args.l)
    point = parse_rational(args.at) if args.at else None
    rep = gram_report(mu, args.l, args.n, point=point, want_det=args.det)
    _emit(args, _json(rep))
    return 0


def cmd_bratteli(args):
    graph = bratteli(args.l, args.n_max)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(graph.to_dot() + "\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(graph.to_csv() + "\n")
    _emit(args, _json(graph.to_json()))
    return 0


def cmd_structure(args):
    point = parse_rational(args.at) if args.at else None
    _emit(args, _json(structure_report(args.l, args.n, point)))
    return 0


def cmd_verify(args):
    names = None
    if args.only:
        names = [s.strip() for s in args.only.split(",")]
        unknown = [s for s in names if s not in CHECK_NAMES]
        if unknown:
            print("unknown checks: %s" % ", ".join(unknown), file=sys.stderr)
            return 2
    results = run_verify(args.l, args.n_max, names)
    failed = 0
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print("%s %s (%s)" % (status, res.name, res.params))
        if not res.ok:
            failed += 1
    print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return 1 if failed else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="tonalg",
        description="Exact computations with tonal partition algebras over Z[delta].",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose two serialized diagrams")
    p.add_argument("--p", required=True, help="first diagram, e.g. '2,2|T1,T2;B1,B2'")
    p.add_argument("--q", required=True, help="second diagram")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("basis", help="enumerate the tone-diagram basis")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("gamma", help="index set, poset, orders, and levels")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("module", help="standard module data")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True, help="multipartition, e.g. '2,1|1' or '2|-'")
    p.add_argument("--matrices", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_module)

    p = sub.add_parser("gram", help="Gram matrix, determinant, ranks")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--at", help="exact rational evaluation point p/q")
    p.add_argument("--det", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("bratteli", help="restriction graph over a tower")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--dot", help="write DOT to this path")
    p.add_argument("--csv", help="write layer dims CSV to this path")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bratteli)

    p = sub.add_parser("structure", help="heredity chains and section checks")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", help="exact rational point p/q (flags delta=0 cases)")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_structure)

    p = sub.add_parser("verify", help="run the named invariant battery")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--only", help="comma-separated subset of check names")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (dg.DiagramError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
