"""Command line interface.

Exit codes: 0 success, 1 a verified property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .checks import check_hochster, check_pair, run_fuzz_corpus
from .complexes import betti_numbers, betti_of_ranks, invariants_of_ideal, verify_resolution
from .field import parse_field, using_field
from .io import (
    InputError,
    betti_to_dict,
    complex_to_dict,
    dumps,
    format_betti_table,
    format_ideal,
    ideal_to_dict,
    load_ideal,
    load_simplicial,
    simplicial_to_dict,
)
from .monomial import ideal_sum
from .polarization import polarize_ideal, verify_shift_polarization
from .simplicial import hochster_table, stanley_reisner_ideal
from .star import resolution, star, taylor_direct


class _Out:
    def __init__(self, fmt):
        self.fmt = fmt
        self.doc = {}
        self.lines = []

    def text(self, s=""):
        self.lines.append(s)

    def emit(self):
        if self.fmt == "structured":
            print(dumps(self.doc))
        else:
            print("\n".join(self.lines))


def _invariants(I):
    if I.is_zero:
        return None
    v = invariants_of_ideal(I)
    return {"projdim_quotient": v.projdim_quotient, "projdim_ideal": v.projdim_ideal,
            "reg_quotient": v.reg_quotient, "reg_ideal": v.reg_ideal, "max_shifts": v.max_shifts}


def cmd_betti(args, out):
    I, names = load_ideal(args.ideal)
    B = betti_of_ranks(resolution(I))
    inv = _invariants(I)
    out.doc.update(ideal=ideal_to_dict(I, names), betti=betti_to_dict(B), invariants=inv)
    out.text(f"S/I with I = {format_ideal(I, names)}")
    out.text(format_betti_table(B))
    if inv:
        out.text(f"projdim(S/I) = {inv['projdim_quotient']}   reg(I) = {inv['reg_ideal']}")
    return 0


def cmd_taylor(args, out):
    I, names = load_ideal(args.ideal)
    T = taylor_direct(I)
    v = verify_resolution(T, I)
    B = betti_numbers(T)
    out.doc.update(ideal=ideal_to_dict(I, names), complex=complex_to_dict(T),
                   verify=v.as_dict(), betti=betti_to_dict(B))
    out.text(f"Taylor complex of {format_ideal(I, names)}: ranks {T.ranks()}")
    out.text(v.line())
    out.text("Betti numbers of S/I (homology of T tensor K):")
    out.text(format_betti_table(B))
    return 0 if v else 1


def cmd_star(args, out):
    I, ni = load_ideal(args.ideal_a)
    J, _ = load_ideal(args.ideal_b)
    if I.n != J.n:
        raise InputError(f"ideals over {I.n} and {J.n} variables")
    minimal = args.resolution == "minimal"
    F, G = resolution(I, minimal), resolution(J, minimal)
    C = star(F, G)
    S = ideal_sum(I, J)
    v = verify_resolution(C, S)
    B = betti_numbers(C)
    out.doc.update(I=ideal_to_dict(I), J=ideal_to_dict(J), sum=ideal_to_dict(S),
                   resolution=args.resolution, ranks=list(C.ranks()), verify=v.as_dict(),
                   betti=betti_to_dict(B))
    if args.show_complex:
        out.doc["complex"] = complex_to_dict(C)
    out.text(f"F*G for I = {format_ideal(I, ni)}, J = {format_ideal(J, ni)} ({args.resolution} inputs)")
    out.text(f"ranks {C.ranks()}")
    out.text(v.line())
    out.text(f"Betti numbers of S/(I+J) = S/{format_ideal(S, ni)}:")
    out.text(format_betti_table(B))
    return 0 if v else 1


def cmd_polarize(args, out):
    I, names = load_ideal(args.ideal)
    P, ctx = polarize_ideal(I, args.r)
    check = verify_shift_polarization(I, args.r)
    yn = ctx.variable_names()
    out.doc.update(ideal=ideal_to_dict(I, names), polarization=ideal_to_dict(P, yn),
                   r=ctx.r, layout="y[i][k] at index i*r + (k-1)", verify=check.as_dict())
    out.text(f"I     = {format_ideal(I, names)}")
    out.text(f"I^pol = {format_ideal(P, yn)}   (r = {ctx.r}, {ctx.target_n} variables)")
    out.text(check.line())
    return 0 if check else 1


def cmd_hochster(args, out):
    sigma = load_simplicial(args.complex)
    I = stanley_reisner_ideal(sigma)
    H = hochster_table(sigma)
    check = check_hochster(sigma)
    out.doc.update(complex=simplicial_to_dict(sigma), stanley_reisner=ideal_to_dict(I),
                   hochster=[H[i] for i in sorted(H)], verify=check.as_dict())
    out.text(f"I_Sigma = {format_ideal(I)}")
    out.text("i : sum_W h~_{|W|-i-1}(Sigma_W)")
    for i in sorted(H):
        if H[i]:
            out.text(f"{i:>2}: {H[i]}")
    out.text(check.line())
    return 0 if check else 1


def cmd_check(args, out):
    I, names = load_ideal(args.ideal_a)
    J, _ = load_ideal(args.ideal_b)
    if I.n != J.n:
        raise InputError(f"ideals over {I.n} and {J.n} variables")
    rep = check_pair(I, J, extras=not args.quick)
    out.doc.update(rep.as_dict())
    out.text(f"I = {format_ideal(I, names)}   J = {format_ideal(J, names)}")
    for k, v in rep.betti.items():
        out.text(f"beta({k}) = {v}")
    for c in rep.checks:
        out.text(c.line())
    return 0 if rep.ok else 1


def cmd_fuzz(args, out):
    rep = run_fuzz_corpus(args.seed, args.count, args.n_max, args.exp_max, args.gens_max,
                          args.simplicial_count)
    out.doc.update(rep)
    ncheck = sum(len(e["checks"]) for e in rep["entries"]) + sum(len(e["checks"]) for e in rep["simplicial"])
    out.text(f"seed {args.seed}: {len(rep['entries'])} ideal triples, "
             f"{len(rep['simplicial'])} simplicial cases, {ncheck} checks")
    out.text(f"tight pairs: {rep['tight']}")
    for f in rep["failures"]:
        out.text(f"FAIL #{f['index']} {f['check']}: {f['detail']}")
    out.text("PASS" if rep["ok"] else f"{len(rep['failures'])} failures")
    return 0 if rep["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "structured"], default="table")
    common.add_argument("--field", default="rational", help="rational or prime:<p>")

    p = argparse.ArgumentParser(prog="starres", description="Star products of monomial resolutions.")
    p.add_argument("--version", action="version", version=f"starres {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("betti", parents=[common], help="Betti table of S/I")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("taylor", parents=[common], help="Taylor resolution of S/I")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_taylor)

    s = sub.add_parser("star", parents=[common], help="star product resolving S/(I+J)")
    s.add_argument("ideal_a")
    s.add_argument("ideal_b")
    s.add_argument("--resolution", choices=["minimal", "taylor"], default="minimal")
    s.add_argument("--show-complex", action="store_true", help="include the complex in structured output")
    s.set_defaults(func=cmd_star)

    s = sub.add_parser("polarize", parents=[common], help="polarization and shift check")
    s.add_argument("ideal")
    s.add_argument("--r", type=int, default=None, help="replication depth (default: max exponent)")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("hochster", parents=[common], help="Hochster sums of a simplicial complex")
    s.add_argument("complex")
    s.set_defaults(func=cmd_hochster)

    s = sub.add_parser("check", parents=[common], help="all inequalities and resolution checks for a pair")
    s.add_argument("ideal_a")
    s.add_argument("ideal_b")
    s.add_argument("--quick", action="store_true", help="skip polarization/Taylor/oracle extras")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("fuzz", parents=[common], help="seeded random corpus")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--n-max", type=int, default=4)
    s.add_argument("--exp-max", type=int, default=3)
    s.add_argument("--gens-max", type=int, default=4)
    s.add_argument("--simplicial-count", type=int, default=20)
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = parse_field(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = _Out(args.format)
    out.doc["command"] = args.command
    out.doc["field"] = field.name
    try:
        with using_field(field):
            code = args.func(args, out)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.doc["exit_code"] = code
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
