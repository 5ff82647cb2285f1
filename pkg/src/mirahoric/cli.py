"""Command-line front end: exact tables out, deterministic bytes.

Subcommands: cosets, basis, hecke, kirillov, spectra, verify. Output is
canonical JSON (or CSV for matrices); every number is an exact string.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import kirillov, serialize
from .characters import UnramifiedChar
from .cosets import LEVEL_POSITIVE, LEVEL_ZERO, coset_degree, enumerate_mann_reps
from .fields import QQ, PrimeField, scalar_str
from .invariants import enumerate_basis, hecke_matrix
from .localfield import BaseFieldParams
from .spectra import LocalizationSpec, spectral_report
from .verify import SUITES, run_all


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str, out=None) -> int:
    sys.stdout.write(serialize.canonical_json({"error": message}))
    return 2


def _field(args):
    return PrimeField(args.mod_ell) if getattr(args, "mod_ell", None) else QQ


def _parse_chi(args, n: int) -> UnramifiedChar:
    field = _field(args)
    tokens = [t for t in args.chi.split(",") if t.strip()]
    if len(tokens) != n:
        raise ValueError(f"expected {n} character values, got {len(tokens)}")
    values = tuple(field.parse(t) for t in tokens)
    return UnramifiedChar(values=values, field=field, normalized=args.normalized)


def cmd_cosets(args) -> int:
    params = BaseFieldParams(args.p)
    kind = LEVEL_ZERO if args.level_zero else LEVEL_POSITIVE
    reps = enumerate_mann_reps(args.n, args.j, params, kind)
    deg = coset_degree(args.n, args.j, params, kind)
    obj = {
        "n": args.n,
        "j": args.j,
        "p": args.p,
        "level_kind": kind,
        "degree": deg.value,
        "count": len(reps),
        "representatives": serialize.mann_reps_to_json(reps, params),
    }
    _emit(serialize.canonical_json(obj), args.out)
    return 0


def cmd_basis(args) -> int:
    params = BaseFieldParams(args.p)
    basis = enumerate_basis(args.n, params, args.r)
    obj = {
        "n": args.n,
        "p": args.p,
        "r": args.r,
        "dim": basis.dim,
        "rows": [list(row) for row in basis.rows],
        "lifts": [[list(row) for row in lift] for lift in basis.lifts],
    }
    _emit(serialize.canonical_json(obj), args.out)
    return 0


def cmd_hecke(args) -> int:
    params = BaseFieldParams(args.p)
    chi = _parse_chi(args, args.n)
    h = hecke_matrix(args.n, params, args.r, args.j, chi)
    if args.format == "csv":
        _emit(serialize.matrix_to_csv(h.entries), args.out)
        return 0
    obj = {
        "n": args.n,
        "p": args.p,
        "r": args.r,
        "j": args.j,
        "chi": [scalar_str(v) for v in chi.values],
        "normalized": chi.normalized,
        "dim": h.dim,
        "basis_rows": [list(row) for row in h.basis.rows],
        "matrix": serialize.matrix_to_lists(h.entries),
    }
    _emit(serialize.canonical_json(obj), args.out)
    return 0


def cmd_kirillov(args) -> int:
    params = BaseFieldParams(args.p)
    field = _field(args)
    basis = kirillov.joint_kernel_tuples(args.n, params, args.trunc, field)
    obj = {
        "n": args.n,
        "p": args.p,
        "M": args.trunc,
        "dim": len(basis),
        "kernel_basis": [serialize.tuple_vector_to_json(v) for v in basis],
    }
    _emit(serialize.canonical_json(obj), args.out)
    return 0


def cmd_spectra(args) -> int:
    params = BaseFieldParams(args.p)
    chi = _parse_chi(args, args.n)
    if args.mod_ell:
        spec = LocalizationSpec(field=chi.field)
    elif args.ell:
        spec = LocalizationSpec(field=QQ, ell=args.ell)
    else:
        spec = None
    report = spectral_report(args.n, params, args.r, chi, spec)
    report.meta = {"chi": [scalar_str(v) for v in chi.values]}
    if args.plot:
        from .plots import spectral_figure

        spectral_figure(report, args.plot)
    _emit(serialize.canonical_json(report.to_json()), args.out)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_all(names, seed=args.seed)
    if args.plot:
        from .plots import verify_figure

        verify_figure(results, args.plot)
    obj = {"suites": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    _emit(serialize.canonical_json(obj), args.out)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        n_ok = sum(c.passed for c in res.checks)
        sys.stderr.write(f"[{status}] {res.suite}: {n_ok}/{len(res.checks)} checks ({res.seconds:.1f}s)\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mirahoric",
        description="Exact Atkin-Lehner operators on mirahoric invariants of GL_n(Q_p) principal series.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, n=True, p=True, r=False, j=False, chi=False):
        if n:
            sp.add_argument("--n", type=int, required=True, help="rank of GL_n")
        if p:
            sp.add_argument("--p", type=int, required=True, help="residue characteristic")
        if r:
            sp.add_argument("--r", type=int, required=True, help="level exponent")
        if j:
            sp.add_argument("--j", type=int, required=True, help="operator index U^(j)")
        if chi:
            sp.add_argument("--chi", type=str, required=True, help='character values, e.g. "1,2" or "3 mod 5,1 mod 5"')
            sp.add_argument("--mod-ell", type=int, default=None, help="work over F_ell")
            sp.add_argument("--normalized", action="store_true", help="normalized induction twist")
        sp.add_argument("--out", type=str, default=None, help="write output to file")

    sp = sub.add_parser("cosets", help="Mann coset representatives and degree")
    common(sp, j=True)
    sp.add_argument("--level-zero", action="store_true", help="level r = 0 variant")
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("basis", help="canonical-row basis of the invariants")
    common(sp, r=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("hecke", help="exact matrix of U^(j)")
    common(sp, r=True, j=True, chi=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_hecke)

    sp = sub.add_parser("kirillov", help="joint kernel in the tuple model")
    common(sp)
    sp.add_argument("--trunc", type=int, required=True, help="truncation bound M")
    sp.add_argument("--mod-ell", type=int, default=None, help="work over F_ell")
    sp.set_defaults(func=cmd_kirillov)

    sp = sub.add_parser("spectra", help="spectral report for the U^(j) family")
    common(sp, r=True, chi=True)
    sp.add_argument("--ell", type=int, default=None, help="designated ell for localization over Q")
    sp.add_argument("--plot", type=str, default=None, help="render a figure to this path")
    sp.set_defaults(func=cmd_spectra)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=["all", *SUITES], default="all")
    sp.add_argument("--seed", type=int, default=12345)
    sp.add_argument("--out", type=str, default=None)
    sp.add_argument("--plot", type=str, default=None, help="render a pass/fail figure")
    sp.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
