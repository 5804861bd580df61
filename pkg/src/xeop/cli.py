"""Command-line front end: spectra, curves and verification suites.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 numerical pole on the requested grid.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import sqrt

import numpy as np

from .eigensolve import build_hamiltonian, lowest_eigenpairs
from .errors import IndexRangeError, ParameterError, PoleError
from .potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    gpt_chi,
    gpt_energy,
    gpt_potential,
    oscillator_chi,
    oscillator_energy,
    oscillator_solver_potential,
)
from .verify import SUITE_NAMES, run_suite

__all__ = ["main"]


def _default_points() -> int:
    return int(os.environ.get("XEOP_DEFAULT_POINTS", "4000"))


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _build_model(args):
    if args.family == "oscillator":
        if args.omega is None:
            raise ParameterError("oscillator family requires --omega")
        return OscillatorModel(omega=args.omega, D=args.D, l=args.l, m=args.m)
    if args.family == "gpt":
        if args.A is None or args.B is None:
            raise ParameterError("gpt family requires --A and --B")
        return GPTModel(A=args.A, B=args.B, D=args.D, l=args.l, m=args.m)
    raise ParameterError(f"unknown family {args.family!r}")


def _build_grid(args, model) -> RadialGrid:
    points = args.points if args.points is not None else _default_points()
    if args.rmin is not None and args.rmax is not None:
        return RadialGrid(args.rmin, args.rmax, points)
    if isinstance(model, OscillatorModel):
        return RadialGrid(args.rmin or 1e-4, args.rmax or max(20.0, 8.0 / sqrt(model.omega)), points)
    return RadialGrid(args.rmin or 1e-4, args.rmax or 25.0, points)


def _solver_potential(model):
    if isinstance(model, OscillatorModel):
        return lambda r: oscillator_solver_potential(model, r)
    return lambda r: gpt_potential(model, r)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    model = _build_model(args)
    grid = _build_grid(args, model)
    levels = args.levels
    if isinstance(model, GPTModel):
        levels = min(levels, model.n_max + 1)
        energy = lambda n: gpt_energy(model, n)
    else:
        energy = lambda n: oscillator_energy(model, n)
    H = build_hamiltonian(_solver_potential(model), grid)
    res = lowest_eigenpairs(H, levels)
    rows = [
        (n, energy(n), float(res.eigenvalues[n]), abs(float(res.eigenvalues[n]) - energy(n)))
        for n in range(levels)
    ]
    if args.format == "json":
        payload = {
            "family": args.family,
            "rows": [
                {"n": n, "E_analytic": ea, "E_numeric": en, "abs_error": err}
                for n, ea, en, err in rows
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = ["n,E_analytic,E_numeric,abs_error"]
        lines += [f"{n},{_fmt(ea)},{_fmt(en)},{_fmt(err)}" for n, ea, en, err in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_curve(args) -> int:
    model = _build_model(args)
    grid = _build_grid(args, model)
    r = grid.nodes
    if args.what == "potential":
        values = _solver_potential(model)(r)
    else:
        if args.n is None:
            raise ParameterError("curve chi requires --n")
        if isinstance(model, GPTModel):
            values = gpt_chi(model, args.n, r)
        else:
            values = oscillator_chi(model, args.n, r)
    lines = ["r,value"] + [f"{_fmt(ri)},{_fmt(vi)}" for ri, vi in zip(r, values)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, exact_gpt=args.exact_gpt)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    if not args.out:
        sys.stdout.write("\n")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        sys.stderr.write(f"{status} {check.id}\n")
    return 0 if report.passed else 1


def _add_model_flags(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=("oscillator", "gpt"), required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--D", type=int, default=3)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--omega", type=float, default=None)
    p.add_argument("--A", type=float, default=None)
    p.add_argument("--B", type=float, default=None)
    p.add_argument("--rmin", type=float, default=None)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xeop",
        description="Extended shape-invariant potentials: spectra, curves, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="tabulate analytic vs numeric bound-state energies")
    _add_model_flags(sp)
    sp.add_argument("--levels", type=int, default=4)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(fn=cmd_spectrum)

    cv = sub.add_parser("curve", help="dump a potential or wavefunction curve as CSV")
    cv.add_argument("what", choices=("potential", "chi"))
    _add_model_flags(cv)
    cv.add_argument("--n", type=int, default=None)
    cv.set_defaults(fn=cmd_curve)

    vf = sub.add_parser("verify", help="run a named verification suite")
    vf.add_argument("--suite", choices=SUITE_NAMES, required=True)
    vf.add_argument("--exact-gpt", action="store_true", dest="exact_gpt",
                    help="include the exact (non-approximate) GPT negative control")
    vf.add_argument("--out", default=None)
    vf.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParameterError, IndexRangeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except PoleError as exc:
        sys.stderr.write(f"pole: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
