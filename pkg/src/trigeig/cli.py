"""Command-line entry point: ``trigeig {gen,eig,verify,conjecture}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error, 4 eigensolver non-convergence.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .core import TrigSpec, build_blocks, build_fir, build_L, build_P, build_pure
from .core import format_matrix_csv, read_vector, write_matrix_csv
from .errors import ConvergenceError, DimensionError, DomainError
from .oracle import jacobi_eigs
from .spectral import classify_rank_L, eigs_of_P, fir_closed_form
from .verify import FIR_OMEGAS, SPECTRUM_RTOL, run_suite, spectrum_residual

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NO_CONVERGENCE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_spec_args(p):
    p.add_argument("--fir", nargs=2, metavar=("N", "OMEGA"),
                   help="FIR design matrix with block size N at frequency OMEGA")
    p.add_argument("--x", metavar="FILE", help="phase vector file")
    p.add_argument("--l", metavar="FILE", help="generator vector l file")
    p.add_argument("--h", metavar="FILE", help="generator vector h file")


def _spec_from_args(args) -> TrigSpec:
    files = (args.x, args.l, args.h)
    if args.fir is not None:
        if any(f is not None for f in files):
            raise DomainError("--fir cannot be combined with --x/--l/--h")
        try:
            n = int(args.fir[0])
            omega = float(args.fir[1])
        except ValueError:
            raise DomainError(f"--fir expects an integer and a real, got {args.fir}")
        return build_fir((n, omega))
    if any(f is None for f in files):
        raise DomainError("give either --fir N OMEGA or all of --x, --l, --h")
    try:
        x, l, h = (read_vector(f) for f in files)
    except ValueError as exc:
        raise DomainError(str(exc))
    return TrigSpec(x, l, h)


def _group(values, tol):
    """Collapse a descending list into ``[(value, multiplicity), ...]``."""
    groups = []
    for v in values:
        if groups and abs(groups[-1][0] - v) <= tol:
            groups[-1][1] += 1
        else:
            groups.append([float(v), 1])
    return groups


def _format_groups(groups):
    return ", ".join(f"{v:.12g} (x{k})" for v, k in groups)


def cmd_gen(args):
    spec = _spec_from_args(args)
    if args.which == "P":
        M = build_P(spec)
    elif args.which == "Phat":
        M = build_pure(spec.x)[2]
    elif args.which == "L":
        M = build_L(spec.l, spec.h)
    else:
        A, B = build_blocks(spec)
        M = A if args.which == "A" else B
    if args.out is None:
        sys.stdout.write(format_matrix_csv(M))
    else:
        write_matrix_csv(M, args.out)
        print(f"wrote {args.which} ({M.shape[0]}x{M.shape[1]}) to {args.out}")
    return EXIT_OK


def cmd_eig(args):
    spec = _spec_from_args(args)
    summary = eigs_of_P(spec)
    gd = summary.gd
    rank_L = classify_rank_L(gd)
    tol = SPECTRUM_RTOL * max(1.0, gd.spectral_radius)
    print(f"spec:   {spec.describe()}")
    print(f"gamma:  {gd.gamma:.17g}")
    print(f"delta:  {gd.delta:.17g}")
    print(f"rank(L) branch: {rank_L}, predicted rank(P): {summary.predicted_rank}")
    closed = summary.eigenvalues()
    if args.method in ("closed", "both"):
        print(f"closed: {_format_groups(_group(closed, tol))}")
    if args.method in ("oracle", "both"):
        eig = jacobi_eigs(build_P(spec))
        print(f"oracle: {_format_groups(_group(eig.values, tol))}"
              f"  [{eig.sweeps_used} sweeps]")
        if args.method == "both":
            residual = spectrum_residual(eig.values, closed)
            ok = residual <= tol
            print(f"residual: {residual:.3e} (tolerance {tol:.3e}) {'PASS' if ok else 'FAIL'}")
            return EXIT_OK if ok else EXIT_FAILED
    return EXIT_OK


def cmd_verify(args):
    if args.trials < 0 or args.nmax < 2:
        raise DomainError("need --trials >= 0 and --nmax >= 2")
    report = run_suite(args.trials, args.nmax, args.seed)
    if args.out is not None:
        report.write(args.out)
    failures = report.failures
    print(f"{report.spec_descriptor}: {len(report.checks)} checks, "
          f"{len(failures)} failed, overall {'PASS' if report.overall else 'FAIL'}")
    for c in failures[:20]:
        print(f"  FAIL {c.name}: residual {c.residual:.3e} > tolerance {c.tolerance:.3e}")
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_conjecture(args):
    if args.n_from < 2 or args.n_to < args.n_from:
        raise DomainError(f"need 2 <= n-from <= n-to, got {args.n_from}..{args.n_to}")
    if args.omegas is None:
        omegas = list(FIR_OMEGAS)
    else:
        try:
            omegas = [float(w) for w in args.omegas.split(",") if w.strip()]
        except ValueError:
            raise DomainError(f"--omegas must be comma-separated reals, got {args.omegas!r}")
        if not omegas or not all(math.isfinite(w) for w in omegas):
            raise DomainError("--omegas must list at least one finite value")
    header = ["n", "lam_plus", "lam_minus", "sum", "mults"]
    header += [f"res(w={w:g})" for w in omegas]
    print("  ".join(f"{h:>14}" for h in header))
    all_ok = True
    for n in range(args.n_from, args.n_to + 1):
        lam_plus, lam_minus = fir_closed_form(n)
        expected = np.array([lam_plus] * 2 + [0.0] * (2 * n - 4) + [lam_minus] * 2)
        tol = SPECTRUM_RTOL * abs(lam_plus)
        residuals = []
        mult_ok = True
        for w in omegas:
            spec = build_fir((n, w))
            s = eigs_of_P(spec)
            mult_ok &= (s.mult_plus, s.mult_minus, s.zero_count) == (2, 2, 2 * n - 4)
            residuals.append(spectrum_residual(jacobi_eigs(build_P(spec)).values, expected))
        row_ok = mult_ok and max(residuals) <= tol
        all_ok &= row_ok
        cells = [f"{n:>14d}", f"{lam_plus:>14.10g}", f"{lam_minus:>14.10g}",
                 f"{lam_plus + lam_minus:>14.10g}",
                 f"{'2/2/' + str(2 * n - 4) if mult_ok else 'MISMATCH':>14}"]
        cells += [f"{r:>14.3e}" for r in residuals]
        print("  ".join(cells))
    print(f"tolerance: {SPECTRUM_RTOL:g} * lam_plus; overall {'PASS' if all_ok else 'FAIL'}")
    return EXIT_OK if all_ok else EXIT_FAILED


def build_parser():
    parser = _Parser(prog="trigeig",
                     description="Generalized trigonometric matrices and their spectra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write one of the matrices as CSV")
    _add_spec_args(p)
    p.add_argument("--which", choices=("P", "Phat", "L", "A", "B"), default="P")
    p.add_argument("--out", metavar="PATH", help="output CSV (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eig", help="closed-form and/or oracle eigenvalues of P")
    _add_spec_args(p)
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="both")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", help="JSON report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="tabulate the FIR closed form against the oracle")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--omegas", help="comma-separated frequencies")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DimensionError, DomainError) as exc:
        print(f"trigeig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"trigeig: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except OSError as exc:
        print(f"trigeig: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
