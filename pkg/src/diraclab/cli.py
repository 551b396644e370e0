"""Batch command-line front end.

Subcommands: verify (check report), dispersion (branch/limit energy sweep
CSV), evolve (trajectory CSV), limit (non-relativistic error table CSV),
decompose (basis coefficients of a matrix file).  Runs are fully determined
by the command line plus the seed; no environment variables or config
files.  Exit status: 0 success, 1 check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .clifford import basis_decompose, basis_labels
from .evolution import init_gaussian, trajectory, write_trajectory_csv
from .invariance import GeneralizedParams
from .nonrel import (
    NonRelParams,
    kinetic_minus_rest,
    nonrel_abs_error,
    nonrel_error,
    pauli_energy,
)
from .operators import dispersion
from .verify import format_report, report_header, run_verification

__all__ = ["main", "build_parser", "parse_matrix_file", "write_matrix_file"]


def parse_matrix_file(path: str) -> np.ndarray:
    """Read a 4x4 complex matrix: 4 lines of 8 floats (re im pairs).

    Raises ValueError with a line/column diagnostic on malformed input.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    lines = [(i + 1, line) for i, line in enumerate(raw) if line.strip()]
    if len(lines) != 4:
        raise ValueError(f"{path}: expected 4 data lines, found {len(lines)}")
    out = np.zeros((4, 4), dtype=np.complex128)
    for row, (lineno, line) in enumerate(lines):
        fields = line.split()
        if len(fields) != 8:
            raise ValueError(
                f"{path}: line {lineno}: expected 8 values, found {len(fields)}"
            )
        for col, token in enumerate(fields):
            try:
                value = float(token)
            except ValueError:
                raise ValueError(
                    f"{path}: line {lineno}, field {col + 1}: "
                    f"could not parse {token!r} as a number"
                ) from None
            if col % 2 == 0:
                out[row, col // 2] += value
            else:
                out[row, col // 2] += 1j * value
    return out


def write_matrix_file(path: str, m: np.ndarray) -> None:
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    with open(path, "w", encoding="utf-8") as fh:
        for row in range(4):
            parts = []
            for col in range(4):
                parts.append(f"{m[row, col].real:.17g}")
                parts.append(f"{m[row, col].imag:.17g}")
            fh.write(" ".join(parts) + "\n")


def _fmt_complex(z: complex) -> str:
    re = f"{z.real:.12g}"
    im = f"{abs(z.imag):.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


def _open_output(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diraclab",
        description=__doc__.splitlines()[0] if __doc__ else None,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="run the seeded verification suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("dispersion", help="energy branches over a momentum sweep")
    p.add_argument("--m0", type=float, required=True)
    p.add_argument("--eps-tilde", type=float, default=0.0)
    p.add_argument("--p-tilde", type=float, default=0.0)
    p.add_argument("--k-min", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--c-light", type=float, default=1.0)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("evolve", help="spectral wavepacket trajectory")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--k0", type=float, required=True)
    p.add_argument("--width", type=float, required=True)
    p.add_argument("--m0", type=float, required=True)
    p.add_argument("--eps-tilde", type=float, default=0.0)
    p.add_argument("--p-tilde", type=float, default=0.0)
    p.add_argument("--sample-every", type=int, default=1)
    p.add_argument("--x0", type=float, default=None)
    p.add_argument("--branch", type=int, choices=(1, -1), default=1)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("limit", help="non-relativistic limit error table")
    p.add_argument("--m0", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--c-light", type=float, default=1.0)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("decompose", help="basis coefficients of a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("-o", "--output", default=None)

    return parser


def _cmd_verify(args) -> int:
    results = run_verification(trials=args.trials, seed=args.seed, tol=args.tol)
    sys.stdout.write(
        format_report(results, header=report_header(args.trials, args.seed))
    )
    return 0 if all(r.passed for r in results) else 1


def _cmd_dispersion(args) -> int:
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    params = GeneralizedParams.from_physical(
        args.m0, args.eps_tilde, (0.0, 0.0, args.p_tilde)
    )
    nr = NonRelParams(
        m0=args.m0,
        eps_tilde=args.eps_tilde,
        c_tilde=(0.0, 0.0, args.p_tilde),
        c_light=args.c_light,
    )
    stream, close = _open_output(args.output)
    try:
        stream.write("k,eps_plus,eps_minus,eps_pauli,eps_ll\n")
        for k in np.linspace(args.k_min, args.k_max, args.steps):
            if args.c_light == 1.0:
                plus = dispersion(float(k), params, +1)
                minus = dispersion(float(k), params, -1)
            else:
                w = kinetic_minus_rest(float(k), nr) + args.m0 * args.c_light ** 2
                plus = w - args.eps_tilde
                minus = -w - args.eps_tilde
            pauli = pauli_energy(float(k), nr)
            row = (float(k), plus, minus, pauli, pauli)
            stream.write(",".join(repr(float(v)) for v in row) + "\n")
    finally:
        if close:
            stream.close()
    return 0


def _cmd_evolve(args) -> int:
    params = GeneralizedParams.from_physical(
        args.m0, args.eps_tilde, (0.0, 0.0, args.p_tilde)
    )
    x0 = args.x0 if args.x0 is not None else args.length / 2.0
    packet = init_gaussian(
        args.n, args.length, x0, args.k0, args.width, branch=args.branch, params=params
    )
    result = trajectory(
        packet, params, args.dt, args.steps, sample_every=args.sample_every
    )
    stream, close = _open_output(args.output)
    try:
        write_trajectory_csv(stream, result)
    finally:
        if close:
            stream.close()
    return 0


def _cmd_limit(args) -> int:
    if args.points < 2:
        raise ValueError("--points must be at least 2")
    if args.k_max <= 0:
        raise ValueError("--k-max must be positive")
    nr = NonRelParams(m0=args.m0, c_light=args.c_light)
    ks = np.geomspace(args.k_max * 1e-3, args.k_max, args.points)
    stream, close = _open_output(args.output)
    try:
        stream.write("k,dirac_kinetic,pauli_kinetic,abs_error,rel_error\n")
        for k in ks:
            kin = kinetic_minus_rest(float(k), nr)
            pauli = pauli_energy(float(k), nr)
            err = nonrel_error(float(k), nr)
            rel = err.value if err.relative else float("nan")
            row = (float(k), kin, pauli, nonrel_abs_error(float(k), nr), rel)
            stream.write(",".join(repr(float(v)) for v in row) + "\n")
    finally:
        if close:
            stream.close()
    return 0


def _cmd_decompose(args) -> int:
    m = parse_matrix_file(args.input)
    coeffs = basis_decompose(m)
    vec = coeffs.as_vector()
    stream, close = _open_output(args.output)
    try:
        for label, value in zip(basis_labels(), vec):
            stream.write(f"{label}={_fmt_complex(complex(value))}\n")
    finally:
        if close:
            stream.close()
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "dispersion": _cmd_dispersion,
    "evolve": _cmd_evolve,
    "limit": _cmd_limit,
    "decompose": _cmd_decompose,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.subcommand](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
