"""``wronsky`` command line: JSON in, JSON out.

Exit codes: 0 success, 2 bad usage or input, 3 singular matrix,
4 failed verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .errors import (
    DimensionError,
    FormatError,
    SingularMatrixError,
    TruncationError,
    VerificationError,
    WronskyError,
)
from .exact import Matrix, MultiPoly, UniPoly
from .maps import bruhat_cell, degree_vector, wronskian_component, wronsky_map
from .reconstruct import LexCoordinates, reconstruct_unitriangular
from .serialize import (
    dumps,
    matrix_from_json,
    matrix_to_json,
    multipoly_to_json,
    poly_to_json,
    rat_from_json,
    rat_to_str,
)
from .suites import DEFAULT_SEED, SUITE_NAMES, verify
from .tau import tau, tau_initial

EXIT_OK, EXIT_USAGE, EXIT_SINGULAR, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _load_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


def _load_matrix(path: str) -> Matrix:
    return matrix_from_json(_load_json(path))


def _degree(f: UniPoly) -> int | None:
    return None if f.is_zero() else int(f.degree)


def _poly_out(f: UniPoly, basis: str, pretty: bool) -> dict:
    out: dict[str, Any] = {"degree": _degree(f)}
    if basis == "factorial":
        out["factorial"] = [rat_to_str(a) for a in f.factorial_coeffs()]
    else:
        out["monomial"] = [rat_to_str(c) for c in f.coeffs]
    if pretty:
        out["pretty"] = f.to_str("x", factorial_basis=True)
    return out


def cmd_wronskian(args) -> dict:
    M = _load_matrix(args.matrix)
    ys = list(wronsky_map(M))
    if M.rows < M.cols:
        # a rectangular block also carries y_n = W(b_1, .., b_n)
        ys.append(wronskian_component(M, M.rows))
    return {
        "n": M.rows,
        "m": M.cols,
        "basis": args.basis,
        "y": [dict(i=i, **_poly_out(y, args.basis, args.pretty)) for i, y in enumerate(ys, start=1)],
    }


def cmd_classify(args) -> dict:
    M = _load_matrix(args.matrix)
    if not M.is_square():
        raise DimensionError(f"classification needs a square matrix, got {M.rows}x{M.cols}")
    return {"degrees": list(degree_vector(M)), "w": list(bruhat_cell(M).images)}


def _restrict(p: MultiPoly, K: int) -> MultiPoly:
    """Set ``t_{K+1}, t_{K+2}, ..`` to zero."""
    kept = {e[:K]: c for e, c in p.terms.items() if not any(e[K:])}
    return MultiPoly(K, kept)


def cmd_tau(args) -> dict:
    M = _load_matrix(args.matrix)
    i = args.rows
    if not 1 <= i <= M.rows:
        raise DimensionError(f"--rows must lie in 1..{M.rows}")
    out: dict[str, Any] = {"n": M.rows, "m": M.cols, "rows": i}
    if args.initial:
        f = tau_initial(M, i)
        out["initial"] = poly_to_json(f)
        if args.pretty:
            out["pretty"] = f.to_str("x")
        return out
    default_K = max(M.cols - 1, 0)
    K = default_K if args.times is None else args.times
    if K < 0:
        raise UsageError("--times must be nonnegative")
    if K < default_K:
        if args.strict:
            raise TruncationError(f"--times {K} is below the exact truncation {default_K}")
        print(f"warning: --times {K} < {default_K}; t_{K + 1}.. are set to zero", file=sys.stderr)
        value = _restrict(tau(M, i).value, K)
    else:
        value = tau(M, i, K).value
    out["tau"] = multipoly_to_json(value)
    if args.pretty:
        out["pretty"] = value.to_str()
    return out


def _load_coords(args) -> LexCoordinates:
    data = _load_json(args.coords)
    n = args.n
    if isinstance(data, dict):
        if "coords" not in data:
            raise FormatError("coordinate file must be a list or an object with 'coords'")
        n = n if n is not None else data.get("n")
        data = data["coords"]
    if not isinstance(data, list):
        raise FormatError("coordinates must be a JSON array")
    values = [rat_from_json(v) for v in data]
    if n is None:
        # infer from n(n-1)/2 = len
        n = 1
        while n * (n - 1) // 2 < len(values):
            n += 1
    if n < 1 or n * (n - 1) // 2 != len(values):
        raise DimensionError(f"n={n} needs {n * (n - 1) // 2} coordinates, got {len(values)}")
    return LexCoordinates(n, tuple(values))


def cmd_reconstruct(args) -> dict:
    return matrix_to_json(reconstruct_unitriangular(_load_coords(args)))


def _seed_default() -> int:
    raw = os.environ.get("WRONSKY_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        seed = int(raw)
    except ValueError as exc:
        raise UsageError(f"WRONSKY_SEED must be an integer, got {raw!r}") from exc
    if not 0 <= seed < 2**64:
        raise UsageError("WRONSKY_SEED must fit in 64 unsigned bits")
    return seed


def cmd_verify(args) -> dict:
    seed = _seed_default() if args.seed is None else args.seed
    if not 0 <= seed < 2**64:
        raise UsageError("--seed must fit in 64 unsigned bits")
    if args.trials is not None and args.trials < 0 or args.nmax is not None and args.nmax < 1:
        raise UsageError("--trials must be >= 0 and --nmax >= 1")
    return verify(args.suite, seed=seed, trials=args.trials, nmax=args.nmax)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wronsky", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent JSON and add readable renderings")
    # --pretty is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wronskian", parents=[common], help="Wronskian map y_1..y_{n-1} of a matrix (plus y_n when n < m)")
    p.add_argument("matrix", help="matrix JSON file, or - for stdin")
    p.add_argument("--basis", choices=("factorial", "monomial"), default="factorial")
    p.set_defaults(func=cmd_wronskian)

    p = sub.add_parser("classify", parents=[common], help="degree vector and Bruhat cell of a square matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tau", parents=[common], help="tau-function of the top row block")
    p.add_argument("matrix")
    p.add_argument("--rows", type=int, required=True, help="number of top rows i")
    p.add_argument("--times", type=int, default=None, help="truncation K (default: columns - 1)")
    p.add_argument("--initial", action="store_true", help="only the value at t = (x, 0, 0, ..)")
    p.add_argument("--strict", action="store_true", help="refuse K below columns - 1")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("reconstruct", parents=[common], help="unitriangular matrix from lexicographic coordinates")
    p.add_argument("coords", help="JSON array of rationals, or {\"n\": .., \"coords\": [..]}")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--trials", type=int, default=None, help="trials per randomized suite")
    p.add_argument("--nmax", type=int, default=None, help="size bound")
    p.add_argument("--seed", type=int, default=None, help=f"default: $WRONSKY_SEED or {DEFAULT_SEED}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except VerificationError as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, WronskyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(dumps(result, pretty=args.pretty) + "\n")
    if args.command == "verify" and not result["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
