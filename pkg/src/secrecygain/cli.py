"""Command line front end.

Exit codes: 0 confirmed (strict), 3 confirmed with ties, 2 refuted, 1 error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from mpmath import mp, mpf, nstr

from . import theta_numeric as tn
from .catalog import catalog_entry, catalog_names, format_factored
from .lattice import EnumerationBudgetError, GramMatrix, LatticeError, enumerate_counts, validate_unimodular
from .poly import PolyQ, format_poly, format_rational
from .qseries import (
    BasisCoeffsEven,
    BasisCoeffsGeneral,
    InsufficientDataError,
    SeriesMismatchError,
    extremal_b_coeffs,
    fit_a_basis,
    fit_b_basis,
)
from .secrecy import InvalidProfileError, denom_from_ar, denom_from_bj, gain_at_one, log_grid, profile_curve
from .verifier import Status, verify_min_at_quarter

EXIT_CODES = {
    Status.CONFIRMED_STRICT: 0,
    Status.CONFIRMED_WITH_TIES: 3,
    Status.REFUTED: 2,
}
KINDS = ("gram", "ar", "bj", "extremal")


class DescriptorError(ValueError):
    pass


def default_precision() -> float:
    raw = os.environ.get("SECRECY_PRECISION")
    if not raw:
        return 1e-12
    try:
        value = float(raw)
    except ValueError:
        raise DescriptorError(f"SECRECY_PRECISION={raw!r} is not a number") from None
    if not value > 0:
        raise DescriptorError("SECRECY_PRECISION must be positive")
    return value


def _rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DescriptorError(f"coefficients must be integers or 'p/q' strings, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise DescriptorError(f"bad rational {x!r}") from None


def load_descriptor(path: str) -> dict:
    try:
        with open(path) as fh:
            desc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}: malformed JSON ({exc})") from None
    if not isinstance(desc, dict):
        raise DescriptorError("descriptor must be a JSON object")
    kind = desc.get("kind")
    if kind not in KINDS:
        raise DescriptorError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    dim = desc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DescriptorError(f"dim must be a positive integer, got {dim!r}")
    desc.setdefault("name", os.path.basename(path))
    data = desc.get("data")
    if kind == "gram":
        if not isinstance(data, list) or len(data) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in data
        ):
            raise DescriptorError(f"gram data must be a {dim}x{dim} matrix")
    elif kind == "ar":
        if not isinstance(data, list) or len(data) != dim // 8 + 1:
            raise DescriptorError(f"ar data must list a_0..a_{dim // 8} ({dim // 8 + 1} values)")
        desc["data"] = [_rational(x) for x in data]
    elif kind == "bj":
        if dim % 8:
            raise DescriptorError("bj descriptors need a dimension divisible by 8")
        if not isinstance(data, list) or len(data) != dim // 24:
            raise DescriptorError(f"bj data must list b_1..b_{dim // 24} ({dim // 24} values)")
        desc["data"] = [_rational(x) for x in data]
    elif kind == "extremal":
        if dim % 8:
            raise DescriptorError("extremal lattices need a dimension divisible by 8")
    return desc


def _theta_series(desc: dict, cut: int) -> list:
    """N_0..N_cut for the descriptor (exact rationals for coefficient descriptors)."""
    n, kind, data = desc["dim"], desc["kind"], desc.get("data")
    if kind == "gram":
        return list(enumerate_counts(GramMatrix(data), cut).counts)
    if kind == "ar":
        return list(BasisCoeffsGeneral(n, data).expand(cut + 1).coeffs)
    if kind == "bj":
        return list(BasisCoeffsEven(n, data).expand(cut + 1).coeffs)
    return list(extremal_b_coeffs(n).expand(cut + 1).coeffs)


def denominator(desc: dict) -> PolyQ:
    n, kind, data = desc["dim"], desc["kind"], desc.get("data")
    if kind == "ar":
        return denom_from_ar(BasisCoeffsGeneral(n, data))
    if kind == "bj":
        return denom_from_bj(BasisCoeffsEven(n, data))
    if kind == "extremal":
        return denom_from_bj(extremal_b_coeffs(n))
    g = GramMatrix(data)
    validate_unimodular(g)
    cut = desc.get("max_norm", n // 8 + 1)
    counts = enumerate_counts(g, cut)
    return denom_from_ar(fit_a_basis(counts, n))


def _decimal(x: Fraction, digits: int) -> str:
    with mp.workdps(digits + 10):
        return nstr(mpf(x.numerator) / x.denominator, digits)


def cmd_verify(args) -> int:
    desc = load_descriptor(args.descriptor)
    verdict = verify_min_at_quarter(denominator(desc))
    sys.stdout.write(f"name: {desc['name']}\ndim: {desc['dim']}\n")
    sys.stdout.write(verdict.certificate)
    return EXIT_CODES[verdict.status]


def cmd_gain(args) -> int:
    desc = load_descriptor(args.descriptor)
    g = gain_at_one(denominator(desc))
    print(f"gain: {format_rational(g)}")
    print(f"decimal: {_decimal(g, args.digits)}")
    return 0


def cmd_scan(args) -> int:
    desc = load_descriptor(args.descriptor)
    if not (args.y0 > 0 and args.y1 > 0):
        raise DescriptorError("scan range must be positive")
    D = denominator(desc)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["y", "z", "xi"])
    fmt = f"{{:.{args.digits}g}}"
    for y, z, xi in profile_curve(D, log_grid(args.y0, args.y1, args.steps), default_precision()):
        writer.writerow([fmt.format(y), fmt.format(z), fmt.format(xi)])
    return 0


def cmd_fit(args) -> int:
    desc = load_descriptor(args.descriptor)
    n = desc["dim"]
    if args.basis == "ar":
        coeffs = fit_a_basis(_theta_series(desc, n // 8 + 1), n).a
        label = "a"
        start = 0
    else:
        if n % 8:
            raise DescriptorError("the bj basis needs a dimension divisible by 8")
        coeffs = fit_b_basis(_theta_series(desc, max(2 * (n // 24), 1) + 1), n).b
        label = "b"
        start = 1
    print(f"basis: {args.basis}")
    for i, c in enumerate(coeffs, start):
        print(f"{label}_{i}: {format_rational(c)}")
    return 0


def _inverse(expr: str) -> str:
    if expr.startswith("(") and expr.endswith(")") and expr.count("(") == 1:
        return f"{expr}^-1"
    return f"({expr})^-1"


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_names():
            e = catalog_entry(name)
            shown = format_factored(e.factored) if e.factored else format_poly(e.expected_D)
            print(f"{e.name}\t{e.n}\t{e.source}\tXi = {_inverse(shown)}")
        return 0
    if not args.key:
        raise DescriptorError("catalog show needs a dimension or entry name")
    e = catalog_entry(args.key)
    print(f"name: {e.name}")
    print(f"dim: {e.n}")
    print(f"source: {e.source}")
    if e.factored:
        print(f"xi: {_inverse(format_factored(e.factored))}")
    print(f"denominator: {format_poly(e.expected_D)}")
    print(f"gain: {format_rational(gain_at_one(e.expected_D))}")
    if args.json:
        print(json.dumps(e.descriptor()))
    return 0


def cmd_identities(args) -> int:
    res = tn.transform_residuals(args.y, default_precision())
    print(f"y: {args.y}")
    print(f"theta2(i/y) - sqrt(y) theta4(yi): {res.theta2_to_theta4:.3e}")
    print(f"theta3(i/y) - sqrt(y) theta3(yi): {res.theta3_to_theta3:.3e}")
    print(f"theta4(i/y) - sqrt(y) theta2(yi): {res.theta4_to_theta2:.3e}")
    print(f"jacobi (theta2^4 + theta4^4 - theta3^4) / theta3^4: {res.jacobi:.3e}")
    print(f"max: {res.max:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secrecygain", description="Secrecy functions of unimodular lattices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="decide whether Xi is maximal at y = 1")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gain", help="secrecy function at y = 1")
    p.add_argument("descriptor")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_gain)

    p = sub.add_parser("scan", help="CSV of (y, z, xi) on a log-spaced grid")
    p.add_argument("descriptor")
    p.add_argument("--from", dest="y0", type=float, default=0.25)
    p.add_argument("--to", dest="y1", type=float, default=4.0)
    p.add_argument("--steps", type=int, default=97)
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fit", help="basis coefficients of the theta series")
    p.add_argument("descriptor")
    p.add_argument("--basis", choices=("ar", "bj"), default="ar")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("catalog", help="reference lattices")
    p.add_argument("action", choices=("list", "show"), nargs="?", default="list")
    p.add_argument("key", nargs="?")
    p.add_argument("--json", action="store_true", help="also print the JSON descriptor")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("identities", help="residuals of the theta transformation identities")
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        OSError,
        KeyError,
        DescriptorError,
        LatticeError,
        EnumerationBudgetError,
        InsufficientDataError,
        SeriesMismatchError,
        InvalidProfileError,
        tn.DomainError,
        ValueError,
    ) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
