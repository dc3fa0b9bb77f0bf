"""Command-line front door.

Subcommands:

- ``bijection``: apply one of the permutation/path maps to a parsed input.
- ``series``: print one of the generating functions as an exact truncated
  series.  Formula selectors follow the numbering used throughout the
  package documentation; the appendix selectors (A1, A2, A5) take explicit
  per-height weight lists.
- ``census``: exhaustive occurrence histogram over an avoidance class.
- ``verify``: run the self-verification suites.
- ``asymptotics``: exact-vs-estimate table for the avoider counts.

Exit codes: 0 on success, 1 on a domain error (bad input), 2 when a
verification suite reports failures.  Payload goes to stdout and is
byte-identical for identical arguments; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .asymptotics import comparison_table, table_to_csv
from .bijections import phi, phi_inverse, phi_via_minima, psi, psi_inverse
from .orthopoly import (
    PolySystem,
    gf_avoiders_12k,
    gf_avoiders_23k1,
    gf_avoiders_k1k,
    gf_exactly_r_12k,
    gf_exactly_r_23k1,
    gf_exactly_r_k1k,
    strip_gf,
)
from .oracle import census
from .paths import LatticePath
from .permutations import Pattern, Permutation
from .series import (
    TruncatedSeries,
    bivariate_gf_12k,
    bivariate_gf_k1k,
    cf_motzkin,
    cf_peaked_dyck,
)

SCHEMA = "patterngf/1"

_SERIES_NEEDING_R = {"3", "7", "10"}


class _Parser(argparse.ArgumentParser):
    """Argument errors are domain errors: exit 1, reason on stderr."""

    def error(self, message: str):  # noqa: A003 - argparse API
        raise ValueError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="patterngf")
    sub = parser.add_subparsers(dest="command", required=True)

    bij = sub.add_parser("bijection", help="apply a permutation/path map")
    bij.add_argument(
        "--map",
        required=True,
        choices=["phi", "phi-minima", "phi-inv", "psi", "psi-inv", "convert"],
        help="phi/psi: 132-/123-avoider to Dyck path; *-inv: back; "
        "convert: 123-avoider to the 132-avoider with the same path",
    )
    bij.add_argument("--input", required=True, help="permutation or path text")
    bij.add_argument("--json", action="store_true")

    ser = sub.add_parser("series", help="print a generating function")
    ser.add_argument(
        "--theorem",
        required=True,
        choices=["1", "2", "3", "6", "7", "8", "9", "10", "A1", "A2", "A5"],
        help="formula selector: 1/8 bivariate occurrence series "
        "(132/123 family), 2/6/9 avoider series, 3/7/10 exactly-r series, "
        "A1 weighted Motzkin walk series, A2 height-bounded walk series, "
        "A5 peak-weighted Dyck series",
    )
    ser.add_argument("--k", type=int, help="pattern length (selectors 1-10)")
    ser.add_argument("--r", type=int, help="occurrence count (3, 7, 10)")
    ser.add_argument("--order", type=int, required=True)
    ser.add_argument("--y-at", dest="y_at", help="evaluate y (selectors 1, 8)")
    ser.add_argument(
        "--level-weights",
        help="comma list of per-height rationals, height 0 first (A1, A2)",
    )
    ser.add_argument(
        "--down-weights",
        help="comma list of per-height rationals, height 1 first (A1, A2, A5)",
    )
    ser.add_argument(
        "--peak-weights",
        help="comma list of per-height rationals, height 1 first (A5)",
    )
    ser.add_argument("--strip-height", type=int, help="height bound K (A2)")
    ser.add_argument("--from-height", type=int, default=0, help="(A2)")
    ser.add_argument("--to-height", type=int, default=0, help="(A2)")
    ser.add_argument("--json", action="store_true")

    cen = sub.add_parser("census", help="exhaustive occurrence histogram")
    cen.add_argument("--n", type=int, required=True)
    cen.add_argument("--avoid", required=True, help="patterns, comma-separated")
    cen.add_argument("--count", required=True, help="pattern to histogram")
    cen.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run the self-verification suites")
    ver.add_argument(
        "--suite",
        required=True,
        choices=["bijections", "series", "appendix", "asymptotics", "all"],
    )
    ver.add_argument("--max-n", dest="max_n", type=int, default=9)

    asy = sub.add_parser("asymptotics", help="exact vs estimate table")
    asy.add_argument("--k", type=int, required=True)
    asy.add_argument("--r", type=int, required=True)
    asy.add_argument("--n-max", dest="n_max", type=int, required=True)
    asy.add_argument("--json", action="store_true")

    return parser


def _parse_weights(text: str | None, what: str) -> list[Fraction]:
    if not text:
        raise ValueError(f"selector requires --{what}")
    try:
        return [Fraction(tok.strip()) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad --{what}: {exc}") from None


def _weight_at(values: list[Fraction], index: int) -> Fraction:
    return values[index] if index < len(values) else values[-1]


def _series_text(series: TruncatedSeries) -> str:
    if series.is_bivariate():
        lines = []
        for e, c in enumerate(series.coeffs):
            lines.append(f"x^{e}: {c}")
        return "\n".join(lines)
    return ", ".join(str(c) for c in series.coeffs)


def _emit_series(series: TruncatedSeries, as_json: bool) -> None:
    if as_json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "series",
                    "order": series.order,
                    "coefficients": series.coefficient_strings(),
                }
            )
        )
    else:
        print(_series_text(series))


def _run_bijection(args) -> int:
    text = args.input
    if args.map in ("phi", "phi-minima", "psi", "convert"):
        pi = Permutation.parse(text)
        if args.map == "phi":
            out = str(phi(pi))
        elif args.map == "phi-minima":
            out = str(phi_via_minima(pi))
        elif args.map == "psi":
            out = str(psi(pi))
        else:
            from .bijections import convert_123_to_132

            out = str(convert_123_to_132(pi))
    else:
        path = LatticePath.parse(text)
        if args.map == "phi-inv":
            out = str(phi_inverse(path))
        else:
            out = str(psi_inverse(path))
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "bijection",
                    "map": args.map,
                    "input": text,
                    "output": out,
                }
            )
        )
    else:
        print(out)
    return 0


def _require_k(args) -> int:
    if args.k is None:
        raise ValueError("this selector requires --k")
    return args.k


def _run_series(args) -> int:
    order = args.order
    if order < 0:
        raise ValueError("series order must be >= 0")
    t = args.theorem
    if t in _SERIES_NEEDING_R and args.r is None:
        raise ValueError(f"selector {t} requires --r")
    if t == "1" or t == "8":
        k = _require_k(args)
        series = (
            bivariate_gf_12k(k, order) if t == "1" else bivariate_gf_k1k(k, order)
        )
        if args.y_at is not None:
            series = series.evaluate_y(Fraction(args.y_at))
    elif t == "2":
        series = gf_avoiders_12k(_require_k(args), order)
    elif t == "3":
        series = gf_exactly_r_12k(_require_k(args), args.r, order)
    elif t == "6":
        series = gf_avoiders_23k1(_require_k(args), order)
    elif t == "7":
        series = gf_exactly_r_23k1(_require_k(args), args.r, order)
    elif t == "9":
        series = gf_avoiders_k1k(_require_k(args), order)
    elif t == "10":
        series = gf_exactly_r_k1k(_require_k(args), args.r, order)
    elif t == "A1":
        level = _parse_weights(args.level_weights, "level-weights")
        down = _parse_weights(args.down_weights, "down-weights")
        series = cf_motzkin(
            lambda h: TruncatedSeries([0, _weight_at(level, h)], order),
            lambda h: TruncatedSeries([0, 0, _weight_at(down, h - 1)], order),
            order,
        )
    elif t == "A5":
        peak = _parse_weights(args.peak_weights, "peak-weights")
        down = _parse_weights(args.down_weights, "down-weights")
        series = cf_peaked_dyck(
            lambda h: TruncatedSeries([0, _weight_at(peak, h - 1)], order),
            lambda h: TruncatedSeries([0, _weight_at(down, h - 1)], order),
            order,
        )
    else:  # A2
        if args.strip_height is None:
            raise ValueError("selector A2 requires --strip-height")
        level = _parse_weights(args.level_weights, "level-weights")
        down = _parse_weights(args.down_weights, "down-weights")
        sys_ = PolySystem(
            lambda i: _weight_at(level, i),
            lambda i: _weight_at(down, i - 1) if i >= 1 else Fraction(0),
        )
        series = strip_gf(
            sys_, args.strip_height, args.from_height, args.to_height, order
        )
    _emit_series(series, args.json)
    return 0


def _run_census(args) -> int:
    avoid = tuple(
        Pattern.parse(tok.strip()).values for tok in args.avoid.split(",")
    )
    avoid_patterns = tuple(Pattern(v) for v in avoid)
    count_pattern = Pattern(Pattern.parse(args.count).values)
    result = census(args.n, avoid_patterns, count_pattern)
    if args.json:
        payload = json.loads(result.to_json())
        payload = {"schema": SCHEMA, "kind": "census", **payload}
        print(json.dumps(payload))
    else:
        sys.stdout.write(result.to_csv())
    return 0


def _run_verify(args) -> int:
    results = verify_mod.run_suite(args.suite, args.max_n)
    failures = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f": {r.detail}" if r.detail else ""
        print(f"{status} {r.suite}.{r.name}{detail}")
    print(
        f"{len(results) - len(failures)}/{len(results)} checks passed"
    )
    return 2 if failures else 0


def _run_asymptotics(args) -> int:
    if args.k < 2 or args.r < 0 or args.n_max < 0:
        raise ValueError("need --k >= 2, --r >= 0, --n-max >= 0")
    rows = comparison_table(args.k, args.r, args.n_max)
    if args.json:
        import mpmath

        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "asymptotics",
                    "rows": [
                        {
                            "n": n,
                            "exact": exact,
                            "estimate": mpmath.nstr(est, 17),
                            "ratio": mpmath.nstr(ratio, 17),
                        }
                        for n, exact, est, ratio in rows
                    ],
                }
            )
        )
    else:
        sys.stdout.write(table_to_csv(rows))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bijection":
            return _run_bijection(args)
        if args.command == "series":
            return _run_series(args)
        if args.command == "census":
            return _run_census(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_asymptotics(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
