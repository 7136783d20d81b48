"""Command-line front end: ``qzeros {gen,zeros,moments,dist,cdf,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

import numpy as np

from qzeros import dist, moments, polyfam, svg, verify, zeros
from qzeros.arith import NAMES, SQUARE, ONE, parse_arith

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_COEFFS = 2_000_000


class UsageError(Exception):
    pass


def fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    if v is None:
        return ""
    return str(v)


def _jsonable(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.17g}")
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def render(fmt_name: str, header: list[str], rows: list[list], footer: dict | None = None, meta: dict | None = None) -> str:
    """CSV with optional ``# key,value`` footer lines, or the same content as JSON."""
    footer = footer or {}
    if fmt_name == "json":
        doc = dict(meta or {})
        doc["rows"] = [{k: _jsonable(v) for k, v in zip(header, r)} for r in rows]
        doc.update({k: _jsonable(v) for k, v in footer.items()})
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) for v in r])
    for k, v in footer.items():
        buf.write(f"# {k},{fmt(v)}\n")
    return buf.getvalue()


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def cmd_gen(args) -> tuple[str, int]:
    _require(args.format != "svg", "svg output is only available for dist and cdf")
    _require(args.n >= 0, "--n must be >= 0")
    try:
        g = parse_arith(args.g, args.k)
        h = parse_arith(args.h)
        spec = polyfam.FamilySpec(g, h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    budget = (args.n + 1) * (args.n + 2) // 2
    if budget > args.max_coeffs:
        raise UsageError(
            f"resource budget exceeded: generating P_0..P_{args.n} stores {budget} coefficients "
            f"(--max-coeffs {args.max_coeffs})"
        )
    p = polyfam.volterra_poly(spec, args.n)
    rows = []
    for k in range(args.n + 1):
        c = Fraction(p[k])
        rows.append([k, c.numerator, c.denominator])
    footer = {}
    if g == SQUARE and h == ONE and args.n >= 1:
        footer["four_term_check"] = polyfam.four_term_poly(args.n) == p
    meta = {"g": g.name, "h": h.name, "n": args.n}
    return render(args.format, ["k", "numerator", "denominator"], rows, footer, meta), EXIT_OK


def cmd_zeros(args) -> tuple[str, int]:
    _require(args.format != "svg", "svg output is only available for dist and cdf")
    _require(args.n >= 1, "--n must be >= 1")
    if args.method in ("sturm", "both"):
        _require(args.n <= zeros.EXACT_MAX_N, f"--method {args.method} needs n <= {zeros.EXACT_MAX_N}")

    def orient(a):
        return -a[::-1] if args.negate else a

    meta = {"n": args.n, "method": args.method, "polynomial": "Q_n(x)" if args.negate else "Q_n(-x)"}
    footer = {}
    if args.method == "angle":
        zs = zeros.zeros_angle(args.n)
        res = zs.residuals[::-1] if args.negate else zs.residuals
        rows = [[k + 1, z, r] for k, (z, r) in enumerate(zip(orient(zs.zeros), res))]
        header = ["k", "zero", "residual"]
    elif args.method == "sturm":
        zs = zeros.zeros_exact(args.n)
        rows = [[k + 1, z] for k, z in enumerate(orient(zs.zeros))]
        header = ["k", "zero"]
    else:
        a = orient(zeros.zeros_angle(args.n).zeros)
        b = orient(zeros.zeros_exact(args.n).zeros)
        diff = np.abs(a - b)
        rows = [[k + 1, x, y, d] for k, (x, y, d) in enumerate(zip(a, b, diff))]
        header = ["k", "angle", "sturm", "abs_diff"]
        footer["max_discrepancy"] = float(diff.max())
    return render(args.format, header, rows, footer, meta), EXIT_OK


def cmd_moments(args) -> tuple[str, int]:
    _require(args.format != "svg", "svg output is only available for dist and cdf")
    _require(args.max_m >= 1, "--max-m must be >= 1")
    zs = None
    if args.empirical_n is not None:
        _require(args.empirical_n >= 1, "--empirical-n must be >= 1")
        zs = zeros.zeros_angle(args.empirical_n)
    table = moments.moment_table(args.max_m, zs)
    header = ["m", "closed", "sum", "series", "closed_eq_sum", "closed_eq_series"]
    if zs is not None:
        header += ["empirical", "empirical_n"]
    rows = []
    for r in table:
        row = [r.m, r.closed, r.sum, r.series, r.closed == r.sum, r.closed == r.series]
        if zs is not None:
            row += [r.empirical, r.empirical_n]
        rows.append(row)
    footer = {"all_agree": all(r.agree for r in table)}
    return render(args.format, header, rows, footer, {"max_m": args.max_m}), EXIT_OK


def cmd_dist(args) -> tuple[str, int]:
    _require(args.n >= 1, "--n must be >= 1")
    _require(args.bins >= 1, "--bins must be >= 1")
    zs = zeros.zeros_angle(args.n)
    hist = dist.histogram(zs, args.bins)
    ks = dist.ks_statistic(zs)
    centers = hist.centers
    v = [dist.density_v(float(c)) for c in centers]
    F = dist.cdf_F(centers)
    if args.format == "svg":
        xs = dist.UPPER * np.arange(1, 400) / 400.0
        return (
            svg.histogram_svg(
                hist.edges,
                hist.normalized,
                xs,
                [dist.density_v(float(x)) for x in xs],
                f"zeros of Q_{args.n}(-x), {args.bins} bins, KS = {ks:.3g}",
            ),
            EXIT_OK,
        )
    rows = [
        [c, int(n), h, vc, m, f]
        for c, n, h, vc, m, f in zip(centers, hist.counts, hist.normalized, v, hist.limit_heights(), F)
    ]
    header = ["center", "count", "normalized", "v_center", "v_bin_average", "F_center"]
    footer = {"ks": ks, "n": args.n, "bins": args.bins}
    return render(args.format, header, rows, footer, {"n": args.n, "bins": args.bins}), EXIT_OK


def cmd_cdf(args) -> tuple[str, int]:
    _require(args.points >= 2, "--points must be >= 2")
    xs = dist.UPPER * np.arange(args.points + 1) / args.points
    xs[-1] = dist.UPPER
    fs = dist.cdf_F(xs)
    if args.format == "svg":
        return svg.cdf_svg(xs, fs, "cumulative distribution F"), EXIT_OK
    rows = []
    for x, f in zip(xs, fs):
        v = dist.density_v(float(x)) if 0.0 < x < dist.UPPER else None
        rows.append([x, f, v])
    return render(args.format, ["x", "F", "v"], rows, None, {"points": args.points}), EXIT_OK


def _color(ok: bool, stream) -> str:
    word = "PASS" if ok else "FAIL"
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return word
    return f"\033[{32 if ok else 31}m{word}\033[0m"


def cmd_verify(args, stream) -> tuple[str, int]:
    checks = verify.run_suite(args.suite)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        text = json.dumps({"suite": args.suite, "passed": ok, "checks": [c.as_dict() for c in checks]}, indent=2) + "\n"
    else:
        lines = [f"{_color(c.passed, stream)} [{c.suite}] {c.name}: {c.detail} ({c.seconds:.2f}s)" for c in checks]
        failed = [c.name for c in checks if not c.passed]
        lines.append(f"{'all checks passed' if ok else 'FAILED: ' + '; '.join(failed)}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qzeros", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("csv", "json")):
        p.add_argument("--format", choices=formats, default="csv")
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    p = sub.add_parser("gen", help="coefficients of P_n^{g,h}")
    p.add_argument("--g", required=True, choices=NAMES)
    p.add_argument("--h", default="one", choices=("one", "id"))
    p.add_argument("--k", type=int, help="parameter of sigma_k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-coeffs", type=int, default=DEFAULT_MAX_COEFFS)
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("zeros", help="zeros of Q_n(-x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("angle", "sturm", "both"), default="angle")
    p.add_argument("--negate", action="store_true", help="report zeros of Q_n(x) instead")
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("moments", help="limit moments L_m by three routes")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--empirical-n", type=int)
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("dist", help="histogram of zeros against the limit density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bins", type=int, default=100)
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("cdf", help="limit CDF F on a grid")
    p.add_argument("--points", type=int, default=200)
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("verify", help="run self-checks")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_stream = sys.stdout
    handlers = {
        "gen": cmd_gen,
        "zeros": cmd_zeros,
        "moments": cmd_moments,
        "dist": cmd_dist,
        "cdf": cmd_cdf,
    }
    try:
        if args.command == "verify":
            text, code = cmd_verify(args, out_stream if args.out is None else io.StringIO())
        else:
            text, code = handlers[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qzeros {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out_stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
