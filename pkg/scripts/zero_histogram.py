"""Histogram of the zeros of Q_n(-x) against the limit density, and the CDF plot.

    python3 scripts/zero_histogram.py --n 1000 --bins 100 --outdir figures
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from qzeros import dist, svg, zeros


@dataclass(frozen=True)
class FigureConfig:
    n: int = 1000
    bins: int = 100
    curve_points: int = 400
    outdir: Path = Path("figures")


def run(cfg: FigureConfig) -> dict:
    zs = zeros.zeros_angle(cfg.n)
    hist = dist.histogram(zs, cfg.bins)
    ks = dist.ks_statistic(zs)
    xs = dist.UPPER * np.arange(1, cfg.curve_points) / cfg.curve_points
    vs = [dist.density_v(float(x)) for x in xs]

    cfg.outdir.mkdir(parents=True, exist_ok=True)
    title = f"zeros of Q_{cfg.n}(-x), {cfg.bins} bins, KS = {ks:.3g}"
    (cfg.outdir / f"histogram_n{cfg.n}.svg").write_text(svg.histogram_svg(hist.edges, hist.normalized, xs, vs, title))

    grid = np.linspace(0.0, dist.UPPER, cfg.curve_points + 1)
    (cfg.outdir / "cdf.svg").write_text(svg.cdf_svg(grid, dist.cdf_F(grid), "cumulative distribution F"))

    dev = np.abs(hist.normalized - hist.limit_heights())
    return {"ks": ks, "max_bin_deviation": float(dev.max()), "worst_bin_center": float(hist.centers[np.argmax(dev)])}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=FigureConfig.n)
    ap.add_argument("--bins", type=int, default=FigureConfig.bins)
    ap.add_argument("--outdir", type=Path, default=FigureConfig.outdir)
    args = ap.parse_args()
    stats = run(FigureConfig(n=args.n, bins=args.bins, outdir=args.outdir))
    for k, v in stats.items():
        print(f"{k:24s} {v:.6g}")
    print(f"wrote {args.outdir}/histogram_n{args.n}.svg and {args.outdir}/cdf.svg")


if __name__ == "__main__":
    main()
