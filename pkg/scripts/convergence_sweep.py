"""Convergence of the zero distribution of Q_n(-x) toward the limit law.

For each n prints the KS distance to F, relative errors of the first
empirical moments against L_m, the covering radius of the zeros in
[0, 6 sqrt 3], and the distance from selected targets to the nearest zero.

    python3 scripts/convergence_sweep.py --ns 50 100 200 300 800 1000 3200
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

import numpy as np

from qzeros import dist, moments, zeros


@dataclass(frozen=True)
class SweepConfig:
    ns: tuple[int, ...] = (50, 100, 200, 300, 800, 1000, 3200)
    max_moment: int = 6
    targets: tuple[float, ...] = field(default=(0.5, 3.0, 5.0, 8.0, 10.0))


def covering_radius(z: np.ndarray) -> float:
    """Largest distance from a point of [0, 6 sqrt 3] to the nearest zero."""
    return float(max(np.max(np.diff(z), initial=0.0) / 2, zeros.UPPER - z[-1], z[0]))


def sweep(cfg: SweepConfig) -> list[dict]:
    limits = [moments.L_closed(m) for m in range(1, cfg.max_moment + 1)]
    rows = []
    for n in cfg.ns:
        zs = zeros.zeros_angle(n)
        emp = moments.empirical_moments(zs, cfg.max_moment)
        rows.append(
            {
                "n": n,
                "ks": dist.ks_statistic(zs),
                "moment_err": [abs(e - l) / l for e, l in zip(emp, limits)],
                "cover": covering_radius(zs.zeros),
                "dist": [zeros.min_distance_to(zs, t) for t in cfg.targets],
            }
        )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", type=int, nargs="+", default=list(SweepConfig.ns))
    ap.add_argument("--max-moment", type=int, default=SweepConfig.max_moment)
    args = ap.parse_args()
    cfg = SweepConfig(ns=tuple(args.ns), max_moment=args.max_moment)

    head = ["n", "ks", "n*ks", "cover"] + [f"err_m{m}" for m in range(1, cfg.max_moment + 1)]
    head += [f"d(t={t:g})" for t in cfg.targets]
    print(" ".join(f"{h:>10s}" for h in head))
    for r in sweep(cfg):
        vals = [r["ks"], r["n"] * r["ks"], r["cover"], *r["moment_err"], *r["dist"]]
        print(f"{r['n']:>10d} " + " ".join(f"{v:10.3e}" for v in vals))


if __name__ == "__main__":
    main()
