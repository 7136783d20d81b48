"""Runtime and accuracy of the angle-equation zero finder as n grows.

Compares with the exact Sturm isolation where that is feasible (n <= 60).

    python3 scripts/angle_timing.py --ns 10 60 1000 10000 100000
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

import numpy as np

from qzeros import zeros


@dataclass(frozen=True)
class TimingConfig:
    ns: tuple[int, ...] = (10, 60, 1000, 10_000, 100_000)
    repeats: int = 3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", type=int, nargs="+", default=list(TimingConfig.ns))
    ap.add_argument("--repeats", type=int, default=TimingConfig.repeats)
    args = ap.parse_args()
    cfg = TimingConfig(ns=tuple(args.ns), repeats=args.repeats)

    print(f"{'n':>8s} {'seconds':>10s} {'max_resid':>10s} {'6sqrt3-max':>11s} {'vs_sturm':>10s}")
    for n in cfg.ns:
        best = float("inf")
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            zs = zeros.zeros_angle(n)
            best = min(best, time.perf_counter() - t0)
        gap = zeros.UPPER - float(zs.zeros[-1])
        exact = ""
        if n <= zeros.EXACT_MAX_N:
            exact = f"{np.max(np.abs(zs.zeros - zeros.zeros_exact(n).zeros)):10.2e}"
        print(f"{n:>8d} {best:10.4f} {zs.residuals.max():10.2e} {gap:11.3e} {exact:>10s}")


if __name__ == "__main__":
    main()
