"""Oracle evaluations of the cover algorithm as n grows.

Covers random G(n, p) graphs and reports evaluation counts, the ratio to
n^4, wall time, and a least-squares slope of log(evaluations) on log(n).

    python3 scripts/cover_budget.py --sizes 8 16 32 64 --reps 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from mlscover.cover import evaluation_budget, graph_cover
from mlscover.families import random_graph


@dataclass(frozen=True)
class BudgetConfig:
    sizes: tuple[int, ...] = (8, 16, 32, 64)
    reps: int = 3
    edge_probability: float = 0.5
    seed: int = 0


@dataclass
class BudgetRow:
    n: int
    evaluations: list[int] = field(default_factory=list)
    seconds: list[float] = field(default_factory=list)


def run(cfg: BudgetConfig) -> list[BudgetRow]:
    rows = []
    for n in cfg.sizes:
        row = BudgetRow(n)
        for r in range(cfg.reps):
            g = random_graph(n, cfg.edge_probability, cfg.seed + r)
            start = time.perf_counter()
            cover = graph_cover(g)
            row.seconds.append(time.perf_counter() - start)
            row.evaluations.append(cover.evaluations)
            if cover.evaluations > evaluation_budget(n):
                raise SystemExit(f"budget exceeded at n={n}: {cover.evaluations}")
        rows.append(row)
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=list(BudgetConfig.sizes))
    p.add_argument("--reps", type=int, default=BudgetConfig.reps)
    p.add_argument("-p", "--edge-probability", type=float, default=BudgetConfig.edge_probability)
    p.add_argument("--seed", type=int, default=BudgetConfig.seed)
    args = p.parse_args(argv)
    cfg = BudgetConfig(tuple(args.sizes), args.reps, args.edge_probability, args.seed)
    rows = run(cfg)
    print(f"{'n':>4} {'mean evals':>11} {'evals/n^4':>10} {'budget':>12} {'mean s':>8}")
    for row in rows:
        ev = np.mean(row.evaluations)
        print(f"{row.n:>4} {ev:>11.0f} {ev / row.n**4:>10.4f} {evaluation_budget(row.n):>12} "
              f"{np.mean(row.seconds):>8.3f}")
    if len(rows) >= 2:
        x = np.log([r.n for r in rows])
        y = np.log([np.mean(r.evaluations) for r in rows])
        print(f"log-log slope: {np.polyfit(x, y, 1)[0]:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
