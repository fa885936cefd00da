"""Exhaustive sweep over every labeled graph of a given order.

For each graph: compute the cover, check every set against the brute-force
MLS family, and tally MLS sizes and generator counts.

    python3 scripts/sweep_all_graphs.py --n 6
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from mlscover.config import DEFAULT_LIMITS
from mlscover.cover import graph_cover
from mlscover.graph import universe
from mlscover.local_sets import enumerate_minimal_local_sets, verify_generator_structure
from mlscover.sweep import all_labeled_graphs


@dataclass(frozen=True)
class SweepConfig:
    n: int = 5


@dataclass
class SweepResult:
    graphs: int = 0
    failures: int = 0
    structure_violations: int = 0
    sizes: Counter = None
    generators: Counter = None
    cover_sizes: Counter = None
    seconds: float = 0.0


def run(cfg: SweepConfig) -> SweepResult:
    res = SweepResult(sizes=Counter(), generators=Counter(), cover_sizes=Counter())
    start = time.perf_counter()
    for g in all_labeled_graphs(cfg.n):
        recs = enumerate_minimal_local_sets(g)
        fam = {r.vertices for r in recs}
        cover = graph_cover(g)
        res.graphs += 1
        if cover.covered != universe(g.n) or any(s not in fam for s in cover.sets):
            res.failures += 1
        res.cover_sizes[len(cover.sets)] += 1
        for r in recs:
            res.sizes[r.size] += 1
            res.generators[len(r.generators)] += 1
            res.structure_violations += not verify_generator_structure(r)
    res.seconds = time.perf_counter() - start
    return res


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=SweepConfig.n)
    args = p.parse_args(argv)
    if not 1 <= args.n <= DEFAULT_LIMITS.sweep_max_n:
        p.error(f"n must lie in [1, {DEFAULT_LIMITS.sweep_max_n}]")
    res = run(SweepConfig(args.n))
    print(f"n={args.n}: {res.graphs} graphs in {res.seconds:.1f}s")
    print(f"cover failures: {res.failures}")
    print(f"generator-structure violations: {res.structure_violations}")
    print("MLS sizes:      " + ", ".join(f"{k}:{v}" for k, v in sorted(res.sizes.items())))
    print("generator counts: " + ", ".join(f"{k}:{v}" for k, v in sorted(res.generators.items())))
    print("cover sizes:    " + ", ".join(f"{k}:{v}" for k, v in sorted(res.cover_sizes.items())))
    return 1 if res.failures or res.structure_violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
