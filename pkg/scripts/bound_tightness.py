"""Largest MLS size: the tight construction against random graphs.

Prints, per order n, the size bound, the witness size of the tight
construction, and the largest MLS seen over random graphs.

    python3 scripts/bound_tightness.py --max-n 12 --samples 200
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from mlscover.families import bound_tight, random_graph
from mlscover.local_sets import is_minimal_local_set, max_mls_size_bound, mls_family
from mlscover.rank import CutRankOracle


@dataclass(frozen=True)
class TightnessConfig:
    min_n: int = 1
    max_n: int = 12
    samples: int = 200
    seed: int = 0


def run(cfg: TightnessConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        g, w = bound_tight(n)
        ok = is_minimal_local_set(CutRankOracle(g), w)
        seen = 0
        for _ in range(cfg.samples):
            h = random_graph(n, rng.random(), rng.randrange(2**32))
            seen = max(seen, max(s.bit_count() for s in mls_family(h)))
        rows.append((n, max_mls_size_bound(n), w.bit_count() if ok else None, seen))
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-n", type=int, default=TightnessConfig.min_n)
    p.add_argument("--max-n", type=int, default=TightnessConfig.max_n)
    p.add_argument("--samples", type=int, default=TightnessConfig.samples)
    p.add_argument("--seed", type=int, default=TightnessConfig.seed)
    args = p.parse_args(argv)
    if args.max_n > 20:
        p.error("random sampling enumerates all subsets; keep max-n <= 20")
    cfg = TightnessConfig(args.min_n, args.max_n, args.samples, args.seed)
    print(f"{'n':>3} {'bound':>5} {'witness':>7} {'random max':>10}")
    bad = 0
    for n, bound, w, seen in run(cfg):
        print(f"{n:>3} {bound:>5} {str(w):>7} {seen:>10}")
        bad += w != bound or seen > bound
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
