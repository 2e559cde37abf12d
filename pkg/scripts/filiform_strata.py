"""Coarse strata of the standard filiform algebras with per-stratum counts.

    python scripts/filiform_strata.py --min 4 --max 8 --height 1
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from coadjoint import catalog
from coadjoint.stratification import DEFAULT_SEED, stratify


@dataclass(frozen=True)
class FiliformConfig:
    m_min: int = 4
    m_max: int = 8
    height: int = 1
    seed: int = DEFAULT_SEED


def run(cfg: FiliformConfig) -> None:
    for m in range(cfg.m_min, cfg.m_max + 1):
        alg = catalog.filiform(m).algebra
        counts = Counter()
        start = time.perf_counter()
        rep = stratify(alg, cfg.height, cfg.seed, on_point=lambda xi, e: counts.update([e]))
        elapsed = time.perf_counter() - start
        print(f"filiform({m}): {len(rep.strata)} strata from {rep.points} points "
              f"(exhaustive={rep.exhaustive}, {elapsed:.2f}s)")
        for s in rep.strata:
            print(f"  {str(s.e):<10} {counts[s.e]:>7} points  e.g. {tuple(map(int, s.witnesses[0]))}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min", dest="m_min", type=int, default=FiliformConfig.m_min)
    p.add_argument("--max", dest="m_max", type=int, default=FiliformConfig.m_max)
    p.add_argument("--height", type=int, default=FiliformConfig.height)
    p.add_argument("--seed", type=int, default=FiliformConfig.seed)
    run(FiliformConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
