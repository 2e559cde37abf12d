"""Index of strictly upper triangular k x k matrices versus floor((k-1)/2).

The computed index (max-rank sampling) is compared with an exact sympy rank
over a disjoint set of seeded points and with the anti-diagonal count k//2.

    python scripts/ut_index_vs_qk.py --kmax 6
"""

import argparse
from dataclasses import dataclass

import sympy

from coadjoint import catalog
from coadjoint.invariants import index, sample_functionals
from coadjoint.lie import b_matrix


@dataclass(frozen=True)
class UtConfig:
    k_min: int = 3
    k_max: int = 6
    samples: int = 200
    seed: int = 101
    oracle_seed: int = 202


def oracle_index(alg, samples: int, seed: int) -> int:
    best = 0
    for xi in sample_functionals(alg.dim, samples, seed):
        rows = b_matrix(alg, xi)
        best = max(best, sympy.Matrix([[sympy.Rational(str(x)) for x in r] for r in rows]).rank())
    return alg.dim - best


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--kmin", type=int, default=UtConfig.k_min)
    p.add_argument("--kmax", type=int, default=UtConfig.k_max)
    p.add_argument("--samples", type=int, default=UtConfig.samples)
    args = p.parse_args()
    cfg = UtConfig(args.kmin, args.kmax, args.samples)
    print(f"{'k':>3}{'dim':>5}{'index':>7}{'oracle':>8}{'k//2':>6}{'(k-1)//2':>10}")
    for k in range(cfg.k_min, cfg.k_max + 1):
        alg = catalog.ut(k).algebra
        ours = index(alg, cfg.seed, samples=cfg.samples).value
        theirs = oracle_index(alg, cfg.samples, cfg.oracle_seed)
        flag = "" if ours == (k - 1) // 2 else "  <- differs from (k-1)//2"
        print(f"{k:>3}{alg.dim:>5}{ours:>7}{theirs:>8}{k // 2:>6}{(k - 1) // 2:>10}{flag}")


if __name__ == "__main__":
    main()
