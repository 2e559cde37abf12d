"""Invariants of every catalog entry, checked against the expected values.

    python scripts/catalog_survey.py [--height 1] [--json]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from coadjoint import catalog
from coadjoint.invariants import compute_invariants
from coadjoint.stratification import DEFAULT_SEED


@dataclass(frozen=True)
class SurveyConfig:
    height: int = 1
    seed: int = DEFAULT_SEED


def survey(cfg: SurveyConfig) -> list[dict]:
    rows = []
    for entry in catalog.default_entries():
        start = time.perf_counter()
        b = compute_invariants(entry.algebra, height=cfg.height, seed=cfg.seed)
        computed = {"index": b.index, "real_rank": b.real_rank, "clgth": b.clgth_lower, "dim": b.dim_g}
        mismatches = [k for k, e in entry.expected.items() if computed[k] != e.value]
        rows.append({
            "name": entry.label,
            **computed,
            "stable_rank": b.stable_rank,
            "nuclear": [b.nuclear_lower, b.nuclear_upper],
            "exhaustive": b.exhaustive,
            "mismatches": mismatches,
            "notes": list(entry.notes),
            "seconds": round(time.perf_counter() - start, 2),
        })
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--height", type=int, default=SurveyConfig.height)
    p.add_argument("--seed", type=int, default=SurveyConfig.seed)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = SurveyConfig(args.height, args.seed)
    rows = survey(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'entry':<16}{'dim':>4}{'a':>4}{'tsr':>5}{'ind':>5}{'clgth':>7}  nuclear   exh  check")
    for r in rows:
        status = "ok" if not r["mismatches"] else "MISMATCH " + ",".join(r["mismatches"])
        print(f"{r['name']:<16}{r['dim']:>4}{r['real_rank']:>4}{r['stable_rank']:>5}{r['index']:>5}"
              f"{r['clgth']:>7}  {str(tuple(r['nuclear'])):<9} {str(r['exhaustive'])[0]:>3}  {status}")
    for r in rows:
        for note in r["notes"]:
            print(f"note [{r['name']}]: {note}")


if __name__ == "__main__":
    main()
