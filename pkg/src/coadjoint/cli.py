"""Command-line front end.

    coadjoint validate   --catalog heisenberg:1
    coadjoint invariants --catalog filiform:5 --json
    coadjoint stratify   --algebra alg.json --height 2 --seed 7
    coadjoint jump       --catalog filiform:4 --xi 1,0,0,0
    coadjoint orbit      --catalog heisenberg:1 --xi 1,0,0 --x 0,1,0
    coadjoint heis qc    --n 1 --set subset.json
    coadjoint catalog list | catalog get ut:4

Exit codes: 0 success, 1 invalid algebra (violations are listed), 2 usage or
input error.  ``jump`` and ``heis`` always print JSON; the other commands
print a table unless ``--json`` is given.  ``COADJOINT_SEED`` overrides the
default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from . import heisenberg_dual as hd
from .invariants import IndexDisagreement, UnknownStratumDimension, compute_invariants
from .lie import (
    NilpotentAlgebra,
    coadjoint_act,
    jordan_holder_basis,
    stabilizer,
    validate,
)
from .serialization import algebra_to_json, dumps, format_vector, load_algebra, parse_vector
from .stratification import DEFAULT_SEED, GenericSamplingError, IndexSet, jump_set, stratify


class UsageError(Exception):
    pass


class InvalidAlgebra(Exception):
    def __init__(self, report):
        self.report = report


def default_seed() -> int:
    raw = os.environ.get("COADJOINT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"COADJOINT_SEED must be an integer, got {raw!r}")


def _source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--algebra", metavar="PATH", help="algebra JSON file")
    src.add_argument("--catalog", metavar="NAME[:PARAMS]", help="catalog entry, e.g. heisenberg:1")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coadjoint", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the algebra axioms and the adapted flag")
    _source_args(v)
    v.add_argument("--json", action="store_true")

    for name, help_ in (("invariants", "real/stable rank, index, coarse length, nuclear bounds"),
                        ("stratify", "discover nonempty coarse strata")):
        q = sub.add_parser(name, help=help_)
        _source_args(q)
        q.add_argument("--height", type=int, default=2)
        q.add_argument("--seed", type=int, default=None)
        q.add_argument("--json", action="store_true")
        if name == "invariants":
            q.add_argument("--mode", choices=("coarse", "fine"), default="coarse")
            q.add_argument("--stratum-dims", metavar="PATH",
                           help='JSON list [{"e": [...], "dim": k}] for fine mode')
            q.add_argument("--estimate", action="store_true",
                           help="fill unknown stratum dimensions with a labelled heuristic")

    j = sub.add_parser("jump", help="jump set of a functional")
    _source_args(j)
    j.add_argument("--xi", required=True)
    j.add_argument("--json", action="store_true")

    o = sub.add_parser("orbit", help="stabilizer, orbit dimension and coadjoint action")
    _source_args(o)
    o.add_argument("--xi", required=True)
    o.add_argument("--x", help="Lie algebra element; prints Ad*(exp x) xi")
    o.add_argument("--json", action="store_true")

    h = sub.add_parser("heis", help="subsets of the Heisenberg dual")
    h.add_argument("op", choices=("qc", "closure", "interior", "act", "intersect", "union"))
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--set", required=True, metavar="PATH")
    h.add_argument("--other", metavar="PATH", help="second operand for intersect/union")
    h.add_argument("--t", help="rational scalar for act")
    h.add_argument("--json", action="store_true")

    c = sub.add_parser("catalog", help="example algebras")
    c.add_argument("op", choices=("list", "get"))
    c.add_argument("name", nargs="?")
    c.add_argument("--json", action="store_true")
    return p


def _load(args) -> tuple[NilpotentAlgebra, bool]:
    """The requested algebra in an adapted basis, and whether it was re-based."""
    if args.catalog:
        try:
            alg = catalog.get(args.catalog).algebra
        except KeyError as exc:
            raise UsageError(exc.args[0])
    else:
        try:
            alg = load_algebra(args.algebra)
        except OSError as exc:
            raise UsageError(f"cannot read {args.algebra}: {exc.strerror}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed JSON in {args.algebra}: {exc}")
    report = validate(alg)
    if report.ok:
        return alg, False
    if report.kinds() == {"adaptedness"}:
        return jordan_holder_basis(alg), True
    raise InvalidAlgebra(report)


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}")


def _table(rows) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def cmd_validate(args) -> int:
    if args.catalog:
        alg = catalog.get(args.catalog).algebra
    else:
        alg, _ = _load_raw(args)
    report = validate(alg)
    if args.json:
        print(dumps({"ok": report.ok, "violations": [
            {"kind": v.kind, "witness": list(v.witness) if v.witness else None} for v in report.violations
        ]}))
    else:
        print("ok" if report.ok else "\n".join(f"violation: {v}" for v in report.violations))
    return 0 if report.ok else 1


def _load_raw(args):
    try:
        return load_algebra(args.algebra), False
    except OSError as exc:
        raise UsageError(f"cannot read {args.algebra}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {args.algebra}: {exc}")


def cmd_invariants(args) -> int:
    alg, rebased = _load(args)
    seed = default_seed() if args.seed is None else args.seed
    dims = None
    if args.stratum_dims:
        raw = _read_json(args.stratum_dims)
        try:
            dims = {IndexSet(tuple(item["e"])): int(item["dim"]) for item in raw}
        except (KeyError, TypeError, ValueError):
            raise UsageError('stratum dimensions must be a list of {"e": [...], "dim": k}')
    bundle = compute_invariants(
        alg, height=args.height, seed=seed, mode=args.mode, stratum_dims=dims, estimate=args.estimate
    )
    out = bundle.to_json()
    out["rebased"] = rebased
    if args.json:
        print(dumps(out))
    else:
        rows = [(k, v) for k, v in out.items() if k != "index_formulas"]
        rows += [(f"index[{k}]", v) for k, v in bundle.index_formulas.items()]
        print(_table(rows))
    return 0


def cmd_stratify(args) -> int:
    alg, rebased = _load(args)
    seed = default_seed() if args.seed is None else args.seed
    report = stratify(alg, args.height, seed)
    if args.json:
        print(dumps(report.to_json()))
    else:
        rows = [("height", report.height), ("seed", report.seed), ("exhaustive", report.exhaustive),
                ("points", report.points), ("strata", len(report.strata))]
        if rebased:
            rows.append(("rebased", True))
        print(_table(rows))
        for s in report.strata:
            wit = "; ".join("(" + ", ".join(map(str, w)) + ")" for w in s.witnesses)
            print(f"  {str(s.e):<20} {wit}")
    return 0


def cmd_jump(args) -> int:
    alg, _ = _load(args)
    xi = parse_vector(args.xi, alg.dim)
    print(dumps({"e": list(jump_set(alg, xi))}))
    return 0


def cmd_orbit(args) -> int:
    alg, rebased = _load(args)
    xi = parse_vector(args.xi, alg.dim)
    stab = stabilizer(alg, xi)
    out = {
        "xi": format_vector(xi),
        "e": list(jump_set(alg, xi)),
        "orbit_dim": alg.dim - stab.dim,
        "stabilizer": [format_vector(v) for v in stab.basis],
    }
    if args.x:
        out["ad_star"] = format_vector(coadjoint_act(alg, parse_vector(args.x, alg.dim), xi))
    if rebased:
        out["rebased"] = True
    if args.json:
        print(dumps(out))
    else:
        print(_table([(k, v) for k, v in out.items()]))
    return 0


def _dual(path: str, n: int) -> hd.DualSubset:
    data = _read_json(path)
    s = hd.DualSubset.from_json(data)
    if s.n != n:
        raise UsageError(f"{path} describes n={s.n}, but --n {n} was given")
    return s


def cmd_heis(args) -> int:
    s = _dual(args.set, args.n)
    if args.op == "qc":
        print(dumps(hd.is_quasi_compact(s).to_json()))
        return 0
    if args.op == "closure":
        result = hd.closure(s)
    elif args.op == "interior":
        result = hd.interior(s)
    elif args.op == "act":
        if args.t is None:
            raise UsageError("heis act needs --t")
        result = hd.r_act(args.t, s)
    else:
        if not args.other:
            raise UsageError(f"heis {args.op} needs --other")
        t = _dual(args.other, args.n)
        result = hd.intersect(s, t) if args.op == "intersect" else hd.union(s, t)
    print(dumps(result.to_json()))
    return 0


def cmd_catalog(args) -> int:
    if args.op == "list":
        names = [e.label for e in catalog.default_entries()]
        print(dumps(names) if args.json else "\n".join(names))
        return 0
    if not args.name:
        raise UsageError("catalog get needs a name, e.g. heisenberg:1")
    try:
        entry = catalog.get(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0])
    out = {"name": entry.label, "algebra": algebra_to_json(entry.algebra),
           "expected": entry.expected_json(), "notes": list(entry.notes)}
    print(dumps(out) if args.json else json.dumps(out, indent=2, ensure_ascii=False))
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "stratify": cmd_stratify,
    "jump": cmd_jump,
    "orbit": cmd_orbit,
    "heis": cmd_heis,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvalidAlgebra as exc:
        for v in exc.report.violations:
            print(f"violation: {v}")
        return 1
    except (UsageError, ValueError, TypeError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except (IndexDisagreement, GenericSamplingError, UnknownStratumDimension) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
