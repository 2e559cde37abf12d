"""Coadjoint orbits, coarse stratifications and numerical invariants of
nilpotent Lie algebras over the rationals, plus a model of the dual of the
Heisenberg group."""

from .lie import NilpotentAlgebra, coadjoint_act, stabilizer, validate
from .stratification import IndexSet, StratificationReport, jump_set, stratify
from .invariants import compute_invariants, index, nuclear_bounds, real_rank, stable_rank

__all__ = [
    "NilpotentAlgebra",
    "IndexSet",
    "StratificationReport",
    "coadjoint_act",
    "compute_invariants",
    "index",
    "jump_set",
    "nuclear_bounds",
    "real_rank",
    "stabilizer",
    "stable_rank",
    "stratify",
    "validate",
]
