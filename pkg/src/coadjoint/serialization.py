"""JSON forms of algebras and functionals.

Algebra schema::

    {"dim": m, "brackets": [{"i": i, "j": j, "coeffs": {"k": "p/q", ...}}, ...]}

Rationals are integers or ``"p/q"`` strings.  Omitted pairs are zero brackets
and a pair listed in one order only is completed by antisymmetry.
"""

from __future__ import annotations

import json
from pathlib import Path

from .lie import NilpotentAlgebra
from .linalg import format_rational, vector


def algebra_from_json(data: dict, name: str = "") -> NilpotentAlgebra:
    if not isinstance(data, dict) or "dim" not in data:
        raise ValueError("algebra JSON must be an object with a 'dim' field")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError(f"'dim' must be a positive integer, got {dim!r}")
    brackets = {}
    for entry in data.get("brackets", []):
        try:
            i, j, coeffs = int(entry["i"]), int(entry["j"]), entry["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed bracket entry {entry!r}") from exc
        if (i, j) in brackets:
            raise ValueError(f"bracket ({i}, {j}) listed twice")
        brackets[i, j] = {int(k): v for k, v in coeffs.items()}
    return NilpotentAlgebra.from_brackets(dim, brackets, name=name)


def algebra_to_json(alg: NilpotentAlgebra) -> dict:
    return {
        "dim": alg.dim,
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): format_rational(c) for k, c in coeffs.items()}}
            for (i, j), coeffs in alg.brackets().items()
        ],
    }


def load_algebra(path: str | Path) -> NilpotentAlgebra:
    path = Path(path)
    with path.open() as fh:
        return algebra_from_json(json.load(fh), name=path.stem)


def parse_vector(text: str, m: int | None = None) -> tuple:
    """``"1,0,-1/2"`` -> tuple of Fractions."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    v = vector(parts)
    if m is not None and len(v) != m:
        raise ValueError(f"expected {m} coordinates, got {len(v)}")
    return v


def format_vector(v) -> list:
    return [format_rational(x) for x in v]


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
