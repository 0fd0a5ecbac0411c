"""JSON encoding with exact rationals written as "p/q" strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import StructureConstants
from .linalg import RationalMatrix


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[frac_str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows: list[list[str]]) -> RationalMatrix:
    return RationalMatrix.from_rows([[parse_frac(x) for x in r] for r in rows])


def params_to_json(sc: StructureConstants) -> dict[str, str]:
    return {p.name: frac_str(p.value) for p in sc.parameters}


def algebra_to_json(sc: StructureConstants) -> dict[str, Any]:
    n = sc.dim
    return {
        "name": sc.name,
        "dim": n,
        "params": params_to_json(sc),
        "gamma": [[[frac_str(sc.gamma(i, j, k)) for k in range(n)] for j in range(n)] for i in range(n)],
    }


def algebra_from_json(data: dict[str, Any]) -> StructureConstants:
    n = data["dim"]
    table = [parse_frac(data["gamma"][i][j][k]) for i in range(n) for j in range(n) for k in range(n)]
    return StructureConstants(n, tuple(table), data.get("name", ""))


def space_to_json(kind: str, sc: StructureConstants, matrices: list[RationalMatrix]) -> dict[str, Any]:
    """Shared layout for derivation, centroid and central-derivation spaces."""
    return {
        "kind": kind,
        "algebra": sc.name,
        "algebra_dim": sc.dim,
        "params": params_to_json(sc),
        "flattening": "column-major",
        "dim": len(matrices),
        "basis": [matrix_to_json(m) for m in matrices],
    }


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed separators, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
