"""Nilpotency of derivation algebras and the per-algebra report."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .algebra import (
    StructureConstants,
    associativity_witness,
    center,
    commutant_center,
    is_nilpotent_algebra,
)
from .centroid import central_derivations, centroid, verify_centroid_derivation_props
from .derivations import DerivationSpace, bracket_closure_check, derivations
from .errors import AlgkitError, EngelPreconditionError
from .linalg import (
    RationalMatrix,
    Subspace,
    equations,
    is_nilpotent_matrix,
    kernel_basis,
    rank,
    stack_rows,
)
from .serialize import frac_str, matrix_to_json, params_to_json


@dataclass(frozen=True)
class EngelFlag:
    nilpotent: bool
    subspaces: tuple[Subspace, ...]
    # rank of the stacked quotient operators and the quotient dimension at the
    # stall; equal ranks certify the trivial common kernel
    stall_rank: int | None = None
    quotient_dim: int | None = None

    @property
    def chain(self) -> list[int]:
        return [v.dim for v in self.subspaces]


def _complement_basis(space: Subspace) -> RationalMatrix:
    """Standard basis vectors indexed by the non-pivot rows of the canonical form."""
    n = space.ambient_dim
    canon = space.canonical
    pivots = set()
    for j in range(canon.cols):
        col = canon.column(j)
        pivots.add(next(i for i, x in enumerate(col) if x))
    cols = [[1 if i == r else 0 for i in range(n)] for r in range(n) if r not in pivots]
    return RationalMatrix.from_columns(cols, n) if cols else RationalMatrix(n, 0)


def engel_flag(operators: Sequence[RationalMatrix], n: int) -> EngelFlag:
    """Ascending chain V_{k+1} = {v : D v ∈ V_k for every D}, starting at {0}.

    Reaches the whole space iff the operators are simultaneously strictly
    triangularisable, which for a commutator-closed family is the same as
    every element of their span being nilpotent.
    """
    chain = [Subspace.zero(n)]
    while chain[-1].dim < n:
        cur = chain[-1]
        Q = equations(cur)
        if operators:
            nxt = kernel_basis(stack_rows([Q @ D for D in operators], n))
        else:
            nxt = Subspace.full(n)
        if nxt.dim == cur.dim:
            C = _complement_basis(cur)
            restricted = stack_rows([Q @ D @ C for D in operators], C.cols)
            return EngelFlag(False, tuple(chain), rank(restricted), C.cols)
        chain.append(nxt)
    return EngelFlag(True, tuple(chain))


def all_derivations_nilpotent(ds: DerivationSpace, check_closure: bool = True) -> tuple[bool, list[int]]:
    if check_closure and not bracket_closure_check(ds):
        raise EngelPreconditionError("derivation space is not closed under the commutator")
    flag = engel_flag(ds.matrices(), ds.algebra.dim)
    return flag.nilpotent, flag.chain


def random_combination(mats: Sequence[RationalMatrix], rng: random.Random, spread: int = 5) -> RationalMatrix:
    n = mats[0].rows
    out = RationalMatrix.zeros(n, n)
    for m in mats:
        c = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        if c:
            out = out + m.scale(c)
    return out


def nonnilpotent_derivation(ds: DerivationSpace, seed: int = 0, tries: int = 200) -> RationalMatrix | None:
    """Some non-nilpotent element of the span, or None if none was found."""
    mats = ds.matrices()
    for m in mats:
        if not is_nilpotent_matrix(m):
            return m
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            s = mats[a] + mats[b]
            if not is_nilpotent_matrix(s):
                return s
    if not mats:
        return None
    rng = random.Random(seed)
    for _ in range(tries):
        m = random_combination(mats, rng)
        if not is_nilpotent_matrix(m):
            return m
    return None


@dataclass(frozen=True)
class ClassificationFlags:
    associative: bool
    algebra_nilpotent: bool
    all_derivations_nilpotent: bool
    characteristically_nilpotent: bool
    flag_chain: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "associative": self.associative,
            "algebra_nilpotent": self.algebra_nilpotent,
            "all_derivations_nilpotent": self.all_derivations_nilpotent,
            "characteristically_nilpotent": self.characteristically_nilpotent,
            "flag_chain": list(self.flag_chain),
        }


def classify(sc: StructureConstants, der: DerivationSpace | None = None) -> ClassificationFlags:
    """Characteristic nilpotency is taken as: A nilpotent AND every derivation nilpotent."""
    der = der or derivations(sc)
    alg_nil = is_nilpotent_algebra(sc)
    all_nil, chain = all_derivations_nilpotent(der)
    return ClassificationFlags(
        associative=associativity_witness(sc) is None,
        algebra_nilpotent=alg_nil,
        all_derivations_nilpotent=all_nil,
        characteristically_nilpotent=alg_nil and all_nil,
        flag_chain=tuple(chain),
    )


@dataclass
class AlgebraReport:
    name: str
    dim: int | None = None
    params: dict[str, str] = field(default_factory=dict)
    dim_der: int | None = None
    dim_centroid: int | None = None
    dim_central_der: int | None = None
    expected_dim_der: int | None = None
    expected_dim_centroid: int | None = None
    flags: ClassificationFlags | None = None
    discrepancies: list[dict[str, Any]] = field(default_factory=list)
    bases: dict[str, list] = field(default_factory=dict)
    centers: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def characteristically_nilpotent(self) -> bool:
        return bool(self.flags and self.flags.characteristically_nilpotent)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "params": self.params,
            "dim_der": self.dim_der,
            "dim_centroid": self.dim_centroid,
            "dim_central_der": self.dim_central_der,
            "expected": {"dim_der": self.expected_dim_der, "dim_centroid": self.expected_dim_centroid},
            "flags": self.flags.to_json() if self.flags else None,
            "discrepancies": self.discrepancies,
            "bases": self.bases,
            "centers": self.centers,
            "checks": self.checks,
            "error": self.error,
        }


def analyze(sc: StructureConstants, expected_dim_der: int | None = None,
            expected_dim_centroid: int | None = None) -> AlgebraReport:
    rep = AlgebraReport(sc.name, sc.dim, params_to_json(sc),
                        expected_dim_der=expected_dim_der, expected_dim_centroid=expected_dim_centroid)
    witness = associativity_witness(sc)
    if witness is not None:
        rep.discrepancies.append({"kind": "associativity", "witness": list(witness)})

    der = derivations(sc)
    cen = centroid(sc)
    cder = central_derivations(sc, der, cen)
    rep.dim_der, rep.dim_centroid, rep.dim_central_der = der.dim, cen.dim, cder.dim
    rep.flags = classify(sc, der)
    der_mats, cen_mats = der.matrices(), cen.matrices()
    rep.bases = {
        "der": [matrix_to_json(m) for m in der_mats],
        "centroid": [matrix_to_json(m) for m in cen_mats],
        "central_der": [matrix_to_json(m) for m in cder.matrices()],
    }
    if expected_dim_der is not None and expected_dim_der != der.dim:
        rep.discrepancies.append({"kind": "dim_der", "expected": expected_dim_der, "computed": der.dim,
                                  "evidence": rep.bases["der"]})
    if expected_dim_centroid is not None and expected_dim_centroid != cen.dim:
        rep.discrepancies.append({"kind": "dim_centroid", "expected": expected_dim_centroid,
                                  "computed": cen.dim, "evidence": rep.bases["centroid"]})

    ann, com = center(sc), commutant_center(sc)
    rep.centers = {
        "annihilator": {"dim": ann.dim, "basis": [[frac_str(x) for x in v] for v in ann.vectors()]},
        "commutant": {"dim": com.dim, "basis": [[frac_str(x) for x in v] for v in com.vectors()]},
    }
    props = verify_centroid_derivation_props(sc, der, cen)
    witness_d = None
    if rep.flags.algebra_nilpotent and not rep.flags.all_derivations_nilpotent:
        w = nonnilpotent_derivation(der)
        witness_d = matrix_to_json(w) if w is not None else None
    rep.checks = {
        "bracket_closed": True,
        "central_der_matches_annihilator_definition": cder.matches_annihilator_definition,
        "central_der_matches_commutant_definition": cder.matches_commutant_definition,
        "composition_properties": props.passed,
        "nonnilpotent_derivation": witness_d,
    }
    return rep


def dimension_report(corpus: Iterable, overrides: dict[str, dict[str, object]] | None = None) -> list[AlgebraReport]:
    """One report per corpus entry, ordered by class index.

    Failures for a single entry are recorded in its ``error`` field.
    """
    overrides = overrides or {}
    reports = []
    for entry in sorted(corpus, key=lambda e: (e.index, e.name)):
        try:
            sc = entry.algebra(overrides.get(entry.name))
            rep = analyze(sc, entry.expected_dim_der, entry.expected_dim_centroid)
        except AlgkitError as exc:
            rep = AlgebraReport(entry.name, expected_dim_der=entry.expected_dim_der,
                                expected_dim_centroid=entry.expected_dim_centroid,
                                error=f"{type(exc).__name__}: {exc}")
        reports.append(rep)
    return reports
