"""Centroid Γ(A) and central derivations C(A) = Γ(A) ∩ Der(A)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import StructureConstants, algebra_square, basis_vector, center, commutant_center, multiply
from .derivations import DerivationSpace, derivation_constraint_matrix, derivations
from .linalg import (
    RationalMatrix,
    Subspace,
    contains,
    equations,
    intersect,
    kernel_basis,
    stack_rows,
    unvec,
    vec,
)


def centroid_constraint_matrix(sc: StructureConstants) -> RationalMatrix:
    """2n^3 x n^2 system whose kernel is Γ(A).

    The first n^3 rows encode φ(e_i e_j) = φ(e_i) e_j, the next n^3 encode
    φ(e_i e_j) = e_i φ(e_j); both blocks are ordered by (i, j, p).
    """
    n = sc.dim
    g = sc.gamma
    left, right = [], []
    for i in range(n):
        for j in range(n):
            for p in range(n):
                lrow = [Fraction(0)] * (n * n)
                rrow = [Fraction(0)] * (n * n)
                for k in range(n):
                    c = g(i, j, k)
                    if c:
                        lrow[p + n * k] += c
                        rrow[p + n * k] += c
                    c = g(k, j, p)
                    if c:
                        lrow[k + n * i] -= c
                    c = g(i, k, p)
                    if c:
                        rrow[k + n * j] -= c
                left.extend(lrow)
                right.extend(rrow)
    return RationalMatrix(2 * n ** 3, n * n, left + right)


@dataclass(frozen=True)
class CentroidSpace:
    algebra: StructureConstants
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[RationalMatrix]:
        return [unvec(v, self.algebra.dim) for v in self.space.vectors()]

    def __contains__(self, phi: RationalMatrix) -> bool:
        return contains(self.space, vec(phi))


def centroid(sc: StructureConstants) -> CentroidSpace:
    return CentroidSpace(sc, kernel_basis(centroid_constraint_matrix(sc)))


def centroid_residuals(sc: StructureConstants, phi: RationalMatrix, i: int, j: int):
    """(φ(e_i e_j) - φ(e_i) e_j, φ(e_i e_j) - e_i φ(e_j)) by direct evaluation."""
    n = sc.dim
    ei, ej = basis_vector(n, i), basis_vector(n, j)
    img = phi.apply(sc.product(i, j))
    a = multiply(phi.apply(ei), ej, sc)
    b = multiply(ei, phi.apply(ej), sc)
    return tuple(x - y for x, y in zip(img, a)), tuple(x - y for x, y in zip(img, b))


def is_centroidal(sc: StructureConstants, phi: RationalMatrix) -> bool:
    n = sc.dim
    return all(not any(l) and not any(r)
               for i in range(n) for j in range(n)
               for l, r in [centroid_residuals(sc, phi, i, j)])


def definitional_central_derivations(sc: StructureConstants, center_space: Subspace) -> Subspace:
    """{φ : φ(A) ⊆ center_space and φ(A²) = 0} as a subspace of flattened n x n maps."""
    n = sc.dim
    rows = []
    Q = equations(center_space)
    # image condition: Q · φ(e_j) = 0 for every j
    for j in range(n):
        for r in range(Q.rows):
            row = [Fraction(0)] * (n * n)
            for i, q in enumerate(Q.row(r)):
                row[i + n * j] = q
            rows.append(row)
    # φ(s) = 0 for s spanning A²
    for s in algebra_square(sc).vectors():
        for i in range(n):
            row = [Fraction(0)] * (n * n)
            for j, c in enumerate(s):
                row[i + n * j] = c
            rows.append(row)
    if not rows:
        return Subspace.full(n * n)
    return kernel_basis(RationalMatrix.from_rows(rows))


@dataclass(frozen=True)
class CentralDerivationSpace:
    algebra: StructureConstants
    space: Subspace
    annihilator_definition: Subspace = field(repr=False)
    commutant_definition: Subspace = field(repr=False)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def matches_annihilator_definition(self) -> bool:
        return self.space == self.annihilator_definition

    @property
    def matches_commutant_definition(self) -> bool:
        return self.space == self.commutant_definition

    def matrices(self) -> list[RationalMatrix]:
        return [unvec(v, self.algebra.dim) for v in self.space.vectors()]


def central_derivations(sc: StructureConstants,
                        der: DerivationSpace | None = None,
                        cen: CentroidSpace | None = None) -> CentralDerivationSpace:
    der = der or derivations(sc)
    cen = cen or centroid(sc)
    return CentralDerivationSpace(
        sc,
        intersect(cen.space, der.space),
        definitional_central_derivations(sc, center(sc)),
        definitional_central_derivations(sc, commutant_center(sc)),
    )


def stacked_central_derivations(sc: StructureConstants) -> Subspace:
    """C(A) from a single kernel of the Leibniz rows stacked on the centroid rows."""
    n = sc.dim
    return kernel_basis(stack_rows([derivation_constraint_matrix(sc), centroid_constraint_matrix(sc)], n * n))


@dataclass
class CompositionReport:
    pairs_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    # (d index, φ index) -> (d∘φ ∈ Γ, φ∘d ∈ C)
    equivalence: dict[tuple[int, int], tuple[bool, bool]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_centroid_derivation_props(sc: StructureConstants,
                                     der: DerivationSpace | None = None,
                                     cen: CentroidSpace | None = None) -> CompositionReport:
    """Check φ∘d ∈ Der(A) and [d∘φ ∈ Γ(A)] ⇔ [φ∘d ∈ C(A)] over basis pairs."""
    der = der or derivations(sc)
    cen = cen or centroid(sc)
    cder = intersect(cen.space, der.space)
    report = CompositionReport()
    for a, d in enumerate(der.matrices()):
        for b, phi in enumerate(cen.matrices()):
            report.pairs_checked += 1
            phi_d = phi @ d
            d_phi = d @ phi
            if not contains(der.space, vec(phi_d)):
                report.failures.append({"check": "phi*d in Der", "d": a, "phi": b,
                                        "witness": phi_d.to_str_rows()})
            lhs = contains(cen.space, vec(d_phi))
            rhs = contains(cder, vec(phi_d))
            report.equivalence[(a, b)] = (lhs, rhs)
            if lhs != rhs:
                report.failures.append({"check": "d*phi in Gamma iff phi*d in C", "d": a, "phi": b,
                                        "d_phi_in_centroid": lhs, "phi_d_central": rhs,
                                        "witness": d_phi.to_str_rows()})
    return report
