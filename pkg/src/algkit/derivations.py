"""Derivations of an algebra: the Leibniz system and its kernel."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    StructureConstants,
    basis_vector,
    left_mult_operator,
    multiply,
    right_mult_operator,
)
from .linalg import RationalMatrix, ShapeError, Subspace, contains, kernel_basis, unvec, vec


def _unknown(p: int, k: int, n: int) -> int:
    """Column of the unknown d_{pk} (0-based) in the column-major flattening."""
    return p + n * k


def derivation_constraint_matrix(sc: StructureConstants) -> RationalMatrix:
    """n^3 x n^2 system whose kernel is Der(A).

    Row (i, j, p), lexicographic, is the e_p coordinate of
    d(e_i e_j) - d(e_i) e_j - e_i d(e_j).
    """
    n = sc.dim
    g = sc.gamma
    entries = []
    for i in range(n):
        for j in range(n):
            for p in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    c = g(i, j, k)
                    if c:
                        row[_unknown(p, k, n)] += c
                    c = g(k, j, p)
                    if c:
                        row[_unknown(k, i, n)] -= c
                    c = g(i, k, p)
                    if c:
                        row[_unknown(k, j, n)] -= c
                entries.extend(row)
    return RationalMatrix(n ** 3, n * n, entries)


@dataclass(frozen=True)
class DerivationSpace:
    algebra: StructureConstants
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[RationalMatrix]:
        return [unvec(v, self.algebra.dim) for v in self.space.vectors()]

    def __contains__(self, D: RationalMatrix) -> bool:
        return contains(self.space, vec(D))


def derivations(sc: StructureConstants) -> DerivationSpace:
    return DerivationSpace(sc, kernel_basis(derivation_constraint_matrix(sc)))


def leibniz_residual(sc: StructureConstants, D: RationalMatrix, i: int, j: int) -> tuple[Fraction, ...]:
    """D(e_i e_j) - D(e_i) e_j - e_i D(e_j), computed by direct evaluation."""
    n = sc.dim
    ei, ej = basis_vector(n, i), basis_vector(n, j)
    lhs = D.apply(sc.product(i, j))
    a = multiply(D.apply(ei), ej, sc)
    b = multiply(ei, D.apply(ej), sc)
    return tuple(x - y - z for x, y, z in zip(lhs, a, b))


def is_derivation(sc: StructureConstants, D: RationalMatrix) -> bool:
    n = sc.dim
    if D.shape != (n, n):
        raise ShapeError(f"expected a {n}x{n} matrix, got {D.shape}")
    return all(not any(leibniz_residual(sc, D, i, j)) for i in range(n) for j in range(n))


def verify_theorem_p2(sc: StructureConstants, D: RationalMatrix) -> bool:
    """Operator form: [D, L_e] = L_{D e} and [D, R_e] = R_{D e} on every basis vector."""
    n = sc.dim
    if D.shape != (n, n):
        raise ShapeError(f"expected a {n}x{n} matrix, got {D.shape}")
    for i in range(n):
        e = basis_vector(n, i)
        De = D.apply(e)
        L, R = left_mult_operator(e, sc), right_mult_operator(e, sc)
        if D @ L - L @ D != left_mult_operator(De, sc):
            return False
        if D @ R - R @ D != right_mult_operator(De, sc):
            return False
    return True


def bracket(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b - b @ a


def bracket_closure_check(ds: DerivationSpace) -> bool:
    mats = ds.matrices()
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if not contains(ds.space, vec(bracket(mats[a], mats[b]))):
                return False
    return True
