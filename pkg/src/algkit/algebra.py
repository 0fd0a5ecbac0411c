"""Algebras given by structure constants on a fixed basis.

``gamma(i, j, k)`` is the coefficient of e_k in e_i e_j, with 0-based
indices.  Elements are plain sequences of coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ParameterError
from .linalg import (
    ZERO,
    RationalMatrix,
    ShapeError,
    Subspace,
    Vector,
    inverse,
    kernel_basis,
    stack_rows,
    to_fraction,
)


@dataclass(frozen=True)
class ParameterBinding:
    name: str
    value: Fraction
    excluded: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "value", to_fraction(self.value))
        object.__setattr__(self, "excluded", tuple(to_fraction(x) for x in self.excluded))
        if self.value in self.excluded:
            raise ParameterError(f"excluded parameter value {self.name}={self.value}")


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    table: tuple[Fraction, ...]
    name: str = ""
    parameters: tuple[ParameterBinding, ...] = field(default=())

    def __post_init__(self):
        table = tuple(to_fraction(x) for x in self.table)
        if len(table) != self.dim ** 3:
            raise ShapeError(f"structure tensor needs {self.dim ** 3} entries, got {len(table)}")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "parameters", tuple(self.parameters))

    @classmethod
    def from_products(cls, dim: int, products: dict[tuple[int, int], Sequence], **kw) -> "StructureConstants":
        """Build from ``{(i, j): coords of e_i e_j}`` with 1-based i, j."""
        table = [ZERO] * dim ** 3
        for (i, j), coords in products.items():
            if len(coords) != dim:
                raise ShapeError("product coordinates have the wrong length")
            for k, c in enumerate(coords):
                table[((i - 1) * dim + (j - 1)) * dim + k] = to_fraction(c)
        return cls(dim, tuple(table), **kw)

    @classmethod
    def zero(cls, dim: int, name: str = "") -> "StructureConstants":
        return cls(dim, (ZERO,) * dim ** 3, name)

    def gamma(self, i: int, j: int, k: int) -> Fraction:
        n = self.dim
        return self.table[(i * n + j) * n + k]

    def product(self, i: int, j: int) -> Vector:
        """Coordinates of e_i e_j (0-based)."""
        n = self.dim
        start = (i * n + j) * n
        return self.table[start:start + n]

    @property
    def params(self) -> dict[str, Fraction]:
        return {p.name: p.value for p in self.parameters}


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


def _check_len(sc: StructureConstants, *vs: Sequence) -> None:
    for v in vs:
        if len(v) != sc.dim:
            raise ShapeError(f"element has {len(v)} coordinates, algebra has dimension {sc.dim}")


def multiply(a: Sequence, b: Sequence, sc: StructureConstants) -> Vector:
    _check_len(sc, a, b)
    n = sc.dim
    out = [ZERO] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            c = to_fraction(ai) * to_fraction(bj)
            for k, g in enumerate(sc.product(i, j)):
                if g:
                    out[k] += c * g
    return tuple(out)


def left_mult_operator(a: Sequence, sc: StructureConstants) -> RationalMatrix:
    """L_a: column j holds a·e_j."""
    n = sc.dim
    return RationalMatrix.from_columns([multiply(a, basis_vector(n, j), sc) for j in range(n)], n)


def right_mult_operator(a: Sequence, sc: StructureConstants) -> RationalMatrix:
    """R_a: column j holds e_j·a."""
    n = sc.dim
    return RationalMatrix.from_columns([multiply(basis_vector(n, j), a, sc) for j in range(n)], n)


def associativity_witness(sc: StructureConstants) -> tuple[int, int, int] | None:
    """First basis triple (1-based) with (e_i e_j) e_k != e_i (e_j e_k), or None."""
    n = sc.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = multiply(sc.product(i, j), basis_vector(n, k), sc)
        rhs = multiply(basis_vector(n, i), sc.product(j, k), sc)
        if lhs != rhs:
            return i + 1, j + 1, k + 1
    return None


def check_associative(sc: StructureConstants) -> bool:
    return associativity_witness(sc) is None


def algebra_square(sc: StructureConstants) -> Subspace:
    n = sc.dim
    return Subspace.span([sc.product(i, j) for i in range(n) for j in range(n)], n)


def centralizer(H: Sequence[Sequence], sc: StructureConstants) -> Subspace:
    """Two-sided annihilator {x : x·h = h·x = 0 for all h in H}."""
    n = sc.dim
    _check_len(sc, *H)
    blocks = []
    for h in H:
        blocks.append(right_mult_operator(h, sc))
        blocks.append(left_mult_operator(h, sc))
    return kernel_basis(stack_rows(blocks, n))


def center(sc: StructureConstants) -> Subspace:
    """Annihilator center Z(A) = Z_A(A): elements killing A on both sides."""
    n = sc.dim
    return centralizer([basis_vector(n, i) for i in range(n)], sc)


def commutant_center(sc: StructureConstants) -> Subspace:
    """Commutative center {x : xy = yx for all y}.

    Differs from :func:`center` for any algebra with nonzero products among
    commuting elements, e.g. unital ones, where it contains the unit.
    """
    n = sc.dim
    blocks = []
    for j in range(n):
        e = basis_vector(n, j)
        blocks.append(right_mult_operator(e, sc) - left_mult_operator(e, sc))
    return kernel_basis(stack_rows(blocks, n))


def power_chain(sc: StructureConstants) -> list[Subspace]:
    """A^1 ⊇ A^2 ⊇ ... until it reaches {0} or stabilises.

    A^{k+1} is spanned by products x·y and y·x with x in A^k, y in A.
    """
    n = sc.dim
    chain = [Subspace.full(n)]
    for _ in range(n + 1):
        cur = chain[-1]
        if cur.dim == 0:
            break
        prods = []
        for x in cur.vectors():
            for j in range(n):
                e = basis_vector(n, j)
                prods.append(multiply(x, e, sc))
                prods.append(multiply(e, x, sc))
        nxt = Subspace.span(prods, n)
        if nxt == cur:
            break
        chain.append(nxt)
    return chain


def is_nilpotent_algebra(sc: StructureConstants) -> bool:
    return power_chain(sc)[-1].dim == 0


def transport(sc: StructureConstants, P: RationalMatrix) -> StructureConstants:
    """Structure constants on the new basis f_i = sum_a P[a, i] e_a."""
    n = sc.dim
    if P.shape != (n, n):
        raise ShapeError(f"basis change must be {n}x{n}")
    Pinv = inverse(P)
    cols = P.columns()
    table = []
    for i in range(n):
        for j in range(n):
            table.extend(Pinv.apply(multiply(cols[i], cols[j], sc)))
    return StructureConstants(n, tuple(table), sc.name, sc.parameters)
