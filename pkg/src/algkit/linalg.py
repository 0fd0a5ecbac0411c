"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries; there is no
floating point anywhere and no tolerance.  Matrices and subspaces are
immutable values.

Endomorphisms of an n-dimensional space are flattened column-major: the
entry in row ``i`` and column ``j`` of an n x n matrix lands at position
``i + n*j`` of the flattened vector.  Every module in the package shares
this convention (see :func:`vec` / :func:`unvec`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    """Raised when operand shapes are incompatible."""


class AmbientMismatchError(ShapeError):
    """Raised when two subspaces live in different ambient spaces."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class RationalMatrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(to_fraction(x) for x in entries) if entries else ()
        if not entries:
            entries = (ZERO,) * (rows * cols)
        if len(entries) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0)
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls(rows or 0, 0)
        return cls.from_rows(columns).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    # -- access -------------------------------------------------------------
    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ---------------------------------------------------------
    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "RationalMatrix":
        c = to_fraction(c)
        return RationalMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for c in ocols:
                out.append(sum((a * c[k] for k, a in nz), ZERO))
        return RationalMatrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        v = [to_fraction(x) for x in v]
        return tuple(sum((a * x for a, x in zip(self.row(i), v) if a), ZERO) for i in range(self.rows))

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        return RationalMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)]) \
            if self.rows else RationalMatrix(0, self.cols + other.cols)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ShapeError("vstack needs equal column counts")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    # -- value semantics ----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}, {self.cols}, {self.to_str_rows()!r})"

    def to_str_rows(self) -> list[list[str]]:
        return [[str(x) for x in self.row(i)] for i in range(self.rows)]

    def pretty(self) -> str:
        cells = self.to_str_rows()
        if not cells:
            return "[]"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def stack_rows(blocks: Iterable[RationalMatrix], cols: int) -> RationalMatrix:
    entries: list[Fraction] = []
    nrows = 0
    for b in blocks:
        if b.cols != cols:
            raise ShapeError("vstack needs equal column counts")
        entries.extend(b.entries)
        nrows += b.rows
    return RationalMatrix(nrows, cols, entries)


def vec(m: RationalMatrix) -> Vector:
    """Flatten column-major."""
    return tuple(x for j in range(m.cols) for x in m.column(j))


def unvec(v: Sequence, n: int) -> RationalMatrix:
    """Inverse of :func:`vec` for an n x n matrix."""
    if len(v) != n * n:
        raise ShapeError(f"vector of length {len(v)} is not a flattened {n}x{n} matrix")
    return RationalMatrix(n, n, [v[i + n * j] for i in range(n) for j in range(n)])


# -- elimination ------------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = rows[r] = [x * inv for x in pr]
        nz = [(k, x) for k, x in enumerate(pr) if x]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for k, x in nz:
                        ri[k] -= f * x
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns (increasing)."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    return RationalMatrix(m.rows, m.cols, [x for r in rows for x in r]), pivots


def rank(m: RationalMatrix) -> int:
    return len(_rref_rows(m.to_rows(), m.cols)[1])


def inverse(m: RationalMatrix) -> RationalMatrix:
    if not m.is_square():
        raise ShapeError("only square matrices can be inverted")
    n = m.rows
    aug = m.hstack(RationalMatrix.identity(n))
    rows, pivots = _rref_rows(aug.to_rows(), 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return RationalMatrix.from_rows([r[n:] for r in rows])


# -- subspaces --------------------------------------------------------------

def _canonical(vectors: Sequence[Sequence[Fraction]], ambient_dim: int) -> RationalMatrix:
    if not vectors:
        return RationalMatrix(ambient_dim, 0)
    rows, pivots = _rref_rows([list(v) for v in vectors], ambient_dim)
    return RationalMatrix.from_columns(rows[:len(pivots)], ambient_dim)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim held as a matrix of basis columns.

    ``basis`` has independent columns; ``canonical`` is the column-reduced
    echelon form (pivot entries 1), so two subspaces are equal exactly when
    their canonical matrices are.
    """

    ambient_dim: int
    basis: RationalMatrix
    canonical: RationalMatrix = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ShapeError(f"basis rows {self.basis.rows} != ambient dim {self.ambient_dim}")
        canon = _canonical(self.basis.columns(), self.ambient_dim)
        if canon.cols != self.basis.cols:
            raise ValueError("basis columns are linearly dependent")
        object.__setattr__(self, "canonical", canon)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        """Subspace spanned by arbitrary (possibly dependent) vectors."""
        vs = [tuple(to_fraction(x) for x in v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise ShapeError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        canon = _canonical(vs, ambient_dim)
        return cls(ambient_dim, canon)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.canonical))

    def __le__(self, other: "Subspace") -> bool:
        return all(contains(other, v) for v in self.vectors())


def kernel_basis(m: RationalMatrix) -> Subspace:
    """Basis of {x : m x = 0}, one vector per free column of rref(m)."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        vectors.append(v)
    return Subspace(m.cols, RationalMatrix.from_columns(vectors, m.cols) if vectors
                    else RationalMatrix(m.cols, 0))


def equations(space: Subspace) -> RationalMatrix:
    """Matrix whose kernel is exactly ``space`` (rows span its annihilator)."""
    n = space.ambient_dim
    if space.dim == 0:
        return RationalMatrix.identity(n)
    ann = kernel_basis(space.basis.transpose())
    return ann.basis.transpose() if ann.dim else RationalMatrix(0, n)


def contains(space: Subspace, v: Sequence) -> bool:
    if len(v) != space.ambient_dim:
        raise ShapeError(f"vector of length {len(v)} in ambient dimension {space.ambient_dim}")
    if not any(v):
        return True
    if space.dim == 0:
        return False
    aug = space.basis.hstack(RationalMatrix.from_columns([v]))
    return rank(aug) == space.dim


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.vectors() + b.vectors(), a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b via the kernel of [A | -B]."""
    _check_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    stacked = a.basis.hstack(-b.basis)
    ker = kernel_basis(stacked)
    vectors = [a.basis.apply(x[:a.dim]) for x in ker.vectors()]
    return Subspace.span(vectors, n)


def is_nilpotent_matrix(m: RationalMatrix) -> bool:
    """True iff m**n == 0, by repeated squaring."""
    if not m.is_square():
        raise ShapeError(f"nilpotency needs a square matrix, got {m.shape}")
    p, power = m, 1
    while power < m.rows:
        if p.is_zero():
            return True
        p = p @ p
        power *= 2
    return p.is_zero()
