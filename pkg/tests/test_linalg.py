from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algkit.linalg import (
    AmbientMismatchError,
    RationalMatrix,
    ShapeError,
    Subspace,
    contains,
    equations,
    intersect,
    inverse,
    is_nilpotent_matrix,
    kernel_basis,
    rank,
    rref,
    subspace_sum,
    unvec,
    vec,
)

M = RationalMatrix.from_rows

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # zeros are over-represented so that rank deficiency actually happens
    entry = st.one_of(st.just(Fraction(0)), rationals)
    return RationalMatrix(r, c, draw(st.lists(entry, min_size=r * c, max_size=r * c)))


@st.composite
def subspaces(draw, ambient=4):
    k = draw(st.integers(0, ambient))
    vs = draw(st.lists(st.lists(st.one_of(st.just(Fraction(0)), rationals), min_size=ambient, max_size=ambient),
                       min_size=k, max_size=k))
    return Subspace.span(vs, ambient)


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


# -- rref -------------------------------------------------------------------

def test_rref_identity():
    I = RationalMatrix.identity(3)
    assert rref(I) == (I, [0, 1, 2])


def test_rref_zero():
    Z = RationalMatrix.zeros(2, 4)
    assert rref(Z) == (Z, [])


def test_rref_hand_example():
    assert rref(M([[2, 4], [1, 2]])) == (M([[1, 2], [0, 0]]), [0])


@given(matrices())
def test_rref_shape_and_idempotence(m):
    r, piv = rref(m)
    assert r.shape == m.shape
    assert rref(r) == (r, piv)
    assert piv == sorted(piv)


@settings(max_examples=60)
@given(matrices())
def test_rref_agrees_with_sympy(m):
    r, piv = rref(m)
    sr, spiv = to_sympy(m).rref()
    assert to_sympy(r) == sr
    assert tuple(piv) == spiv


# -- kernel -----------------------------------------------------------------

def test_kernel_identity_is_zero():
    assert kernel_basis(RationalMatrix.identity(4)).dim == 0


def test_kernel_zero_is_everything():
    k = kernel_basis(RationalMatrix.zeros(2, 3))
    assert k.dim == 3
    assert k == Subspace.full(3)


def test_kernel_substitution_example():
    k = kernel_basis(M([[1, 1, 0], [0, 0, 1]]))
    assert k == Subspace.span([[1, -1, 0]], 3)


@given(matrices(max_rows=6, max_cols=6))
def test_rank_nullity_and_exact_kernel(m):
    k = kernel_basis(m)
    assert rank(m) + k.dim == m.cols
    for v in k.vectors():
        assert not any(m.apply(v))


@settings(max_examples=40)
@given(matrices(max_rows=6, max_cols=6))
def test_kernel_dimension_matches_sympy(m):
    assert kernel_basis(m).dim == len(to_sympy(m).nullspace())


# -- subspaces --------------------------------------------------------------

def test_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        Subspace(2, RationalMatrix.from_columns([[1, 2], [2, 4]]))


def test_canonical_form_is_basis_independent():
    a = Subspace.span([[1, 1, 0], [0, 1, 1]], 3)
    b = Subspace.span([[1, 2, 1], [1, 0, -1]], 3)
    assert a == b
    assert a.canonical == b.canonical


def test_intersect_examples():
    X = Subspace.span([[1, 2, 0], [0, 1, 5]], 3)
    assert intersect(X, X) == X
    assert intersect(X, Subspace.zero(3)).dim == 0
    plane = Subspace.span([[1, 0], [0, 1]], 2)
    diag = Subspace.span([[1, 1]], 2)
    meet = intersect(plane, diag)
    assert meet == diag
    assert all(contains(plane, v) and contains(diag, v) for v in meet.vectors())


def test_intersect_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        intersect(Subspace.full(2), Subspace.full(3))


@given(subspaces(), subspaces())
def test_intersection_dimension_formula(a, b):
    assert intersect(a, b).dim == a.dim + b.dim - subspace_sum(a, b).dim


@given(subspaces(), subspaces(), subspaces())
def test_intersection_commutative_associative(a, b, c):
    assert intersect(a, b).canonical == intersect(b, a).canonical
    assert intersect(intersect(a, b), c).canonical == intersect(a, intersect(b, c)).canonical


@given(subspaces())
def test_equations_cut_out_the_space(s):
    assert kernel_basis(equations(s)) == s


def test_contains_examples():
    s = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    assert contains(s, [2, 3, 0])
    assert not contains(s, [0, 0, 1])
    assert contains(s, [0, 0, 0])
    assert contains(Subspace.zero(3), [0, 0, 0])
    assert not contains(Subspace.zero(3), [1, 0, 0])
    with pytest.raises(ShapeError):
        contains(s, [1, 0])


# -- nilpotency -------------------------------------------------------------

def test_nilpotent_examples():
    strict_upper = RationalMatrix(4, 4, [1 if j > i else 0 for i in range(4) for j in range(4)])
    assert is_nilpotent_matrix(strict_upper)
    assert not is_nilpotent_matrix(RationalMatrix.identity(4))
    assert is_nilpotent_matrix(M([[0, 1], [0, 0]]))
    assert not is_nilpotent_matrix(M([[1, 1], [0, 0]]))
    assert is_nilpotent_matrix(M([[0]]))
    assert not is_nilpotent_matrix(M([[3]]))


def test_nilpotent_needs_square():
    with pytest.raises(ShapeError):
        is_nilpotent_matrix(RationalMatrix.zeros(2, 3))


@given(matrices(max_rows=4, max_cols=4))
def test_nilpotency_matches_power_and_squares(m):
    if not m.is_square():
        return
    n = m.rows
    p = RationalMatrix.identity(n)
    for _ in range(n):
        p = p @ m
    assert is_nilpotent_matrix(m) == p.is_zero()
    if is_nilpotent_matrix(m):
        assert is_nilpotent_matrix(m @ m)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(rationals, min_size=n * (n - 1) // 2,
                                                                          max_size=n * (n - 1) // 2))))
def test_strictly_lower_triangular_is_nilpotent(data):
    n, vals = data
    it = iter(vals)
    m = RationalMatrix(n, n, [next(it) if i > j else 0 for i in range(n) for j in range(n)])
    assert is_nilpotent_matrix(m)


# -- misc -------------------------------------------------------------------

def test_vec_is_column_major():
    m = M([[1, 2], [3, 4]])
    assert vec(m) == (1, 3, 2, 4)
    assert unvec(vec(m), 2) == m


def test_inverse_roundtrip(rng):
    from conftest import random_invertible
    P = random_invertible(rng, 4)
    assert P @ inverse(P) == RationalMatrix.identity(4)


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        RationalMatrix(1, 1, [0.5])
