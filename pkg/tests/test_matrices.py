"""Matrices over a ring: products, determinants, invertibility."""

import random

import pytest

from ringlab.errors import DimensionMismatch
from ringlab.matrices import MatrixOverRing, det, identity, mat_invertible
from ringlab.rings import (
    IntegerRing,
    MatrixRing,
    ModularRing,
    enumerate_elements,
    units,
)

Z = IntegerRing()
Z6 = ModularRing(6)


def _rand_int_matrix(rng, n, lo=-9, hi=9):
    return MatrixOverRing(
        Z, tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n))
    )


def test_shape_validation():
    with pytest.raises(DimensionMismatch):
        MatrixOverRing(Z, ((1, 2), (3,)))
    with pytest.raises(DimensionMismatch):
        MatrixOverRing(Z, ())


def test_identity_is_neutral():
    rng = random.Random(1)
    for n in (1, 2, 3):
        I = identity(Z, n)
        M = _rand_int_matrix(rng, n)
        assert (M @ I).rows == M.rows
        assert (I @ M).rows == M.rows


def test_matmul_associates():
    rng = random.Random(2)
    for _ in range(20):
        A, B, C = (_rand_int_matrix(rng, 3) for _ in range(3))
        assert ((A @ B) @ C).rows == (A @ (B @ C)).rows


def test_matmul_shape_checks():
    A = MatrixOverRing(Z, ((1, 2),))
    B = MatrixOverRing(Z, ((1, 2),))
    with pytest.raises(DimensionMismatch):
        A @ B
    with pytest.raises(DimensionMismatch):
        A @ MatrixOverRing(Z6, ((1,), (2,)))


def test_det_matches_cofactor_formula():
    rng = random.Random(3)
    for _ in range(30):
        M = _rand_int_matrix(rng, 2)
        (a, b), (c, d) = M.rows
        assert det(M) == a * d - b * c
    for _ in range(30):
        M = _rand_int_matrix(rng, 3)
        (a, b, c), (d, e, f), (g, h, i) = M.rows
        expected = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        assert det(M) == expected


def test_diagonal_predicates():
    D = MatrixOverRing(Z, ((2, 0, 0), (0, 3, 0)))
    assert D.is_diagonal()
    assert D.diagonal() == (2, 3)
    assert not MatrixOverRing(Z, ((0, 1), (0, 0))).is_diagonal()


def test_integer_inverse_requires_unit_determinant():
    M = MatrixOverRing(Z, ((2, 0), (0, 2)))  # det 4
    assert mat_invertible(M) is None
    U = MatrixOverRing(Z, ((2, 1), (1, 1)))  # det 1
    inv = mat_invertible(U)
    assert (U @ inv).rows == identity(Z, 2).rows
    assert (inv @ U).rows == identity(Z, 2).rows


def test_integer_inverse_on_random_unimodular_products():
    # products of elementary matrices are unimodular by construction
    rng = random.Random(4)
    for _ in range(15):
        M = identity(Z, 3)
        for _ in range(6):
            i, j = rng.sample(range(3), 2)
            E = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
            E[i][j] = rng.randint(-3, 3)
            M = M @ MatrixOverRing(Z, tuple(map(tuple, E)))
        assert det(M) in (1, -1)
        inv = mat_invertible(M)
        assert (M @ inv).rows == identity(Z, 3).rows


def test_modular_inverse_agrees_with_bijectivity_oracle():
    # over Zn(6), M is invertible exactly when v -> M v permutes (Zn(6))^2
    elems = enumerate_elements(Z6)
    vectors = [(x, y) for x in elems for y in elems]

    def apply(rows, v):
        return (
            Z6.add(Z6.mul(rows[0][0], v[0]), Z6.mul(rows[0][1], v[1])),
            Z6.add(Z6.mul(rows[1][0], v[0]), Z6.mul(rows[1][1], v[1])),
        )

    checked_invertible = 0
    for a in elems:
        for b in elems:
            for c in elems:
                for d in elems:
                    rows = ((a, b), (c, d))
                    bijective = len({apply(rows, v) for v in vectors}) == 36
                    inv = mat_invertible(MatrixOverRing(Z6, rows))
                    assert (inv is not None) == bijective
                    if inv is not None:
                        checked_invertible += 1
                        M = MatrixOverRing(Z6, rows)
                        assert (M @ inv).rows == identity(Z6, 2).rows
                        assert (inv @ M).rows == identity(Z6, 2).rows
    assert checked_invertible > 0


def test_noncommutative_inverse_search():
    M2 = MatrixRing(2, ModularRing(2))
    unit = next(iter(units(M2)))
    nonunit = next(a for a in enumerate_elements(M2) if a not in units(M2))
    inv = mat_invertible(MatrixOverRing(M2, ((unit,),)))
    assert inv is not None
    assert M2.mul(unit, inv.entry(0, 0)) == M2.one()
    assert mat_invertible(MatrixOverRing(M2, ((nonunit,),))) is None


def test_inverse_rejects_non_square():
    with pytest.raises(DimensionMismatch):
        mat_invertible(MatrixOverRing(Z, ((1, 2),)))
