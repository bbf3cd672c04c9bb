"""Twisted polynomial arithmetic and the subring S."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringlab.errors import NotInS
from ringlab.quadratic import QuadraticValue, sigma
from ringlab.skew import (
    SKEW_MINUS_ONE,
    SKEW_ONE,
    SKEW_SQRT,
    SKEW_X,
    SKEW_ZERO,
    coefficient_pool,
    in_s,
    integral_pool,
    noncommutativity_witness,
    normalize,
    s_grid,
    s_grid_size,
    s_is_unit,
    s_sample,
    sigma_power,
    skew_add,
    skew_degree,
    skew_mul,
    skew_neg,
)

_POOL = coefficient_pool(2)

polys = st.lists(st.sampled_from(_POOL), max_size=4).map(normalize)


def test_twist_relation():
    # x * c = sigma(c) * x for every coefficient
    for c in _POOL:
        lhs = skew_mul(SKEW_X, (c,) if not c.is_zero() else SKEW_ZERO)
        rhs = skew_mul((sigma(c),) if not c.is_zero() else SKEW_ZERO, SKEW_X)
        assert lhs == rhs


def test_sigma_power_alternates():
    c = QuadraticValue(1, 2)
    assert sigma_power(c, 0) == c
    assert sigma_power(c, 1) == sigma(c)
    assert sigma_power(c, 2) == c
    assert sigma_power(c, 3) == sigma(c)


@given(polys, polys)
def test_addition_commutes(f, g):
    assert skew_add(f, g) == skew_add(g, f)


@given(polys, polys, polys)
def test_addition_associates(f, g, h):
    assert skew_add(skew_add(f, g), h) == skew_add(f, skew_add(g, h))


@given(polys)
def test_negation_cancels(f):
    assert skew_add(f, skew_neg(f)) == SKEW_ZERO
    assert skew_neg(skew_neg(f)) == f


@given(polys, polys, polys)
def test_multiplication_associates(f, g, h):
    assert skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h))


@given(polys, polys, polys)
def test_distributivity(f, g, h):
    assert skew_mul(f, skew_add(g, h)) == skew_add(skew_mul(f, g), skew_mul(f, h))
    assert skew_mul(skew_add(f, g), h) == skew_add(skew_mul(f, h), skew_mul(g, h))


@given(polys)
def test_one_is_neutral(f):
    assert skew_mul(SKEW_ONE, f) == f
    assert skew_mul(f, SKEW_ONE) == f
    assert skew_mul(SKEW_MINUS_ONE, f) == skew_neg(f)
    assert skew_mul(f, SKEW_MINUS_ONE) == skew_neg(f)


@given(polys, polys)
def test_no_zero_divisors_and_degree_additivity(f, g):
    # K is a field and sigma an automorphism, so degrees add
    if f and g:
        assert skew_degree(skew_mul(f, g)) == skew_degree(f) + skew_degree(g)
    else:
        assert skew_mul(f, g) == SKEW_ZERO


def test_normalize_strips_trailing_zeros():
    z = QuadraticValue(0, 0)
    c = QuadraticValue(2, 1)
    assert normalize([c, z, z]) == (c,)
    assert normalize([z, z]) == SKEW_ZERO
    assert normalize([]) == SKEW_ZERO


def test_membership_in_s():
    assert in_s(SKEW_ZERO)
    assert in_s((QuadraticValue(2, -1), QuadraticValue("1/2", 0)))
    assert not in_s((QuadraticValue("1/2", 0),))


def test_unit_classification_on_small_grid():
    units = {f for f in s_grid(2, 1) if s_is_unit(f)}
    assert units == {SKEW_MINUS_ONE, SKEW_ONE}


def test_unit_test_rejects_elements_outside_s():
    with pytest.raises(NotInS):
        s_is_unit((QuadraticValue("1/2", 0),))


def test_noncommutativity_witness():
    f, g = noncommutativity_witness()
    assert f == SKEW_X and g == SKEW_SQRT
    assert skew_mul(f, g) == skew_neg(skew_mul(g, f))
    assert skew_mul(f, g) != skew_mul(g, f)


def test_pool_sizes():
    assert len(coefficient_pool(1)) == 9
    assert len(integral_pool(1)) == 9
    assert len(coefficient_pool(2)) == 49
    assert len(integral_pool(2)) == 25


def test_grid_matches_counting_formula_and_has_no_duplicates():
    grid = list(s_grid(2, 1))
    assert len(grid) == len(set(grid)) == s_grid_size(2, 1) == 729
    assert grid[0] == SKEW_ZERO
    assert all(in_s(f) for f in grid)
    assert all(f == normalize(f) for f in grid)


def test_grid_size_formula_large():
    assert s_grid_size(3, 2) == 2941225


def test_sample_stays_inside_bounds():
    rng = random.Random(7)
    members = set(s_grid(2, 1))
    for _ in range(200):
        f = s_sample(rng, 2, 1)
        assert f in members
