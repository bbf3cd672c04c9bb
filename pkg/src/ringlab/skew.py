"""Skew polynomials over K = Q(sqrt(-7)) with the twist x*c = sigma(c)*x.

A polynomial is a tuple of QuadraticValue coefficients, lowest degree
first, with a nonzero last entry; the zero polynomial is the empty tuple.
Membership in the subring S additionally requires an integral constant
coefficient (Z[sqrt(-7)]).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from .errors import NotInS
from .quadratic import (
    QV_MINUS_ONE,
    QV_ONE,
    QV_SQRT,
    QV_ZERO,
    QuadraticValue,
    intern_value,
    neg_cached,
    sigma_cached,
)

SkewPolynomial = tuple[QuadraticValue, ...]

SKEW_ZERO: SkewPolynomial = ()
SKEW_ONE: SkewPolynomial = (QV_ONE,)
SKEW_MINUS_ONE: SkewPolynomial = (QV_MINUS_ONE,)
SKEW_X: SkewPolynomial = (QV_ZERO, QV_ONE)
SKEW_SQRT: SkewPolynomial = (QV_SQRT,)


def normalize(coeffs) -> SkewPolynomial:
    """Strip trailing zeros to restore the canonical form."""
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def skew_degree(f: SkewPolynomial) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def skew_add(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return normalize(out)


def skew_neg(f: SkewPolynomial) -> SkewPolynomial:
    return tuple(neg_cached(c) for c in f)


def sigma_power(c: QuadraticValue, i: int) -> QuadraticValue:
    return c if i % 2 == 0 else sigma_cached(c)


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """(c x^i)(d x^j) = c * sigma^i(d) * x^(i+j)."""
    if not f or not g:
        return SKEW_ZERO
    # sigma fixes +-1, so scaling by them needs no twist on either side
    if len(f) == 1:
        c = f[0]
        if c is QV_ONE or c == QV_ONE:
            return g
        if c is QV_MINUS_ONE or c == QV_MINUS_ONE:
            return skew_neg(g)
    if len(g) == 1:
        c = g[0]
        if c is QV_ONE or c == QV_ONE:
            return f
        if c is QV_MINUS_ONE or c == QV_MINUS_ONE:
            return skew_neg(f)
    acc = [QV_ZERO] * (len(f) + len(g) - 1)
    for i, c in enumerate(f):
        if c.is_zero():
            continue
        for j, d in enumerate(g):
            if d.is_zero():
                continue
            acc[i + j] = acc[i + j] + c * sigma_power(d, i)
    return normalize(acc)


def in_s(f: SkewPolynomial) -> bool:
    """Membership in S: constant coefficient integral (zero poly included)."""
    return not f or f[0].is_integral()


def s_is_unit(f: SkewPolynomial) -> bool:
    """Units of S are exactly the constants 1 and -1.

    Degree additivity forces an inverse to have degree 0, and the norm of
    an integral constant with a rational-constant inverse must be 1.
    """
    if not in_s(f):
        raise NotInS(f"constant coefficient {f[0]} not in Z[sqrt(-7)]")
    return f == SKEW_ONE or f == SKEW_MINUS_ONE


def noncommutativity_witness() -> tuple[SkewPolynomial, SkewPolynomial]:
    """(x, sqrt(-7)): x*sqrt(-7) = -sqrt(-7)*x differs from sqrt(-7)*x."""
    lhs = skew_mul(SKEW_X, SKEW_SQRT)
    rhs = skew_mul(SKEW_SQRT, SKEW_X)
    assert lhs == skew_neg(rhs) and lhs != rhs
    return SKEW_X, SKEW_SQRT


def coefficient_pool(max_height: int) -> tuple[QuadraticValue, ...]:
    """All a + b*sqrt(-7) with numerators and denominators of a, b in
    [-max_height, max_height], in a fixed sorted order."""
    rationals = sorted(
        {
            Fraction(n, d)
            for n in range(-max_height, max_height + 1)
            for d in range(1, max_height + 1)
        }
    )
    return tuple(
        intern_value(QuadraticValue(a, b))
        for a in rationals
        for b in rationals
    )


def integral_pool(max_height: int) -> tuple[QuadraticValue, ...]:
    """All a + b*sqrt(-7) with integer a, b in [-max_height, max_height]."""
    span = range(-max_height, max_height + 1)
    return tuple(
        intern_value(QuadraticValue(a, b)) for a in span for b in span
    )


def s_grid(max_degree: int, max_height: int) -> Iterator[SkewPolynomial]:
    """Every element of S with degree <= max_degree, constant coefficient
    of integer height <= max_height and other coefficients with
    numerator/denominator height <= max_height.  Canonical tuples only
    (nonzero leading coefficient), zero polynomial first.
    """
    consts = integral_pool(max_height)
    pool = coefficient_pool(max_height)
    nonzero_pool = tuple(c for c in pool if not c.is_zero())
    yield SKEW_ZERO
    for c0 in consts:
        if not c0.is_zero():
            yield (c0,)
    for degree in range(1, max_degree + 1):
        middle = itertools.product(pool, repeat=degree - 1)
        for mid in middle:
            for c0 in consts:
                for lead in nonzero_pool:
                    yield (c0, *mid, lead)


def s_grid_size(max_degree: int, max_height: int) -> int:
    n_const = len(integral_pool(max_height))
    n_pool = len(coefficient_pool(max_height))
    total = 1 + (n_const - 1)  # zero + nonzero constants
    for degree in range(1, max_degree + 1):
        total += n_const * n_pool ** (degree - 1) * (n_pool - 1)
    return total


def s_sample(rng, max_degree: int, max_height: int) -> SkewPolynomial:
    """One pseudorandom element of S within the bounds."""
    consts = integral_pool(max_height)
    pool = coefficient_pool(max_height)
    degree = rng.randrange(-1, max_degree + 1)
    if degree < 0:
        return SKEW_ZERO
    coeffs = [rng.choice(consts)]
    coeffs += [rng.choice(pool) for _ in range(degree)]
    return normalize(coeffs)
