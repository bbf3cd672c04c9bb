"""Witness-producing procedures extracted from the constructive arguments.

Every search runs in enumeration order and every returned witness is
re-verified against the target equation before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConstructionFailed,
    HypothesisFailed,
    InfiniteRing,
    NoDecomposition,
    NoFactorization,
    NotComaximal,
    NotUnit,
    NoWitness,
    ZeroInput,
)
from .rings import RingDescriptor, finite_ops


@dataclass(frozen=True)
class TransferWitness:
    """Elements built while transferring aR+bR=R to Ra+Rb=R.

    a + b*t = u (unit); x*a + t = w (unit); b*w = y*b;
    p = 1 - b*x, q = y and p*a + q*b is the unit certifying Ra+Rb=R.
    """

    a: object
    b: object
    t: object
    u: object
    x: object
    w: object
    y: object
    p: object
    q: object
    result_unit: object


def _ops(ring: RingDescriptor):
    if not ring.is_finite:
        raise InfiniteRing("constructive search needs a finite ring")
    return finite_ops(ring)


def _require_comaximal(ops, a: int, b: int):
    sums = {
        ops.add[x][y]
        for x in ops.right_ideal(a)
        for y in ops.right_ideal(b)
    }
    if ops.one not in sums:
        raise NotComaximal("aR + bR != R")


def sr1_witness(ring: RingDescriptor, a, b):
    """Enumeration-minimal t with a + b*t a unit; requires aR+bR=R."""
    ops = _ops(ring)
    ai, bi = ops.index[a], ops.index[b]
    _require_comaximal(ops, ai, bi)
    for t in range(ops.n):
        if ops.is_unit(ops.add[ai][ops.mul[bi][t]]):
            return ops.elems[t]
    raise NoWitness("no t makes a+bt a unit: ring is not SR1 at (a,b)")


def theorem1_transfer(ring: RingDescriptor, a, b) -> TransferWitness:
    """Transfer right comaximality to left comaximality.

    Steps: (1) t with a+bt = u a unit; (2) x with x*a+t = w a unit
    (exists when Ra+Rt=R); (3) y with b*w = y*b (left Kazimirsky);
    (4) p = 1-b*x, q = y.  The output is checked: p*a + q*b must be a
    unit, which certifies Ra+Rb=R.
    """
    ops = _ops(ring)
    ai, bi = ops.index[a], ops.index[b]
    _require_comaximal(ops, ai, bi)
    add, mul, neg = ops.add, ops.mul, ops.neg
    try:
        ti = ops.index[sr1_witness(ring, a, b)]
    except NoWitness as exc:
        raise ConstructionFailed(1, str(exc)) from exc
    ui = add[ai][mul[bi][ti]]
    xi = next(
        (x for x in range(ops.n) if ops.is_unit(add[mul[x][ai]][ti])),
        None,
    )
    if xi is None:
        raise ConstructionFailed(2, "no x with x*a+t a unit")
    wi = add[mul[xi][ai]][ti]
    bw = mul[bi][wi]
    yi = next((y for y in range(ops.n) if mul[y][bi] == bw), None)
    if yi is None:
        raise ConstructionFailed(3, "b*w not in Rb: left Kazimirsky fails here")
    pi = add[ops.one][neg[mul[bi][xi]]]
    qi = yi
    result = add[mul[pi][ai]][mul[qi][bi]]
    if not ops.is_unit(result):
        raise ConstructionFailed(4, "p*a+q*b is not a unit")
    e = ops.elems
    return TransferWitness(
        a=a, b=b, t=e[ti], u=e[ui], x=e[xi], w=e[wi], y=e[yi],
        p=e[pi], q=e[qi], result_unit=e[result],
    )


def prop1_unit_commute(ring: RingDescriptor, a, u):
    """Invertible v with v*a = a*u, given Ra = Rau."""
    ops = _ops(ring)
    ai, ui = ops.index[a], ops.index[u]
    if not ops.is_unit(ui):
        raise NotUnit("u is not a unit")
    au = ops.mul[ai][ui]
    if ops.left_ideal(ai) != ops.left_ideal(au):
        raise HypothesisFailed("Ra != Rau")
    for v in ops.unit_indices:
        if ops.mul[v][ai] == au:
            return ops.elems[v]
    raise NoWitness("no invertible v with v*a = a*u")


def prop2_witness(ring: RingDescriptor, a, x):
    """y = 1 + a*x with y*a = a*u for u = 1 + x*a; certifies Rau <= Ra."""
    ops = _ops(ring)
    ai, xi = ops.index[a], ops.index[x]
    ui = ops.add[ops.one][ops.mul[xi][ai]]
    if not ops.is_unit(ui):
        raise NotUnit("1 + x*a is not a unit")
    yi = ops.add[ops.one][ops.mul[ai][xi]]
    assert ops.mul[yi][ai] == ops.mul[ai][ui]
    return ops.elems[yi]


def prop4_unit_sum(ring: RingDescriptor, a):
    """Decompose nonzero a as u + w with both summands invertible."""
    ops = _ops(ring)
    ai = ops.index[a]
    if ai == ops.zero:
        raise ZeroInput("a must be nonzero")
    for u in ops.unit_indices:
        w = ops.add[ai][ops.neg[u]]
        if ops.is_unit(w):
            return ops.elems[u], ops.elems[w]
    raise NoDecomposition("a is not a sum of two units")


def prop5_duo_witness(ring: RingDescriptor, a, b):
    """z with a*b = b*z, built from a = u+w and the right Kazimirsky
    factorizations u*b = b*x, w*b = b*y; certifies ab in bR."""
    ops = _ops(ring)
    ai, bi = ops.index[a], ops.index[b]
    if bi == ops.zero:
        return ring.zero()
    u, w = prop4_unit_sum(ring, a)
    ui, wi = ops.index[u], ops.index[w]
    mul = ops.mul

    def factor(ci: int) -> int:
        cb = mul[ci][bi]
        for x in range(ops.n):
            if mul[bi][x] == cb:
                return x
        raise NoFactorization("u*b not in bR: right Kazimirsky fails here")

    xi = factor(ui)
    yi = factor(wi)
    zi = ops.add[xi][yi]
    if mul[bi][zi] != mul[ai][bi]:
        raise NoFactorization("constructed z does not satisfy a*b = b*z")
    return ops.elems[zi]
