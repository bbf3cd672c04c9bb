"""Decidable-at-desk-scale checkers for the ring properties under study.

Every checker returns a three-valued PropertyVerdict.  "fails" always
carries a replayable witness; "holds" means the (finite) search space was
exhausted or an exact rule applies; "unknown" covers infinite rings
without a rule and budget exhaustion.  All searches run in the fixed
enumeration order, so reported witnesses are enumeration-minimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InfiniteRing
from .rings import (
    FiniteOps,
    IntegerRing,
    ModularRing,
    QuadraticFieldRing,
    QuadraticIntegerRing,
    RingDescriptor,
    SkewSubringS,
    finite_ops,
    is_commutative,
    units,
)
from . import skew

DEFAULT_BUDGET = 2 ** 20

PROPERTY_IDS = (
    "bezout",
    "hermite",
    "sr1",
    "unit-sr1",
    "kazimirsky-left",
    "kazimirsky-right",
    "duo-left",
    "duo-right",
    "quasi-duo-left",
    "quasi-duo-right",
    "unit-central",
    "dubrovin",
    "idempotent-unit",
    "edr-small",
)


@dataclass(frozen=True)
class PropertyVerdict:
    prop: str
    ring: RingDescriptor
    verdict: str  # "holds" | "fails" | "unknown"
    witness: tuple = ()  # ((name, payload), ...)
    budget_used: int = 0
    note: str = ""
    exhausted_budget: bool = False

    def witness_dict(self) -> dict:
        return dict(self.witness)


@dataclass(frozen=True)
class OneSidedIdeal:
    side: str  # "left" | "right"
    elements: frozenset
    generators: tuple


class _Budget:
    """Counts examined tuples; raises once the allowance is spent."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"budget {self.limit} exhausted")


def _verdict(prop, ring, verdict, witness=(), budget=None, note="",
             exhausted=False) -> PropertyVerdict:
    return PropertyVerdict(
        prop=prop,
        ring=ring,
        verdict=verdict,
        witness=tuple(witness),
        budget_used=budget.used if budget else 0,
        note=note,
        exhausted_budget=exhausted,
    )


def _unknown_budget(prop, ring, budget) -> PropertyVerdict:
    return _verdict(prop, ring, "unknown", budget=budget,
                    note="budget exhausted", exhausted=True)


# --------------------------------------------------------------------------
# Finite-ring checkers (index based)


def _sumset(ops: FiniteOps, left: frozenset, right: frozenset) -> frozenset:
    add = ops.add
    return frozenset(add[x][y] for x in left for y in right)


def check_bezout(ring: RingDescriptor, budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("bezout check needs a finite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    n = ops.n
    right_ideals = {ops.right_ideal(d) for d in range(n)}
    left_ideals = {ops.left_ideal(d) for d in range(n)}
    try:
        for a in range(n):
            ra = ops.right_ideal(a)
            la = ops.left_ideal(a)
            for c in range(n):
                b.spend(len(ra) * len(ops.right_ideal(c)))
                if _sumset(ops, ra, ops.right_ideal(c)) not in right_ideals:
                    w = (("a", ops.elems[a]), ("b", ops.elems[c]))
                    return _verdict("bezout", ring, "fails", w, b,
                                    note="aR+bR not principal")
                if _sumset(ops, la, ops.left_ideal(c)) not in left_ideals:
                    w = (("a", ops.elems[a]), ("b", ops.elems[c]))
                    return _verdict("bezout", ring, "fails", w, b,
                                    note="Ra+Rb not principal")
    except BudgetExceeded:
        return _unknown_budget("bezout", ring, b)
    return _verdict("bezout", ring, "holds", budget=b)


def _comaximal(ops: FiniteOps, a: int, c: int) -> bool:
    return ops.one in _sumset(ops, ops.right_ideal(a), ops.right_ideal(c))


def check_stable_range_1(ring: RingDescriptor,
                         budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if isinstance(ring, IntegerRing):
        return _integer_sr1()
    if not ring.is_finite:
        return _verdict("sr1", ring, "unknown",
                        note="no exact rule for this infinite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for a in range(ops.n):
            for c in range(ops.n):
                b.spend()
                if not _comaximal(ops, a, c):
                    continue
                if not any(
                    ops.is_unit(ops.add[a][ops.mul[c][t]])
                    for t in range(ops.n)
                ):
                    w = (("a", ops.elems[a]), ("b", ops.elems[c]))
                    return _verdict("sr1", ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget("sr1", ring, b)
    return _verdict("sr1", ring, "holds", budget=b)


def _integer_sr1() -> PropertyVerdict:
    # a+bt is a unit iff b | (1-a) or b | (-1-a); scan small pairs
    ring = IntegerRing()
    for a in range(0, 50):
        for c in range(1, 50):
            if math.gcd(a, c) != 1:
                continue
            if (1 - a) % c != 0 and (-1 - a) % c != 0:
                return PropertyVerdict(
                    "sr1", ring, "fails", (("a", a), ("b", c)),
                    note="exact: a+bt=+-1 has no integer solution",
                )
    raise AssertionError("unreachable: (2,5) is a witness")


def check_unit_stable_range_1(ring: RingDescriptor,
                              budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("unit-sr1 check needs a finite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    unit_idx = ops.unit_indices
    try:
        for a in range(ops.n):
            for c in range(ops.n):
                b.spend()
                if not _comaximal(ops, a, c):
                    continue
                if not any(
                    ops.is_unit(ops.add[a][ops.mul[c][u]])
                    for u in unit_idx
                ):
                    w = (("a", ops.elems[a]), ("b", ops.elems[c]))
                    return _verdict("unit-sr1", ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget("unit-sr1", ring, b)
    return _verdict("unit-sr1", ring, "holds", budget=b)


def check_kazimirsky(ring: RingDescriptor, side: str,
                     budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    prop = f"kazimirsky-{side}"
    if isinstance(ring, SkewSubringS):
        return _skew_kazimirsky(ring, side, budget)
    if not ring.is_finite:
        raise InfiniteRing("kazimirsky check needs a finite ring or S")
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for a in range(ops.n):
            ra_right = ops.right_ideal(a)
            ra_left = ops.left_ideal(a)
            for u in ops.unit_indices:
                for r in range(ops.n):
                    b.spend()
                    if side == "right":
                        # uaR subseteq aR
                        if ops.mul[ops.mul[u][a]][r] not in ra_right:
                            w = (("a", ops.elems[a]), ("u", ops.elems[u]),
                                 ("r", ops.elems[r]))
                            return _verdict(prop, ring, "fails", w, b)
                    else:
                        # Rau subseteq Ra
                        if ops.mul[r][ops.mul[a][u]] not in ra_left:
                            w = (("a", ops.elems[a]), ("u", ops.elems[u]),
                                 ("r", ops.elems[r]))
                            return _verdict(prop, ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget(prop, ring, b)
    return _verdict(prop, ring, "holds", budget=b)


def _skew_kazimirsky(ring: SkewSubringS, side: str, budget: int) -> PropertyVerdict:
    # Units of S are exactly {1, -1} and sigma fixes both, so u*a = a*u
    # identically and uaR = aR on both sides.  The sampled sweep confirms
    # centrality on the bounded grid.
    prop = f"kazimirsky-{side}"
    b = _Budget(budget)
    minus_one = skew.SKEW_MINUS_ONE
    try:
        for f in ring.grid():
            b.spend()
            if skew.skew_mul(minus_one, f) != skew.skew_mul(f, minus_one):
                w = (("a", f), ("u", minus_one), ("r", skew.SKEW_ONE))
                return _verdict(prop, ring, "fails", w, b)
    except BudgetExceeded:
        return _verdict(prop, ring, "holds", budget=b, exhausted=True,
                        note="exact: units {1,-1} are central; grid truncated")
    return _verdict(prop, ring, "holds", budget=b,
                    note="exact: units {1,-1} are central; grid verified")


def check_duo(ring: RingDescriptor, side: str,
              budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    prop = f"duo-{side}"
    if not ring.is_finite:
        raise InfiniteRing("duo check needs a finite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for a in range(ops.n):
            ideal = ops.right_ideal(a) if side == "right" else ops.left_ideal(a)
            for r in range(ops.n):
                b.spend()
                prod = ops.mul[r][a] if side == "right" else ops.mul[a][r]
                if prod not in ideal:
                    w = (("a", ops.elems[a]), ("r", ops.elems[r]))
                    return _verdict(prop, ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget(prop, ring, b)
    return _verdict(prop, ring, "holds", budget=b)


def check_unit_central(ring: RingDescriptor,
                       budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if isinstance(ring, SkewSubringS):
        return _skew_unit_central(ring, budget)
    if not ring.is_finite:
        raise InfiniteRing("unit-central check needs a finite ring or S")
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for u in ops.unit_indices:
            for a in range(ops.n):
                b.spend()
                if ops.mul[u][a] != ops.mul[a][u]:
                    w = (("u", ops.elems[u]), ("a", ops.elems[a]))
                    return _verdict("unit-central", ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget("unit-central", ring, b)
    return _verdict("unit-central", ring, "holds", budget=b)


def _skew_unit_central(ring: SkewSubringS, budget: int) -> PropertyVerdict:
    # The unit set {1,-1} is exact; sigma(+-1) = +-1 makes both central in
    # all of S, and the bounded grid confirms this by multiplication.
    b = _Budget(budget)
    minus_one = skew.SKEW_MINUS_ONE
    try:
        for f in ring.grid():
            b.spend()
            if skew.skew_mul(minus_one, f) != skew.skew_mul(f, minus_one):
                w = (("u", minus_one), ("a", f))
                return _verdict("unit-central", ring, "fails", w, b)
    except BudgetExceeded:
        return _verdict("unit-central", ring, "holds", budget=b, exhausted=True,
                        note="exact: units {1,-1} are central; grid truncated")
    return _verdict("unit-central", ring, "holds", budget=b,
                    note="exact: units {1,-1} are central; grid verified")


# --------------------------------------------------------------------------
# One-sided ideal lattice and quasi-duo

MAXIMAL_IDEAL_LIMIT_NONCOMM = 16
MAXIMAL_IDEAL_LIMIT_COMM = 36


def _ideal_lattice(ops: FiniteOps, side: str) -> dict:
    """All one-sided ideals as {element index set: generator tuple}.

    Every one-sided ideal is the sum of the principal ideals of its
    elements, so joining principal ideals until closure finds them all.
    """
    principal = {}
    for a in range(ops.n):
        p = ops.left_ideal(a) if side == "left" else ops.right_ideal(a)
        principal.setdefault(p, a)
    ideals = {frozenset({ops.zero}): ()}
    frontier = list(ideals)
    while frontier:
        current = frontier.pop()
        for p, gen in principal.items():
            if p <= current:
                continue
            joined = ops.additive_closure(current | p)
            if joined not in ideals:
                ideals[joined] = ideals[current] + (gen,)
                frontier.append(joined)
    return ideals


def enumerate_maximal_one_sided_ideals(ring: RingDescriptor,
                                       side: str) -> tuple[OneSidedIdeal, ...]:
    if not ring.is_finite:
        raise InfiniteRing("ideal enumeration needs a finite ring")
    limit = (
        MAXIMAL_IDEAL_LIMIT_COMM
        if is_commutative(ring)
        else MAXIMAL_IDEAL_LIMIT_NONCOMM
    )
    if ring.order > limit:
        raise BudgetExceeded(
            f"|R| = {ring.order} exceeds ideal-enumeration limit {limit}"
        )
    ops = finite_ops(ring)
    lattice = _ideal_lattice(ops, side)
    everything = frozenset(range(ops.n))
    proper = {s: g for s, g in lattice.items() if s != everything}
    out = []
    for s, gens in proper.items():
        if not any(s < other for other in proper):
            out.append(
                OneSidedIdeal(
                    side=side,
                    elements=frozenset(ops.elems[i] for i in s),
                    generators=tuple(ops.elems[g] for g in gens),
                )
            )
    out.sort(key=lambda ideal: sorted(ops.index[e] for e in ideal.elements))
    return tuple(out)


def check_quasi_duo(ring: RingDescriptor, side: str,
                    budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    prop = f"quasi-duo-{side}"
    ideals = enumerate_maximal_one_sided_ideals(ring, side)
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for ideal in ideals:
            members = sorted(ops.index[e] for e in ideal.elements)
            member_set = frozenset(members)
            for m in members:
                for r in range(ops.n):
                    b.spend()
                    prod = ops.mul[m][r] if side == "left" else ops.mul[r][m]
                    if prod not in member_set:
                        w = tuple(
                            (f"gen{i}", g)
                            for i, g in enumerate(ideal.generators)
                        ) + (("m", ops.elems[m]), ("r", ops.elems[r]))
                        return _verdict(prop, ring, "fails", w, b,
                                        note="maximal ideal is not two-sided")
    except BudgetExceeded:
        return _unknown_budget(prop, ring, b)
    return _verdict(prop, ring, "holds", budget=b)


def check_dubrovin(ring: RingDescriptor,
                   budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("dubrovin check needs a finite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    try:
        for a in range(ops.n):
            target = ops.two_sided_ideal(a)
            b.spend(ops.n)
            if not any(
                ops.right_ideal(c) == target and ops.left_ideal(c) == target
                for c in range(ops.n)
            ):
                return _verdict("dubrovin", ring, "fails",
                                (("a", ops.elems[a]),), b)
    except BudgetExceeded:
        return _unknown_budget("dubrovin", ring, b)
    return _verdict("dubrovin", ring, "holds", budget=b)


def check_idempotent_unit_criterion(ring: RingDescriptor,
                                    budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("idempotent-unit check needs a finite ring")
    ops = finite_ops(ring)
    b = _Budget(budget)
    idem = [e for e in range(ops.n) if ops.mul[e][e] == e]
    try:
        for e in idem:
            for f in idem:
                b.spend()
                if not _comaximal(ops, e, f):
                    continue
                if not any(
                    ops.add[ops.mul[e][u]][ops.mul[f][v]] == ops.one
                    for u in ops.unit_indices
                    for v in ops.unit_indices
                ):
                    w = (("e", ops.elems[e]), ("f", ops.elems[f]))
                    return _verdict("idempotent-unit", ring, "fails", w, b)
    except BudgetExceeded:
        return _unknown_budget("idempotent-unit", ring, b)
    return _verdict("idempotent-unit", ring, "holds", budget=b)


# --------------------------------------------------------------------------
# Exact verdicts for the infinite rings in the zoo

_COMMUTATIVE_EXACT = (
    "kazimirsky-left", "kazimirsky-right", "duo-left", "duo-right",
    "quasi-duo-left", "quasi-duo-right", "unit-central", "dubrovin",
)


def _infinite_verdict(ring: RingDescriptor, prop: str,
                      budget: int) -> PropertyVerdict:
    unknown = _verdict(prop, ring, "unknown",
                       note="no exact rule for this infinite ring")
    if isinstance(ring, IntegerRing):
        if prop in _COMMUTATIVE_EXACT:
            return _verdict(prop, ring, "holds", note="exact: commutative")
        if prop == "sr1":
            return _integer_sr1()
        if prop == "unit-sr1":
            return _verdict(prop, ring, "fails", (("a", 1), ("b", 1)),
                            note="exact: 1+-1 is not a unit of Z")
        if prop == "bezout":
            return _verdict(prop, ring, "holds", note="exact: Z is a PID")
        if prop == "hermite":
            return _verdict(prop, ring, "holds",
                            note="exact: extended gcd construction")
        if prop == "edr-small":
            return _verdict(prop, ring, "holds",
                            note="exact: Smith normal form over Z")
        if prop == "idempotent-unit":
            return _verdict(prop, ring, "fails", (("e", 1), ("f", 1)),
                            note="exact: no unit pair sums to 1")
        return unknown
    if isinstance(ring, QuadraticIntegerRing):
        if prop in _COMMUTATIVE_EXACT:
            return _verdict(prop, ring, "holds", note="exact: commutative")
        if prop == "unit-sr1":
            return _verdict(prop, ring, "fails",
                            (("a", (1, 0)), ("b", (1, 0))),
                            note="exact: units are {1,-1}; 1+-1 not a unit")
        if prop == "idempotent-unit":
            return _verdict(prop, ring, "fails",
                            (("e", (1, 0)), ("f", (1, 0))),
                            note="exact: domain idempotents {0,1}; no unit pair")
        return unknown
    if isinstance(ring, QuadraticFieldRing):
        return _verdict(prop, ring, "holds", note="exact: commutative field")
    if isinstance(ring, SkewSubringS):
        if prop == "unit-central":
            return check_unit_central(ring, budget)
        if prop.startswith("kazimirsky-"):
            return check_kazimirsky(ring, prop.split("-")[1], budget)
        one = skew.SKEW_ONE
        if prop == "unit-sr1":
            return _verdict(prop, ring, "fails", (("a", one), ("b", one)),
                            note="exact: units are {1,-1}; 1+-1 not a unit")
        if prop == "idempotent-unit":
            return _verdict(prop, ring, "fails", (("e", one), ("f", one)),
                            note="exact: domain idempotents {0,1}; no unit pair")
        return unknown
    return unknown


# --------------------------------------------------------------------------
# Dispatch

def check_property(ring: RingDescriptor, prop: str,
                   budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if prop not in PROPERTY_IDS:
        raise ValueError(f"unknown property {prop!r}; known: {PROPERTY_IDS}")
    if prop in ("hermite", "edr-small"):
        from . import reduction

        if not ring.is_finite:
            return _infinite_verdict(ring, prop, budget)
        if prop == "hermite":
            return reduction.check_hermite(ring, budget)
        return reduction.check_edr_small(ring, budget=budget)
    if not ring.is_finite:
        return _infinite_verdict(ring, prop, budget)
    if prop == "bezout":
        return check_bezout(ring, budget)
    if prop == "sr1":
        return check_stable_range_1(ring, budget)
    if prop == "unit-sr1":
        return check_unit_stable_range_1(ring, budget)
    if prop.startswith("kazimirsky-"):
        return check_kazimirsky(ring, prop.split("-")[1], budget)
    if prop.startswith("duo-"):
        return check_duo(ring, prop.split("-")[1], budget)
    if prop.startswith("quasi-duo-"):
        try:
            return check_quasi_duo(ring, prop.split("-")[2], budget)
        except BudgetExceeded as exc:
            return _verdict(prop, ring, "unknown", note=str(exc),
                            exhausted=True)
    if prop == "unit-central":
        return check_unit_central(ring, budget)
    if prop == "dubrovin":
        return check_dubrovin(ring, budget)
    if prop == "idempotent-unit":
        return check_idempotent_unit_criterion(ring, budget)
    raise AssertionError(prop)


# --------------------------------------------------------------------------
# Witness replay


def replay_witness(ring: RingDescriptor, prop: str, witness: dict) -> bool:
    """Re-evaluate the definitional formula on a 'fails' witness.

    Returns True when the witness reproduces the violation.
    """
    if prop in ("hermite", "edr-small"):
        from . import reduction

        return reduction.replay_reduction_witness(ring, prop, witness)
    if not ring.is_finite:
        return _replay_infinite(ring, prop, witness)
    ops = finite_ops(ring)
    idx = ops.index
    if prop == "bezout":
        a, c = idx[witness["a"]], idx[witness["b"]]
        rsum = _sumset(ops, ops.right_ideal(a), ops.right_ideal(c))
        lsum = _sumset(ops, ops.left_ideal(a), ops.left_ideal(c))
        right_ok = any(ops.right_ideal(d) == rsum for d in range(ops.n))
        left_ok = any(ops.left_ideal(d) == lsum for d in range(ops.n))
        return not (right_ok and left_ok)
    if prop == "sr1":
        a, c = idx[witness["a"]], idx[witness["b"]]
        return _comaximal(ops, a, c) and not any(
            ops.is_unit(ops.add[a][ops.mul[c][t]]) for t in range(ops.n)
        )
    if prop == "unit-sr1":
        a, c = idx[witness["a"]], idx[witness["b"]]
        return _comaximal(ops, a, c) and not any(
            ops.is_unit(ops.add[a][ops.mul[c][u]]) for u in ops.unit_indices
        )
    if prop.startswith("kazimirsky-"):
        side = prop.split("-")[1]
        a, u, r = idx[witness["a"]], idx[witness["u"]], idx[witness["r"]]
        if not ops.is_unit(u):
            return False
        if side == "right":
            return ops.mul[ops.mul[u][a]][r] not in ops.right_ideal(a)
        return ops.mul[r][ops.mul[a][u]] not in ops.left_ideal(a)
    if prop.startswith("duo-"):
        side = prop.split("-")[1]
        a, r = idx[witness["a"]], idx[witness["r"]]
        if side == "right":
            return ops.mul[r][a] not in ops.right_ideal(a)
        return ops.mul[a][r] not in ops.left_ideal(a)
    if prop.startswith("quasi-duo-"):
        side = prop.split("-")[2]
        gens = [idx[v] for k, v in witness.items() if k.startswith("gen")]
        m, r = idx[witness["m"]], idx[witness["r"]]
        seed = set()
        for g in gens:
            seed |= ops.left_ideal(g) if side == "left" else ops.right_ideal(g)
        ideal = ops.additive_closure(seed)
        if ideal == frozenset(range(ops.n)) or m not in ideal:
            return False
        # maximality: adjoining any outside element must give all of R
        for s in range(ops.n):
            if s in ideal:
                continue
            extra = ops.left_ideal(s) if side == "left" else ops.right_ideal(s)
            if ops.additive_closure(ideal | extra) != frozenset(range(ops.n)):
                return False
        prod = ops.mul[m][r] if side == "left" else ops.mul[r][m]
        return prod not in ideal
    if prop == "unit-central":
        u, a = idx[witness["u"]], idx[witness["a"]]
        return ops.is_unit(u) and ops.mul[u][a] != ops.mul[a][u]
    if prop == "dubrovin":
        a = idx[witness["a"]]
        target = ops.two_sided_ideal(a)
        return not any(
            ops.right_ideal(c) == target and ops.left_ideal(c) == target
            for c in range(ops.n)
        )
    if prop == "idempotent-unit":
        e, f = idx[witness["e"]], idx[witness["f"]]
        if ops.mul[e][e] != e or ops.mul[f][f] != f:
            return False
        return _comaximal(ops, e, f) and not any(
            ops.add[ops.mul[e][u]][ops.mul[f][v]] == ops.one
            for u in ops.unit_indices
            for v in ops.unit_indices
        )
    raise ValueError(f"no replay rule for {prop}")


def _replay_infinite(ring: RingDescriptor, prop: str, witness: dict) -> bool:
    if isinstance(ring, IntegerRing):
        if prop == "sr1":
            a, c = witness["a"], witness["b"]
            return (
                math.gcd(a, c) == 1
                and (c == 0 and a not in (1, -1)
                     or c != 0 and (1 - a) % c != 0 and (-1 - a) % c != 0)
            )
        if prop in ("unit-sr1", "idempotent-unit"):
            ring_units = units(ring)
            a = witness.get("a", witness.get("e"))
            c = witness.get("b", witness.get("f"))
            if prop == "unit-sr1":
                return math.gcd(a, c) == 1 and not any(
                    a + c * u in ring_units for u in ring_units
                )
            return not any(
                a * u + c * v == 1 for u in ring_units for v in ring_units
            )
    if isinstance(ring, (QuadraticIntegerRing, SkewSubringS)):
        ring_units = units(ring)
        mul, add = ring.mul, ring.add
        one = ring.one()
        if prop == "unit-sr1":
            a, c = witness["a"], witness["b"]
            return not any(add(a, mul(c, u)) in ring_units for u in ring_units)
        if prop == "idempotent-unit":
            e, f = witness["e"], witness["f"]
            if mul(e, e) != e or mul(f, f) != f:
                return False
            return not any(
                add(mul(e, u), mul(f, v)) == one
                for u in ring_units
                for v in ring_units
            )
        if prop == "unit-central" or prop.startswith("kazimirsky-"):
            u = witness["u"]
            a = witness["a"]
            return u in ring_units and mul(u, a) != mul(a, u)
    raise ValueError(f"no replay rule for {prop} on {ring.spec_string()}")


# --------------------------------------------------------------------------
# Open-problem probe


@dataclass(frozen=True)
class ProbeEntry:
    ring: RingDescriptor
    unit_central: bool
    stable_range_1: bool
    commutative: bool

    @property
    def qualifies(self) -> bool:
        return self.unit_central and self.stable_range_1

    @property
    def counterexample(self) -> bool:
        return self.qualifies and not self.commutative


@dataclass(frozen=True)
class ProbeReport:
    max_order: int
    entries: tuple = field(default_factory=tuple)

    @property
    def counterexamples(self) -> tuple:
        return tuple(e for e in self.entries if e.counterexample)


def probe_unit_central_commutative(max_order: int,
                                   ring_pool=None) -> ProbeReport:
    """Consistency probe for 'is every unit-central SR1 ring commutative?'.

    Tests every finite pool ring with |R| <= max_order; reports the
    (unit-central, sr1, commutative) triple per ring and surfaces any
    counterexample.  It never asserts the conjecture itself.
    """
    if ring_pool is None:
        from .zoo import builtin_zoo

        ring_pool = builtin_zoo()
    entries = []
    for ring in ring_pool:
        if not ring.is_finite or ring.order > max_order:
            continue
        uc = check_unit_central(ring).verdict == "holds"
        sr1 = check_stable_range_1(ring).verdict == "holds"
        entries.append(
            ProbeEntry(
                ring=ring,
                unit_central=uc,
                stable_range_1=sr1,
                commutative=is_commutative(ring),
            )
        )
    return ProbeReport(max_order=max_order, entries=tuple(entries))
