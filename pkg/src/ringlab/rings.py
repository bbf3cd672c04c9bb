"""Ring descriptors with exact arithmetic on canonical payloads.

Each descriptor is a frozen dataclass that doubles as the arithmetic
provider for its elements.  Element payloads are plain hashable values:

* ModularRing        -- int residue in [0, n)
* IntegerRing        -- int
* MatrixRing / UpperTriangularRing -- tuple of row tuples of base payloads
* ProductRing        -- tuple of factor payloads
* QuadraticIntegerRing -- (int, int) meaning a + b*sqrt(-7)
* QuadraticFieldRing -- QuadraticValue
* SkewSubringS       -- tuple of QuadraticValue coefficients (see skew.py)

Canonical form is enforced by construction, so payload equality is ring
equality and payloads can live in Python sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from . import skew
from .errors import InfiniteRing, UnsupportedDescriptor
from .quadratic import QuadraticValue


@dataclass(frozen=True)
class RingBase:
    """Shared helpers; subclasses provide add/neg/mul/zero/one."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def spec_string(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(RingBase):
    order = None

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def spec_string(self) -> str:
        return "Z"


@dataclass(frozen=True)
class ModularRing(RingBase):
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise UnsupportedDescriptor(f"modulus {self.modulus} < 2 (needs 1 != 0)")

    @property
    def order(self):
        return self.modulus

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def spec_string(self) -> str:
        return f"Zn({self.modulus})"


def _mat_zero(size, base):
    z = base.zero()
    return tuple((z,) * size for _ in range(size))


def _mat_one(size, base):
    z, o = base.zero(), base.one()
    return tuple(tuple(o if i == j else z for j in range(size)) for i in range(size))


@dataclass(frozen=True)
class MatrixRing(RingBase):
    size: int
    base: RingBase

    def __post_init__(self):
        if self.size < 1:
            raise UnsupportedDescriptor(f"matrix size {self.size} < 1")

    @property
    def order(self):
        b = self.base.order
        return None if b is None else b ** (self.size * self.size)

    def zero(self):
        return _mat_zero(self.size, self.base)

    def one(self):
        return _mat_one(self.size, self.base)

    def add(self, a, b):
        badd = self.base.add
        return tuple(
            tuple(badd(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def neg(self, a):
        bneg = self.base.neg
        return tuple(tuple(bneg(x) for x in row) for row in a)

    def mul(self, a, b):
        k = self.size
        badd, bmul, bz = self.base.add, self.base.mul, self.base.zero()
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = bz
                for t in range(k):
                    acc = badd(acc, bmul(a[i][t], b[t][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def spec_string(self) -> str:
        return f"Mat({self.size},{self.base.spec_string()})"


@dataclass(frozen=True)
class UpperTriangularRing(RingBase):
    size: int
    base: RingBase

    def __post_init__(self):
        if self.size < 2:
            raise UnsupportedDescriptor(f"triangular size {self.size} < 2")

    @property
    def order(self):
        b = self.base.order
        k = self.size
        return None if b is None else b ** (k * (k + 1) // 2)

    def _full(self):
        return MatrixRing(self.size, self.base)

    def zero(self):
        return _mat_zero(self.size, self.base)

    def one(self):
        return _mat_one(self.size, self.base)

    def add(self, a, b):
        return self._full().add(a, b)

    def neg(self, a):
        return self._full().neg(a)

    def mul(self, a, b):
        return self._full().mul(a, b)

    def spec_string(self) -> str:
        return f"Tri({self.size},{self.base.spec_string()})"


@dataclass(frozen=True)
class ProductRing(RingBase):
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise UnsupportedDescriptor("empty product")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def order(self):
        total = 1
        for f in self.factors:
            if f.order is None:
                return None
            total *= f.order
        return total

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def one(self):
        return tuple(f.one() for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def spec_string(self) -> str:
        return " x ".join(f.spec_string() for f in self.factors)


@dataclass(frozen=True)
class QuadraticIntegerRing(RingBase):
    """Z[sqrt(-7)]; payload (a, b) for a + b*sqrt(-7)."""

    order = None

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] - 7 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def spec_string(self) -> str:
        return "Zi7"


@dataclass(frozen=True)
class QuadraticFieldRing(RingBase):
    """Q(sqrt(-7)); payload QuadraticValue."""

    order = None

    def zero(self):
        return QuadraticValue(0, 0)

    def one(self):
        return QuadraticValue(1, 0)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def spec_string(self) -> str:
        return "Qi7"


@dataclass(frozen=True)
class SkewSubringS(RingBase):
    """The subring of K[x;sigma] with integral constant coefficient.

    max_degree / max_height only bound sampling sweeps; arithmetic itself
    is exact and unbounded.
    """

    max_degree: int = 3
    max_height: int = 2

    def __post_init__(self):
        if self.max_degree < 1 or self.max_height < 1:
            raise UnsupportedDescriptor("sampling bounds must be >= 1")

    order = None

    def zero(self):
        return skew.SKEW_ZERO

    def one(self):
        return skew.SKEW_ONE

    def add(self, a, b):
        return skew.skew_add(a, b)

    def neg(self, a):
        return skew.skew_neg(a)

    def mul(self, a, b):
        return skew.skew_mul(a, b)

    def grid(self):
        return skew.s_grid(self.max_degree, self.max_height)

    def grid_size(self) -> int:
        return skew.s_grid_size(self.max_degree, self.max_height)

    def spec_string(self) -> str:
        return f"SkewS({self.max_degree},{self.max_height})"


RingDescriptor = RingBase


def make_ring(descriptor: RingDescriptor) -> RingDescriptor:
    """Validate a descriptor and return its arithmetic provider.

    Descriptors validate on construction, so this re-checks and returns
    the descriptor itself; it exists as the documented entry point.
    """
    if not isinstance(descriptor, RingBase):
        raise UnsupportedDescriptor(f"not a ring descriptor: {descriptor!r}")
    return descriptor


# --------------------------------------------------------------------------
# Enumeration (fixed total order: zero, one, then lexicographic payloads)


def element_sort_key(ring: RingDescriptor, a):
    if isinstance(ring, (ModularRing, IntegerRing)):
        return a
    if isinstance(ring, (MatrixRing, UpperTriangularRing)):
        return tuple(
            tuple(element_sort_key(ring.base, x) for x in row) for row in a
        )
    if isinstance(ring, ProductRing):
        return tuple(element_sort_key(f, x) for f, x in zip(ring.factors, a))
    if isinstance(ring, QuadraticIntegerRing):
        return a
    if isinstance(ring, QuadraticFieldRing):
        return (a.a, a.b)
    if isinstance(ring, SkewSubringS):
        return tuple((c.a, c.b) for c in a)
    raise UnsupportedDescriptor(str(ring))


@cache
def enumerate_elements(ring: RingDescriptor) -> tuple:
    """All elements, deterministically: zero first, one second, then
    lexicographic on canonical payloads."""
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.spec_string()} is infinite")
    if isinstance(ring, ModularRing):
        return tuple(range(ring.modulus))
    if isinstance(ring, MatrixRing):
        base = enumerate_elements(ring.base)
        k = ring.size
        elems = [
            tuple(flat[i * k:(i + 1) * k] for i in range(k))
            for flat in itertools.product(base, repeat=k * k)
        ]
    elif isinstance(ring, UpperTriangularRing):
        base = enumerate_elements(ring.base)
        k = ring.size
        z = ring.base.zero()
        positions = [(i, j) for i in range(k) for j in range(i, k)]
        elems = []
        for vals in itertools.product(base, repeat=len(positions)):
            m = [[z] * k for _ in range(k)]
            for (i, j), v in zip(positions, vals):
                m[i][j] = v
            elems.append(tuple(tuple(row) for row in m))
    elif isinstance(ring, ProductRing):
        elems = list(
            itertools.product(*(enumerate_elements(f) for f in ring.factors))
        )
    else:
        raise UnsupportedDescriptor(str(ring))
    zero, one = ring.zero(), ring.one()

    def key(a):
        if a == zero:
            return (0,)
        if a == one:
            return (1,)
        return (2, element_sort_key(ring, a))

    return tuple(sorted(elems, key=key))


# --------------------------------------------------------------------------
# Cayley tables for fast exhaustive search on finite rings


class FiniteOps:
    """Index-based arithmetic for a finite ring: element list plus
    addition/multiplication/negation tables and the unit set."""

    def __init__(self, ring: RingDescriptor):
        self.ring = ring
        self.elems = enumerate_elements(ring)
        self.n = len(self.elems)
        self.index = {a: i for i, a in enumerate(self.elems)}
        idx = self.index
        self.zero = idx[ring.zero()]
        self.one = idx[ring.one()]
        add, mul, neg = ring.add, ring.mul, ring.neg
        self.add = [
            [idx[add(a, b)] for b in self.elems] for a in self.elems
        ]
        self.mul = [
            [idx[mul(a, b)] for b in self.elems] for a in self.elems
        ]
        self.neg = [idx[neg(a)] for a in self.elems]
        self._units = None
        self._right_ideals = None
        self._left_ideals = None

    @property
    def unit_indices(self) -> tuple:
        if self._units is None:
            units = []
            mul, one, n = self.mul, self.one, self.n
            for u in range(n):
                row = mul[u]
                for v in range(n):
                    if row[v] == one and mul[v][u] == one:
                        units.append(u)
                        break
            self._units = tuple(units)
            self._unit_set = frozenset(units)
        return self._units

    def is_unit(self, i: int) -> bool:
        self.unit_indices
        return i in self._unit_set

    def right_ideal(self, a: int) -> frozenset:
        if self._right_ideals is None:
            self._right_ideals = [None] * self.n
        cached = self._right_ideals[a]
        if cached is None:
            cached = frozenset(self.mul[a])
            self._right_ideals[a] = cached
        return cached

    def left_ideal(self, a: int) -> frozenset:
        if self._left_ideals is None:
            self._left_ideals = [None] * self.n
        cached = self._left_ideals[a]
        if cached is None:
            cached = frozenset(self.mul[r][a] for r in range(self.n))
            self._left_ideals[a] = cached
        return cached

    def additive_closure(self, seed) -> frozenset:
        """Smallest additively closed set containing 0 and the seed
        (finite abelian group, so a subgroup)."""
        add = self.add
        closed = {self.zero}
        frontier = [self.zero]
        gens = list(dict.fromkeys(seed))
        for g in gens:
            if g not in closed:
                closed.add(g)
                frontier.append(g)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = add[x][g]
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
        return frozenset(closed)

    def two_sided_ideal(self, a: int) -> frozenset:
        products = {
            self.mul[self.mul[r][a]][s]
            for r in range(self.n)
            for s in range(self.n)
        }
        return self.additive_closure(products)


@cache
def finite_ops(ring: RingDescriptor) -> FiniteOps:
    return FiniteOps(ring)


# --------------------------------------------------------------------------
# Public element-level operations


def units(ring: RingDescriptor) -> frozenset:
    """Two-sided invertible elements; exact norm rules for the infinite
    rings that admit them."""
    if ring.is_finite:
        ops = finite_ops(ring)
        return frozenset(ops.elems[i] for i in ops.unit_indices)
    if isinstance(ring, QuadraticIntegerRing):
        # a^2 + 7 b^2 = 1 forces b = 0, a = +-1
        return frozenset({(1, 0), (-1, 0)})
    if isinstance(ring, SkewSubringS):
        return frozenset({skew.SKEW_ONE, skew.SKEW_MINUS_ONE})
    if isinstance(ring, IntegerRing):
        return frozenset({1, -1})
    raise InfiniteRing(f"no exact unit rule for {ring.spec_string()}")


def is_unit(ring: RingDescriptor, a) -> bool:
    if isinstance(ring, QuadraticFieldRing):
        return not a.is_zero()
    return a in units(ring)


def principal_ideal(ring: RingDescriptor, a, side: str) -> frozenset:
    """aR (side='right') or Ra (side='left') as an explicit set."""
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.spec_string()} is infinite")
    ops = finite_ops(ring)
    i = ops.index[a]
    idx_set = ops.right_ideal(i) if side == "right" else ops.left_ideal(i)
    return frozenset(ops.elems[j] for j in idx_set)


def two_sided_ideal(ring: RingDescriptor, a) -> frozenset:
    """RaR: additive closure of {r*a*s}."""
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.spec_string()} is infinite")
    ops = finite_ops(ring)
    idx_set = ops.two_sided_ideal(ops.index[a])
    return frozenset(ops.elems[j] for j in idx_set)


@cache
def is_commutative(ring: RingDescriptor) -> bool:
    if isinstance(ring, (IntegerRing, ModularRing, QuadraticIntegerRing,
                         QuadraticFieldRing)):
        return True
    if isinstance(ring, SkewSubringS):
        return False
    if isinstance(ring, ProductRing):
        return all(is_commutative(f) for f in ring.factors)
    if ring.is_finite:
        ops = finite_ops(ring)
        mul = ops.mul
        return all(
            mul[a][b] == mul[b][a]
            for a in range(ops.n)
            for b in range(a + 1, ops.n)
        )
    raise InfiniteRing(f"cannot decide commutativity of {ring.spec_string()}")
