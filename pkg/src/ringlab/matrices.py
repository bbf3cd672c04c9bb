"""Rectangular matrices with entries in one ring, plus invertibility."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, DimensionMismatch, InfiniteRing
from .rings import (
    IntegerRing,
    RingDescriptor,
    enumerate_elements,
    finite_ops,
    is_commutative,
    is_unit,
)

INVERSE_SEARCH_LIMIT = 2 ** 20


@dataclass(frozen=True)
class MatrixOverRing:
    ring: RingDescriptor
    rows: tuple  # tuple of row tuples, row-major

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not self.rows or not self.rows[0]:
            raise DimensionMismatch("both dimensions must be >= 1")
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise DimensionMismatch("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_diagonal(self) -> bool:
        z = self.ring.zero()
        return all(
            self.rows[i][j] == z
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def __matmul__(self, other: "MatrixOverRing") -> "MatrixOverRing":
        if self.ring != other.ring:
            raise DimensionMismatch("mixed rings")
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        R = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = R.zero()
                for t in range(self.ncols):
                    acc = R.add(acc, R.mul(self.rows[i][t], other.rows[t][j]))
                row.append(acc)
            out.append(tuple(row))
        return MatrixOverRing(R, tuple(out))


def identity(ring: RingDescriptor, n: int) -> MatrixOverRing:
    z, o = ring.zero(), ring.one()
    return MatrixOverRing(
        ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
    )


def det(M: MatrixOverRing):
    """Leibniz determinant; valid over commutative rings only."""
    if not M.is_square():
        raise DimensionMismatch("determinant of non-square matrix")
    R = M.ring
    n = M.nrows
    acc = R.zero()
    for perm in itertools.permutations(range(n)):
        term = R.one()
        for i in range(n):
            term = R.mul(term, M.rows[i][perm[i]])
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        acc = R.add(acc, term if inversions % 2 == 0 else R.neg(term))
    return acc


def _adjugate(M: MatrixOverRing) -> MatrixOverRing:
    R = M.ring
    n = M.nrows
    if n == 1:
        return MatrixOverRing(R, ((R.one(),),))
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = MatrixOverRing(
                R,
                tuple(
                    tuple(M.rows[r][c] for c in range(n) if c != j)
                    for r in range(n)
                    if r != i
                ),
            )
            d = det(minor)
            cof[j][i] = d if (i + j) % 2 == 0 else R.neg(d)  # transposed
    return MatrixOverRing(R, tuple(tuple(row) for row in cof))


def mat_invertible(M: MatrixOverRing) -> MatrixOverRing | None:
    """Two-sided inverse, or None.

    Commutative rings with decidable units use determinant/adjugate
    (over IntegerRing: det in {1, -1}); small finite noncommutative
    rings fall back to an exhaustive candidate search.
    """
    if not M.is_square():
        raise DimensionMismatch("inverse of non-square matrix")
    R = M.ring
    n = M.nrows
    if isinstance(R, IntegerRing):
        d = det(M)
        if d not in (1, -1):
            return None
        adj = _adjugate(M)
        rows = tuple(tuple(x * d for x in row) for row in adj.rows)  # 1/d = d
        return MatrixOverRing(R, rows)
    if R.is_finite and is_commutative(R):
        d = det(M)
        if not is_unit(R, d):
            return None
        ops = finite_ops(R)
        dinv_idx = next(
            v
            for v in range(ops.n)
            if ops.mul[ops.index[d]][v] == ops.one
        )
        dinv = ops.elems[dinv_idx]
        adj = _adjugate(M)
        rows = tuple(tuple(R.mul(dinv, x) for x in row) for row in adj.rows)
        inv = MatrixOverRing(R, rows)
        assert (M @ inv).rows == identity(R, n).rows
        return inv
    if R.is_finite:
        if R.order ** (n * n) > INVERSE_SEARCH_LIMIT:
            raise BudgetExceeded(
                f"inverse search space {R.order}^{n * n} exceeds 2^20"
            )
        elems = enumerate_elements(R)
        ident = identity(R, n).rows
        for flat in itertools.product(elems, repeat=n * n):
            cand = MatrixOverRing(
                R, tuple(flat[i * n:(i + 1) * n] for i in range(n))
            )
            if (M @ cand).rows == ident and (cand @ M).rows == ident:
                return cand
        return None
    raise InfiniteRing(f"no invertibility rule for {R.spec_string()}")
