"""Diagonal reduction with certified transforms.

Integer matrices go through exact Smith elimination; ModularRing lifts to
the integers and reduces the transforms mod n; other small finite rings
use a breadth-first orbit search over elementary transformations.  Every
certificate returned by a public operation passes verify_certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InfiniteRing,
    NotHermite,
    NotReducible,
)
from .matrices import MatrixOverRing, identity, mat_invertible
from .properties import DEFAULT_BUDGET, PropertyVerdict, _Budget, _verdict, _unknown_budget
from .rings import (
    IntegerRing,
    ModularRing,
    RingDescriptor,
    enumerate_elements,
    finite_ops,
)

ORBIT_STATE_LIMIT = 2 ** 20
SMITH_MAX_SIZE = 6


@dataclass(frozen=True)
class ReductionCertificate:
    ring: RingDescriptor
    p: MatrixOverRing
    q: MatrixOverRing
    d: MatrixOverRing
    p_inverse: MatrixOverRing | None = None
    q_inverse: MatrixOverRing | None = None

    @property
    def diagonal(self) -> tuple:
        return self.d.diagonal()


# --------------------------------------------------------------------------
# Exact Smith form over the integers


def _ident_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _find_pivot(B, s, strategy):
    best = None
    for i in range(s, len(B)):
        for j in range(s, len(B[0])):
            if B[i][j] == 0:
                continue
            if strategy == "first":
                return (i, j)
            if best is None or abs(B[i][j]) < abs(B[best[0]][best[1]]):
                best = (i, j)
    return best


def _smith_ints(mat, strategy="min-abs"):
    """Return (P, D, Q) as integer row lists with P*mat*Q = D,
    det P, det Q in {1, -1}, d_i >= 0 and d_i | d_{i+1}."""
    B = [list(r) for r in mat]
    m, n = len(B), len(B[0])
    P, Q = _ident_rows(m), _ident_rows(n)

    def row_op(i, j, c):  # row_i += c * row_j
        B[i] = [x + c * y for x, y in zip(B[i], B[j])]
        P[i] = [x + c * y for x, y in zip(P[i], P[j])]

    def col_op(j, i, c):  # col_j += c * col_i
        for row in B:
            row[j] += c * row[i]
        for row in Q:
            row[j] += c * row[i]

    def row_swap(i, j):
        B[i], B[j] = B[j], B[i]
        P[i], P[j] = P[j], P[i]

    def col_swap(i, j):
        for row in B:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        B[i] = [-x for x in B[i]]
        P[i] = [-x for x in P[i]]

    for s in range(min(m, n)):
        while True:
            piv = _find_pivot(B, s, strategy)
            if piv is None:
                break
            if piv[0] != s:
                row_swap(s, piv[0])
            if piv[1] != s:
                col_swap(s, piv[1])
            clean = False
            while not clean:
                clean = True
                for i in range(s + 1, m):
                    if B[i][s]:
                        q = B[i][s] // B[s][s]
                        row_op(i, s, -q)
                        if B[i][s]:
                            row_swap(s, i)
                            clean = False
                for j in range(s + 1, n):
                    if B[s][j]:
                        q = B[s][j] // B[s][s]
                        col_op(j, s, -q)
                        if B[s][j]:
                            col_swap(s, j)
                            clean = False
            bad = next(
                (
                    (i, j)
                    for i in range(s + 1, m)
                    for j in range(s + 1, n)
                    if B[i][j] % B[s][s]
                ),
                None,
            )
            if bad is None:
                break
            row_op(s, bad[0], 1)
        if s < min(m, n) and B[s][s] < 0:
            row_negate(s)
    return P, B, Q


def smith_form_integers(A, strategy="min-abs",
                        max_size=SMITH_MAX_SIZE) -> ReductionCertificate:
    ring = IntegerRing()
    if isinstance(A, MatrixOverRing):
        rows = A.rows
    else:
        rows = tuple(tuple(r) for r in A)
        A = MatrixOverRing(ring, rows)
    if A.nrows > max_size or A.ncols > max_size:
        raise BudgetExceeded(f"matrix larger than {max_size}x{max_size}")
    P, D, Q = _smith_ints(rows, strategy)
    cert = ReductionCertificate(
        ring=ring,
        p=MatrixOverRing(ring, tuple(tuple(r) for r in P)),
        q=MatrixOverRing(ring, tuple(tuple(r) for r in Q)),
        d=MatrixOverRing(ring, tuple(tuple(r) for r in D)),
    )
    cert = ReductionCertificate(
        ring=ring,
        p=cert.p,
        q=cert.q,
        d=cert.d,
        p_inverse=mat_invertible(cert.p),
        q_inverse=mat_invertible(cert.q),
    )
    ok, clause = verify_certificate(A, cert)
    assert ok, f"internal: Smith certificate failed clause {clause!r}"
    return cert


# --------------------------------------------------------------------------
# Hermite reduction of a pair


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _int_pair_transform(a, b):
    """2x2 unimodular P with (a, b) P = (gcd, 0), gcd >= 0."""
    g, s, t = _xgcd(a, b)
    if g == 0:
        return 0, ((1, 0), (0, 1))
    return g, ((s, -(b // g)), (t, a // g))


def hermite_reduce(ring: RingDescriptor, a, b, orientation: str):
    """Reduce the pair (a, b) to (d, 0).

    Row orientation returns invertible P with (a, b) P = (d, 0); column
    orientation returns Q with Q (a, b)^T = (d, 0)^T.
    """
    if isinstance(ring, IntegerRing):
        d, prows = _int_pair_transform(a, b)
        if orientation == "column":
            prows = tuple(zip(*prows))  # transpose: Q (a b)^T = (d 0)^T
        return MatrixOverRing(ring, prows), d
    if isinstance(ring, ModularRing):
        n = ring.modulus
        d, prows = _int_pair_transform(a % n, b % n)
        mod_rows = tuple(tuple(x % n for x in row) for row in prows)
        if orientation == "column":
            mod_rows = tuple(zip(*mod_rows))
        return MatrixOverRing(ring, mod_rows), d % n
    if ring.is_finite:
        if ring.order > 36:
            raise BudgetExceeded(f"|R| = {ring.order} > 36 for pair BFS")
        state = ((a, b),) if orientation == "row" else ((a,), (b,))
        try:
            cert = diagonal_reduce(ring, MatrixOverRing(ring, state))
        except NotReducible as exc:
            raise NotHermite(exc.orbit_size) from exc
        if orientation == "row":
            # P A Q = D with P a 1x1 unit: A Q = P^-1 D = (d, 0)
            d = ring.mul(cert.p_inverse.entry(0, 0), cert.d.entry(0, 0))
            assert (MatrixOverRing(ring, state) @ cert.q).rows == ((d, ring.zero()),)
            return cert.q, d
        d = ring.mul(cert.d.entry(0, 0), cert.q_inverse.entry(0, 0))
        assert (cert.p @ MatrixOverRing(ring, state)).rows == ((d,), (ring.zero(),))
        return cert.p, d
    raise InfiniteRing(f"no pair reduction for {ring.spec_string()}")


# --------------------------------------------------------------------------
# Orbit search over elementary transformations (finite rings)


def _gen_matrices(ops, k):
    """(G, G_inverse) index-matrix pairs: transvections I + r*E_ij and
    non-identity diagonal unit matrices."""
    ident = tuple(
        tuple(ops.one if i == j else ops.zero for j in range(k))
        for i in range(k)
    )
    gens = []
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            for r in range(ops.n):
                if r == ops.zero:
                    continue
                g = [list(row) for row in ident]
                ginv = [list(row) for row in ident]
                g[i][j] = r
                ginv[i][j] = ops.neg[r]
                gens.append(
                    (tuple(map(tuple, g)), tuple(map(tuple, ginv)))
                )
    unit_inv = {}
    for u in ops.unit_indices:
        unit_inv[u] = next(
            v for v in ops.unit_indices if ops.mul[u][v] == ops.one
        )
    for diag in itertools.product(ops.unit_indices, repeat=k):
        if all(u == ops.one for u in diag):
            continue
        g = [list(row) for row in ident]
        ginv = [list(row) for row in ident]
        for i, u in enumerate(diag):
            g[i][i] = u
            ginv[i][i] = unit_inv[u]
        gens.append((tuple(map(tuple, g)), tuple(map(tuple, ginv))))
    return tuple(gens)


def _idx_matmul(ops, A, B):
    add, mul, zero = ops.add, ops.mul, ops.zero
    rows = len(A)
    inner = len(B)
    cols = len(B[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for t in range(inner):
                acc = add[acc][mul[A[i][t]][B[t][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _chain_ok_idx(ops, diag_entries):
    for d1, d2 in zip(diag_entries, diag_entries[1:]):
        allowed = ops.left_ideal(d1) & ops.right_ideal(d1)
        if not ops.two_sided_ideal(d2) <= allowed:
            return False
    return True


def _is_target_idx(ops, state):
    m, n = len(state), len(state[0])
    for i in range(m):
        for j in range(n):
            if i != j and state[i][j] != ops.zero:
                return False
    return _chain_ok_idx(ops, [state[i][i] for i in range(min(m, n))])


class _OrbitComponent:
    def __init__(self, root, parents, target):
        self.root = root
        self.parents = parents  # state -> (parent_state, move) ; root -> None
        self.target = target  # chain-condition diagonal state, or None


_ORBIT_CACHE: dict = {}


def _explore_component(ring, root, budget: _Budget) -> _OrbitComponent:
    ops = finite_ops(ring)
    m, n = len(root), len(root[0])
    left = _gen_matrices(ops, m)
    right = _gen_matrices(ops, n)
    parents = {root: None}
    target = root if _is_target_idx(ops, root) else None
    frontier = [root]
    while frontier:
        nxt = []
        for state in frontier:
            for gi, (g, _) in enumerate(left):
                budget.spend()
                new = _idx_matmul(ops, g, state)
                if new not in parents:
                    parents[new] = (state, ("L", gi))
                    nxt.append(new)
                    if target is None and _is_target_idx(ops, new):
                        target = new
            for gi, (g, _) in enumerate(right):
                budget.spend()
                new = _idx_matmul(ops, state, g)
                if new not in parents:
                    parents[new] = (state, ("R", gi))
                    nxt.append(new)
                    if target is None and _is_target_idx(ops, new):
                        target = new
        frontier = nxt
    return _OrbitComponent(root, parents, target)


def _path_moves(component, state):
    moves = []
    cur = state
    while component.parents[cur] is not None:
        parent, move = component.parents[cur]
        moves.append(move)
        cur = parent
    moves.reverse()
    return moves  # applied in order, root -> state


def _accumulate(ops, m, n, moves):
    """Compose generator moves into (P, Pinv, Q, Qinv) with
    X = P root Q after applying the moves to root."""
    left = _gen_matrices(ops, m)
    right = _gen_matrices(ops, n)
    ident_m = tuple(
        tuple(ops.one if i == j else ops.zero for j in range(m)) for i in range(m)
    )
    ident_n = tuple(
        tuple(ops.one if i == j else ops.zero for j in range(n)) for i in range(n)
    )
    P, Pinv, Q, Qinv = ident_m, ident_m, ident_n, ident_n
    for side, gi in moves:
        if side == "L":
            g, ginv = left[gi]
            P = _idx_matmul(ops, g, P)
            Pinv = _idx_matmul(ops, Pinv, ginv)
        else:
            g, ginv = right[gi]
            Q = _idx_matmul(ops, Q, g)
            Qinv = _idx_matmul(ops, ginv, Qinv)
    return P, Pinv, Q, Qinv


def _idx_to_matrix(ring, ops, state) -> MatrixOverRing:
    return MatrixOverRing(
        ring, tuple(tuple(ops.elems[x] for x in row) for row in state)
    )


def _orbit_reduce(ring, A: MatrixOverRing, budget: _Budget) -> ReductionCertificate:
    ops = finite_ops(ring)
    m, n = A.nrows, A.ncols
    if ring.order ** (m * n) > ORBIT_STATE_LIMIT:
        raise BudgetExceeded(
            f"state space {ring.order}^{m * n} exceeds 2^20"
        )
    state = tuple(tuple(ops.index[x] for x in row) for row in A.rows)
    key = (ring, (m, n))
    cache = _ORBIT_CACHE.setdefault(key, {"state2comp": {}, "components": []})
    comp = cache["state2comp"].get(state)
    if comp is None:
        comp = _explore_component(ring, state, budget)
        cache["components"].append(comp)
        for s in comp.parents:
            cache["state2comp"][s] = comp
    if comp.target is None:
        raise NotReducible(len(comp.parents))
    # state = Ps root Qs ; target = Pt root Qt  =>  target = Pt Ps^-1 state Qs^-1 Qt
    Ps, Psinv, Qs, Qsinv = _accumulate(ops, m, n, _path_moves(comp, state))
    Pt, Ptinv, Qt, Qtinv = _accumulate(ops, m, n, _path_moves(comp, comp.target))
    P = _idx_matmul(ops, Pt, Psinv)
    Pinv = _idx_matmul(ops, Ps, Ptinv)
    Q = _idx_matmul(ops, Qsinv, Qt)
    Qinv = _idx_matmul(ops, Qtinv, Qs)
    cert = ReductionCertificate(
        ring=ring,
        p=_idx_to_matrix(ring, ops, P),
        q=_idx_to_matrix(ring, ops, Q),
        d=_idx_to_matrix(ring, ops, comp.target),
        p_inverse=_idx_to_matrix(ring, ops, Pinv),
        q_inverse=_idx_to_matrix(ring, ops, Qinv),
    )
    ok, clause = verify_certificate(A, cert)
    assert ok, f"internal: orbit certificate failed clause {clause!r}"
    return cert


# --------------------------------------------------------------------------
# Dispatch


def diagonal_reduce(ring: RingDescriptor, A: MatrixOverRing,
                    budget: int | _Budget = DEFAULT_BUDGET) -> ReductionCertificate:
    if A.ring != ring:
        raise DimensionMismatch("matrix ring does not match descriptor")
    b = budget if isinstance(budget, _Budget) else _Budget(budget)
    if isinstance(ring, IntegerRing):
        return smith_form_integers(A)
    if isinstance(ring, ModularRing):
        return _modular_reduce(ring, A)
    if ring.is_finite:
        return _orbit_reduce(ring, A, b)
    raise InfiniteRing(f"no reduction over {ring.spec_string()}")


def _modular_reduce(ring: ModularRing, A: MatrixOverRing) -> ReductionCertificate:
    n = ring.modulus
    zring = IntegerRing()
    lifted = MatrixOverRing(zring, A.rows)  # residues are already integers
    zcert = smith_form_integers(lifted)

    def reduce_mat(M):
        return MatrixOverRing(
            ring, tuple(tuple(x % n for x in row) for row in M.rows)
        )

    cert = ReductionCertificate(
        ring=ring,
        p=reduce_mat(zcert.p),
        q=reduce_mat(zcert.q),
        d=reduce_mat(zcert.d),
        p_inverse=reduce_mat(zcert.p_inverse),
        q_inverse=reduce_mat(zcert.q_inverse),
    )
    ok, clause = verify_certificate(A, cert)
    assert ok, f"internal: mod-{n} certificate failed clause {clause!r}"
    return cert


# --------------------------------------------------------------------------
# Certificate verification


def _chain_ok(ring, diag_entries) -> bool:
    if isinstance(ring, IntegerRing):
        for d1, d2 in zip(diag_entries, diag_entries[1:]):
            if d1 < 0 or d2 < 0:
                return False
            if d1 == 0 and d2 != 0:
                return False
            if d1 != 0 and d2 % d1 != 0:
                return False
        return not diag_entries or diag_entries[0] >= 0
    ops = finite_ops(ring)
    return _chain_ok_idx(ops, [ops.index[d] for d in diag_entries])


def verify_certificate(A: MatrixOverRing, cert: ReductionCertificate):
    """Recompute everything the certificate claims.

    Returns (True, "") or (False, first failing clause).
    """
    ring = cert.ring
    if A.ring != ring:
        raise DimensionMismatch("matrix ring mismatch")
    if (cert.p.nrows != cert.p.ncols or cert.q.nrows != cert.q.ncols
            or cert.p.ncols != A.nrows or cert.q.nrows != A.ncols
            or cert.d.nrows != A.nrows or cert.d.ncols != A.ncols):
        raise DimensionMismatch("certificate shapes incompatible with A")
    if (cert.p @ A @ cert.q).rows != cert.d.rows:
        return False, "PAQ = D"
    for mat, inv, clause in (
        (cert.p, cert.p_inverse, "P invertible"),
        (cert.q, cert.q_inverse, "Q invertible"),
    ):
        if inv is not None:
            ident = identity(ring, mat.nrows).rows
            if (mat @ inv).rows != ident or (inv @ mat).rows != ident:
                return False, clause
        elif mat_invertible(mat) is None:
            return False, clause
    if not cert.d.is_diagonal():
        return False, "diagonal"
    if not _chain_ok(ring, list(cert.diagonal)):
        return False, "chain condition"
    return True, ""


# --------------------------------------------------------------------------
# Property checkers backed by reduction

EDR_SHAPES = ((1, 2), (2, 1), (2, 2))


def check_hermite(ring: RingDescriptor,
                  budget: int = DEFAULT_BUDGET) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("hermite check needs a finite ring")
    b = _Budget(budget)
    elems = enumerate_elements(ring)
    try:
        for a in elems:
            for c in elems:
                for orientation in ("row", "column"):
                    b.spend()
                    try:
                        hermite_reduce(ring, a, c, orientation)
                    except NotHermite:
                        w = (("a", a), ("b", c))
                        return _verdict(
                            "hermite", ring, "fails", w, b,
                            note=f"no (d,0) form, orientation {orientation}",
                        )
    except BudgetExceeded:
        return _unknown_budget("hermite", ring, b)
    return _verdict("hermite", ring, "holds", budget=b)


def check_edr_small(ring: RingDescriptor, budget: int = DEFAULT_BUDGET,
                    shapes=EDR_SHAPES) -> PropertyVerdict:
    if not ring.is_finite:
        raise InfiniteRing("edr-small check needs a finite ring")
    b = _Budget(budget)
    elems = enumerate_elements(ring)
    try:
        for rows, cols in shapes:
            for flat in itertools.product(elems, repeat=rows * cols):
                b.spend()
                M = MatrixOverRing(
                    ring,
                    tuple(flat[i * cols:(i + 1) * cols] for i in range(rows)),
                )
                try:
                    diagonal_reduce(ring, M, b)
                except NotReducible:
                    return _verdict(
                        "edr-small", ring, "fails",
                        (("matrix", M.rows),), b,
                        note=f"irreducible {rows}x{cols} matrix",
                    )
    except BudgetExceeded:
        return _unknown_budget("edr-small", ring, b)
    return _verdict("edr-small", ring, "holds", budget=b)


def replay_reduction_witness(ring: RingDescriptor, prop: str,
                             witness: dict) -> bool:
    if prop == "hermite":
        try:
            hermite_reduce(ring, witness["a"], witness["b"], "row")
            hermite_reduce(ring, witness["a"], witness["b"], "column")
        except NotHermite:
            return True
        return False
    if prop == "edr-small":
        M = MatrixOverRing(ring, witness["matrix"])
        try:
            diagonal_reduce(ring, M)
        except NotReducible:
            return True
        return False
    raise ValueError(f"no replay rule for {prop}")
