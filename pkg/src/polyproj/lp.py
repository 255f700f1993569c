"""Exact two-phase primal simplex with Bland's rule.

Two entry points:

* :func:`solve_standard` -- ``min c.z  s.t.  A z = b, z >= 0``
* :func:`solve_lp` -- ``min/max c.x  s.t.  M x >= d`` with ``x`` free, the
  general form used everywhere else in the package.  It is transcribed to
  standard form by splitting ``x = x+ - x-`` and adding surplus variables.

Every result carries a certificate that can be checked exactly with
:func:`check_certificate`.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .numerics import ONE, ZERO, QMatrix, QVector, Rational, dot, matrix, q, vector

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPInstance:
    """``min`` (or ``max``) ``c.x`` subject to ``M x >= d``, ``x`` free."""

    M: QMatrix
    d: QVector
    c: QVector
    sense: str = "minimize"

    def __post_init__(self):
        object.__setattr__(self, "M", matrix(self.M))
        object.__setattr__(self, "d", vector(self.d))
        object.__setattr__(self, "c", vector(self.c))
        if len(self.M) != len(self.d):
            raise ValueError(f"M has {len(self.M)} rows but d has {len(self.d)} entries")
        for i, row in enumerate(self.M):
            if len(row) != len(self.c):
                raise ValueError(f"row {i} of M has {len(row)} entries, expected {len(self.c)}")
        if self.sense not in ("minimize", "maximize"):
            raise ValueError(f"unknown sense {self.sense!r}")


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`solve_lp`.

    For ``minimize``: ``dual >= 0`` with ``dual.M = c`` and ``c.x = dual.d``;
    ``ray`` has ``M ray >= 0`` and ``c.ray < 0``.  For ``maximize`` the same
    holds for the internal problem ``min -c.x`` (so ``dual.M = -c`` and
    ``c.ray > 0``).  ``farkas >= 0`` has ``farkas.M = 0`` and ``farkas.d > 0``.
    """

    status: str
    x: Optional[QVector] = None
    value: Optional[Rational] = None
    dual: Optional[QVector] = None
    ray: Optional[QVector] = None
    farkas: Optional[QVector] = None


@dataclass(frozen=True)
class StandardResult:
    status: str
    z: Optional[QVector] = None
    value: Optional[Rational] = None
    y: Optional[QVector] = None
    ray: Optional[QVector] = None
    farkas: Optional[QVector] = None


def _pivot(T, rc, basis, r, j):
    prow = T[r]
    piv = prow[j]
    if piv != 1:
        inv = ONE / piv
        prow = [v * inv if v else v for v in prow]
        T[r] = prow
    nz = [k for k, v in enumerate(prow) if v]
    for i, row in enumerate(T):
        if i != r:
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
    f = rc[j]
    if f:
        for k in nz:
            rc[k] -= f * prow[k]
    basis[r] = j


def _simplex(T, rc, basis, allowed):
    """Run Bland-rule iterations in place; return None or an unbounded column."""
    while True:
        j = next((k for k in allowed if rc[k] < 0), None)
        if j is None:
            return None
        best = None
        for i, row in enumerate(T):
            a = row[j]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return j
        _pivot(T, rc, basis, best[1], j)


def _reduced_costs(T, basis, cost, ncols):
    rc = list(cost) + [ZERO]
    for i, row in enumerate(T):
        cb = cost[basis[i]]
        if cb:
            for k, v in enumerate(row):
                if v:
                    rc[k] -= cb * v
    return rc


def solve_standard(A: Sequence[Sequence], b: Sequence, c: Sequence) -> StandardResult:
    """Solve ``min c.z s.t. A z = b, z >= 0`` exactly.

    ``y`` is the optimal dual (``A^T y <= c``, ``b.y = value``); ``farkas``
    satisfies ``A^T farkas <= 0`` and ``b.farkas > 0``; ``ray`` satisfies
    ``A ray = 0``, ``ray >= 0`` and ``c.ray < 0``.
    """
    m = len(A)
    n = len(c)
    c = [q(v) for v in c]
    sign = []
    T = []
    for row, bi in zip(A, b):
        row = [q(v) for v in row]
        bi = q(bi)
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
            sign.append(-1)
        else:
            sign.append(1)
        T.append(row + [bi])

    # reuse unit columns as the starting basis where possible
    basis: List[Optional[int]] = [None] * m
    taken = set()
    for k in range(n):
        hit = None
        for i in range(m):
            v = T[i][k]
            if v:
                if v == 1 and hit is None:
                    hit = i
                else:
                    hit = None
                    break
        if hit is not None and basis[hit] is None and k not in taken:
            basis[hit] = k
            taken.add(k)
    art_rows = [i for i in range(m) if basis[i] is None]
    na = len(art_rows)
    ncols = n + na
    for i in range(m):
        rhs = T[i].pop()
        T[i].extend([ZERO] * na)
        T[i].append(rhs)
    for a, i in enumerate(art_rows):
        T[i][n + a] = ONE
        basis[i] = n + a
    init_col = list(basis)

    if na:
        cost1 = [ZERO] * n + [ONE] * na
        rc = _reduced_costs(T, basis, cost1, ncols)
        _simplex(T, rc, basis, range(ncols))
        phase1 = -rc[-1]
        if phase1 > 0:
            y = [cost1[init_col[i]] - rc[init_col[i]] for i in range(m)]
            return StandardResult(INFEASIBLE, farkas=tuple(s * v for s, v in zip(sign, y)))
        # drive zero-level artificials out of the basis where possible
        for i in range(m):
            if basis[i] >= n:
                j = next((k for k in range(n) if T[i][k]), None)
                if j is not None:
                    _pivot(T, rc, basis, i, j)

    cost2 = c + [ZERO] * na
    rc = _reduced_costs(T, basis, cost2, ncols)
    col = _simplex(T, rc, basis, range(n))
    z = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            z[basis[i]] = T[i][-1]
    if col is not None:
        ray = [ZERO] * n
        ray[col] = ONE
        for i in range(m):
            if basis[i] < n:
                ray[basis[i]] = -T[i][col]
        return StandardResult(UNBOUNDED, z=tuple(z), ray=tuple(ray))
    y = [cost2[init_col[i]] - rc[init_col[i]] for i in range(m)]
    return StandardResult(OPTIMAL, z=tuple(z), value=-rc[-1],
                          y=tuple(s * v for s, v in zip(sign, y)))


def solve_lp(inst: LPInstance) -> LPResult:
    """Solve ``inst`` exactly; deterministic (Bland's least-index rule)."""
    M, d = inst.M, inst.d
    n = len(inst.c)
    c = inst.c if inst.sense == "minimize" else tuple(-v for v in inst.c)
    m = len(M)

    # identically-zero rows are either vacuous or an immediate certificate
    keep = []
    for i, row in enumerate(M):
        if any(row):
            keep.append(i)
        elif d[i] > 0:
            f = [ZERO] * m
            f[i] = ONE
            return LPResult(INFEASIBLE, farkas=tuple(f))

    # row i:  sigma_i * (M_i x+ - M_i x- - s_i) = sigma_i * d_i, sigma chosen so
    # the surplus column is +1 whenever the right-hand side allows it
    A_std, b_std, sigma = [], [], []
    nk = len(keep)
    for r, i in enumerate(keep):
        row = M[i]
        s = -1 if d[i] <= 0 else 1
        slack = [ZERO] * nk
        slack[r] = -ONE if s == 1 else ONE
        A_std.append([s * v for v in row] + [-s * v for v in row] + slack)
        b_std.append(s * d[i])
        sigma.append(s)
    c_std = list(c) + [-v for v in c] + [ZERO] * nk
    res = solve_standard(A_std, b_std, c_std)

    def lift(vals):
        full = [ZERO] * m
        for r, i in enumerate(keep):
            full[i] = sigma[r] * vals[r]
        return tuple(full)

    if res.status == INFEASIBLE:
        return LPResult(INFEASIBLE, farkas=lift(res.farkas))
    x = tuple(res.z[j] - res.z[n + j] for j in range(n))
    if res.status == UNBOUNDED:
        ray = tuple(res.ray[j] - res.ray[n + j] for j in range(n))
        return LPResult(UNBOUNDED, x=x, ray=ray)
    value = dot(inst.c, x)
    return LPResult(OPTIMAL, x=x, value=value, dual=lift(res.y))



def check_certificate(inst: LPInstance, res: LPResult) -> bool:
    """Exact check of the certificate attached to ``res``."""
    M, d = inst.M, inst.d
    n = len(inst.c)
    c = inst.c if inst.sense == "minimize" else tuple(-v for v in inst.c)
    cols = list(zip(*M)) if M else [()] * n
    if res.status == OPTIMAL:
        x, u = res.x, res.dual
        if any(dot(row, x) < di for row, di in zip(M, d)):
            return False
        if any(v < 0 for v in u):
            return False
        if any(dot(u, col) != cj for col, cj in zip(cols, c)):
            return False
        return dot(c, x) == dot(u, d)
    if res.status == UNBOUNDED:
        r = res.ray
        if res.x is not None and any(dot(row, res.x) < di for row, di in zip(M, d)):
            return False
        return all(dot(row, r) >= 0 for row in M) and dot(c, r) < 0
    if res.status == INFEASIBLE:
        f = res.farkas
        if any(v < 0 for v in f):
            return False
        if any(dot(f, col) != 0 for col in cols):
            return False
        return dot(f, d) > 0
    return False


def minimize(M, d, c) -> LPResult:
    return solve_lp(LPInstance(M, d, c))


def maximize(M, d, c) -> LPResult:
    return solve_lp(LPInstance(M, d, c, "maximize"))


def feasible_point(M, d, n: int) -> Optional[QVector]:
    """Some ``x`` with ``M x >= d``, or None when the system is infeasible."""
    res = solve_lp(LPInstance(M, d, (ZERO,) * n))
    return res.x if res.status == OPTIMAL else None
