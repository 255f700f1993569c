"""Problem classes, solution pairs and the LP-based minimality tests.

A vector linear program minimizes ``P x`` over ``A x >= b`` with respect to
the cone ``C = {y : Z^T y >= 0}``; a multiple objective program is the case
``Z = I``; a projection problem asks for ``{y : exists x, G x + H y >= h}``.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional, Sequence, Tuple

from . import lp
from .errors import InconsistencyError, InputError
from .numerics import (ZERO, QMatrix, QVector, dot, identity, matmul, matrix, matvec,
                       nullspace_basis, primitive, transpose, vector)
from .polyhedra import HRep, VRep, fm_project, lineality_space


def _check_rows(name, M, ncols):
    for i, row in enumerate(M):
        if len(row) != ncols:
            raise InputError(f"{name}: row {i} has {len(row)} entries, expected {ncols}")


@dataclass(frozen=True)
class PPInstance:
    """``Y = {y in Q^p : exists x in Q^n, G x + H y >= h}``."""

    G: QMatrix
    H: QMatrix
    h: QVector
    n: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        G, H, h = matrix(self.G), matrix(self.H), vector(self.h)
        n = self.n if self.n is not None else (len(G[0]) if G else None)
        p = self.p if self.p is not None else (len(H[0]) if H else None)
        if n is None or p is None:
            raise InputError("n and p are required when G or H has no rows")
        if not (len(G) == len(H) == len(h)):
            raise InputError(f"row counts differ: G {len(G)}, H {len(H)}, h {len(h)}")
        if p < 1:
            raise InputError("p must be positive")
        _check_rows("G", G, n)
        _check_rows("H", H, p)
        for k, v in (("G", G), ("H", H), ("h", h), ("n", n), ("p", p)):
            object.__setattr__(self, k, v)

    @property
    def k(self) -> int:
        return len(self.h)

    def lifted(self) -> HRep:
        rows = tuple(g + hh for g, hh in zip(self.G, self.H))
        return HRep(rows, self.h, self.n + self.p, split=self.n)


@dataclass(frozen=True)
class VLPInstance:
    """``minimize P x s.t. A x >= b`` w.r.t. ``C = {y : Z^T y >= 0}``."""

    A: QMatrix
    b: QVector
    P: QMatrix
    Z: QMatrix

    def __post_init__(self):
        A, b, P, Z = matrix(self.A), vector(self.b), matrix(self.P), matrix(self.Z)
        if not P or not P[0]:
            raise InputError("P must have at least one row and one column")
        n, q = len(P[0]), len(P)
        if len(A) != len(b):
            raise InputError(f"A has {len(A)} rows but b has {len(b)} entries")
        _check_rows("A", A, n)
        if len(Z) != q or not Z[0]:
            raise InputError(f"Z must have {q} rows and at least one column")
        if not check_pointed(Z):
            raise InputError("ordering cone is not pointed: Z^T has a nontrivial kernel")
        for k, v in (("A", A), ("b", b), ("P", P), ("Z", Z)):
            object.__setattr__(self, k, v)

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.P[0])

    @property
    def q(self) -> int:
        return len(self.P)

    @property
    def r(self) -> int:
        return len(self.Z[0])

    @cached_property
    def Zt(self) -> QMatrix:
        return transpose(self.Z)

    @cached_property
    def ZtP(self) -> QMatrix:
        return matmul(self.Zt, self.P)

    def as_vlp(self) -> "VLPInstance":
        return self


@dataclass(frozen=True)
class MOLPInstance:
    """``minimize P x s.t. A x >= b`` w.r.t. the nonnegative orthant."""

    A: QMatrix
    b: QVector
    P: QMatrix

    def __post_init__(self):
        A, b, P = matrix(self.A), vector(self.b), matrix(self.P)
        if not P or not P[0]:
            raise InputError("P must have at least one row and one column")
        if len(A) != len(b):
            raise InputError(f"A has {len(A)} rows but b has {len(b)} entries")
        _check_rows("A", A, len(P[0]))
        for k, v in (("A", A), ("b", b), ("P", P)):
            object.__setattr__(self, k, v)

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.P[0])

    @property
    def q(self) -> int:
        return len(self.P)

    def as_vlp(self) -> VLPInstance:
        return VLPInstance(self.A, self.b, self.P, identity(self.q))


Pair = Tuple[QVector, QVector]


@dataclass(frozen=True)
class SolutionPair:
    """Finite point and direction sets, each entry ``(decision vector, image)``."""

    points: Tuple[Pair, ...]
    directions: Tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((vector(x), vector(y)) for x, y in self.points))
        object.__setattr__(self, "directions",
                           tuple((vector(x), vector(y)) for x, y in self.directions))

    def point_images(self):
        return [y for _, y in self.points]

    def direction_images(self):
        return [y for _, y in self.directions]


@dataclass(frozen=True)
class UpperImage:
    vrep: VRep
    hrep: HRep


def normalized_direction(x: Sequence, image: Sequence) -> Pair:
    """Scale a direction pair so the decision vector is a coprime integer vector."""
    x = vector(x)
    px = primitive(x)
    k = next((i for i, a in enumerate(x) if a), None)
    if k is None:
        raise InputError("a direction needs a nonzero decision vector")
    t = px[k] / x[k]
    return px, tuple(t * a for a in image)


def check_pointed(Z: Sequence[Sequence]) -> bool:
    """True iff ``ker Z^T = {0}``, i.e. the cone ``{y : Z^T y >= 0}`` is pointed."""
    Z = matrix(Z)
    return not nullspace_basis(transpose(Z), len(Z))


def lifted_system(v) -> HRep:
    """``[A 0] (x,y) >= b`` stacked on ``[-Z^T P  Z^T] (x,y) >= 0``."""
    v = v.as_vlp()
    rows = [a + (ZERO,) * v.q for a in v.A]
    rows += [tuple(-c for c in zp) + zt for zp, zt in zip(v.ZtP, v.Zt)]
    rhs = tuple(v.b) + (ZERO,) * v.r
    return HRep(tuple(rows), rhs, v.n + v.q, split=v.n)


def feasibility(v) -> lp.LPResult:
    v = v.as_vlp()
    return lp.solve_lp(lp.LPInstance(v.A, v.b, (ZERO,) * v.n))


@lru_cache(maxsize=256)
def upper_image_hrep(v) -> HRep:
    """H-rep of ``P[S] + C`` by Fourier-Motzkin on the lifted system (cached)."""
    v = v.as_vlp()
    return fm_project(lifted_system(v), v.q)


@lru_cache(maxsize=256)
def upper_image_lineality(v) -> Tuple[QVector, ...]:
    return tuple(lineality_space(upper_image_hrep(v.as_vlp())))


def _dominance_lp(v, y, b):
    # max e^T Z^T (y - P x')  s.t.  A x' >= b,  Z^T (y - P x') >= 0
    zty = matvec(v.Zt, y)
    M = tuple(v.A) + tuple(tuple(-c for c in row) for row in v.ZtP)
    d = tuple(b) + tuple(-c for c in zty)
    c = tuple(-sum(col) for col in zip(*v.ZtP))
    res = lp.solve_lp(lp.LPInstance(M, d, c, "maximize"))
    if res.status == lp.INFEASIBLE:
        raise InconsistencyError(f"{list(map(str, y))} is not in the upper image")
    if res.status == lp.UNBOUNDED:
        return True
    return res.value + sum(zty) > 0


def nonminimal_point(v, y: Sequence) -> bool:
    """True iff ``y`` lies in ``P[S] + C minus {0}`` (i.e. is dominated)."""
    v = v.as_vlp()
    y = vector(y)
    if len(y) != v.q:
        raise InputError(f"image vector of length {len(y)}, expected {v.q}")
    return _dominance_lp(v, y, v.b)


def nonminimal_direction(v, y: Sequence) -> bool:
    """True iff ``y`` lies in ``0+P + C minus {0}`` (homogeneous problem)."""
    v = v.as_vlp()
    y = vector(y)
    if len(y) != v.q:
        raise InputError(f"image vector of length {len(y)}, expected {v.q}")
    if not any(y):
        raise InputError("a direction must be nonzero")
    return _dominance_lp(v, y, (ZERO,) * v.m)


def in_L_plus_C(v, L: Sequence[Sequence], y: Sequence) -> bool:
    """True iff ``y in span(L) + C minus {0}``."""
    v = v.as_vlp()
    y = vector(y)
    if not any(y):
        raise InputError("a direction must be nonzero")
    L = [vector(l) for l in L]
    zty = matvec(v.Zt, y)
    ztl = [matvec(v.Zt, l) for l in L]
    # max e^T Z^T (y - sum lam_i l_i)  s.t.  Z^T (y - sum lam_i l_i) >= 0
    M = tuple(tuple(-col[j] for col in ztl) for j in range(v.r))
    d = tuple(-a for a in zty)
    c = tuple(-sum(col) for col in ztl)
    res = lp.solve_lp(lp.LPInstance(M, d, c, "maximize"))
    if res.status == lp.INFEASIBLE:
        return False
    if res.status == lp.UNBOUNDED:
        return True
    return res.value + sum(zty) > 0


def lineality_cone_witness(L: Sequence[Sequence], Zt: Sequence[Sequence]) -> Optional[QVector]:
    """A nonzero ``l in span(L)`` with ``Z^T l >= 0``, or None if there is none."""
    L = [vector(l) for l in L]
    if not L:
        return None
    ztl = [matvec(Zt, l) for l in L]
    M = tuple(tuple(col[j] for col in ztl) for j in range(len(Zt)))
    c = tuple(sum(col) for col in ztl)
    res = lp.solve_lp(lp.LPInstance(M, (ZERO,) * len(M), c, "maximize"))
    if res.status != lp.UNBOUNDED:
        return None
    lam = res.ray
    w = tuple(sum(lam[i] * L[i][j] for i in range(len(L))) for j in range(len(L[0])))
    return primitive(w)


def lineality_certificate(v) -> Optional[QVector]:
    """Witness that the lineality space of the upper image meets ``C`` nontrivially."""
    v = v.as_vlp()
    if feasibility(v).status != lp.OPTIMAL:
        raise InputError("check requires feasibility")
    return lineality_cone_witness(upper_image_lineality(v), v.Zt)


def cond_lineality_pointed(v) -> bool:
    """True iff ``L cap C = {0}`` for the lineality space ``L`` of the upper image."""
    return lineality_certificate(v) is None


def check_lineality_certificate(v, w: Sequence) -> bool:
    """Direct substitution: ``w != 0``, ``Z^T w >= 0`` and ``w`` in the lineality space."""
    v = v.as_vlp()
    w = vector(w)
    if not any(w) or any(a < 0 for a in matvec(v.Zt, w)):
        return False
    return all(dot(row, w) == 0 for row in upper_image_hrep(v).M)


def cone_extreme_rays(v) -> Tuple[QVector, ...]:
    """Extreme rays of the (pointed) ordering cone."""
    from .polyhedra import h_to_v
    v = v.as_vlp()
    return h_to_v(HRep(v.Zt, (ZERO,) * v.r, v.q)).rays
