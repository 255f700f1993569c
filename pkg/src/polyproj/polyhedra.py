"""H- and V-representations of convex polyhedra and conversions between them.

H-rep: ``{z : M z >= rhs}``.  V-rep: ``conv(points) + cone(rays) +
span(lineality)``; an empty point list denotes the empty set.

Conversions use the double description method on the homogenized cone,
carried out in exact integer arithmetic.  Canonical V-reps are unique:
lineality is an RREF-derived basis, points and rays are reduced modulo the
lineality (their pivot coordinates are zeroed), rays are coprime integer
vectors, redundant generators are removed and everything is sorted
lexicographically.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import lp
from .numerics import (ONE, ZERO, QMatrix, QVector, dot, matrix, neg, nullspace_basis,
                       primitive, primitive_positive, rref, vector)


@dataclass(frozen=True)
class HRep:
    """``{z in Q^dim : M z >= rhs}``; ``split`` marks an ``(x, y)`` variable split."""

    M: QMatrix
    rhs: QVector
    dim: int
    split: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "M", matrix(self.M))
        object.__setattr__(self, "rhs", vector(self.rhs))
        if len(self.M) != len(self.rhs):
            raise ValueError(f"{len(self.M)} rows but {len(self.rhs)} right-hand sides")
        for row in self.M:
            if len(row) != self.dim:
                raise ValueError(f"row of length {len(row)} in dimension {self.dim}")


@dataclass(frozen=True)
class VRep:
    points: Tuple[QVector, ...]
    rays: Tuple[QVector, ...] = ()
    lineality: Tuple[QVector, ...] = ()
    dim: int = field(default=None)

    def __post_init__(self):
        pts = tuple(vector(p) for p in self.points)
        rays = tuple(vector(r) for r in self.rays)
        lin = tuple(vector(v) for v in self.lineality)
        dim = self.dim
        if dim is None:
            for group in (pts, rays, lin):
                if group:
                    dim = len(group[0])
                    break
            else:
                raise ValueError("dim is required for an empty V-representation")
        for v in pts + rays + lin:
            if len(v) != dim:
                raise ValueError(f"generator of length {len(v)} in dimension {dim}")
        for v in rays + lin:
            if not any(v):
                raise ValueError("rays and lineality vectors must be nonzero")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "lineality", lin)
        object.__setattr__(self, "dim", dim)

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality


# ---------------------------------------------------------------------------
# double description on integer data

def _int_primitive(v):
    from math import gcd
    g = 0
    for a in v:
        if a:
            g = gcd(g, a)
    if g <= 1:
        return v
    return [a // g for a in v]


def _to_ints(v) -> List[int]:
    return [int(a) for a in primitive(v)]


def _idot(a, b):
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def dd_cone(rows: Sequence[Sequence[int]], dim: int):
    """Generators of ``{w : a.w >= 0 for every a in rows}``.

    Returns ``(rays, lineality)`` as lists of integer lists; the rays are the
    extreme rays of the cone modulo its lineality space.
    """
    lin = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    rays = []  # (vector, bitmask of tight constraints)
    for k, a in enumerate(rows):
        bit = 1 << k
        vals = [_idot(a, l) for l in lin]
        idx = next((i for i, v in enumerate(vals) if v), None)
        if idx is not None:
            l0, v0 = lin[idx], vals[idx]
            if v0 < 0:
                l0, v0 = [-x for x in l0], -v0
            new_lin = []
            for i, (l, v) in enumerate(zip(lin, vals)):
                if i == idx:
                    continue
                if v:
                    l = _int_primitive([v0 * x - v * y for x, y in zip(l, l0)])
                new_lin.append(l)
            new_rays = []
            for r, z in rays:
                t = _idot(a, r)
                if t:
                    r = _int_primitive([v0 * x - t * y for x, y in zip(r, l0)])
                new_rays.append((r, z | bit))
            new_rays.append((l0, bit - 1))
            lin, rays = new_lin, new_rays
            continue

        pos, zer, negs = [], [], []
        for r, z in rays:
            t = _idot(a, r)
            if t > 0:
                pos.append((r, z, t))
            elif t < 0:
                negs.append((r, z, t))
            else:
                zer.append((r, z | bit))
        if not negs:
            rays = [(r, z) for r, z, _ in pos] + zer
            continue
        need = dim - len(lin) - 2
        masks = [z for _, z in rays]
        created = []
        for rp, zp, tp in pos:
            for rn, zn, tn in negs:
                common = zp & zn
                if bin(common).count("1") < need:
                    continue
                hits = 0
                for zr in masks:
                    if zr & common == common:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                new = _int_primitive([tp * x - tn * y for x, y in zip(rn, rp)])
                created.append((new, common | bit))
        rays = [(r, z) for r, z, _ in pos] + zer + created
    return [r for r, _ in rays], lin


# ---------------------------------------------------------------------------
# canonical forms

def _lineality_basis(vectors, dim):
    R, pivots, rk = rref(vectors, dim)
    basis = [primitive_positive(R[i]) for i in range(rk)]
    return basis, pivots


def _reduce(v, basis, pivots):
    v = list(v)
    for b, pc in zip(basis, pivots):
        if v[pc]:
            f = v[pc] / b[pc]
            v = [x - f * y for x, y in zip(v, b)]
    return tuple(v)


def _dedupe_sorted(vs):
    return tuple(sorted(set(vs)))


def _normalize(points, rays, lineality, dim) -> VRep:
    """Reduce modulo lineality and sort; no redundancy removal."""
    basis, pivots = _lineality_basis(list(lineality), dim)
    pts = _dedupe_sorted(_reduce(p, basis, pivots) for p in points)
    rs = []
    for r in rays:
        r = _reduce(r, basis, pivots)
        if any(r):
            rs.append(primitive(r))
    return VRep(pts, _dedupe_sorted(rs), tuple(sorted(basis)), dim)


def _in_cone(v, gens, lin=()):
    """``v in cone(gens) + span(lin)``, decided by a feasibility LP."""
    cols = list(gens) + list(lin) + [neg(l) for l in lin]
    if not cols:
        return not any(v)
    A = [list(r) for r in zip(*cols)]
    return lp.solve_standard(A, v, [ZERO] * len(cols)).status == lp.OPTIMAL


def _in_hull(v, points, rays):
    """``v in conv(points) + cone(rays)``."""
    if not points:
        return False
    cols = list(points) + list(rays)
    A = [list(r) for r in zip(*cols)]
    A.append([ONE] * len(points) + [ZERO] * len(rays))
    return lp.solve_standard(A, list(v) + [ONE], [ZERO] * len(cols)).status == lp.OPTIMAL


def canonicalize(V: VRep) -> VRep:
    """Irredundant, canonically scaled and ordered V-rep of the same set."""
    if V.is_empty:
        return VRep((), (), (), V.dim)
    rays = _dedupe_sorted(primitive(r) for r in V.rays)
    lin = list(V.lineality)
    # rays whose negative is also generated span the implicit lineality
    lin += [r for r in rays if _in_cone(neg(r), rays, V.lineality)]
    W = _normalize(V.points, rays, lin, V.dim)
    kept = list(W.rays)
    for r in W.rays:
        others = [s for s in kept if s != r]
        if _in_cone(r, others):
            kept.remove(r)
    pts = list(W.points)
    for p in W.points:
        others = [s for s in pts if s != p]
        if _in_hull(p, others, kept):
            pts.remove(p)
    return VRep(tuple(pts), tuple(kept), W.lineality, V.dim)


def irredundant_indices(points: Sequence, rays: Sequence):
    """Greedy removal of redundant generators of ``conv(points) + cone(rays)``.

    Returns the kept indices ``(point_idx, ray_idx)``; rays are pruned first
    since the recession cone is generated by the rays alone.
    """
    ray_idx = list(range(len(rays)))
    for i in range(len(rays)):
        others = [rays[j] for j in ray_idx if j != i]
        if _in_cone(rays[i], others):
            ray_idx.remove(i)
    kept_rays = [rays[j] for j in ray_idx]
    pt_idx = list(range(len(points)))
    for i in range(len(points)):
        others = [points[j] for j in pt_idx if j != i]
        if _in_hull(points[i], others, kept_rays):
            pt_idx.remove(i)
    return pt_idx, ray_idx


# ---------------------------------------------------------------------------
# conversions

def h_to_v(H: HRep) -> VRep:
    """Vertices, extreme rays and lineality of ``{z : M z >= rhs}``."""
    d = H.dim
    rows = sorted(_to_ints(list(row) + [-b]) for row, b in zip(H.M, H.rhs))
    rows.insert(0, [0] * d + [1])
    rays, lin = dd_cone(rows, d + 1)
    points, dirs = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            points.append(tuple(mpq(x, t) for x in r[:-1]))
        else:
            dirs.append(tuple(mpq(x) for x in r[:-1]))
    if not points:
        return VRep((), (), (), d)
    lin = [tuple(mpq(x) for x in l[:-1]) for l in lin]
    return _normalize(points, dirs, lin, d)


def v_to_h(V: VRep) -> HRep:
    """Facet description of a nonempty V-rep; equalities appear as row pairs."""
    if V.is_empty:
        raise ValueError("v_to_h needs a nonempty V-representation")
    d = V.dim
    gens = [list(p) + [ONE] for p in V.points]
    gens += [list(r) + [ZERO] for r in V.rays]
    gens += [list(l) + [ZERO] for l in V.lineality]
    gens += [list(neg(l)) + [ZERO] for l in V.lineality]
    rows = sorted(_to_ints(g) for g in gens)
    rays, lin = dd_cone(rows, d + 1)
    basis, pivots = _lineality_basis([[mpq(x) for x in l] for l in lin], d + 1)
    out = set()
    for a in rays:
        a = primitive(_reduce([mpq(x) for x in a], basis, pivots))
        if any(a[:-1]):
            out.add((a[:-1], -a[-1]))
    for a in basis:
        out.add((a[:-1], -a[-1]))
        out.add((neg(a[:-1]), a[-1]))
    out = sorted(out)
    return HRep(tuple(r for r, _ in out), tuple(b for _, b in out), d)


def recession_cone(H: HRep) -> HRep:
    return HRep(H.M, (ZERO,) * len(H.M), H.dim, H.split)


def lineality_space(H: HRep) -> List[QVector]:
    """Canonical basis of ``{z : M z = 0}``."""
    basis, _ = _lineality_basis(nullspace_basis(H.M, H.dim), H.dim)
    return sorted(basis)


def contains_point(H: HRep, z: Sequence) -> bool:
    z = vector(z)
    if len(z) != H.dim:
        raise ValueError(f"point of length {len(z)} in dimension {H.dim}")
    return all(dot(row, z) >= b for row, b in zip(H.M, H.rhs))


def contains_direction(H: HRep, z: Sequence) -> bool:
    z = vector(z)
    if len(z) != H.dim:
        raise ValueError(f"direction of length {len(z)} in dimension {H.dim}")
    if not any(z):
        raise ValueError("a direction must be nonzero")
    return all(dot(row, z) >= 0 for row in H.M)


def is_feasible(H: HRep) -> bool:
    return lp.feasible_point(H.M, H.rhs, H.dim) is not None


# ---------------------------------------------------------------------------
# Fourier-Motzkin projection

def _normalize_row(row, b):
    for k, a in enumerate(row):
        if a:
            p = primitive(row)
            t = p[k] / a
            return p, b * t
    return tuple(row), b


def _prune(rows, dim):
    """Drop rows implied by the others (the system must be feasible)."""
    # same normal: only the largest right-hand side matters
    best = {}
    for row, b in rows:
        if not any(row):
            continue
        if row not in best or b > best[row]:
            best[row] = b
    kept = sorted(best.items())
    i = 0
    while i < len(kept):
        a, b = kept[i]
        others = kept[:i] + kept[i + 1:]
        if others:
            # a.z >= b is implied iff some u >= 0 has u.M = a and u.rhs >= b
            A = [[o[0][j] for o in others] for j in range(dim)]
            res = lp.solve_standard(A, a, [-o[1] for o in others])
            if res.status == lp.OPTIMAL and -res.value >= b:
                kept.pop(i)
                continue
        i += 1
    return kept


def fm_project(H: HRep, keep_last: int) -> HRep:
    """Projection of ``H`` onto its last ``keep_last`` coordinates.

    Variables are eliminated one at a time (fewest generated rows first) and
    rows that an LP certifies redundant are dropped after every step.  An
    empty input projects to the single row ``0 >= 1``.
    """
    if not 0 <= keep_last <= H.dim:
        raise ValueError(f"cannot keep {keep_last} of {H.dim} coordinates")
    if not is_feasible(H):
        return HRep(((ZERO,) * keep_last,), (ONE,), keep_last)
    n_elim = H.dim - keep_last
    cols = list(range(H.dim))
    rows = _prune([_normalize_row(r, b) for r, b in zip(H.M, H.rhs)], H.dim)
    while len(cols) > keep_last:
        candidates = [k for k, c in enumerate(cols) if c < n_elim]

        def cost(k):
            p = sum(1 for r, _ in rows if r[k] > 0)
            n = sum(1 for r, _ in rows if r[k] < 0)
            return (p * n - p - n, cols[k])

        k = min(candidates, key=cost)
        pos = [(r, b) for r, b in rows if r[k] > 0]
        negs = [(r, b) for r, b in rows if r[k] < 0]
        new = [(r, b) for r, b in rows if not r[k]]
        for rp, bp in pos:
            for rn, bn in negs:
                f, g = -rn[k], rp[k]
                new.append((tuple(f * x + g * y for x, y in zip(rp, rn)), f * bp + g * bn))
        del cols[k]
        new = [_normalize_row(r[:k] + r[k + 1:], b) for r, b in new]
        rows = _prune(new, len(cols))
    return HRep(tuple(r[0] for r in rows), tuple(r[1] for r in rows), keep_last)
