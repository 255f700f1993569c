"""Primal Benson outer approximation for multiple objective linear programs.

The recession cone of the upper image is computed first (Fourier-Motzkin on
``{(x, y) : A x >= 0, y >= P x}``); its facet normals give the initial outer
approximation.  Each round enumerates the vertices of the outer polyhedron
and, for every vertex ``v`` not yet confirmed, solves

    min t  s.t.  A x >= b,  P x <= v + t e.

``t > 0`` yields a supporting cut from the LP dual; ``t = 0`` means ``v`` lies
on the upper image and the optimal ``x`` is a minimizer mapping onto it.
"""
from dataclasses import dataclass
import logging

from . import lp
from .errors import InconsistencyError, InfeasibleError, InputError, NoSolutionError
from .numerics import ONE, ZERO, dot, identity, matvec, neg, transpose
from .polyhedra import HRep, VRep, _normalize_row, canonicalize, fm_project, h_to_v, v_to_h
from .problems import (MOLPInstance, SolutionPair, UpperImage, lineality_cone_witness,
                       nonminimal_direction, normalized_direction)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MOLPSolution:
    pair: SolutionPair
    upper_image: UpperImage


def recession_hrep(m: MOLPInstance) -> HRep:
    """H-rep of the recession cone ``P[0+S] + R^q_+`` of the upper image."""
    n, q = m.n, m.q
    rows = [a + (ZERO,) * q for a in m.A]
    eye = identity(q)
    rows += [tuple(-c for c in prow) + e for prow, e in zip(m.P, eye)]
    return fm_project(HRep(tuple(rows), (ZERO,) * len(rows), n + q), q)


def direction_preimage(m: MOLPInstance, y):
    """Some ``x`` with ``A x >= 0`` and ``P x = y``, or None."""
    M = tuple(m.A) + tuple(m.P) + tuple(neg(r) for r in m.P)
    d = (ZERO,) * m.m + tuple(y) + neg(y)
    return lp.feasible_point(M, d, m.n)


def _vertex_lp(m: MOLPInstance, v):
    # variables (x, t):  [A 0] >= b,  [-P e] >= -v,  minimize t
    M = tuple(a + (ZERO,) for a in m.A) + tuple(tuple(-c for c in row) + (ONE,) for row in m.P)
    d = tuple(m.b) + neg(v)
    c = (ZERO,) * m.n + (ONE,)
    res = lp.solve_lp(lp.LPInstance(M, d, c))
    if res.status != lp.OPTIMAL:
        raise InconsistencyError(f"vertex LP returned {res.status}")
    return res


def solve_molp(m: MOLPInstance) -> MOLPSolution:
    """Solution pair and upper image of ``m``.

    Raises InfeasibleError for an empty feasible set and NoSolutionError when
    the lineality space of the upper image contains a nonnegative nonzero
    vector (then every feasible point is dominated).
    """
    if m.q < 2:
        raise InputError("solve_molp needs at least two objectives; use lp for one")
    n, q = m.n, m.q
    feas = lp.solve_lp(lp.LPInstance(m.A, m.b, (ZERO,) * n))
    if feas.status == lp.INFEASIBLE:
        raise InfeasibleError("feasible set is empty", feas.farkas)

    rec = recession_hrep(m)
    recV = h_to_v(rec)
    lineality = recV.lineality
    witness = lineality_cone_witness(lineality, identity(q))
    if witness is not None:
        raise NoSolutionError("upper image lineality meets the ordering cone", witness)

    Pt = transpose(m.P)
    cuts = {}
    for w in rec.M:
        res = lp.solve_lp(lp.LPInstance(m.A, m.b, matvec(Pt, w)))
        if res.status != lp.OPTIMAL:
            raise InconsistencyError("recession facet normal unbounded over the feasible set")
        cuts[w] = max(res.value, cuts.get(w, res.value))

    confirmed = {}
    rounds = 0
    while True:
        rounds += 1
        rows = sorted(cuts.items())
        outer = HRep(tuple(r for r, _ in rows), tuple(b for _, b in rows), q)
        vertices = h_to_v(outer).points
        added = 0
        for v in vertices:
            if v in confirmed:
                continue
            res = _vertex_lp(m, v)
            t = res.x[-1]
            if t > 0:
                u, w = res.dual[:m.m], res.dual[m.m:]
                beta = dot(u, m.b)
                if dot(w, v) >= beta:
                    raise InconsistencyError("cut does not separate the vertex")
                w, beta = _normalize_row(w, beta)
                if w not in cuts or beta > cuts[w]:
                    cuts[w] = beta
                    added += 1
            else:
                x = res.x[:-1]
                if matvec(m.P, x) != v:
                    raise InconsistencyError("confirmed vertex is not attained by its preimage")
                confirmed[v] = x
        log.debug("benson round %d: %d vertices, %d cuts added", rounds, len(vertices), added)
        if not added:
            break

    points = tuple((confirmed[v], v) for v in vertices)
    molp = m.as_vlp()
    directions = []
    candidates = [r for r in recV.rays if not nonminimal_direction(molp, r)]
    for l in lineality:
        candidates += [l, neg(l)]
    for y in candidates:
        x = direction_preimage(m, y)
        if x is None:
            raise InconsistencyError("minimal recession direction has no preimage")
        directions.append(normalized_direction(x, matvec(m.P, x)))
    pair = SolutionPair(points, tuple(directions))
    vrep = canonicalize(VRep(vertices, recV.rays, lineality, q))
    return MOLPSolution(pair, UpperImage(vrep, v_to_h(vrep)))
