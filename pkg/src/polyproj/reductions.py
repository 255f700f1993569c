"""Constructive equivalences between projection, MOLP and VLP problems.

* A projection problem ``(G, H, h)`` is solved through the MOLP
  ``min (y, -e^T y) s.t. G x + H y >= h`` (one extra objective); any solution
  of that MOLP is a solution of the projection problem once the last image
  coordinate is dropped.
* A VLP is turned into the projection problem of its upper image,
  ``{y : exists x, Z^T y >= Z^T P x, A x >= b}``; non-minimal generators of a
  projection solution are filtered out afterwards.
* The classical route solves the MOLP ``min Z^T P x s.t. A x >= b``.
"""
from dataclasses import dataclass
from typing import Optional

from . import lp
from .benson import solve_molp
from .errors import InconsistencyError, InfeasibleError, InputError, VerificationError
from .numerics import ONE, ZERO, QVector, identity, matvec, neg
from .polyhedra import (VRep, _in_cone, _in_hull, canonicalize, fm_project, h_to_v,
                        irredundant_indices, v_to_h)
from .problems import (MOLPInstance, PPInstance, SolutionPair, UpperImage, VLPInstance,
                       cone_extreme_rays, feasibility, in_L_plus_C, lineality_certificate,
                       nonminimal_direction, nonminimal_point, normalized_direction,
                       upper_image_lineality)

SOLVED = "solved"
NO_SOLUTION = "no-solution"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class VLPOutcome:
    status: str
    solution: Optional[SolutionPair] = None
    upper_image: Optional[UpperImage] = None
    diagnostics: str = ""
    certificate: Optional[QVector] = None
    # generators of the intermediate projection solution removed by a filter
    discarded: Optional[SolutionPair] = None


# ---------------------------------------------------------------------------
# projection problem <-> MOLP

def pp_to_molp(pp: PPInstance) -> MOLPInstance:
    """``min (y, -e^T y)`` over ``G x + H y >= h`` in the variables ``(x, y)``."""
    n, p = pp.n, pp.p
    A = tuple(g + h for g, h in zip(pp.G, pp.H))
    P = tuple((ZERO,) * n + row for row in identity(p)) + ((ZERO,) * n + (-ONE,) * p,)
    return MOLPInstance(A, pp.h, P)


def molp_solution_to_pp_solution(pp: PPInstance, sol: SolutionPair, verify: bool = True) -> SolutionPair:
    """Drop the extra image coordinate; the decision vectors are unchanged."""
    out = SolutionPair(tuple((x, y[:-1]) for x, y in sol.points),
                       tuple((x, y[:-1]) for x, y in sol.directions))
    if verify:
        from .verify import verify_pp_solution
        report = verify_pp_solution(pp, out)
        if not report.ok:
            raise VerificationError(f"not a projection solution: {report.first_failure()}", report)
    return out


def hat_upper_image_to_upper_image(hatV: VRep) -> VRep:
    """Keep generators on ``e^T y = 0`` and drop their last coordinate."""
    keep = lambda vs: tuple(v[:-1] for v in vs if sum(v) == 0)
    return VRep(keep(hatV.points), keep(hatV.rays), keep(hatV.lineality), hatV.dim - 1)


def _pp_preimage(pp: PPInstance, y, homogeneous=False):
    # x with G x >= h - H y  (or >= -H y)
    Hy = matvec(pp.H, y)
    rhs = tuple((ZERO if homogeneous else hi) - a for hi, a in zip(pp.h, Hy))
    return lp.feasible_point(pp.G, rhs, pp.n)


def solve_pp(pp: PPInstance, engine: str = "molp"):
    """Solve a projection problem; returns ``(SolutionPair, canonical V-rep of Y)``.

    Decision vectors of the pair are ``(x, y)`` and the images are ``y``.
    """
    if engine == "molp":
        msol = solve_molp(pp_to_molp(pp))
        pair = molp_solution_to_pp_solution(pp, msol.pair)
        return pair, canonicalize(hat_upper_image_to_upper_image(msol.upper_image.vrep))
    if engine == "fm":
        Yh = fm_project(pp.lifted(), pp.p)
        Y = canonicalize(h_to_v(Yh))
        if Y.is_empty:
            res = lp.solve_lp(lp.LPInstance(pp.lifted().M, pp.h, (ZERO,) * (pp.n + pp.p)))
            raise InfeasibleError("projection problem is infeasible", res.farkas)
        points, dirs = [], []
        for y in Y.points:
            x = _pp_preimage(pp, y)
            if x is None:
                raise InconsistencyError("projected vertex has no preimage")
            points.append((x + y, y))
        for y in list(Y.rays) + [s for l in Y.lineality for s in (l, neg(l))]:
            x = _pp_preimage(pp, y, homogeneous=True)
            if x is None:
                raise InconsistencyError("projected direction has no preimage")
            dirs.append(normalized_direction(x + y, y))
        return SolutionPair(tuple(points), tuple(dirs)), Y
    raise InputError(f"unknown engine {engine!r}")


# ---------------------------------------------------------------------------
# VLP -> projection problem and back

def vlp_to_pp(v) -> PPInstance:
    """``G = [A; -Z^T P]``, ``H = [0; Z^T]``, ``h = (b, 0)``."""
    v = v.as_vlp()
    G = tuple(v.A) + tuple(tuple(-c for c in row) for row in v.ZtP)
    H = tuple((ZERO,) * v.q for _ in v.A) + tuple(v.Zt)
    h = tuple(v.b) + (ZERO,) * v.r
    return PPInstance(G, H, h, n=v.n, p=v.q)


def classical_molp(v) -> MOLPInstance:
    """``min Z^T P x s.t. A x >= b``: one objective per column of ``Z``."""
    v = v.as_vlp()
    return MOLPInstance(v.A, v.b, v.ZtP)


def _upper_image_from_pair(v: VLPInstance, sol: SolutionPair) -> UpperImage:
    rays = sol.direction_images() + list(cone_extreme_rays(v))
    vrep = canonicalize(VRep(tuple(sol.point_images()), tuple(rays), (), v.q))
    return UpperImage(vrep, v_to_h(vrep))


def _vlp_pair(v: VLPInstance, points, directions) -> SolutionPair:
    pts = tuple((x, matvec(v.P, x)) for x in points)
    dirs = tuple(normalized_direction(x, matvec(v.P, x)) for x in directions)
    return SolutionPair(pts, dirs)


def _finish(v: VLPInstance, pair: SolutionPair, note: str, discarded=None) -> VLPOutcome:
    from .verify import verify_vlp_solution
    report = verify_vlp_solution(v, pair)
    if not report.ok:
        raise InconsistencyError(f"{note}: result failed verification: {report.first_failure()}")
    return VLPOutcome(SOLVED, pair, _upper_image_from_pair(v, pair), note, discarded=discarded)


def _no_solution(v, cert) -> VLPOutcome:
    return VLPOutcome(NO_SOLUTION, diagnostics="lineality space of the upper image meets the "
                      "ordering cone; every feasible point is dominated", certificate=cert)


def _split(ppsol, n, pmask, dmask):
    return ([x[:n] for (x, _), k in zip(ppsol.points, pmask) if k],
            [x[:n] for (x, _), k in zip(ppsol.directions, dmask) if k])


def _dropped(ppsol, pmask, dmask) -> SolutionPair:
    return SolutionPair(tuple(g for g, k in zip(ppsol.points, pmask) if not k),
                        tuple(g for g, k in zip(ppsol.directions, dmask) if not k))


def pp_solution_to_vlp_solution(v, ppsol: SolutionPair) -> VLPOutcome:
    """Keep generators whose images are not dominated within the upper image."""
    from .verify import verify_pp_solution
    v = v.as_vlp()
    report = verify_pp_solution(vlp_to_pp(v), ppsol)
    if not report.ok:
        raise InputError(f"not a solution of the associated projection problem: {report.first_failure()}")
    cert = lineality_certificate(v)
    if cert is not None:
        return _no_solution(v, cert)
    n = v.n
    pmask = [not nonminimal_point(v, y) for _, y in ppsol.points]
    dmask = [not nonminimal_direction(v, y) for _, y in ppsol.directions]
    return _finish(v, _vlp_pair(v, *_split(ppsol, n, pmask, dmask)), "filtered projection solution",
                   _dropped(ppsol, pmask, dmask))


def _redundant_generator(sol: SolutionPair):
    pts, rays = sol.point_images(), sol.direction_images()
    for i, r in enumerate(rays):
        if _in_cone(r, rays[:i] + rays[i + 1:]):
            return "direction", i
    for i, p in enumerate(pts):
        if _in_hull(p, pts[:i] + pts[i + 1:], rays):
            return "point", i
    return None


def irredundant_subpair(sol: SolutionPair) -> SolutionPair:
    """Drop generators whose images are generated by the remaining ones."""
    pi, ri = irredundant_indices(sol.point_images(), sol.direction_images())
    return SolutionPair(tuple(sol.points[i] for i in pi), tuple(sol.directions[i] for i in ri))


def irredundant_pp_solution_to_vlp_solution(v, ppsol: SolutionPair) -> VLPOutcome:
    """All points are kept; directions in ``L + C minus {0}`` are dropped."""
    from .verify import verify_pp_solution
    v = v.as_vlp()
    report = verify_pp_solution(vlp_to_pp(v), ppsol)
    if not report.ok:
        raise InputError(f"not a solution of the associated projection problem: {report.first_failure()}")
    bad = _redundant_generator(ppsol)
    if bad is not None:
        kind, i = bad
        gen = (ppsol.points if kind == "point" else ppsol.directions)[i][1]
        raise InputError(f"solution is redundant: {kind} {i} with image "
                         f"({', '.join(map(str, gen))}) can be removed")
    cert = lineality_certificate(v)
    if cert is not None:
        return _no_solution(v, cert)
    L = upper_image_lineality(v)
    pmask = [True] * len(ppsol.points)
    dmask = [not in_L_plus_C(v, L, y) for _, y in ppsol.directions]
    return _finish(v, _vlp_pair(v, *_split(ppsol, v.n, pmask, dmask)), "irredundant projection solution",
                   _dropped(ppsol, pmask, dmask))


ROUTES = ("pp", "pp-irredundant", "classical")


def solve_vlp(v, route: str = "pp", engine: str = "molp") -> VLPOutcome:
    """Solve a VLP along one of the routes ``pp``, ``pp-irredundant``, ``classical``."""
    if route not in ROUTES:
        raise InputError(f"unknown route {route!r}")
    v = v.as_vlp()
    feas = feasibility(v)
    if feas.status == lp.INFEASIBLE:
        return VLPOutcome(INFEASIBLE, diagnostics="feasible set is empty", certificate=feas.farkas)
    if route == "classical":
        cert = lineality_certificate(v)
        if cert is not None:
            return _no_solution(v, cert)
        cm = classical_molp(v)
        if cm.q == 1:
            # a single scalar objective: one LP; unboundedness was ruled out above
            res = lp.minimize(cm.A, cm.b, cm.P[0])
            if res.status != lp.OPTIMAL:
                raise InconsistencyError("scalar objective unbounded despite the lineality check")
            pair = _vlp_pair(v, [res.x], [])
            return _finish(v, pair, "classical reformulation")
        msol = solve_molp(cm)
        pair = _vlp_pair(v, [x for x, _ in msol.pair.points], [x for x, _ in msol.pair.directions])
        return _finish(v, pair, "classical reformulation")
    ppsol, _ = solve_pp(vlp_to_pp(v), engine)
    if route == "pp":
        return pp_solution_to_vlp_solution(v, ppsol)
    return irredundant_pp_solution_to_vlp_solution(v, irredundant_subpair(ppsol))
