"""Independent certification of solution claims and brute-force oracles.

The set inclusion ``upper image within claimed set`` is checked facet by
facet: for every inequality ``a.y >= beta`` of the claimed set, one LP
minimizes ``a.y`` directly over the lifted constraint system in ``(x, y)``.
No projection is computed, so these checks do not share code paths with the
Fourier-Motzkin or Benson solvers beyond the LP kernel.
"""
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional

from . import lp
from .errors import InconsistencyError, InputError
from .numerics import ZERO, dot, format_rational, matvec
from .polyhedra import HRep, VRep, canonicalize, h_to_v, v_to_h
from .problems import (PPInstance, SolutionPair, _dominance_lp, cone_extreme_rays,
                       lifted_system, nonminimal_direction, nonminimal_point)

BRUTE_FORCE_BUDGET = 2 ** 20


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = [format_rational(a) for a in self.witness]
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)

    def add(self, name, passed, witness=None, detail=""):
        self.checks.append(Check(name, bool(passed), witness, detail))
        return passed

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> str:
        f = self.failures()
        if not f:
            return ""
        c = f[0]
        w = "" if c.witness is None else " witness (" + ", ".join(map(format_rational, c.witness)) + ")"
        return f"{c.name}{': ' + c.detail if c.detail else ''}{w}"

    def to_dict(self):
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _covers(report: Report, lifted: HRep, split: int, claimed: VRep, label: str):
    """Check ``proj lifted`` is inside ``claimed`` with one LP per claimed facet."""
    H = v_to_h(claimed)
    for a, beta in zip(H.M, H.rhs):
        c = (ZERO,) * split + a
        res = lp.solve_lp(lp.LPInstance(lifted.M, lifted.rhs, c))
        name = f"{label} satisfies {' '.join(map(format_rational, a))} >= {format_rational(beta)}"
        if res.status == lp.UNBOUNDED:
            report.add(name, False, res.ray[split:], "unbounded direction outside the claimed set")
        elif res.status == lp.INFEASIBLE:
            report.add(name, False, None, "constraint system is infeasible")
        elif res.value < beta:
            report.add(name, False, res.x[split:], "point outside the claimed set")
        else:
            report.add(name, True)


def verify_pp_solution(pp: PPInstance, sol: SolutionPair) -> Report:
    """Feasibility of every generator and ``Y = conv + cone`` of the images."""
    report = Report()
    n, p = pp.n, pp.p
    lifted = pp.lifted()
    structural = report.add("points nonempty", bool(sol.points))
    for i, (z, y) in enumerate(sol.points):
        if len(z) != n + p or len(y) != p:
            structural = report.add(f"point {i} dimensions", False, detail=f"got {len(z)}/{len(y)}")
            continue
        report.add(f"point {i} image is its y-part", tuple(z[n:]) == tuple(y), z)
        ok = all(dot(row, z) >= b for row, b in zip(lifted.M, lifted.rhs))
        structural &= report.add(f"point {i} feasible", ok, z)
    for i, (z, y) in enumerate(sol.directions):
        if len(z) != n + p or len(y) != p:
            structural = report.add(f"direction {i} dimensions", False, detail=f"got {len(z)}/{len(y)}")
            continue
        report.add(f"direction {i} image is its y-part", tuple(z[n:]) == tuple(y), z)
        structural &= report.add(f"direction {i} has nonzero y-part", any(y), z)
        ok = all(dot(row, z) >= 0 for row in lifted.M)
        structural &= report.add(f"direction {i} feasible", ok, z)
    if structural:
        claimed = VRep(tuple(sol.point_images()), tuple(sol.direction_images()), (), p)
        _covers(report, lifted, n, claimed, "Y")
    return report


def verify_vlp_solution(v, sol: SolutionPair) -> Report:
    """Feasibility, infimum attainment against the upper image, and minimality."""
    v = v.as_vlp()
    report = Report()
    structural = report.add("points nonempty", bool(sol.points))
    for i, (x, y) in enumerate(sol.points):
        if len(x) != v.n or len(y) != v.q:
            structural = report.add(f"point {i} dimensions", False, detail=f"got {len(x)}/{len(y)}")
            continue
        structural &= report.add(f"point {i} feasible",
                                 all(dot(a, x) >= b for a, b in zip(v.A, v.b)), x)
        structural &= report.add(f"point {i} image equals P x", matvec(v.P, x) == tuple(y), x)
    for i, (x, y) in enumerate(sol.directions):
        if len(x) != v.n or len(y) != v.q:
            structural = report.add(f"direction {i} dimensions", False, detail=f"got {len(x)}/{len(y)}")
            continue
        structural &= report.add(f"direction {i} nonzero", any(x), x)
        structural &= report.add(f"direction {i} feasible", all(dot(a, x) >= 0 for a in v.A), x)
        structural &= report.add(f"direction {i} image equals P x", matvec(v.P, x) == tuple(y), x)
    if structural:
        rays = sol.direction_images() + list(cone_extreme_rays(v))
        claimed = VRep(tuple(sol.point_images()), tuple(r for r in rays if any(r)), (), v.q)
        _covers(report, lifted_system(v), v.n, claimed, "upper image")
    # minimality only looks at images, so it runs even if a preimage is wrong
    for i, (_, y) in enumerate(sol.points):
        if len(y) == v.q:
            _minimal(report, f"point {i} minimal", lambda: nonminimal_point(v, y), y)
    for i, (_, y) in enumerate(sol.directions):
        if len(y) == v.q:
            test = (lambda: _dominance_lp(v, y, (ZERO,) * v.m)) if not any(y) else \
                (lambda: nonminimal_direction(v, y))
            _minimal(report, f"direction {i} minimal", test, y)
    return report


def _minimal(report, name, dominated, y):
    try:
        report.add(name, not dominated(), y)
    except InconsistencyError:
        report.add(name, False, y, "image is not in the upper image")


def vrep_equal(a: VRep, b: VRep) -> bool:
    """Set equality via canonical forms."""
    if a.dim != b.dim:
        return False
    ca, cb = canonicalize(a), canonicalize(b)
    return (ca.points, ca.rays, ca.lineality) == (cb.points, cb.rays, cb.lineality)


def brute_force_project_polytope(H: HRep, keep_last: int) -> VRep:
    """Enumerate all vertices of a bounded ``H``, drop coordinates, canonicalize."""
    if comb(len(H.M), H.dim) > BRUTE_FORCE_BUDGET:
        raise InputError(f"more than {BRUTE_FORCE_BUDGET} vertex candidates; refusing")
    V = h_to_v(H)
    if not V.is_bounded:
        raise InputError("brute-force projection needs a bounded polyhedron")
    pts = tuple(p[H.dim - keep_last:] for p in V.points)
    if not pts:
        return VRep((), (), (), keep_last)
    return canonicalize(VRep(pts, (), (), keep_last))


def verify_farkas(M, d, y) -> Report:
    """``y >= 0, M^T y = 0, d.y > 0`` proves ``M x >= d`` empty."""
    report = Report()
    y = tuple(y)
    if len(y) != len(M):
        report.add("certificate length", False, detail=f"got {len(y)}, expected {len(M)}")
        return report
    report.add("certificate nonnegative", all(a >= 0 for a in y), y)
    ncols = len(M[0]) if M else 0
    report.add("certificate annihilates the constraint matrix",
               all(sum((M[i][j] * y[i] for i in range(len(M))), ZERO) == 0 for j in range(ncols)), y)
    report.add("certificate has positive right-hand side value", dot(d, y) > 0, y)
    return report


def verify_outcome(problem, outcome) -> Report:
    """Check a solver outcome (any status) against its problem."""
    from .problems import PPInstance, check_lineality_certificate
    status = outcome.status
    if status == "infeasible":
        if outcome.certificate is None:
            return Report([Check("infeasibility certificate present", False)])
        if isinstance(problem, PPInstance):
            H = problem.lifted()
            return verify_farkas(H.M, H.rhs, outcome.certificate)
        v = problem.as_vlp()
        return verify_farkas(v.A, v.b, outcome.certificate)
    if status == "no-solution":
        if isinstance(problem, PPInstance):
            return Report([Check("projection problems always have a solution when feasible", False)])
        w = outcome.certificate
        report = Report()
        if w is None or len(w) != problem.as_vlp().q:
            report.add("lineality certificate present", False)
        else:
            report.add("certificate is a nonzero vector of the cone in the lineality space",
                       check_lineality_certificate(problem.as_vlp(), w), tuple(w))
        return report
    if status != "solved" or outcome.solution is None:
        return Report([Check(f"known status with a solution (got {status!r})", False)])
    if isinstance(problem, PPInstance):
        report = verify_pp_solution(problem, outcome.solution)
        claimed = VRep(tuple(outcome.solution.point_images()),
                       tuple(outcome.solution.direction_images()), (), problem.p)
    else:
        report = verify_vlp_solution(problem, outcome.solution)
        v = problem.as_vlp()
        rays = outcome.solution.direction_images() + list(cone_extreme_rays(v))
        claimed = VRep(tuple(outcome.solution.point_images()), tuple(r for r in rays if any(r)), (), v.q)
    if outcome.upper_image is not None and report.ok:
        report.add("reported upper image matches the solution",
                   vrep_equal(outcome.upper_image.vrep, claimed))
    return report
