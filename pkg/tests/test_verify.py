import itertools
import random

import pytest

from polyproj.errors import InputError
from polyproj.numerics import matvec, vector
from polyproj.polyhedra import HRep, VRep, canonicalize, contains_point, v_to_h
from polyproj.problems import PPInstance, SolutionPair
from polyproj.reductions import solve_pp, solve_vlp, vlp_to_pp
from polyproj.verify import (brute_force_project_polytope, verify_farkas, verify_outcome,
                             verify_pp_solution, verify_vlp_solution, vrep_equal)


def test_projection_solution_passes(skew_cone):
    pp = vlp_to_pp(skew_cone)
    pair, _ = solve_pp(pp)
    report = verify_pp_solution(pp, pair)
    assert report.ok and report.first_failure() == ""


def test_deleting_extreme_ray_fails(skew_cone):
    pp = vlp_to_pp(skew_cone)
    pair, _ = solve_pp(pp)
    dirs = tuple(d for d in pair.directions if d[1] != (2, 0))
    report = verify_pp_solution(pp, SolutionPair(pair.points, dirs))
    assert not report.ok
    bad = report.failures()[0]
    assert bad.witness is not None
    # the witness lies in Y but not in the shrunken claimed set
    claimed = v_to_h(VRep(tuple(y for _, y in pair.points), tuple(y for _, y in dirs)))
    assert not contains_point(claimed, bad.witness)


def test_single_point_problem():
    pp = PPInstance([[1], [-1]], [[0], [0]], [1, -1], n=1, p=1)
    # Y is all of R here, since y is unconstrained; a lone point does not cover it
    assert not verify_pp_solution(pp, SolutionPair((((1, 0), (0,)),))).ok
    pp = PPInstance([[1], [-1], [0], [0]], [[0], [0], [1], [-1]], [1, -1, 3, -3])
    assert verify_pp_solution(pp, SolutionPair((((1, 3), (3,)),))).ok


def test_infeasible_generator_flagged(skew_cone):
    pp = vlp_to_pp(skew_cone)
    pair, _ = solve_pp(pp)
    bad = SolutionPair(pair.points + (((5, 0, 0, 0), (0, 0)),), pair.directions)
    report = verify_pp_solution(pp, bad)
    assert not report.ok and "feasible" in report.first_failure()


def test_vlp_solution_passes(skew_cone, three_objective):
    for v in (skew_cone, three_objective):
        out = solve_vlp(v, "pp")
        assert verify_vlp_solution(v, out.solution).ok
        assert verify_outcome(v, out).ok


def test_retained_dominated_direction_fails(skew_cone):
    out = solve_vlp(skew_cone, "pp")
    bad = SolutionPair(out.solution.points, out.solution.directions + (((0, 0), (-1, 2)),))
    report = verify_vlp_solution(skew_cone, bad)
    failed = {c.name: c for c in report.failures()}
    assert "direction 1 minimal" in failed
    assert failed["direction 1 minimal"].witness == (-1, 2)


def test_mutation_dominated_image(skew_cone, three_objective):
    for v in (skew_cone, three_objective):
        sol = solve_vlp(v, "pp").solution
        ones = (1,) * v.q
        for i in range(len(sol.points)):
            pts = list(sol.points)
            x, y = pts[i]
            pts[i] = (x, tuple(a + b for a, b in zip(y, ones)))
            assert not verify_vlp_solution(v, SolutionPair(tuple(pts), sol.directions)).ok


def test_dominated_feasible_point_fails(skew_cone):
    sol = solve_vlp(skew_cone, "pp").solution
    x = vector((1, 0))
    bad = SolutionPair(sol.points + ((x, matvec(skew_cone.P, x)),), sol.directions)
    report = verify_vlp_solution(skew_cone, bad)
    assert [c.name for c in report.failures()] == ["point 2 minimal"]


def test_vrep_equal_basics():
    a = VRep((vector((0, 0)), vector((1, 0)), vector((0, 1))))
    b = VRep((vector((0, 1)), vector((0, 0)), vector((1, 0))))
    assert vrep_equal(a, b)
    h1 = VRep((vector((0, 0)),), (vector((1, 0)),))
    h2 = VRep((vector((0, 0)),), (vector((2, 0)),))
    assert vrep_equal(h1, h2)
    assert not vrep_equal(h1, a)
    assert not vrep_equal(VRep((vector((0,)),)), a)


def test_vrep_equal_equivalence_relation():
    rng = random.Random(2)
    reps = []
    for _ in range(15):
        pts = tuple(vector((rng.randint(0, 2), rng.randint(0, 2))) for _ in range(rng.randint(1, 3)))
        reps.append(VRep(pts))
        reps.append(VRep(tuple(reversed(pts)) + pts[:1]))
    for a in reps:
        assert vrep_equal(a, a)
        for b in reps:
            assert vrep_equal(a, b) == vrep_equal(b, a)
            for c in reps[:8]:
                if vrep_equal(a, b) and vrep_equal(b, c):
                    assert vrep_equal(a, c)


def test_engines_agree_on_skew(skew_cone):
    pp = vlp_to_pp(skew_cone)
    assert vrep_equal(solve_pp(pp, "fm")[1], solve_pp(pp, "molp")[1])


def test_brute_force_square_and_cube():
    sq = HRep([[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1], 2)
    seg = brute_force_project_polytope(sq, 1)
    assert seg.points == ((0,), (1,))
    # cube in w, y = (w1, w2) as two equality pairs, variables (w, y)
    rows, rhs = [], []
    for i in range(3):
        e = [1 if j == i else 0 for j in range(3)]
        rows += [e + [0, 0], [-a for a in e] + [0, 0]]
        rhs += [0, -1]
    for i in range(2):
        e = [1 if j == i else 0 for j in range(3)]
        f = [1 if j == i else 0 for j in range(2)]
        rows += [[-a for a in e] + f, e + [-a for a in f]]
        rhs += [0, 0]
    out = brute_force_project_polytope(HRep(rows, rhs, 5), 2)
    assert out.points == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_brute_force_refusals():
    with pytest.raises(InputError, match="bounded"):
        brute_force_project_polytope(HRep([[1, 0]], [0], 2), 1)
    big = HRep([[1] * 30] * 60, [0] * 60, 30)
    with pytest.raises(InputError, match="refusing"):
        brute_force_project_polytope(big, 1)


def test_cube_image_matches_corner_images(cube8):
    out = brute_force_project_polytope(cube8.lifted(), 3)
    cols = list(itertools.product((-1, 1), repeat=3))
    corners = {tuple(sum(c[i] * w for c, w in zip(cols, bits)) for i in range(3))
               for bits in itertools.product((0, 1), repeat=8)}
    direct = canonicalize(VRep(tuple(map(vector, sorted(corners)))))
    assert out == direct and len(out.points) == 14


def test_farkas_check():
    assert verify_farkas([[1], [-1]], [1, 0], (1, 1)).ok
    assert not verify_farkas([[1], [-1]], [1, 0], (1, 0)).ok
    assert not verify_farkas([[1], [-1]], [1, 0], (1,)).ok


def test_report_serializes(skew_cone):
    out = solve_vlp(skew_cone, "pp")
    d = verify_vlp_solution(skew_cone, out.solution).to_dict()
    assert d["ok"] and all(c["passed"] for c in d["checks"])
