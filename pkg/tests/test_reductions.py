import pytest

from polyproj.errors import InputError, VerificationError
from polyproj.numerics import identity, vector
from polyproj.polyhedra import VRep
from polyproj.problems import MOLPInstance, PPInstance, SolutionPair, VLPInstance
from polyproj.reductions import (INFEASIBLE, NO_SOLUTION, ROUTES, SOLVED, classical_molp,
                                 hat_upper_image_to_upper_image,
                                 irredundant_pp_solution_to_vlp_solution,
                                 molp_solution_to_pp_solution, pp_solution_to_vlp_solution,
                                 pp_to_molp, solve_pp, solve_vlp, vlp_to_pp)
from polyproj.benson import solve_molp
from polyproj.verify import verify_pp_solution, verify_vlp_solution, vrep_equal

SKEW_IMAGE = VRep((vector((-1, 1)), vector((1, -1))), (vector((2, 0)), vector((-1, 2))))


def test_pp_to_molp_shape(skew_cone):
    m = pp_to_molp(vlp_to_pp(skew_cone))
    assert m.P == ((0, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, -1))
    one = pp_to_molp(PPInstance([[1]], [[1]], [0]))
    assert one.P == ((0, 1), (0, -1))


def test_vlp_to_pp(skew_cone):
    pp = vlp_to_pp(skew_cone)
    assert pp.G == ((1, 0), (1, -1), (1, 1), (-1, -3), (-3, 1))
    assert pp.H == ((0, 0), (0, 0), (0, 0), (-1, 2), (2, 1))
    assert pp.h == (0, -1, -1, 0, 0)
    mo = vlp_to_pp(MOLPInstance([[1, 1]], [1], [[1, 0], [0, 2]]))
    assert mo.G == ((1, 1), (-1, 0), (0, -2)) and mo.H == ((0, 0), (1, 0), (0, 1))


def test_molp_solution_to_pp_solution(skew_cone):
    pp = vlp_to_pp(skew_cone)
    sol = solve_molp(pp_to_molp(pp))
    out = molp_solution_to_pp_solution(pp, sol.pair)
    assert sorted(out.point_images()) == [(-1, 1), (1, -1)]
    assert sorted(out.direction_images()) == [(-1, 2), (2, 0)]
    broken = SolutionPair(sol.pair.points[:1], sol.pair.directions)
    with pytest.raises(VerificationError):
        molp_solution_to_pp_solution(pp, broken)


def test_hat_to_upper_image():
    hat = VRep(tuple(map(vector, [(-1, 1, 0), (1, -1, 0)])),
               tuple(map(vector, [(2, 0, -2), (-1, 2, -1), (0, 0, 1)])))
    out = hat_upper_image_to_upper_image(hat)
    assert out.points == ((-1, 1), (1, -1)) and out.rays == ((2, 0), (-1, 2))
    flat = VRep((vector((1, -1)),), (vector((2, -2)),))
    assert hat_upper_image_to_upper_image(flat).points == ((1,),)


def test_solve_pp_engines(skew_cone):
    pp = vlp_to_pp(skew_cone)
    for engine in ("molp", "fm"):
        pair, Y = solve_pp(pp, engine)
        assert vrep_equal(Y, SKEW_IMAGE)
        assert verify_pp_solution(pp, pair).ok
    with pytest.raises(InputError):
        solve_pp(pp, "simplex")


def test_solve_pp_no_decision_variables():
    sq = PPInstance([[]] * 4, [[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1], n=0, p=2)
    for engine in ("molp", "fm"):
        pair, Y = solve_pp(sq, engine)
        assert Y.points == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert pair.directions == ()


def test_single_point_projection():
    pp = PPInstance([[1], [-1], [0], [0]], [[0], [0], [1], [-1]], [0, 0, 2, -2])
    pair, Y = solve_pp(pp)
    assert pair.points == (((0, 2), (2,)),) and pair.directions == ()


def test_dominance_filter(skew_cone):
    pp = vlp_to_pp(skew_cone)
    pair, _ = solve_pp(pp)
    out = pp_solution_to_vlp_solution(skew_cone, pair)
    assert out.status == SOLVED
    assert sorted(x for x, _ in out.solution.points) == [(0, -1), (0, 1)]
    assert [x for x, _ in out.solution.directions] == [(1, -1)]
    assert out.discarded.direction_images() == [(-1, 2)]


def test_unverified_input_rejected(skew_cone):
    pair, _ = solve_pp(vlp_to_pp(skew_cone))
    with pytest.raises(InputError):
        pp_solution_to_vlp_solution(skew_cone, SolutionPair(pair.points, ()))


def test_redundant_input_rejected(skew_cone):
    pair, _ = solve_pp(vlp_to_pp(skew_cone))
    extra = pair.directions + ((pair.directions[0][0], pair.directions[0][1]),)
    with pytest.raises(InputError, match="redundant"):
        irredundant_pp_solution_to_vlp_solution(skew_cone, SolutionPair(pair.points, extra))


def test_three_objective_routes(three_objective):
    for route in ROUTES:
        out = solve_vlp(three_objective, route)
        assert out.status == SOLVED
        assert sorted(x for x, _ in out.solution.points) == [(0, 0, 4), (1, 0, 2), (2, 0, 1)]
        assert [x for x, _ in out.solution.directions] == [(0, 0, 1)]
        assert verify_vlp_solution(three_objective, out.solution).ok
    out = solve_vlp(three_objective, "pp-irredundant")
    assert sorted(out.discarded.direction_images()) == sorted(
        map(vector, [(0, -1, 2), (2, 2, -1), (1, 0, 0), (0, 1, 0)]))


def test_classical_molp(skew_cone, three_objective):
    cm = classical_molp(skew_cone)
    assert cm.P == ((1, 3), (3, -1))
    assert classical_molp(three_objective).q == 6
    mo = MOLPInstance([[1, 0]], [0], [[1, 2], [3, 4]])
    assert classical_molp(mo).P == mo.P


def test_routes_agree_skew(skew_cone):
    images = [solve_vlp(skew_cone, r).upper_image.vrep for r in ROUTES]
    assert all(vrep_equal(images[0], im) for im in images)
    assert vrep_equal(images[0], SKEW_IMAGE)


def test_infeasible_and_no_solution():
    inf = VLPInstance([[1], [-1]], [1, 0], [[1], [0]], identity(2))
    for route in ROUTES:
        assert solve_vlp(inf, route).status == INFEASIBLE
    free = VLPInstance([], [], identity(2), identity(2))
    for route in ROUTES:
        out = solve_vlp(free, route)
        assert out.status == NO_SOLUTION and any(out.certificate)
    with pytest.raises(InputError):
        solve_vlp(free, "dual")


def test_hyperplane_property(three_objective):
    sol = solve_molp(pp_to_molp(vlp_to_pp(three_objective)))
    for _, y in sol.pair.points + sol.pair.directions:
        assert sum(y) == 0


def test_single_objective_routes():
    for z, point in (([[1]], (0,)), ([[-1]], (8,))):
        v = VLPInstance([[1, 0], [0, 1], [-1, -1]], [0, 0, -4], [[1, 2]], z)
        outs = [solve_vlp(v, r) for r in ROUTES]
        assert all(o.status == SOLVED for o in outs)
        assert all(o.upper_image.vrep.points == (point,) for o in outs)
