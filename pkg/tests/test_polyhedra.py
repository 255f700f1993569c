import random
from fractions import Fraction

import pytest

from polyproj.numerics import vector
from polyproj.polyhedra import (HRep, VRep, canonicalize, contains_direction, contains_point,
                                fm_project, h_to_v, irredundant_indices, lineality_space,
                                recession_cone, v_to_h)
from polyproj.problems import lifted_system
from polyproj.verify import vrep_equal

WEDGE = HRep([[1, 0], [1, -1], [1, 1]], [0, -1, -1], 2)


def V(points, rays=(), lin=(), dim=None):
    return VRep(tuple(map(vector, points)), tuple(map(vector, rays)), tuple(map(vector, lin)), dim)


def test_square_vertices():
    sq = HRep([[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1], 2)
    out = h_to_v(sq)
    assert out.points == ((0, 0), (0, 1), (1, 0), (1, 1)) and out.rays == () and out.lineality == ()


def test_wedge_vertices_and_rays():
    # vertices from all 2x2 subsystems that are feasible: only (0,1) and (0,-1)
    out = h_to_v(WEDGE)
    assert out.points == ((0, -1), (0, 1))
    assert out.rays == ((1, -1), (1, 1))


def test_empty_polyhedron():
    out = h_to_v(HRep([[1], [-1]], [1, 0], 1))
    assert out.is_empty


def test_simplex_facets():
    H = v_to_h(V([(0, 0), (1, 0), (0, 1)]))
    assert len(H.M) == 3
    assert sorted(zip(H.M, H.rhs)) == sorted([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])


def test_half_line_facet():
    H = v_to_h(V([(0,)], [(1,)]))
    assert H.M == ((1,),) and H.rhs == (0,)


def test_v_to_h_empty_raises():
    with pytest.raises(ValueError):
        v_to_h(VRep((), (), (), 2))


def test_skew_upper_image_facets():
    H = v_to_h(V([(-1, 1), (1, -1)], [(2, 0), (-1, 2)]))
    assert len(H.M) == 3
    gens = [(-1, 1), (1, -1)]
    for g in gens:
        assert sum(1 for a, b in zip(H.M, H.rhs) if sum(x * y for x, y in zip(a, g)) == b) >= 1


def test_fm_simple():
    H = fm_project(HRep([[1, 1], [-1, 1]], [0, 0], 2), 1)
    assert H.M == ((1,),) and H.rhs == (0,)


def test_fm_zero_column_identity():
    H = HRep([[0, 1, 0], [0, 0, 1]], [1, 2], 3)
    out = fm_project(H, 2)
    assert sorted(zip(out.M, out.rhs)) == [((0, 1), 2), ((1, 0), 1)]


def test_fm_infeasible():
    out = fm_project(HRep([[1, 0], [-1, 0]], [1, 0], 2), 1)
    assert h_to_v(out).is_empty


def test_canonicalize_examples():
    assert canonicalize(V([(0, 0), (1, 1), (2, 2)])).points == ((0, 0), (2, 2))
    assert canonicalize(V([(0, 0)], [(1, 0), (0, 1), (1, 1)])).rays == ((0, 1), (1, 0))
    # rays in opposite directions become lineality
    c = canonicalize(V([(0, 0)], [(1, 0), (-2, 0)]))
    assert c.rays == () and c.lineality == ((1, 0),)


def test_three_objective_image_already_canonical():
    pts = [(1, 2, 1, -4), (-1, 1, 2, -2), (-4, 0, 4, 0)]
    rays = [(0, -1, 2, -1), (2, 2, -1, -3), (-1, 0, 1, 0), (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 0, 1)]
    c = canonicalize(V(pts, rays))
    assert sorted(c.points) == sorted(map(vector, pts))
    assert sorted(c.rays) == sorted(map(vector, rays))


def test_recession_and_lineality():
    R = recession_cone(WEDGE)
    assert R.M == WEDGE.M and R.rhs == (0, 0, 0)
    sq = HRep([[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1], 2)
    assert h_to_v(recession_cone(sq)).points == ((0, 0),)
    cone = HRep([[1, 1]], [0], 2)
    assert recession_cone(cone) == cone
    assert lineality_space(HRep([[1, 0]], [0], 2)) == [(0, 1)]
    assert len(lineality_space(HRep([], [], 2))) == 2
    assert lineality_space(v_to_h(V([(-1, 1), (1, -1)], [(2, 0), (-1, 2)]))) == []


def test_containment(skew_cone):
    lifted = lifted_system(skew_cone)
    assert lifted.M[3:] == ((-1, -3, -1, 2), (-3, 1, 2, 1))
    assert contains_point(lifted, (0, 1, -1, 1))
    assert contains_direction(lifted, (1, -1, 2, 0))
    assert not contains_point(HRep([[1]], [1], 1), (0,))
    with pytest.raises(ValueError):
        contains_direction(lifted, (0, 0, 0, 0))


def random_vrep(rng, dim):
    pts = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(1, 4))]
    rays = [r for r in (tuple(rng.randint(-2, 2) for _ in range(dim)) for _ in range(rng.randint(0, 2)))
            if any(r)]
    return V(pts, rays, (), dim)


def test_round_trip_random():
    rng = random.Random(5)
    for _ in range(60):
        Vr = random_vrep(rng, rng.randint(1, 3))
        assert canonicalize(h_to_v(v_to_h(Vr))) == canonicalize(Vr)
        H = v_to_h(Vr)
        for p in Vr.points:
            assert contains_point(H, p)


def test_canonicalize_preserves_set_random():
    rng = random.Random(8)
    for _ in range(40):
        Vr = random_vrep(rng, rng.randint(1, 3))
        c = canonicalize(Vr)
        H1, H2 = v_to_h(Vr), v_to_h(c)
        assert all(contains_point(H2, p) for p in Vr.points)
        assert all(contains_point(H1, p) for p in c.points)
        assert all(contains_direction(H2, r) for r in Vr.rays)
        assert canonicalize(c) == c


def test_projection_agreement_random():
    rng = random.Random(12)
    for _ in range(40):
        dim = rng.randint(2, 5)
        keep = rng.randint(1, dim)
        k = rng.randint(1, 10)
        M = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(k)]
        z0 = [rng.randint(-2, 2) for _ in range(dim)]
        rhs = [sum(a * z for a, z in zip(row, z0)) - rng.randint(0, 2) for row in M]
        H = HRep(M, rhs, dim)
        full = h_to_v(H)
        dropped = VRep(tuple(p[dim - keep:] for p in full.points),
                       tuple(r[dim - keep:] for r in full.rays if any(r[dim - keep:])),
                       tuple(l[dim - keep:] for l in full.lineality if any(l[dim - keep:])), keep)
        assert vrep_equal(h_to_v(fm_project(H, keep)), dropped)


def test_irredundant_indices():
    pi, ri = irredundant_indices([vector((0, 0)), vector((1, 1)), vector((2, 2))], [])
    assert pi == [0, 2] and ri == []


def test_rational_points_kept_exact():
    H = HRep([[2, 0], [-2, 0], [0, 3], [0, -3]], [1, -3, 1, -2], 2)
    pts = h_to_v(H).points
    assert (Fraction(1, 2), Fraction(1, 3)) in [tuple(map(Fraction, p)) for p in pts]


def test_fm_lifted_skew_system(skew_cone):
    Y = h_to_v(fm_project(lifted_system(skew_cone), 2))
    assert vrep_equal(Y, V([(-1, 1), (1, -1)], [(2, 0), (-1, 2)]))
