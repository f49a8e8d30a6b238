import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import grid, on_curve
from strategies import polynomials
from tropint.complexes import (WeightedComplex, classify_projection, codim_one_faces,
                               connected_components, is_balanced, project_to_complement,
                               support_intersection)
from tropint.errors import MalformedInputError, NotPureError
from tropint.polyhedron import Polyhedron
from tropint.surfaces import TropicalPolynomial, hypersurface


def line(c=0, cx=0, cy=0):
    return hypersurface(TropicalPolynomial(((0, 0), (1, 0), (0, 1)), (c, cx, cy)))


def ray(n, base, direction):
    """Closed ray ``base + t * direction``, t >= 0, as a polyhedron in R^2."""
    (x, y), (dx, dy) = base, direction
    eq = ((dy, -dx), dy * x - dx * y)
    ge = ((dx, dy), dx * x + dy * y)
    return Polyhedron(n, (eq,), (ge,))


def covered(cells, w):
    return any(P.contains_point(w) for P in cells)


# -- support_intersection -------------------------------------------------------

def test_identical_lines_cover_the_whole_line():
    L = line()
    cover = support_intersection([L, L])
    for w in grid(-3, 3, 12, 2):
        assert covered(cover, w) == on_curve(((0, 0), (1, 0), (0, 1)), (0, 0, 0), w)


def test_shifted_lines_meet_along_diagonal_ray():
    cover = support_intersection([line(0), line(1)])
    sup = ((0, 0), (1, 0), (0, 1))
    for w in grid(-3, 3, 24, 2):
        both = on_curve(sup, (0, 0, 0), w) and on_curve(sup, (1, 0, 0), w)
        assert covered(cover, w) == both
        assert both == (w[0] == w[1] and w[0] <= 0)


def test_monomial_makes_intersection_empty():
    mono = hypersurface(TropicalPolynomial(((1, 2),), (0,)))
    assert support_intersection([line(), mono]) == []
    assert support_intersection([mono, line()]) == []


def test_support_intersection_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        support_intersection([])
    plane = hypersurface(TropicalPolynomial(((0, 0, 0), (1, 0, 0)), (0, 0)))
    with pytest.raises(MalformedInputError):
        support_intersection([line(), plane])


@given(polynomials(), polynomials())
def test_support_intersection_matches_pointwise_oracle(f, g):
    cover = support_intersection([hypersurface(f), hypersurface(g)])
    for w in grid(-3, 3, 12, 2):
        expected = on_curve(f.support, f.coeffs, w) and on_curve(g.support, g.coeffs, w)
        assert covered(cover, w) == expected


@given(polynomials())
def test_single_surface_cover_is_its_support(f):
    cover = support_intersection([hypersurface(f)])
    for w in grid(-3, 3, 12, 2):
        assert covered(cover, w) == on_curve(f.support, f.coeffs, w)


# -- connected_components -------------------------------------------------------

def test_component_examples():
    assert len(connected_components([Polyhedron.point((0,)), Polyhedron.point((1,))])) == 2
    seg = Polyhedron(1, (), (((1,), 0), ((-1,), -1)))
    assert len(connected_components([seg, Polyhedron.point((1,))])) == 1
    rays = [c.polyhedron for c in line().cells]
    assert len(connected_components(rays)) == 1
    assert len(connected_components([])) == 0


def test_components_link_through_chains():
    # a - b - c chained, d isolated; a and c are disjoint
    a = Polyhedron(1, (), (((1,), 0), ((-1,), -1)))
    b = Polyhedron(1, (), (((1,), 1), ((-1,), -2)))
    c = Polyhedron(1, (), (((1,), 2), ((-1,), -3)))
    d = Polyhedron.point((10,))
    parts = connected_components([c, d, a, b])
    assert len(parts) == 2
    assert sorted(len(g) for g in parts.groups) == [1, 3]
    assert parts.component_of(0) == parts.component_of(2) == parts.component_of(3)


def _partition_sets(parts):
    return sorted(sorted(parts.cells[j].canonical_key for j in g) for g in parts.groups)


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(0, 3)), min_size=1, max_size=8),
       st.randoms(use_true_random=False))
def test_components_independent_of_order(intervals, rnd):
    cells = [Polyhedron(1, (), (((1,), a), ((-1,), -(a + w)))) for a, w in intervals]
    shuffled = cells[:]
    rnd.shuffle(shuffled)
    parts = connected_components(cells)
    assert _partition_sets(parts) == _partition_sets(connected_components(shuffled))
    # interval oracle: sort by left end and sweep
    spans = sorted((a, a + w) for a, w in intervals)
    groups, reach = 0, None
    for lo, hi in spans:
        if reach is None or lo > reach:
            groups += 1
            reach = hi
        else:
            reach = max(reach, hi)
    assert len(parts) == groups


# -- balancing --------------------------------------------------------------------

def test_tropical_line_balanced():
    ok, bad = is_balanced(line().as_complex())
    assert ok and bad == []


def test_reweighted_line_not_balanced():
    S = line().as_complex()
    cells = [(P, 2 if i == 0 else w) for i, (P, w) in enumerate(S.cells)]
    ok, bad = is_balanced(WeightedComplex(2, 1, tuple(cells)))
    assert not ok and len(bad) == 1
    tau, total = bad[0]
    assert tau.relative_interior_point == (0, 0)
    assert total != (0, 0)


def test_split_straight_line_balanced():
    cells = ((ray(2, (0, 0), (1, 2)), 1), (ray(2, (0, 0), (-1, -2)), 1))
    assert is_balanced(WeightedComplex(2, 1, cells))[0]
    unequal = ((ray(2, (0, 0), (1, 2)), 1), (ray(2, (0, 0), (-1, -2)), 3))
    assert not is_balanced(WeightedComplex(2, 1, unequal))[0]


def test_balance_uses_primitive_generators():
    # rays (2,0), (0,2) and (-1,-1) from the origin: primitive vectors sum to 0
    cells = tuple((ray(2, (0, 0), d), 1) for d in [(2, 0), (0, 2), (-1, -1)])
    assert is_balanced(WeightedComplex(2, 1, cells))[0]


def test_boundary_faces_are_skipped():
    seg = Polyhedron(2, (((0, 1), 0),), (((1, 0), 0), ((-1, 0), -1)))
    assert codim_one_faces(WeightedComplex(2, 1, ((seg, 1),))) == []
    assert is_balanced(WeightedComplex(2, 1, ((seg, 1),)))[0]


def test_non_pure_complex_rejected():
    cells = ((ray(2, (0, 0), (1, 0)), 1), (Polyhedron.point((0, 0)), 1))
    with pytest.raises(NotPureError):
        is_balanced(WeightedComplex(2, 1, cells))


def test_weights_must_be_positive():
    with pytest.raises(MalformedInputError):
        WeightedComplex(2, 1, ((ray(2, (0, 0), (1, 0)), 0),))


def test_three_dimensional_fan_balanced():
    # the tropical plane min(0,x,y,z): six 2-cells meeting along four rays
    plane = hypersurface(TropicalPolynomial(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)),
                                            (0, 0, 0, 0)))
    S = plane.as_complex()
    assert len(S.cells) == 6
    assert len(codim_one_faces(S)) == 4
    assert is_balanced(S)[0]


# -- projections -----------------------------------------------------------------

def test_plane_projects_to_a_point():
    plane = Polyhedron(3, (((0, 0, 1), 0),), ())
    S = WeightedComplex(3, 2, ((plane, 1),))
    images = project_to_complement(S, [(1, 0, 0), (0, 1, 0)])
    assert [I.relative_interior_point for I in images] == [(0,)]
    assert classify_projection(images) == "points"


def test_line_projects_onto_whole_axis():
    images = project_to_complement(line().as_complex(), [(0, 1)])
    assert classify_projection(images) == "line"


def test_parallel_vertical_lines_give_two_points():
    cells = tuple((Polyhedron(2, (((1, 0), a),), ()), 1) for a in (0, 3))
    images = project_to_complement(WeightedComplex(2, 1, cells), [(0, 1)])
    assert sorted(I.relative_interior_point for I in images) == [(0,), (3,)]
    assert classify_projection(images) == "points"


def test_half_line_is_reported_as_other():
    images = project_to_complement(WeightedComplex(2, 1, ((ray(2, (0, 0), (1, 0)), 1),)),
                                   [(0, 1)])
    assert classify_projection(images) == "other"
    gap = [Polyhedron(1, (), (((-1,), 0),)), Polyhedron(1, (), (((1,), 1),))]
    assert classify_projection(gap) == "other"


def test_projection_needs_one_dimensional_complement():
    with pytest.raises(MalformedInputError):
        project_to_complement(line().as_complex(), [])


@given(polynomials(max_size=8), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_projection_dichotomy_plane_curves(f, d):
    if d == (0, 0):
        return
    h = hypersurface(f)
    if h.is_empty:
        return
    outcome = classify_projection(project_to_complement(h.as_complex(), [d]))
    assert outcome in ("points", "line")
    parallel = all(len(c.polyhedron.direction_space) == 1 and
                   c.polyhedron.contains_point(tuple(x + y for x, y in zip(
                       c.polyhedron.relative_interior_point, d)))
                   for c in h.cells)
    assert (outcome == "points") == parallel


def test_projection_dichotomy_surfaces():
    rng = random.Random("projection-surfaces")
    pts = [a for a in product(range(3), repeat=3) if sum(a) <= 2]
    checked = 0
    for _ in range(40):
        support = rng.sample(pts, rng.randint(2, 6))
        coeffs = [rng.randint(-4, 4) for _ in support]
        h = hypersurface(TropicalPolynomial(tuple(support), tuple(coeffs)))
        if h.is_empty:
            continue
        L = [tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(2)]
        if L[0][0] * L[1][1] - L[0][1] * L[1][0] == 0 and \
                L[0][1] * L[1][2] - L[0][2] * L[1][1] == 0 and \
                L[0][0] * L[1][2] - L[0][2] * L[1][0] == 0:
            continue
        assert classify_projection(project_to_complement(h.as_complex(), L)) in ("points", "line")
        checked += 1
    assert checked >= 20
