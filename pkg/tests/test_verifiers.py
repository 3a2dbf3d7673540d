from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eslab.constructions import ConstructionParams, build_kv, build_Y
from eslab.kernel import PointSet, orientation
from eslab.verifiers import (general_position_decomposition, hyperplane_through,
                             is_convex_position, is_general_position, max_hyperplane_incidence,
                             on_hyperplane)

TRIANGLE = PointSet.of([(0, 0), (1, 0), (0, 1)])
SQUARE = PointSet.of([(0, 0), (1, 0), (1, 1), (0, 1)])


def test_general_position_examples():
    assert is_general_position(TRIANGLE)
    r = is_general_position(PointSet.of([(0, 0), (1, 1), (5, 2), (2, 2)]))
    assert not r and r.witness == (0, 1, 3)
    assert is_general_position(build_kv(ConstructionParams(d=3, i=3, seed=1)))
    assert not is_general_position(build_Y(ConstructionParams(d=2, l=4, i=2)).base)
    small = is_general_position(PointSet.of([(0, 0)]))
    assert small and small.degenerate_size


def test_convex_position_examples():
    assert is_convex_position(SQUARE)
    r = is_convex_position(PointSet.of([(0, 0), (3, 0), (0, 3), (1, 1)]))
    assert not r and r.witness == (3,)
    assert not is_convex_position(PointSet.of([(0, 0), (1, 1), (2, 2)]))
    tiny = is_convex_position(PointSet.of([(0, 0), (1, 0)]))
    assert not tiny and tiny.degenerate_size


def _brute_convex(P):
    """Planar oracle: every point strictly on one side of each hull edge."""
    n = len(P)
    if not is_general_position(P):
        return False
    for q in range(n):
        others = [i for i in range(n) if i != q]
        # q is inside iff it lies inside some triangle of the others
        for a, b, c in combinations(others, 3):
            s = [orientation([P[a], P[b], P[q]]), orientation([P[b], P[c], P[q]]),
                 orientation([P[c], P[a], P[q]])]
            if all(x > 0 for x in s) or all(x < 0 for x in s):
                return False
    return True


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=3, max_size=7,
                unique=True))
def test_convex_position_matches_triangle_oracle(pts):
    P = PointSet.of(pts)
    assert bool(is_convex_position(P)) == _brute_convex(P)


def test_hyperplane_through_is_canonical():
    n1 = hyperplane_through([(0, 0), (2, 2)])
    n2 = hyperplane_through([(4, 4), (1, 1)])
    assert n1 == n2
    assert hyperplane_through([(1, 1), (1, 1)]) is None
    plane = hyperplane_through([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert on_hyperplane((Fraction(1, 3),) * 3, plane) or on_hyperplane((1, 1, -1), plane)
    assert on_hyperplane((1, 1, -1), plane)


def test_incidence_examples():
    assert max_hyperplane_incidence(TRIANGLE).max_count == 2
    cert = max_hyperplane_incidence(PointSet.of([(0, 0), (1, 1), (2, 2)]))
    assert cert.max_count == 3 and len(cert.witness) == 3
    Y = build_Y(ConstructionParams(d=2, l=4, i=3))
    cert = max_hyperplane_incidence(Y.base)
    assert cert.max_count <= 3
    ints = Y.base.integer_coords()
    assert all(on_hyperplane(ints[i], (cert.normal, cert.offset)) for i in cert.witness)
    assert max_hyperplane_incidence(PointSet.of([(0, 0, 0)])).max_count == 1
    with pytest.raises(ValueError):
        max_hyperplane_incidence(PointSet(2, ()))


def test_incidence_3d_plane():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (3, 5, 0), (0, 0, 1)]
    cert = max_hyperplane_incidence(PointSet.of(pts))
    assert cert.max_count == 4 and cert.witness == (0, 1, 2, 3)


def test_decomposition_general_position_input():
    rep = general_position_decomposition(SQUARE, l=3)
    assert rep.S == (0, 1, 2, 3) and rep.assignment == {}


def test_decomposition_grid():
    grid = PointSet.of([(x, y) for x in range(3) for y in range(3)])
    rep = general_position_decomposition(grid, l=4)
    assert len(rep.S) == 4
    ints = grid.integer_coords()
    for p, pair in rep.assignment.items():
        plane = hyperplane_through([ints[i] for i in pair])
        assert on_hyperplane(ints[p], plane)
        assert not is_general_position(grid.subset(sorted(rep.S + (p,))))
    assert len(rep.assignment) == 5
    assert rep.bound_holds and len(grid) <= rep.bound


def test_decomposition_collinear_plane():
    rep = general_position_decomposition(PointSet.of([(0, 0), (1, 1), (2, 2)]), l=4)
    assert rep.S == (0, 1) and rep.assignment == {2: (0, 1)} and rep.bound_holds


def test_decomposition_needs_spanning_set():
    with pytest.raises(ValueError):
        general_position_decomposition(PointSet.of([(0, 0, 0), (1, 1, 1), (2, 2, 2), (3, 3, 3)]))
