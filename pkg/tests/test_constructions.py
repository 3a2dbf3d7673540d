from fractions import Fraction

import pytest

from eslab.constructions import (ClusterSpec, ConstructionParams, build_cluster, build_kv,
                                 build_kv_certified, build_Y, check_displacement, cluster_size,
                                 default_schedule, displacement, kv_lower_bound_count)
from eslab.kernel import PointSet, affine_dimension, integer_rank, make_rng, same_order_type
from eslab.pointio import dumps, pointset_to_dict
from eslab.verifiers import is_general_position, max_hyperplane_incidence


def test_x0_is_origin():
    P = build_kv(ConstructionParams(d=3, i=0))
    assert P.points == ((0, 0, 0),)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("i", range(0, 5))
def test_kv_cardinality_and_general_position(d, i):
    P = build_kv(ConstructionParams(d=d, i=i, seed=1))
    assert len(P) == 2 ** i
    assert is_general_position(P)


def test_kv_deterministic():
    a = build_kv(ConstructionParams(d=3, i=3, seed=5))
    b = build_kv(ConstructionParams(d=3, i=3, seed=5))
    c = build_kv(ConstructionParams(d=3, i=3, seed=6))
    assert dumps(pointset_to_dict(a)) == dumps(pointset_to_dict(b))
    assert a.points != c.points


def test_kv_certification_summary():
    _, used, cert = build_kv_certified(ConstructionParams(d=2, i=3, seed=0))
    assert cert == {"general_position": True, "refinements": 0}
    assert used.epsilon_schedule == default_schedule(3)


def test_params_validation():
    with pytest.raises(ValueError):
        ConstructionParams(d=1, i=1)
    with pytest.raises(ValueError):
        ConstructionParams(d=2, i=1, l=2)
    with pytest.raises(ValueError):
        ConstructionParams(d=2, i=2, epsilon_schedule=(Fraction(1, 4), Fraction(1, 2)))
    with pytest.raises(ValueError):
        ConstructionParams(d=2, i=1, epsilon_schedule=(Fraction(2),))
    p = ConstructionParams(d=2, i=2).refined()
    assert p.epsilon_schedule == tuple(e * e for e in default_schedule(2))


def test_displacement_constraints():
    rng = make_rng(3)
    for eps in (Fraction(1, 3), Fraction(1, 1024), Fraction(1, 2 ** 40)):
        for d in (2, 3, 5):
            for _ in range(20):
                assert check_displacement(displacement(rng, d, eps), eps)
    assert not check_displacement((Fraction(1, 10), Fraction(1, 5)), Fraction(1, 4))


@pytest.mark.parametrize("d,l,t,center", [(2, 5, 4, False), (2, 4, 3, True), (3, 4, 2, False),
                                          (3, 5, 3, True), (2, 3, 2, False), (4, 7, 3, True)])
def test_cluster_size(d, l, t, center):
    assert cluster_size(d, l) == (t, center)


def test_cluster_example():
    v = (Fraction(1, 100), Fraction(1, 10))
    C = build_cluster(ClusterSpec((0, 0), v, 4, False))
    expected = {(Fraction(-1, 100), Fraction(-1, 10)), (Fraction(1, 100), Fraction(1, 10)),
                (Fraction(-1, 200), Fraction(-1, 20)), (Fraction(1, 200), Fraction(1, 20))}
    assert set(C.points) == expected
    assert affine_dimension(C) == 1


def test_cluster_of_two_is_doubling_pair():
    x, v = (Fraction(1), Fraction(2)), (Fraction(1, 8), Fraction(1, 4))
    C = build_cluster(ClusterSpec(x, v, 2, False))
    assert C.points == ((Fraction(7, 8), Fraction(7, 4)), (Fraction(9, 8), Fraction(9, 4)))


def test_cluster_rejects_bad_specs():
    with pytest.raises(ValueError):
        build_cluster(ClusterSpec((0, 0), (1, 2), 3, False))
    with pytest.raises(ValueError):
        build_cluster(ClusterSpec((0, 0), (0, 0), 2, False))
    with pytest.raises(ValueError):
        build_cluster(ClusterSpec((0, 0), (Fraction(1, 2), Fraction(1, 4)), 2, False,
                                  eps=Fraction(1, 8)))


def test_build_Y_examples():
    Y = build_Y(ConstructionParams(d=2, l=4, i=3, seed=0))
    assert len(Y) == 12
    assert max_hyperplane_incidence(Y.base).max_count <= 3
    assert not is_general_position(Y.base)
    Y1 = build_Y(ConstructionParams(d=3, l=4, i=1))
    assert len(Y1) == 2 and set(Y1.cluster_of) == {0}
    with pytest.raises(ValueError):
        build_Y(ConstructionParams(d=2, i=2))
    with pytest.raises(ValueError):
        build_Y(ConstructionParams(d=2, l=4, i=0))


@pytest.mark.parametrize("d,l", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_Y_structure(d, l):
    Y = build_Y(ConstructionParams(d=d, l=l, i=3, seed=2))
    clusters = Y.clusters()
    assert sorted(i for cl in clusters for i in cl) == list(range(len(Y)))
    for cl, x, v in zip(clusters, Y.centers, Y.vectors):
        assert affine_dimension(Y.base.subset(cl)) == 1
        # endpoints are x -+ v
        assert Y.base[cl[0]] == tuple(a - b for a, b in zip(x, v))
        assert Y.base[cl[1]] == tuple(a + b for a, b in zip(x, v))
    # pairwise skew (d >= 3) or non-parallel (d = 2) cluster lines
    for a in range(len(clusters)):
        for b in range(a + 1, len(clusters)):
            if d == 2:
                assert integer_rank([[int(c * 2 ** 200) for c in Y.vectors[a]],
                                     [int(c * 2 ** 200) for c in Y.vectors[b]]]) == 2
            else:
                A = PointSet.of([Y.base[i] for i in clusters[a][:2] + clusters[b][:2]])
                assert affine_dimension(A) == 3
    cert = Y.certification
    assert cert["cluster_lines_skew"] and cert["representative_order_type"]
    assert cert["incidence_ok"]


def test_representatives_share_order_type_with_centers():
    Y = build_Y(ConstructionParams(d=3, l=6, i=3, seed=4))
    clusters = Y.clusters()
    for k in range(Y.cluster_size):
        reps = Y.base.subset([cl[k] for cl in clusters])
        assert same_order_type(reps, Y.centers)


def test_endpoints_share_order_type_with_kv():
    p = ConstructionParams(d=2, l=5, i=3, seed=9)
    X = build_kv(ConstructionParams(d=2, i=3, seed=9))
    assert same_order_type(build_Y(p).endpoints(), X)


def test_Y_deterministic():
    p = ConstructionParams(d=2, l=5, i=3, seed=11)
    assert build_Y(p).base.points == build_Y(p).base.points


@pytest.mark.parametrize("d,l,i,count,bound", [(2, 4, 3, 12, 12), (3, 4, 2, 4, 4),
                                               (2, 3, 1, 2, 2)])
def test_kv_lower_bound_count(d, l, i, count, bound):
    assert kv_lower_bound_count(d, l, i) == (count, bound)
