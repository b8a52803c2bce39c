from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from vminkowski.core import DimensionMismatchError, VPolytope, candidate_sums
from vminkowski.engine import (
    AlternativeDecomposition,
    SeparatingHyperplane,
    UniqueDecomposition,
    classify_pair,
    convex_hull_2d,
    extreme_points,
    is_vertex_by_separation,
    is_vertex_by_uniqueness,
    minkowski_sum,
    verify_extreme_verdict,
    verify_verdict,
)

from oracles import extreme_2d_brute, hull_1d

SQUARE = VPolytope([(0, 0), (1, 0), (1, 1), (0, 1)])
DIAMOND = VPolytope([(1, 0), (0, 1), (-1, 0), (0, -1)])
BIG_SQUARE = VPolytope([(1, 1), (-1, 1), (-1, -1), (1, -1)])
SEG_A = VPolytope([(0, 0), (1, 0)])
SEG_B = VPolytope([(0, 0), (2, 0)])
OCTAGON = {(2, 1), (2, -1), (-2, 1), (-2, -1), (1, 2), (1, -2), (-1, 2), (-1, -2)}


# -- separation test ---------------------------------------------------------

CLOUD_1D = [(0,), (1,), (2,), (3,)]


def test_separation_1d_endpoint():
    ev = is_vertex_by_separation(CLOUD_1D, 3)
    assert ev.is_extreme and ev.f_star == 1
    assert (F(3),) in hull_1d(CLOUD_1D)
    assert verify_extreme_verdict(CLOUD_1D, ev)


def test_separation_1d_interior():
    ev = is_vertex_by_separation(CLOUD_1D, 1)
    assert not ev.is_extreme and ev.f_star == 0
    assert (F(1),) not in hull_1d(CLOUD_1D)
    # weights express 1 as a convex combination of the other points
    assert verify_extreme_verdict(CLOUD_1D, ev)
    assert ev.weights[1] == 0


def test_separation_singleton():
    ev = is_vertex_by_separation([(5, 7)], 0)
    assert ev.is_extreme and ev.f_star == 1


def test_separation_duplicate_forbids_strict_separation():
    cloud = [(0, 0), (1, 1), (1, 1), (2, 0)]
    for idx in (1, 2):
        ev = is_vertex_by_separation(cloud, idx)
        assert not ev.is_extreme and ev.f_star == 0
        assert verify_extreme_verdict(cloud, ev)


def test_separation_bad_input():
    with pytest.raises(IndexError):
        is_vertex_by_separation([(0,)], 1)
    with pytest.raises(ValueError):
        is_vertex_by_separation([], 0)
    with pytest.raises(DimensionMismatchError):
        is_vertex_by_separation([(0,), (1, 2)], 0)


# -- uniqueness test ---------------------------------------------------------

def test_uniqueness_doubled_square_corner():
    verdict = is_vertex_by_uniqueness(SQUARE, SQUARE, 0, 0)
    assert verdict.is_vertex and verdict.f_star == 0
    assert isinstance(verdict.certificate, UniqueDecomposition)
    assert verify_verdict(SQUARE, SQUARE, verdict)


def test_uniqueness_segments_rejected_pair():
    # (1,0) + (0,0) = (1,0) is interior to [0, 3] x {0}
    verdict = is_vertex_by_uniqueness(SEG_A, SEG_B, 1, 0)
    assert not verdict.is_vertex
    assert verdict.f_star == F(3, 2)
    cert = verdict.certificate
    assert isinstance(cert, AlternativeDecomposition)
    assert cert.alpha == (1, 0)
    assert cert.beta == (F(1, 2), F(1, 2))
    assert verify_verdict(SEG_A, SEG_B, verdict)
    assert (F(1),) not in hull_1d([(0,), (2,), (1,), (3,)])


def test_uniqueness_segments_lexicographic_minimum():
    verdict = is_vertex_by_uniqueness(SEG_A, SEG_B, 0, 0)
    assert verdict.is_vertex and verdict.f_star == 0


def test_uniqueness_bad_input():
    with pytest.raises(IndexError):
        is_vertex_by_uniqueness(SEG_A, SEG_B, 2, 0)
    with pytest.raises(DimensionMismatchError):
        is_vertex_by_uniqueness(SEG_A, VPolytope([(0,)]), 0, 0)


def test_classify_pair_both_methods():
    for method in ("uniqueness", "separation"):
        assert not classify_pair(SEG_A, SEG_B, 1, 0, method).is_vertex
        assert classify_pair(SEG_A, SEG_B, 1, 1, method).is_vertex
    with pytest.raises(ValueError):
        classify_pair(SEG_A, SEG_B, 0, 0, "hull")


# -- driver ------------------------------------------------------------------

@pytest.mark.parametrize("method", ["uniqueness", "separation"])
def test_sum_doubled_square(method):
    res = minkowski_sum(SQUARE, SQUARE, method)
    assert set(res.vertices) == {(0, 0), (2, 0), (2, 2), (0, 2)}
    assert len(res.verdicts) == 16


@pytest.mark.parametrize("method", ["uniqueness", "separation"])
def test_sum_octagon(method):
    res = minkowski_sum(DIAMOND, BIG_SQUARE, method)
    sums = [p.sum for p in candidate_sums(DIAMOND, BIG_SQUARE)]
    assert extreme_2d_brute(sums) == OCTAGON
    assert set(res.vertices) == OCTAGON
    assert len(res.C) == 8 and len(res.verdicts) == 16
    assert all(verify_verdict(DIAMOND, BIG_SQUARE, v) for v in res.verdicts)


@pytest.mark.parametrize("method", ["uniqueness", "separation"])
def test_sum_with_singleton_is_translation(method):
    A = VPolytope([(0, 0), (3, 1), (1, 4), (-1, 2)])
    res = minkowski_sum(A, VPolytope([(F(1, 2), -2)]), method)
    assert all(v.is_vertex for v in res.verdicts)
    assert list(res.vertices) == [(a[0] + F(1, 2), a[1] - 2) for a in A]


def test_sum_decomposition_is_bijection():
    res = minkowski_sum(DIAMOND, BIG_SQUARE)
    accepted = {(v.pair.u, v.pair.v) for v in res.verdicts if v.is_vertex}
    assert set(res.decomposition.values()) == accepted
    assert len(res.decomposition) == len(res.C)
    for point, (u, v) in res.decomposition.items():
        assert point == tuple(a + b for a, b in zip(DIAMOND[u], BIG_SQUARE[v]))


def test_sum_rejects_mismatch_and_unknown_method():
    with pytest.raises(DimensionMismatchError):
        minkowski_sum(SQUARE, VPolytope([(0,)]))
    with pytest.raises(ValueError):
        minkowski_sum(SQUARE, SQUARE, "hull")


def test_sum_parallel_matches_serial():
    serial = minkowski_sum(DIAMOND, BIG_SQUARE, n_jobs=1)
    parallel = minkowski_sum(DIAMOND, BIG_SQUARE, n_jobs=2)
    assert serial.verdicts == parallel.verdicts
    assert serial.C == parallel.C


def test_sum_with_non_extreme_input_points():
    A = VPolytope([(0, 0), (2, 0), (1, 0), (0, 2), (F(1, 2), F(1, 2))])
    full = minkowski_sum(A, SQUARE)
    reduced = minkowski_sum(VPolytope(extreme_points(A.points)[0]), SQUARE)
    assert set(full.vertices) == set(reduced.vertices)
    sep = minkowski_sum(A, SQUARE, "separation")
    assert [v.is_vertex for v in sep.verdicts] == [v.is_vertex for v in full.verdicts]


@pytest.mark.parametrize("method", ["uniqueness", "separation"])
def test_coincident_sums_are_all_rejected(method):
    # (1,0)+(0,1) and (0,1)+(1,0) both land on (1,1)
    T = VPolytope([(0, 0), (1, 0), (0, 1)])
    res = minkowski_sum(T, T, method)
    for u, v in [(1, 2), (2, 1)]:
        verdict = res.verdicts[3 * u + v]
        assert verdict.pair.sum == (1, 1)
        assert not verdict.is_vertex
        assert isinstance(verdict.certificate, AlternativeDecomposition)
        assert verify_verdict(T, T, verdict)
    assert set(res.vertices) == {(0, 0), (2, 0), (0, 2)}


# -- extreme points and 2-D hull ----------------------------------------------

def test_extreme_points_examples():
    kept, verdicts = extreme_points([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    assert kept == [(0, 0), (2, 0), (2, 2), (0, 2)]
    assert not verdicts[4].is_extreme
    assert extreme_points(CLOUD_1D)[0] == [(0,), (3,)]
    assert extreme_points([(0, 0)])[0] == [(0, 0)]


def test_convex_hull_2d_examples():
    assert convex_hull_2d([(0, 0), (1, 0), (2, 0)]) == [(0, 0), (2, 0)]
    assert convex_hull_2d([(0, 1), (1, 0), (0, 0)]) == [(0, 0), (1, 0), (0, 1)]
    assert convex_hull_2d([(3, 3)]) == [(3, 3)]
    sums = [p.sum for p in candidate_sums(DIAMOND, BIG_SQUARE)]
    hull = convex_hull_2d(sums)
    assert hull == [(-2, -1), (-1, -2), (1, -2), (2, -1), (2, 1), (1, 2), (-1, 2), (-2, 1)]
    with pytest.raises(DimensionMismatchError):
        convex_hull_2d([(0, 0, 0)])


# -- properties ----------------------------------------------------------------

coord = st.fractions(min_value=-3, max_value=3, max_denominator=4)
cloud2 = st.lists(st.tuples(coord, coord), min_size=1, max_size=7)


def _ccw_strict(hull):
    n = len(hull)
    if n < 3:
        return True
    for i in range(n):
        o, a, b = hull[i], hull[(i + 1) % n], hull[(i + 2) % n]
        if (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) <= 0:
            return False
    return True


@settings(max_examples=150, deadline=None)
@given(cloud2)
def test_hull_2d_matches_brute_force(cloud):
    hull = convex_hull_2d(cloud)
    uniq = list(dict.fromkeys(cloud))
    assert set(hull) == extreme_2d_brute(uniq)
    assert hull[0] == min(uniq)
    assert _ccw_strict(hull)


@settings(max_examples=100, deadline=None)
@given(cloud2)
def test_extreme_points_matches_brute_force(cloud):
    kept, verdicts = extreme_points(cloud)
    assert set(kept) == extreme_2d_brute(cloud)
    assert all(verify_extreme_verdict(cloud, v) for v in verdicts)


def _polygon(points):
    return VPolytope(sorted(extreme_2d_brute(list(dict.fromkeys(points)))))


polygon = st.lists(st.tuples(coord, coord), min_size=1, max_size=6, unique=True).map(_polygon)


@settings(max_examples=60, deadline=None)
@given(polygon, polygon)
def test_methods_agree_and_certificates_hold(A, B):
    uni = minkowski_sum(A, B, "uniqueness")
    sep = minkowski_sum(A, B, "separation")
    assert [v.is_vertex for v in uni.verdicts] == [v.is_vertex for v in sep.verdicts]
    for v in uni.verdicts + sep.verdicts:
        assert verify_verdict(A, B, v)
    sums = [p.sum for p in candidate_sums(A, B)]
    assert set(uni.vertices) == set(convex_hull_2d(sums))


@settings(max_examples=60, deadline=None)
@given(polygon, polygon)
def test_coupled_optimum(A, B):
    for v in minkowski_sum(A, B).verdicts:
        alpha_u, beta_v = v.alpha[v.pair.u], v.beta[v.pair.v]
        assert 2 - alpha_u - beta_v == v.f_star
        assert (v.f_star == 0) == (alpha_u == 1) == (beta_v == 1)
        assert 0 <= v.f_star <= 2


@settings(max_examples=40, deadline=None)
@given(polygon, polygon, st.tuples(coord, coord))
def test_algebraic_identities(A, B, t):
    AB = set(minkowski_sum(A, B).vertices)
    assert AB == set(minkowski_sum(B, A).vertices)
    shifted = set(minkowski_sum(A.translate(t), B).vertices)
    assert shifted == {(x + t[0], y + t[1]) for x, y in AB}
    assert set(minkowski_sum(A, A).vertices) == {(2 * x, 2 * y) for x, y in A}


@settings(max_examples=40, deadline=None)
@given(polygon, polygon)
def test_uniqueness_bound_and_anchor(A, B):
    res = minkowski_sum(A, B)
    verts = list(res.vertices)
    assert len(verts) == len(set(verts)) <= len(A) * len(B)
    lexmin = min(p.sum for p in candidate_sums(A, B))
    assert lexmin in verts


def test_general_position_polygons_give_k_plus_l():
    # edge directions of the two polygons are pairwise non-parallel
    A = VPolytope([(0, 0), (3, 1), (1, 3)])
    B = VPolytope([(0, 0), (2, -1), (4, 1), (1, 2)])
    assert len(minkowski_sum(A, B).C) == len(A) + len(B)


coord3 = st.fractions(min_value=-2, max_value=2, max_denominator=3)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.tuples(coord3, coord3, coord3), min_size=1, max_size=5, unique=True),
    st.lists(st.tuples(coord3, coord3, coord3), min_size=1, max_size=5, unique=True),
)
def test_methods_agree_in_3d(pa, pb):
    A, B = VPolytope(pa), VPolytope(pb)
    uni = minkowski_sum(A, B, "uniqueness")
    sep = minkowski_sum(A, B, "separation")
    assert [v.is_vertex for v in uni.verdicts] == [v.is_vertex for v in sep.verdicts]
    assert all(verify_verdict(A, B, v) for v in uni.verdicts + sep.verdicts)


def test_verify_verdict_rejects_tampering():
    res = minkowski_sum(SEG_A, SEG_B)
    rejected = res.verdicts[2]
    cert = rejected.certificate
    forged = type(rejected)(
        rejected.pair, False, rejected.f_star,
        AlternativeDecomposition(cert.alpha, (F(1), F(0))), "uniqueness",
    )
    assert not verify_verdict(SEG_A, SEG_B, forged)
    flipped = type(rejected)(rejected.pair, True, F(0), cert, "uniqueness")
    assert not verify_verdict(SEG_A, SEG_B, flipped)
    bogus_plane = type(rejected)(
        rejected.pair, True, F(1), SeparatingHyperplane((F(1), F(0)), F(0)), "separation"
    )
    assert not verify_verdict(SEG_A, SEG_B, bogus_plane)
