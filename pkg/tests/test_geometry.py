import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.geometry import (
    CurveRole,
    GeometryError,
    Location,
    MultiplicitySequence,
    SubschemePoint,
    WeightedConfig,
    curve_sequence,
    degree_on_curve,
    genus_drop,
    intersection_after,
    meeting_count,
    mult_of_divisor_at,
    relative_canonical_degree,
    toric_mult_bounds,
    total_degree,
    two_curve_bound,
)
from delpezzo.picard import DivisorClass, SurfaceModel

P2 = SurfaceModel.p2()
F3 = SurfaceModel.hirzebruch(3)
l1, l2 = CurveRole.line(1), CurveRole.line(2)
sigma, inf, f1, f2 = CurveRole.sigma(), CurveRole.sigma_inf(), CurveRole.fiber(1), CurveRole.fiber(2)


def test_role_strings_round_trip():
    for r in (l1, sigma, inf, CurveRole.sigma_inf(1), f2, CurveRole.member(1, 4), CurveRole.member(2)):
        assert CurveRole.parse(str(r)) == r
    assert str(CurveRole.sigma_inf(1)) == "sigma_inf2"
    with pytest.raises(GeometryError):
        CurveRole.parse("hyperplane")


def test_roles_respect_surface():
    with pytest.raises(GeometryError):
        WeightedConfig.of(P2, [(sigma, 1)])
    with pytest.raises(GeometryError):
        WeightedConfig.of(F3, [(l1, 1)])
    with pytest.raises(GeometryError):
        WeightedConfig.of(F3, [(CurveRole.member(1, 3), 1)])


def test_incidences():
    assert meeting_count(P2, l1, l2) == 1
    assert meeting_count(F3, sigma, f1) == 1
    assert meeting_count(F3, inf, f1) == 1
    assert meeting_count(F3, sigma, inf) == 0
    assert meeting_count(F3, f1, f2) == 0
    assert meeting_count(F3, inf, CurveRole.sigma_inf(1)) == 3


def test_config_validation():
    with pytest.raises(GeometryError):
        WeightedConfig.of(P2, [])
    with pytest.raises(GeometryError):
        WeightedConfig.of(P2, [(l1, 0)])
    with pytest.raises(GeometryError):
        WeightedConfig.of(P2, [(l1, 1), (l1, 2)])


def test_total_degree():
    assert total_degree([SubschemePoint.on(l1, 1, 1)] * 4) == 4
    assert total_degree([SubschemePoint.on(l1, 5, 4)]) == 5
    assert total_degree([SubschemePoint.on(l1, 3, 2), SubschemePoint.on(l1, 3, 2)]) == 6
    with pytest.raises(GeometryError):
        total_degree([])


def test_degree_on_curve():
    assert degree_on_curve([SubschemePoint.on(l1, 1, 1)] * 4, l1) == 4
    assert degree_on_curve([SubschemePoint.on(l1, 2, 1)], l2) == 0
    assert degree_on_curve([SubschemePoint.on(l1, 5, 4)], l1) == 4
    config = WeightedConfig.of(P2, [(l1, 1)])
    with pytest.raises(GeometryError):
        degree_on_curve([], l2, config)


def test_point_invariants():
    with pytest.raises(GeometryError):
        SubschemePoint.on(l1, 2, 3)
    with pytest.raises(GeometryError):
        SubschemePoint(Location.at(l1, l2), 4, ((l1, 2), (l2, 2)))
    with pytest.raises(GeometryError):
        SubschemePoint(Location.on(l1), 2, ((l2, 1),))
    with pytest.raises(GeometryError):
        SubschemePoint(Location.on(l1), 2, ())
    p = SubschemePoint.at(l2, l1, 4, 3)
    assert p.transversal_and_tangent() == (l2, l1)
    tie = SubschemePoint.at(l2, l1, 2, 1)
    assert tie.transversal_and_tangent() == (l1, l2)


def test_location_strings():
    for text in ("generic", "on:line1", "at:line1&line2", "at:sigma&fiber2#1"):
        assert str(Location.parse(text)) == text
    with pytest.raises(GeometryError):
        Location.parse("on:line1&line2")


def test_genus_drop():
    assert genus_drop(0, MultiplicitySequence.of(1, 1, 0)) == 0
    assert genus_drop(0, MultiplicitySequence.of(*[1] * 8)) == 0
    assert genus_drop(1, MultiplicitySequence.of(2)) == 0


def test_relative_canonical_degree():
    assert relative_canonical_degree(MultiplicitySequence.of(1, 1, 1, 1)) == 4
    assert relative_canonical_degree(MultiplicitySequence.of(*[2] * 8)) == 16
    assert relative_canonical_degree(MultiplicitySequence.of()) == 0


def test_intersection_after():
    assert intersection_after(1, MultiplicitySequence.of(1), MultiplicitySequence.of(1)) == 0
    assert intersection_after(1, MultiplicitySequence.of(0, 0), MultiplicitySequence.of(1, 1)) == 1
    with pytest.raises(GeometryError):
        intersection_after(1, MultiplicitySequence.of(1), MultiplicitySequence.of(1, 1))
    assert two_curve_bound(6, 6, 7) == 5


def test_toric_bounds():
    assert toric_mult_bounds(DivisorClass.of(F3, 4, 6), False, 3) == 6
    assert toric_mult_bounds(DivisorClass.of(F3, 4, 0), False, 0) == 0
    assert toric_mult_bounds(DivisorClass.of(F3, 4, 6), True, 3) == 7


def test_mult_of_divisor_and_sequence():
    config = WeightedConfig.of(F3, [(sigma, 4), (f1, 3)])
    p = SubschemePoint.at(f1, sigma, 3, 2)
    assert mult_of_divisor_at(config, p) == 7
    assert curve_sequence(p, sigma).values == (1, 1, 0)
    assert curve_sequence(p, f1).values == (1, 0, 0)


@given(st.lists(st.integers(0, 5), max_size=8), st.integers(0, 7), st.integers(0, 4))
def test_genus_drop_monotone(seq, i, pa):
    seq = seq or [0]
    i %= len(seq)
    bumped = list(seq)
    bumped[i] += 1
    assert genus_drop(pa, MultiplicitySequence(tuple(bumped))) <= genus_drop(pa, MultiplicitySequence(tuple(seq)))


@given(st.integers(0, 30), st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8))
def test_intersection_after_never_increases(product, pairs):
    s1 = MultiplicitySequence(tuple(x for x, _ in pairs))
    s2 = MultiplicitySequence(tuple(y for _, y in pairs))
    assert intersection_after(product, s1, s2) <= product


@given(st.integers(1, 8), st.data())
def test_crossing_normal_form(k, data):
    l2_ = data.draw(st.integers(1, k))
    p = SubschemePoint.at(l1, l2, k, l2_)
    assert min(v for _, v in p.contacts) == 1
    assert p.degree >= max(v for _, v in p.contacts)


@given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 6), st.data()), min_size=1, max_size=6))
def test_degree_partition_when_points_sit_on_one_curve(draws):
    points = []
    for line_id, k, data in draws:
        l = data.draw(st.integers(1, k))
        points.append(SubschemePoint.on(CurveRole.line(line_id), k, l))
    by_curve = sum(degree_on_curve(points, CurveRole.line(i)) for i in (1, 2, 3))
    assert by_curve == sum(p.contact(p.roles[0]) for p in points)
    if all(p.contact(p.roles[0]) == p.degree for p in points):
        assert by_curve == total_degree(points)
