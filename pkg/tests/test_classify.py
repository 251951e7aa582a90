from fractions import Fraction

import pytest

from delpezzo import catalog
from delpezzo.classify import (
    EXCLUDED_CASES,
    SearchBounds,
    UnclassifiedTriplet,
    admissible_indices,
    canonical_form,
    canonical_order_key,
    enumerate_all,
    enumerate_fn_big,
    enumerate_fn_small,
    enumerate_p2,
    fractional_index_set,
    label_type,
    raw_cells,
    run_cells,
)
from delpezzo.geometry import CurveRole, SubschemePoint, WeightedConfig
from delpezzo.triplet import MultiIndex, TripletConfig, validate


def _labels(records):
    return {r.instance_label for r in records}


def test_admissible_indices():
    idx = admissible_indices(6)
    assert MultiIndex(3, 2) in idx and MultiIndex(6, 3) in idx
    assert all(i.b >= 2 and Fraction(1, 2) <= i.ratio < 1 for i in idx)
    assert admissible_indices(2) == []


def test_search_bounds():
    assert SearchBounds().a_max == 30 and SearchBounds().n_max == 12
    assert SearchBounds(10, 5).instantiates_every_family_twice
    with pytest.raises(ValueError):
        SearchBounds(-1, 3)


def test_plane_branch():
    assert _labels(enumerate_p2(MultiIndex(3, 2))) == {"[(3,2),1]_0"}
    assert _labels(enumerate_p2(MultiIndex(9, 5))) == {"[(9,5),7]_{×43}"}
    assert _labels(enumerate_p2(MultiIndex(6, 3))) == {"[(6,3),6]_{×21}"}


def test_big_branch():
    assert _labels(enumerate_fn_big(MultiIndex(7, 4), 12)) == {"[(7,4),2;2,4]_1"}
    assert "[(21,11),2;9,7]_1" in _labels(enumerate_fn_big(MultiIndex(21, 11), 12))


def test_big_half_rows_are_empty():
    for t in range(2, 8):
        assert enumerate_fn_big(MultiIndex(2 * t, t), 12) == []


def test_nonbig_branch():
    recs = enumerate_fn_small(MultiIndex(7, 5), 4)
    assert ("[(2n-1,n+1),n;2(n-2),n-2]_1", (("n", 4),)) in {(r.label, r.family_params) for r in recs}
    assert "[(15,9),3;12,21]_{5∞1}" in _labels(enumerate_fn_small(MultiIndex(15, 9), 12))
    assert "[(4,2),3;4,8]_{2∞11}" in _labels(enumerate_fn_small(MultiIndex(4, 2), 12))


def test_small_bounds_contain_first_types():
    labels = _labels(enumerate_all(SearchBounds(3, 3)))
    assert {"[(3,2),1]_0", "[(3,2),3;2,3]_{1∞}"} <= labels


def test_empty_range():
    assert enumerate_all(SearchBounds(2, 12)) == []


def test_fractional_index_set_values():
    s = fractional_index_set(12)
    assert Fraction(3, 4) in s and Fraction(2, 3) in s and Fraction(7, 11) in s
    assert all(r.denominator <= 12 and Fraction(1, 2) < r < 1 for r in s)
    assert fractional_index_set(7) == {r for r in s if r.denominator <= 7}


def test_fractional_index_set_against_brute_force():
    cap = 40
    brute = set()
    for s in range(1, 200):
        for t in (4, 5, 6):
            r = Fraction(2 * s + t, 4 * s + t)
            if r.denominator <= cap:
                brute.add(r)
    assert fractional_index_set(cap) == brute


def test_label_rejects_corrupted_triplet():
    t = catalog.TEMPLATES_BY_KEY["p2_5"].instance().example()
    p = t.points[0]
    corrupted = TripletConfig(t.index, t.config, (SubschemePoint(p.location, p.degree + 1, p.contacts),))
    with pytest.raises(UnclassifiedTriplet):
        label_type(corrupted)


def test_label_of_known_types():
    rec = label_type(catalog.TEMPLATES_BY_KEY["f2_x"].instance().example())
    assert rec.instance_label == "[(21,11),2;9,7]_1"
    rec = label_type(catalog.TEMPLATES_BY_KEY["f3_5inf1"].instance().example())
    assert rec.instance_label == "[(15,9),3;12,21]_{5∞1}"
    assert rec.cartier == 3


def test_canonical_form_is_relabeling_invariant():
    t = catalog.TEMPLATES_BY_KEY["k7_322"].instance(5).example()
    f1, f2, f3 = (CurveRole.fiber(i) for i in (1, 2, 3))
    swap = {f1: f3, f3: f1}
    ren = lambda r: swap.get(r, r)  # noqa: E731
    config = WeightedConfig.of(t.surface, [(ren(r), c) for r, c in t.config.components])
    pts = tuple(SubschemePoint(type(p.location)(tuple(ren(r) for r in p.roles)), p.degree,
                               tuple((ren(r), v) for r, v in p.contacts)) for p in t.points)
    other = TripletConfig(t.index, config, pts)
    assert validate(other).ok
    assert canonical_form(other) == canonical_form(t)


def test_output_is_canonically_sorted(desk_records):
    keys = [canonical_order_key(r.triplet) for r in desk_records]
    assert keys == sorted(keys)


def test_records_are_unique(desk_records):
    pairs = [(r.label, r.family_params) for r in desk_records]
    assert len(pairs) == len(set(pairs))


def test_thread_count_does_not_change_output(monkeypatch):
    bounds = SearchBounds(9, 5)
    one = enumerate_all(bounds, workers=1)
    monkeypatch.setenv("DELPEZZO_THREADS", "2")
    two = enumerate_all(bounds, workers=2)
    assert [(r.label, r.family_params, r.triplet, r.realizations) for r in one] == [
        (r.label, r.family_params, r.triplet, r.realizations) for r in two
    ]


def test_excluded_case_cells_exist():
    from delpezzo.classify import excluded_case_cells

    for case in EXCLUDED_CASES:
        assert excluded_case_cells(case, 12), case


def test_raw_cells_cover_pruned_cells():
    bounds = SearchBounds(12, 6)
    from delpezzo.classify import pruned_cells

    raw = {(c.surface, c.index, c.lcoeffs) for c in raw_cells(bounds)}
    for c in pruned_cells(bounds):
        assert (c.surface, c.index, c.lcoeffs) in raw


def test_raw_search_on_a_single_index():
    recs = enumerate_all(SearchBounds(5, 5), prune=False, indices=[MultiIndex(5, 3)])
    assert _labels(recs) == _labels(enumerate_all(SearchBounds(5, 5), indices=[MultiIndex(5, 3)]))
    assert run_cells([], 1) == []
