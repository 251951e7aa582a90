from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.picard import (
    DivisorClass,
    SurfaceMismatch,
    SurfaceModel,
    arithmetic_genus,
    canonical_class,
    intersect,
    is_big_nef,
    is_effective_class,
    is_nef,
    line,
    member_class,
    minimal_section,
    section_at_infinity,
)
from oracles import expand_intersection

P2 = SurfaceModel.p2()
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_surface_constraints():
    with pytest.raises(ValueError):
        SurfaceModel.hirzebruch(-1)
    assert SurfaceModel.p2().rank == 1
    assert SurfaceModel.hirzebruch(4).rank == 2
    assert str(SurfaceModel.hirzebruch(3)) == "F3"


def test_line_squared_on_plane():
    assert intersect(line(P2), line(P2)) == 1


def test_minimal_section_squared():
    F3 = SurfaceModel.hirzebruch(3)
    assert intersect(minimal_section(F3), minimal_section(F3)) == -3


def test_l_on_f2_against_expansion():
    F2 = SurfaceModel.hirzebruch(2)
    L = DivisorClass.of(F2, 2, 4)
    # 2(sigma.sigma) + 4(l.sigma) = -4 + 4
    assert expand_intersection(F2.gram(), (2, 4), (1, 0)) == 0
    assert intersect(L, minimal_section(F2)) == 0


def test_canonical_classes():
    assert canonical_class(P2) == DivisorClass.of(P2, -3)
    assert canonical_class(SurfaceModel.hirzebruch(2)) == DivisorClass.of(SurfaceModel.hirzebruch(2), -2, -4)
    assert intersect(canonical_class(P2), canonical_class(P2)) == 9
    for n in range(8):
        K = canonical_class(SurfaceModel.hirzebruch(n))
        assert intersect(K, K) == 8


def test_mismatched_surfaces_rejected():
    with pytest.raises(SurfaceMismatch):
        intersect(line(P2), line(SurfaceModel.hirzebruch(1)))


def test_rank_checked():
    with pytest.raises(ValueError):
        DivisorClass.of(P2, 1, 2)


def test_genus_of_standard_curves():
    assert arithmetic_genus(line(P2)) == 0
    assert arithmetic_genus(DivisorClass.of(P2, 3)) == 1
    for n in range(11):
        X = SurfaceModel.hirzebruch(n)
        for c in (line(X), minimal_section(X), section_at_infinity(X)):
            assert arithmetic_genus(c) == 0


def test_genus_of_2s_2l_on_f1():
    F1 = SurfaceModel.hirzebruch(1)
    C = DivisorClass.of(F1, 2, 2)
    assert intersect(C, canonical_class(F1)) + intersect(C, C) == -2
    assert arithmetic_genus(C) == 0


@pytest.mark.parametrize("n", range(0, 11))
def test_genus_formula_for_members(n):
    X = SurfaceModel.hirzebruch(n)
    for m in range(1, 11):
        for u in range(1, 11):
            assert 2 * arithmetic_genus(member_class(X, m, u)) == (m - 1) * (n * m + 2 * u - 2)


@pytest.mark.parametrize("n", range(0, 11))
def test_section_at_infinity_misses_sigma(n):
    X = SurfaceModel.hirzebruch(n)
    assert intersect(section_at_infinity(X), minimal_section(X)) == 0


def test_nef_and_big():
    F2 = SurfaceModel.hirzebruch(2)
    assert is_nef(DivisorClass.of(F2, 1, 2))
    assert not is_nef(DivisorClass.of(F2, 1, 1))
    assert is_big_nef(DivisorClass.of(F2, 1, 3))
    assert not is_big_nef(DivisorClass.of(F2, 0, 1))
    assert is_effective_class(DivisorClass.of(F2, 1, 0))
    assert not is_effective_class(DivisorClass.of(F2, -1, 5))


@st.composite
def classes(draw, n=None):
    if n is None:
        n = draw(st.one_of(st.none(), st.integers(0, 10)))
    X = P2 if n is None else SurfaceModel.hirzebruch(n)
    return X, [draw(rationals) for _ in range(X.rank)]


@given(st.integers(0, 10), st.data())
def test_bilinear_and_symmetric(n, data):
    X = SurfaceModel.hirzebruch(n)
    vs = [DivisorClass.of(X, *data.draw(st.lists(rationals, min_size=2, max_size=2))) for _ in range(3)]
    x, y = data.draw(rationals), data.draw(rationals)
    a, b, c = vs
    assert intersect(a, b) == intersect(b, a)
    assert intersect(a * x + b * y, c) == x * intersect(a, c) + y * intersect(b, c)
    assert intersect(a, b) == expand_intersection(X.gram(), a.coeffs, b.coeffs)


@given(classes())
def test_exact_arithmetic(data):
    X, coeffs = data
    c = DivisorClass.of(X, *coeffs)
    assert all(isinstance(v, Fraction) for v in c.coeffs)
    assert (c * 3) / 3 == c
    assert c - c == DivisorClass.zero(X)


@given(st.integers(0, 10), st.integers(-8, 8), st.integers(-8, 8))
def test_adjunction_parity(n, x, y):
    X = SurfaceModel.hirzebruch(n)
    C = DivisorClass.of(X, x, y)
    assert arithmetic_genus(C).denominator == 1
