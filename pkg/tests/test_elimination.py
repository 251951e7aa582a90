import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.catalog import TEMPLATES_BY_KEY
from delpezzo.elimination import (
    ContactExceedsDegree,
    DualGraph,
    EliminationError,
    GraphScope,
    NegativeCoefficient,
    PointOffAllComponents,
    bare_chain_coefficients,
    dual_graph_of,
    eliminate,
    exceptional_curves,
    sit1_coefficients,
    sit2_coefficients,
    structural_exceptional_curves,
)
from delpezzo.geometry import CurveRole, Location, SubschemePoint, WeightedConfig
from delpezzo.picard import DivisorClass, SurfaceModel
from delpezzo.triplet import resolution
from oracles import relative_canonical_dot, simulate_point

P2 = SurfaceModel.p2()
l1, l2 = CurveRole.line(1), CurveRole.line(2)


def _example(key):
    return TEMPLATES_BY_KEY[key].instance().example()


def test_sit1_closed_form():
    assert sit1_coefficients(5, 4, 4, 5) == [1, 2, 3, 4, 0]
    assert sit1_coefficients(1, 1, 1, 1) == [0]
    with pytest.raises(ContactExceedsDegree):
        sit1_coefficients(3, 1, 4, 3)


def test_sit2_closed_form():
    assert sit2_coefficients(2, 3, 1, 3, 4) == [4, 6, 8, 7]
    with pytest.raises(ContactExceedsDegree):
        sit2_coefficients(1, 1, 1, 0, 2)


def test_bare_chain():
    assert bare_chain_coefficients(2, 3) == [-2, -4, -6]


def test_plane_line_example():
    model = resolution(_example("p2_1"))
    assert all(ch.em_coeffs == (0,) for ch in model.chains)
    assert model.strict(l1).self_intersection == -3
    graph = dual_graph_of(model)
    assert graph.vertices == (("line1", -3),)
    assert exceptional_curves(model) == ["line1"]
    assert all(model.curve(ch.name(1)).lm_degree == 1 for ch in model.chains)


def test_eleven_seven_example():
    model = resolution(_example("p2_5"))
    (chain,) = model.chains
    assert chain.em_coeffs == (1, 2, 3, 4, 0)
    assert chain.self_intersections == (-2, -2, -2, -2, -1)
    assert model.strict(l1).self_intersection == -3
    assert model.strict(l1).em_coeff == 5
    graph = dual_graph_of(model)
    path = DualGraph(
        (("a", -3), ("b", -2), ("c", -2), ("d", -2), ("e", -2)),
        (("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")),
    )
    assert graph.isomorphic_to(path)
    assert set(exceptional_curves(model)) == {"line1", "G0.1", "G0.2", "G0.3", "G0.4"}


def test_small_f2_graph():
    graph = dual_graph_of(resolution(_example("f2_3")))
    assert sorted(w for _, w in graph.vertices) == [-3, -2]
    assert len(graph.edges) == 1


def test_disjoint_graph_for_21_11():
    graph = dual_graph_of(resolution(_example("f2_x")))
    g = graph.to_networkx()
    import networkx as nx

    comps = sorted(sorted(g.nodes[v]["w"] for v in c) for c in nx.connected_components(g))
    assert comps == [[-3], [-3, -2, -2]]


def test_full_scope_adds_terminal_curves():
    model = resolution(_example("p2_1"))
    full = dual_graph_of(model, GraphScope.FULL)
    assert len(full.vertices) == 5
    assert sorted(w for _, w in full.vertices) == [-3, -1, -1, -1, -1]


def test_errors():
    config = WeightedConfig.of(P2, [(l1, 1)])
    with pytest.raises(EliminationError):
        eliminate(config, [], 1)
    with pytest.raises(PointOffAllComponents):
        eliminate(config, [SubschemePoint(Location.generic(), 1)], 1)
    with pytest.raises(NegativeCoefficient):
        eliminate(config, [SubschemePoint.on(l1, 3, 1)], 1)
    model = eliminate(config, [SubschemePoint.on(l1, 3, 1)], 1, allow_negative=True)
    assert model.chains[0].em_coeffs == (0, -1, -2)


def test_generic_point_with_zero_s():
    config = WeightedConfig.of(P2, [(l1, 1)])
    model = eliminate(config, [SubschemePoint(Location.generic(), 1)], 0)
    full = dual_graph_of(model, GraphScope.FULL)
    assert ("G0.1", -1) in full.vertices


def _check_against_simulation(m1, m2, s, k, l, two):
    if two:
        comps = [("t", m1, 1), ("u", m2, l)]
        closed = sit2_coefficients(m1, m2, s, l, k)
        config = WeightedConfig.of(P2, [(l1, m1), (l2, m2)])
        point = SubschemePoint.at(l1, l2, k, l)
    else:
        comps = [("u", m1, l)]
        closed = sit1_coefficients(m1, s, l, k)
        config = WeightedConfig.of(P2, [(l1, m1)])
        point = SubschemePoint.on(l1, k, l)
    sim = simulate_point(comps, k)
    assert sim.em_coeffs(s) == closed
    model = eliminate(config, [point], s, DivisorClass.of(P2, 4), allow_negative=True)
    chain = model.chains[0]
    assert list(chain.em_coeffs) == closed
    assert [c.self_int for c in sim.chain] == list(chain.self_intersections)
    assert [c.k_rel for c in sim.chain] == list(chain.kmx_coeffs)
    # strict transforms: self-intersection and attachment
    tang = l2 if two else l1
    assert model.strict(tang).self_intersection == 1 - sim.component_drop["u"]
    edges = {frozenset((a, b)) for a, b, _ in model.edges}
    assert frozenset((str(tang), chain.name(sim.attach["u"]))) in edges
    if two:
        assert model.strict(l1).self_intersection == 1 - sim.component_drop["t"]
        assert frozenset(("line1", chain.name(sim.attach["t"]))) in edges
        assert frozenset(("line1", "line2")) not in edges
    # L_M = phi^*L - K_{M/X} is zero on the chain except on the terminal curve
    for i in range(1, k + 1):
        assert -relative_canonical_dot(sim, i) == (1 if i == k else 0)
        assert model.curve(chain.name(i)).lm_degree == (1 if i == k else 0)


def test_oracle_equivalence_randomized():
    rng = random.Random(20240611)
    cases = 0
    while cases < 10_000:
        k = rng.randint(1, 8)
        l = rng.randint(1, k)
        two = rng.random() < 0.5
        m1, m2 = rng.randint(1, 30), rng.randint(1, 30)
        s = rng.randint(1, 29)
        _check_against_simulation(m1, m2, s, k, l, two)
        cases += 1
    assert cases >= 10_000


@given(st.integers(1, 30), st.integers(1, 29), st.integers(1, 8), st.data())
def test_sit1_maximum_when_balanced(m, s, k, data):
    l = data.draw(st.integers(1, k))
    coeffs = sit1_coefficients(m, s, l, k)
    if m * l == s * k and m > s:
        assert coeffs[-1] == 0
        assert max(coeffs) == l * (m - s) == s * (k - l)


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 29), st.integers(1, 8), st.data())
def test_sit2_maximum_when_balanced(m1, m2, s, k, data):
    l2_ = data.draw(st.integers(1, k))
    coeffs = sit2_coefficients(m1, m2, s, l2_, k)
    if m1 + m2 * l2_ == s * k and m2 >= s:
        assert coeffs[-1] == 0
        assert max(coeffs) == s * (k - l2_)


@given(st.integers(1, 8), st.data())
def test_minus_k_is_phi_nef(k, data):
    l = data.draw(st.integers(1, k))
    config = WeightedConfig.of(P2, [(l1, 3)])
    model = eliminate(config, [SubschemePoint.on(l1, k, l)], 1, DivisorClass.of(P2, 4), allow_negative=True)
    for c in model.curves:
        if not c.is_strict:
            assert -c.km_degree >= 0
            assert c.km_degree + c.lm_degree == 0


def test_exceptional_characterizations_agree(desk_records):
    for rec in desk_records:
        model = resolution(rec.triplet)
        by_degree = set(exceptional_curves(model))
        assert by_degree == set(structural_exceptional_curves(model))
        support = {name for name, _ in rec.graph.vertices}
        assert support == by_degree
