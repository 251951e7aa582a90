"""Elimination of a (nu1)-subscheme: closed-form bookkeeping of the curves on M.

Over a point P of length k the elimination leaves a straight chain G_1 - ... - G_k
with self-intersections -2, ..., -2, -1, and K_{M/X} has coefficient i on G_i.
The coefficients of E_M = phi^*E - s K_{M/X} along the chain are given in closed form
for one component through P and for two transversal components through P.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

import networkx as nx

from .geometry import (
    CurveRole,
    GeometryError,
    SubschemePoint,
    WeightedConfig,
    meeting_count,
)
from .picard import DivisorClass, Number, canonical_class, intersect


class EliminationError(ValueError):
    pass


class NegativeCoefficient(EliminationError):
    pass


class PointOffAllComponents(NegativeCoefficient):
    pass


class ContactExceedsDegree(EliminationError):
    pass


class GraphScope(str, Enum):
    SUPPORT = "E"
    FULL = "full"


def sit1_coefficients(m: Number, s: Number, l: int, k: int) -> list[Fraction]:
    """Coefficients of E_M on G_1..G_k with one component of coefficient m and contact l."""
    if not 1 <= l <= k:
        raise ContactExceedsDegree(f"contact {l} outside 1..{k}")
    m, s = Fraction(m), Fraction(s)
    return [i * (m - s) if i <= l else m * l - s * i for i in range(1, k + 1)]


def sit2_coefficients(m1: Number, m2: Number, s: Number, l2: int, k: int) -> list[Fraction]:
    """Two transversal components: m1 with contact 1, m2 with contact l2."""
    if not 1 <= l2 <= k:
        raise ContactExceedsDegree(f"contact {l2} outside 1..{k}")
    m1, m2, s = Fraction(m1), Fraction(m2), Fraction(s)
    return [i * (m2 - s) + m1 if i <= l2 else m1 + l2 * m2 - i * s for i in range(1, k + 1)]


def bare_chain_coefficients(s: Number, k: int) -> list[Fraction]:
    return [-Fraction(s) * i for i in range(1, k + 1)]


@dataclass(frozen=True)
class ExceptionalChain:
    point_index: int
    point: SubschemePoint
    em_coeffs: tuple[Fraction, ...]

    @property
    def length(self) -> int:
        return self.point.degree

    @property
    def self_intersections(self) -> tuple[int, ...]:
        return tuple([-2] * (self.length - 1) + [-1])

    @property
    def kmx_coeffs(self) -> tuple[int, ...]:
        return tuple(range(1, self.length + 1))

    def name(self, i: int) -> str:
        return f"G{self.point_index}.{i}"


@dataclass(frozen=True)
class CurveOnM:
    name: str
    self_intersection: int
    em_coeff: Fraction
    lm_degree: Fraction
    km_degree: Fraction
    is_strict: bool
    role: Optional[CurveRole] = None
    terminal: bool = False


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for name, w in self.vertices:
            g.add_node(name, w=w)
        g.add_edges_from(self.edges)
        return g

    def is_simple(self) -> bool:
        keys = [tuple(sorted(e)) for e in self.edges]
        return len(set(keys)) == len(keys) and all(a != b for a, b in self.edges)

    def is_forest(self) -> bool:
        if not self.is_simple():
            return False
        return nx.is_forest(self.to_networkx()) if self.vertices else True

    def isomorphic_to(self, other: DualGraph) -> bool:
        return nx.is_isomorphic(
            self.to_networkx(), other.to_networkx(), node_match=lambda x, y: x["w"] == y["w"]
        )

    def weight_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(w for _, w in self.vertices))


@dataclass(frozen=True)
class ResolutionModel:
    config: WeightedConfig
    points: tuple[SubschemePoint, ...]
    s: Fraction
    chains: tuple[ExceptionalChain, ...]
    curves: tuple[CurveOnM, ...]
    edges: tuple[tuple[str, str, int], ...]

    def curve(self, name: str) -> CurveOnM:
        for c in self.curves:
            if c.name == name:
                return c
        raise KeyError(name)

    def strict(self, role: CurveRole) -> CurveOnM:
        return self.curve(str(role))

    def max_em_coeff(self) -> Fraction:
        return max(c.em_coeff for c in self.curves)


def _point_coefficients(config: WeightedConfig, point: SubschemePoint, s: Fraction) -> list[Fraction]:
    roles = point.roles
    if not roles:
        if s > 0:
            raise PointOffAllComponents("a point of Delta off E gives a negative coefficient on its chain")
        return bare_chain_coefficients(s, point.degree)
    if len(roles) == 1:
        return sit1_coefficients(config.coeff(roles[0]), s, point.contact(roles[0]), point.degree)
    trans, tang = point.transversal_and_tangent()
    return sit2_coefficients(config.coeff(trans), config.coeff(tang), s, point.contact(tang), point.degree)


def _attachment(point: SubschemePoint, role: CurveRole) -> int:
    """Index of the chain curve met by the strict transform of ``role``."""
    if len(point.roles) == 2:
        trans, tang = point.transversal_and_tangent()
        return 1 if role == trans else point.contact(tang)
    return point.contact(role)


def eliminate(
    config: WeightedConfig,
    points: Sequence[SubschemePoint],
    s: Number,
    lclass: Optional[DivisorClass] = None,
    allow_negative: bool = False,
) -> ResolutionModel:
    """Build the model of M for E = ``config``, Delta = ``points`` and E_M = phi^*E - s K_{M/X}."""
    if not points:
        raise EliminationError("Delta must be nonempty")
    s = Fraction(s)
    surface = config.surface
    kx = canonical_class(surface)
    for p in points:
        for r in p.roles:
            if not config.has(r):
                raise GeometryError(f"point sits on {r}, which is not a component of E")
        for r, v in p.contacts:
            if v > p.degree:
                raise ContactExceedsDegree(f"contact {v} exceeds length {p.degree}")
    crossings = [p.location for p in points if len(p.roles) == 2]
    if len(set(crossings)) != len(crossings):
        raise GeometryError("two points of Delta at the same crossing")
    for loc in set(crossings):
        if loc.slot >= meeting_count(surface, *loc.roles):
            raise GeometryError(f"{loc} names a crossing that does not exist")

    chains = []
    curves: list[CurveOnM] = []
    edges: dict[tuple[str, str], int] = {}

    def add_edge(a: str, b: str, mult: int = 1) -> None:
        key = (a, b) if a < b else (b, a)
        edges[key] = edges.get(key, 0) + mult

    for idx, p in enumerate(points):
        coeffs = _point_coefficients(config, p, s)
        if not allow_negative and any(c < 0 for c in coeffs):
            raise NegativeCoefficient(f"point {idx} gives chain coefficients {[str(c) for c in coeffs]}")
        chain = ExceptionalChain(idx, p, tuple(coeffs))
        chains.append(chain)
        for i in range(1, p.degree + 1):
            terminal = i == p.degree
            curves.append(
                CurveOnM(
                    name=chain.name(i),
                    self_intersection=-1 if terminal else -2,
                    em_coeff=coeffs[i - 1],
                    lm_degree=Fraction(1 if terminal else 0),
                    km_degree=Fraction(-1 if terminal else 0),
                    is_strict=False,
                    terminal=terminal,
                )
            )
            if i > 1:
                add_edge(chain.name(i - 1), chain.name(i))
        for r in p.roles:
            add_edge(str(r), chain.name(_attachment(p, r)))

    for role, coeff in config.components:
        cls = role.divisor_class(surface)
        hits = sum(p.contact(role) for p in points)
        curves.append(
            CurveOnM(
                name=str(role),
                self_intersection=int(intersect(cls, cls)) - hits,
                em_coeff=coeff,
                lm_degree=(intersect(lclass, cls) - hits) if lclass is not None else Fraction(0),
                km_degree=intersect(kx, cls) + hits,
                is_strict=True,
                role=role,
            )
        )

    roles = config.roles
    for i, r1 in enumerate(roles):
        for r2 in roles[i + 1:]:
            shared = sum(1 for loc in crossings if set(loc.roles) == {r1, r2})
            left = meeting_count(surface, r1, r2) - shared
            if left > 0:
                add_edge(str(r1), str(r2), left)

    return ResolutionModel(
        config=config,
        points=tuple(points),
        s=s,
        chains=tuple(chains),
        curves=tuple(curves),
        edges=tuple((a, b, m) for (a, b), m in sorted(edges.items())),
    )


def dual_graph_of(model: ResolutionModel, which: GraphScope = GraphScope.SUPPORT) -> DualGraph:
    if which is GraphScope.SUPPORT:
        keep = [c for c in model.curves if c.em_coeff > 0]
    else:
        keep = list(model.curves)
    names = {c.name for c in keep}
    vertices = tuple((c.name, c.self_intersection) for c in keep)
    edges = []
    for a, b, mult in model.edges:
        if a in names and b in names:
            edges.extend([(a, b)] * mult)
    return DualGraph(vertices, tuple(edges))


def exceptional_curves(model: ResolutionModel) -> list[str]:
    """Curves C on M with (L_M.C) = 0: non-terminal chain curves and strict transforms of E."""
    return [c.name for c in model.curves if c.lm_degree == 0]


def structural_exceptional_curves(model: ResolutionModel) -> list[str]:
    return [c.name for c in model.curves if c.is_strict or not c.terminal]
