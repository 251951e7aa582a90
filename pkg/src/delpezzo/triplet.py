"""Validation and normalization of candidate (a,b)-fundamental triplets (X, E, Delta)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .elimination import (
    DualGraph,
    EliminationError,
    GraphScope,
    ResolutionModel,
    dual_graph_of,
    eliminate,
)
from .geometry import (
    CurveRole,
    GeometryError,
    RoleKind,
    SubschemePoint,
    WeightedConfig,
    degree_on_curve,
)
from .picard import (
    DivisorClass,
    canonical_class,
    intersect,
    is_nef,
    line,
    minimal_section,
)


class NoIntegralSolution(ValueError):
    pass


@dataclass(frozen=True, order=True)
class MultiIndex:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("a multi-index has positive entries")
        if not (self.a <= 2 * self.b < 2 * self.a):
            raise ValueError(f"b/a = {self.b}/{self.a} outside [1/2, 1)")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.b, self.a)

    @property
    def s(self) -> int:
        return self.a - self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class TripletConfig:
    index: MultiIndex
    config: WeightedConfig
    points: tuple[SubschemePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(self.points, key=SubschemePoint.signature)))

    @property
    def surface(self):
        return self.config.surface

    def delta_signature(self) -> tuple:
        return tuple(p.signature() for p in self.points)


CONDITIONS = {
    "C1": "Delta has positive degree, and degree at least 2 on P2",
    "C2": "E is a simple normal crossing divisor with coefficients in {1,...,a-1}",
    "C3": "bL = -aK_X - E has an integral solution L",
    "C4": "K_X + L is nef and (K_X + L).L > 0",
    "C5": "(L.C) = deg(Delta cap C) for every component C of E",
    "C6": "every point of Delta balances E_M on its terminal curve and keeps coefficients below a",
    "C7": "non-big K_X + L on F_n: Delta misses sigma and sections obey the normal form",
    "C8": "E_M is effective, snc with tree components and coefficients in {1,...,a-1}",
    "C9": "(E.gamma) <= 0 for every (-1)-curve gamma of X",
}


@dataclass
class ValidationReport:
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, list[str]] = field(default_factory=dict)

    def fail(self, code: str, message: str) -> None:
        self.results[code] = False
        self.details.setdefault(code, []).append(message)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failed(self) -> list[str]:
        return [c for c, v in self.results.items() if not v]

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "conditions": [
                {
                    "code": code,
                    "passed": self.results[code],
                    "statement": CONDITIONS[code],
                    "details": self.details.get(code, []),
                }
                for code in CONDITIONS
            ],
        }


def fundamental_divisor(index: MultiIndex, config: WeightedConfig) -> DivisorClass:
    raw = canonical_class(config.surface) * (-index.a) - config.divisor_class()
    lclass = raw / index.b
    if not lclass.is_integral:
        raise NoIntegralSolution(f"({raw})/{index.b} is not integral")
    return lclass


def adjoint_class(index: MultiIndex, config: WeightedConfig) -> DivisorClass:
    return canonical_class(config.surface) + fundamental_divisor(index, config)


def adjoint_is_big(index: MultiIndex, config: WeightedConfig) -> bool:
    kl = adjoint_class(index, config)
    return is_nef(kl) and intersect(kl, kl) > 0


def _point_balance(t: TripletConfig, p: SubschemePoint, report: ValidationReport) -> None:
    a, s = t.index.a, t.index.s
    k = p.degree
    if not p.roles:
        report.fail("C6", f"a point of length {k} lies on no component of E")
        return
    if len(p.roles) == 1:
        r = p.roles[0]
        m, l = t.config.coeff(r), p.contact(r)
        if m * l != s * k:
            report.fail("C6", f"point on {r}: m*l = {m * l} but (a-b)k = {s * k}")
        if s * (k - l) >= a:
            report.fail("C6", f"point on {r}: (a-b)(k-l) = {s * (k - l)} >= a")
        return
    trans, tang = p.transversal_and_tangent()
    m1, m2, l2 = t.config.coeff(trans), t.config.coeff(tang), p.contact(tang)
    if m1 + m2 * l2 != s * k:
        report.fail("C6", f"crossing {trans}/{tang}: m1 + m2*l2 = {m1 + m2 * l2} but (a-b)k = {s * k}")
    if s * (k - l2) >= a:
        report.fail("C6", f"crossing {trans}/{tang}: (a-b)(k-l2) = {s * (k - l2)} >= a")


def validate(t: TripletConfig, model_out: Optional[list] = None) -> ValidationReport:
    """Check the sufficient conditions for (X, E, Delta) to be an (a,b)-fundamental triplet."""
    report = ValidationReport({code: True for code in CONDITIONS})
    X = t.surface
    a, s = t.index.a, t.index.s
    config, points = t.config, t.points

    k = sum(p.degree for p in points)
    if k < 1 or (X.is_plane and k < 2):
        report.fail("C1", f"deg Delta = {k}")

    for r, c in config.components:
        if c.denominator != 1 or not 1 <= c <= a - 1:
            report.fail("C2", f"coefficient {c} of {r} outside 1..{a - 1}")

    try:
        lclass = fundamental_divisor(t.index, config)
    except NoIntegralSolution as exc:
        report.fail("C3", str(exc))
        lclass = None

    big = False
    if lclass is not None:
        kl = canonical_class(X) + lclass
        if not is_nef(kl):
            report.fail("C4", f"K+L = {kl} is not nef")
        if intersect(kl, lclass) <= 0:
            report.fail("C4", f"(K+L).L = {intersect(kl, lclass)}")
        big = is_nef(kl) and intersect(kl, kl) > 0

        for r, _ in config.components:
            lc = intersect(lclass, r.divisor_class(X))
            dc = degree_on_curve(points, r)
            if lc != dc:
                report.fail("C5", f"(L.{r}) = {lc} but deg(Delta cap {r}) = {dc}")

    for p in points:
        _point_balance(t, p, report)

    if lclass is not None and not X.is_plane and not big:
        sigma = CurveRole.sigma()
        if X.n == 0:
            report.fail("C7", "every point of F0 lies on a minimal section")
        for p in points:
            if sigma in p.roles:
                report.fail("C7", "a point of Delta lies on sigma")
        for r, c in config.components:
            cls = r.divisor_class(X)
            if r.kind is RoleKind.MIN_SECTION or intersect(cls, line(X)) != 1:
                continue
            lhs = X.n + intersect(cls, cls)
            dd = degree_on_curve(points, r)
            if lhs < dd:
                report.fail("C7", f"section {r}: n + D^2 = {lhs} < deg(Delta cap D) = {dd}")
            elif lhs == dd and config.coeff(sigma) < c:
                report.fail("C7", f"section {r}: equality case needs coeff_sigma E >= {c}")

    try:
        model = eliminate(config, points, s, lclass)
    except (EliminationError, GeometryError) as exc:
        report.fail("C8", str(exc))
    else:
        if model_out is not None:
            model_out.append(model)
        for c in model.curves:
            if c.em_coeff > 0 and (c.em_coeff.denominator != 1 or c.em_coeff > a - 1):
                report.fail("C8", f"E_M coefficient {c.em_coeff} on {c.name} outside 1..{a - 1}")
            if c.em_coeff > 0 and c.terminal:
                report.fail("C8", f"terminal (-1)-curve {c.name} lies in E_M")
        graph = dual_graph_of(model, GraphScope.SUPPORT)
        if not graph.is_forest():
            report.fail("C8", "the dual graph of E_M is not a forest of simple trees")

    if not X.is_plane and X.n == 1:
        e_sigma = intersect(config.divisor_class(), minimal_section(X))
        if e_sigma > 0:
            report.fail("C9", f"(E.sigma) = {e_sigma} > 0 on F1")
    return report


def is_valid(t: TripletConfig) -> bool:
    return validate(t).ok


def is_normalized(t: TripletConfig) -> bool:
    g = gcd(t.index.a, t.index.b)
    coeffs = [c for _, c in t.config.components]
    for d in range(2, g + 1):
        if g % d == 0 and all(c.denominator == 1 and c.numerator % d == 0 for c in coeffs):
            return False
    return True


def cartier_multiplier(t: TripletConfig) -> int:
    """The factor m with a = m * a0, where a0/b0 is b/a in lowest terms read as (a0, b0)."""
    return gcd(t.index.a, t.index.b)


def resolution(t: TripletConfig) -> ResolutionModel:
    lclass = fundamental_divisor(t.index, t.config)
    return eliminate(t.config, t.points, t.index.s, lclass)


def support_graph(t: TripletConfig) -> DualGraph:
    return dual_graph_of(resolution(t), GraphScope.SUPPORT)
