"""Combinatorial models of the curve configuration E, the subscheme Delta and multiplicity sequences.

A point of Delta is never given coordinates: it is recorded by the components of E
through it, its length k_P and its contact order with each of those components.
"""

from __future__ import annotations

from functools import lru_cache
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .picard import (
    DivisorClass,
    Number,
    SurfaceModel,
    intersect,
    line,
    member_class,
    minimal_section,
    section_at_infinity,
)


class GeometryError(ValueError):
    pass


class RoleKind(str, Enum):
    LINE = "line"
    MIN_SECTION = "sigma"
    FIBER = "fiber"
    SECTION_INF = "sigma_inf"
    MEMBER = "member"


_KIND_ORDER = {RoleKind.MIN_SECTION: 0, RoleKind.SECTION_INF: 1, RoleKind.LINE: 2, RoleKind.FIBER: 3, RoleKind.MEMBER: 4}


@dataclass(frozen=True)
class CurveRole:
    """A named irreducible curve on X.

    ``ident`` tells apart lines, fibers and copies of sigma_inf; ``klass`` holds the integral class
    coordinates of an irreducible member of a linear system other than the named ones.
    """

    kind: RoleKind
    ident: int = 0
    klass: tuple[int, ...] = ()

    @classmethod
    def line(cls, ident: int) -> CurveRole:
        return cls(RoleKind.LINE, ident)

    @classmethod
    def sigma(cls) -> CurveRole:
        return cls(RoleKind.MIN_SECTION)

    @classmethod
    def fiber(cls, ident: int) -> CurveRole:
        return cls(RoleKind.FIBER, ident)

    @classmethod
    def sigma_inf(cls, ident: int = 0) -> CurveRole:
        """A section in |sigma + n l|; ``ident`` separates further copies."""
        return cls(RoleKind.SECTION_INF, ident)

    @classmethod
    def member(cls, *klass: int) -> CurveRole:
        return cls(RoleKind.MEMBER, 0, tuple(klass))

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.ident, self.klass)

    def __lt__(self, other: CurveRole) -> bool:
        return self.sort_key() < other.sort_key()

    def divisor_class(self, surface: SurfaceModel) -> DivisorClass:
        self.check_surface(surface)
        if self.kind in (RoleKind.LINE, RoleKind.FIBER):
            return line(surface)
        if self.kind is RoleKind.MIN_SECTION:
            return minimal_section(surface)
        if self.kind is RoleKind.SECTION_INF:
            return section_at_infinity(surface)
        return DivisorClass.of(surface, *self.klass)

    def check_surface(self, surface: SurfaceModel) -> None:
        if surface.is_plane and self.kind not in (RoleKind.LINE, RoleKind.MEMBER):
            raise GeometryError(f"{self} does not live on P2")
        if not surface.is_plane and self.kind is RoleKind.LINE:
            raise GeometryError("lines live only on P2")
        if self.kind is RoleKind.MEMBER:
            if len(self.klass) != surface.rank:
                raise GeometryError(f"member class {self.klass} has wrong rank for {surface}")
            if surface.is_plane and self.klass[0] < 2:
                raise GeometryError("a plane member must have degree >= 2")
            if not surface.is_plane:
                m, c = self.klass
                if m < 1 or c - surface.n * m < 0 or (m, c) == (1, surface.n):
                    raise GeometryError(f"class {self.klass} is not a new irreducible member on {surface}")

    def __str__(self) -> str:
        if self.kind in (RoleKind.LINE, RoleKind.FIBER):
            return f"{self.kind.value}{self.ident}"
        if self.kind is RoleKind.MEMBER:
            return "member(" + ",".join(map(str, self.klass)) + ")"
        if self.kind is RoleKind.SECTION_INF and self.ident:
            return f"{self.kind.value}{self.ident + 1}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> CurveRole:
        text = text.strip()
        if text == "sigma":
            return cls.sigma()
        if text == "sigma_inf":
            return cls.sigma_inf()
        if text.startswith("sigma_inf") and text[9:].isdigit() and int(text[9:]) >= 2:
            return cls.sigma_inf(int(text[9:]) - 1)
        if text.startswith("member(") and text.endswith(")"):
            return cls.member(*(int(x) for x in text[7:-1].split(",")))
        for kind in (RoleKind.LINE, RoleKind.FIBER):
            if text.startswith(kind.value) and text[len(kind.value):].isdigit():
                return cls(kind, int(text[len(kind.value):]))
        raise GeometryError(f"unknown curve role {text!r}")


@lru_cache(maxsize=65536)
def meeting_count(surface: SurfaceModel, r1: CurveRole, r2: CurveRole) -> int:
    """Number of (transversal) intersection points of two distinct components."""
    value = intersect(r1.divisor_class(surface), r2.divisor_class(surface))
    if value < 0 or value.denominator != 1:
        raise GeometryError(f"{r1} and {r2} cannot be distinct irreducible curves")
    return int(value)


@dataclass(frozen=True)
class WeightedConfig:
    surface: SurfaceModel
    components: tuple[tuple[CurveRole, Fraction], ...]

    def __post_init__(self):
        comps = tuple(sorted(((r, Fraction(c)) for r, c in self.components), key=lambda rc: rc[0].sort_key()))
        object.__setattr__(self, "components", comps)
        roles = [r for r, _ in comps]
        if not comps:
            raise GeometryError("E must be nonzero")
        if len(set(roles)) != len(roles):
            raise GeometryError("repeated component role")
        for r, c in comps:
            r.check_surface(self.surface)
            if c <= 0:
                raise GeometryError(f"coefficient of {r} must be positive")
        for i, r1 in enumerate(roles):
            for r2 in roles[i + 1:]:
                meeting_count(self.surface, r1, r2)

    @classmethod
    def of(cls, surface: SurfaceModel, components: Iterable[tuple[CurveRole, Number]]) -> WeightedConfig:
        return cls(surface, tuple((r, Fraction(c)) for r, c in components))

    @property
    def roles(self) -> tuple[CurveRole, ...]:
        return tuple(r for r, _ in self.components)

    def coeff(self, role: CurveRole) -> Fraction:
        for r, c in self.components:
            if r == role:
                return c
        return Fraction(0)

    def has(self, role: CurveRole) -> bool:
        return role in self.roles

    def divisor_class(self) -> DivisorClass:
        total = DivisorClass.zero(self.surface)
        for r, c in self.components:
            total = total + r.divisor_class(self.surface) * c
        return total

    def coefficient_multiset(self) -> tuple[Fraction, ...]:
        return tuple(sorted(c for _, c in self.components))


@dataclass(frozen=True)
class Location:
    """Where a point of Delta sits relative to E: on no component, on one, or at a crossing."""

    roles: tuple[CurveRole, ...] = ()
    slot: int = 0

    def __post_init__(self):
        roles = tuple(sorted(self.roles, key=CurveRole.sort_key))
        if len(roles) > 2:
            raise GeometryError("simple normal crossings: at most two components through a point")
        if len(roles) == 2 and roles[0] == roles[1]:
            raise GeometryError("a crossing needs two distinct components")
        if len(roles) < 2 and self.slot != 0:
            raise GeometryError("only crossings carry a slot index")
        object.__setattr__(self, "roles", roles)

    @classmethod
    def generic(cls) -> Location:
        return cls()

    @classmethod
    def on(cls, role: CurveRole) -> Location:
        return cls((role,))

    @classmethod
    def at(cls, r1: CurveRole, r2: CurveRole, slot: int = 0) -> Location:
        return cls((r1, r2), slot)

    def sort_key(self) -> tuple:
        return (len(self.roles), tuple(r.sort_key() for r in self.roles), self.slot)

    def __str__(self) -> str:
        if not self.roles:
            return "generic"
        if len(self.roles) == 1:
            return f"on:{self.roles[0]}"
        tail = f"#{self.slot}" if self.slot else ""
        return f"at:{self.roles[0]}&{self.roles[1]}{tail}"

    @classmethod
    def parse(cls, text: str) -> Location:
        text = text.strip()
        if text == "generic":
            return cls.generic()
        if text.startswith("on:"):
            return cls.on(CurveRole.parse(text[3:]))
        if text.startswith("at:"):
            body, _, slot = text[3:].partition("#")
            a, sep, b = body.partition("&")
            if not sep:
                raise GeometryError(f"bad crossing location {text!r}")
            return cls.at(CurveRole.parse(a), CurveRole.parse(b), int(slot) if slot else 0)
        raise GeometryError(f"bad location {text!r}")


@dataclass(frozen=True)
class SubschemePoint:
    """A point P of Delta with k_P = mult_P(Delta) and contact orders mult_P(Delta cap C)."""

    location: Location
    degree: int
    contacts: tuple[tuple[CurveRole, int], ...] = ()
    ident: str = ""

    def __post_init__(self):
        if self.degree < 1:
            raise GeometryError("a point of Delta has positive length")
        contacts = tuple(sorted(((r, int(v)) for r, v in self.contacts), key=lambda rv: rv[0].sort_key()))
        object.__setattr__(self, "contacts", contacts)
        incident = set(self.location.roles)
        named = [r for r, _ in contacts]
        if len(set(named)) != len(named):
            raise GeometryError("repeated contact entry")
        stray = set(named) - incident
        if stray:
            raise GeometryError(f"contact with non-incident curve {sorted(map(str, stray))}")
        if set(named) != incident:
            raise GeometryError("every incident component needs a contact order")
        for r, v in contacts:
            if v < 1:
                raise GeometryError(f"contact with incident {r} must be >= 1")
            if v > self.degree:
                raise GeometryError(f"contact {v} with {r} exceeds length {self.degree}")
        if len(contacts) == 2 and min(v for _, v in contacts) != 1:
            raise GeometryError("at a crossing one contact must equal 1")

    @classmethod
    def on(cls, role: CurveRole, degree: int, contact: int, ident: str = "") -> SubschemePoint:
        return cls(Location.on(role), degree, ((role, contact),), ident)

    @classmethod
    def at(
        cls, transversal: CurveRole, tangent: CurveRole, degree: int, contact: int, slot: int = 0, ident: str = ""
    ) -> SubschemePoint:
        """A crossing point with contact 1 on ``transversal`` and ``contact`` on ``tangent``."""
        return cls(Location.at(transversal, tangent, slot), degree, ((transversal, 1), (tangent, contact)), ident)

    def contact(self, role: CurveRole) -> int:
        for r, v in self.contacts:
            if r == role:
                return v
        return 0

    @property
    def roles(self) -> tuple[CurveRole, ...]:
        return self.location.roles

    def transversal_and_tangent(self) -> tuple[CurveRole, CurveRole]:
        """Order the two components so that the first has contact 1; ties go to the smaller role."""
        (r1, v1), (r2, v2) = self.contacts
        if v1 == 1:
            return r1, r2
        return r2, r1

    def signature(self) -> tuple:
        return (self.location.sort_key(), self.degree, tuple((r.sort_key(), v) for r, v in self.contacts))


@dataclass(frozen=True)
class MultiplicitySequence:
    values: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if any(v < 0 for v in values):
            raise GeometryError("multiplicities are nonnegative")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: int) -> MultiplicitySequence:
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)


def total_degree(points: Sequence[SubschemePoint]) -> int:
    if not points:
        raise GeometryError("Delta must be nonempty")
    return sum(p.degree for p in points)


def degree_on_curve(points: Sequence[SubschemePoint], role: CurveRole, config: Optional[WeightedConfig] = None) -> int:
    if config is not None and not config.has(role):
        raise GeometryError(f"{role} is not a component of E")
    return sum(p.contact(role) for p in points)


def genus_drop(pa_before: int, seq: MultiplicitySequence) -> int:
    """Arithmetic genus of the strict transform; negative values flag impossible data."""
    twice = 2 * pa_before - sum(m * (m - 1) for m in seq.values)
    return twice // 2


def relative_canonical_degree(seq: MultiplicitySequence) -> int:
    return sum(seq.values)


def intersection_after(product: int, seq1: MultiplicitySequence, seq2: MultiplicitySequence) -> int:
    if len(seq1) != len(seq2):
        raise GeometryError("multiplicity sequences of different lengths")
    return product - sum(x * y for x, y in zip(seq1.values, seq2.values))


def two_curve_bound(k1: int, k2: int, k: int) -> int:
    """Lower bound for (C1.C2) when Delta meets nonsingular C1, C2 in degrees k1, k2."""
    return k1 + k2 - k


def toric_mult_bounds(d: DivisorClass, p_on_sigma: bool, coeff_fiber_through_p: Number) -> Fraction:
    """Upper bound for mult_P D of an effective D = s*sigma + t*l on F_n."""
    if d.surface.is_plane:
        raise GeometryError("toric bounds are stated on F_n")
    s, t = d.coeffs
    bound = s + Fraction(coeff_fiber_through_p)
    if d.surface.n >= 1 and not p_on_sigma:
        bound = min(bound, t)
    return bound


def mult_of_divisor_at(config: WeightedConfig, point: SubschemePoint) -> Fraction:
    """mult_P E for E snc with nonsingular components."""
    return sum((config.coeff(r) for r in point.roles), Fraction(0))


def curve_sequence(point: SubschemePoint, role: CurveRole) -> MultiplicitySequence:
    """Multiplicity sequence of a nonsingular component along the chain over ``point``."""
    contact = point.contact(role)
    return MultiplicitySequence(tuple([1] * contact + [0] * (point.degree - contact)))


__all__ = [
    "CurveRole",
    "GeometryError",
    "Location",
    "MultiplicitySequence",
    "RoleKind",
    "SubschemePoint",
    "WeightedConfig",
    "curve_sequence",
    "degree_on_curve",
    "genus_drop",
    "intersection_after",
    "meeting_count",
    "member_class",
    "mult_of_divisor_at",
    "relative_canonical_degree",
    "toric_mult_bounds",
    "total_degree",
    "two_curve_bound",
]
