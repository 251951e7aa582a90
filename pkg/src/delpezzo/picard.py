"""Intersection theory on the Picard lattices of P^2 and the Hirzebruch surfaces F_n."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class SurfaceKind(str, Enum):
    PROJECTIVE_PLANE = "P2"
    HIRZEBRUCH = "F"


class SurfaceMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SurfaceModel:
    kind: SurfaceKind
    n: int = 0

    def __post_init__(self):
        if self.kind is SurfaceKind.HIRZEBRUCH and self.n < 0:
            raise ValueError(f"F_n needs n >= 0, got {self.n}")
        if self.kind is SurfaceKind.PROJECTIVE_PLANE and self.n != 0:
            raise ValueError("P2 carries no degree parameter")

    @classmethod
    def p2(cls) -> SurfaceModel:
        return cls(SurfaceKind.PROJECTIVE_PLANE)

    @classmethod
    def hirzebruch(cls, n: int) -> SurfaceModel:
        return cls(SurfaceKind.HIRZEBRUCH, n)

    @property
    def is_plane(self) -> bool:
        return self.kind is SurfaceKind.PROJECTIVE_PLANE

    @property
    def rank(self) -> int:
        return 1 if self.is_plane else 2

    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.is_plane:
            return ((1,),)
        return ((-self.n, 1), (1, 0))

    def sort_key(self) -> tuple[int, int]:
        return (0, 0) if self.is_plane else (1, self.n)

    def __str__(self) -> str:
        return "P2" if self.is_plane else f"F{self.n}"


@dataclass(frozen=True)
class DivisorClass:
    """A rational class in the basis {l} of P^2 or {sigma, l} of F_n."""

    surface: SurfaceModel
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.surface.rank:
            raise ValueError(f"{self.surface} expects {self.surface.rank} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, surface: SurfaceModel, *coeffs: Number) -> DivisorClass:
        return cls(surface, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, surface: SurfaceModel) -> DivisorClass:
        return cls(surface, (Fraction(0),) * surface.rank)

    def _check(self, other: DivisorClass) -> None:
        if self.surface != other.surface:
            raise SurfaceMismatch(f"{self.surface} vs {other.surface}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.surface, tuple(-x for x in self.coeffs))

    def __mul__(self, scalar: Number) -> DivisorClass:
        return DivisorClass(self.surface, tuple(x * scalar for x in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> DivisorClass:
        return DivisorClass(self.surface, tuple(x / Fraction(scalar) for x in self.coeffs))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return tuple(int(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.surface.is_plane:
            return f"{self.coeffs[0]}l"
        return f"{self.coeffs[0]}s+{self.coeffs[1]}l"


def line(surface: SurfaceModel) -> DivisorClass:
    """The class l: a line on P^2, a fiber on F_n."""
    return DivisorClass.of(surface, 1) if surface.is_plane else DivisorClass.of(surface, 0, 1)


def minimal_section(surface: SurfaceModel) -> DivisorClass:
    if surface.is_plane:
        raise ValueError("P2 has no minimal section")
    return DivisorClass.of(surface, 1, 0)


def section_at_infinity(surface: SurfaceModel) -> DivisorClass:
    if surface.is_plane:
        raise ValueError("P2 has no section at infinity")
    return DivisorClass.of(surface, 1, surface.n)


def member_class(surface: SurfaceModel, m: int, u: int) -> DivisorClass:
    """Class of m*sigma + (n*m + u)*l on F_n, or of a degree-m curve on P^2 (u ignored)."""
    if surface.is_plane:
        return DivisorClass.of(surface, m)
    return DivisorClass.of(surface, m, surface.n * m + u)


def intersect(c1: DivisorClass, c2: DivisorClass) -> Fraction:
    c1._check(c2)
    g = c1.surface.gram()
    return sum(
        (c1.coeffs[i] * g[i][j] * c2.coeffs[j] for i in range(len(g)) for j in range(len(g))),
        Fraction(0),
    )


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    if surface.is_plane:
        return DivisorClass.of(surface, -3)
    return DivisorClass.of(surface, -2, -(surface.n + 2))


def arithmetic_genus(c: DivisorClass) -> Fraction:
    """Adjunction: 2 p_a - 2 = C.(C + K)."""
    return intersect(c, c + canonical_class(c.surface)) / 2 + 1


def is_nef(c: DivisorClass) -> bool:
    """Nef cone of P^2 is dual to {l}; of F_n dual to {sigma, l}."""
    s = c.surface
    if s.is_plane:
        return c.coeffs[0] >= 0
    return intersect(c, minimal_section(s)) >= 0 and intersect(c, line(s)) >= 0


def is_big_nef(c: DivisorClass) -> bool:
    return is_nef(c) and intersect(c, c) > 0


def is_effective_class(c: DivisorClass) -> bool:
    """Effective cone of P^2 is spanned by l; of F_n by sigma and l."""
    return all(x >= 0 for x in c.coeffs)


def combine(pairs: Iterable[tuple[Number, DivisorClass]], surface: SurfaceModel) -> DivisorClass:
    total = DivisorClass.zero(surface)
    for coeff, cls in pairs:
        total = total + cls * coeff
    return total
