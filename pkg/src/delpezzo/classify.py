"""Exhaustive enumeration of normalized fundamental triplets and their labeling.

The search is organised in cells.  A cell fixes the surface X, the multi-index (a,b)
and the fundamental divisor L; this determines the class of E and k = deg Delta.
Inside a cell the enumerator chooses the components of E, their coefficients and
the combinatorial data of Delta, and keeps whatever passes validation.

Two cell generators exist.  The raw one walks every L allowed by the definition of a
fundamental triplet and lets every smooth rational curve class take part.  The pruned
one only visits the (h, k, b/a) rows that survive the case analysis, with the curve
and coefficient restrictions proved there.  Both must produce the same records.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from . import catalog
from .elimination import DualGraph
from .geometry import CurveRole, Location, RoleKind, SubschemePoint, WeightedConfig, meeting_count
from .picard import DivisorClass, SurfaceModel, canonical_class, intersect, is_nef
from .triplet import (
    MultiIndex,
    TripletConfig,
    cartier_multiplier,
    is_normalized,
    support_graph,
    validate,
)


class UnclassifiedTriplet(ValueError):
    """A validated normalized triplet that matches no known type."""


class ModelInsufficient(RuntimeError):
    """The combinatorial model cannot represent a configuration the bounds allow."""


@dataclass(frozen=True)
class SearchBounds:
    a_max: int = 30
    n_max: int = 12
    notes: str = "families are enumerated for every admissible n (or m) up to n_max"

    def __post_init__(self):
        if self.a_max < 0 or self.n_max < 0:
            raise ValueError("bounds are nonnegative")

    @property
    def instantiates_every_family_twice(self) -> bool:
        return self.n_max >= 5


@dataclass(frozen=True)
class TypeRecord:
    label: str
    instance_label: str
    family_params: tuple[tuple[str, int], ...]
    index: MultiIndex
    triplet: TripletConfig
    graph: DualGraph
    realizations: int = 1
    cartier: int = 1
    theorem: int = 1
    row: str = ""

    @property
    def params(self) -> dict[str, int]:
        return dict(self.family_params)

    def sort_key(self) -> tuple:
        return (*canonical_order_key(self.triplet), self.label, self.family_params)


def canonical_order_key(t: TripletConfig) -> tuple:
    return (
        t.index.a,
        t.index.b,
        t.surface.sort_key(),
        t.config.coefficient_multiset(),
        tuple(sorted(t.delta_signature())),
    )


def admissible_indices(a_max: int) -> list[MultiIndex]:
    """All (a,b) with 1/2 <= b/a < 1, b > 1 and a <= a_max."""
    out = []
    for a in range(3, a_max + 1):
        for b in range((a + 1) // 2, a):
            if b >= 2:
                out.append(MultiIndex(a, b))
    return out


def fractional_index_set(denominator_cap: int) -> set[Fraction]:
    """Values (2s+t)/(4s+t), s >= 1, t in {4,5,6}, whose reduced denominator is at most the cap."""
    out = set()
    s = 1
    while 4 * s + 4 <= denominator_cap * 6:
        for t in (4, 5, 6):
            r = Fraction(2 * s + t, 4 * s + t)
            if r.denominator <= denominator_cap:
                out.add(r)
        s += 1
    return out


# ---------------------------------------------------------------- cells


@dataclass(frozen=True)
class RolePlan:
    """Which curves may be components of E in a cell, with proven coefficient floors."""

    sigma: bool = True
    sigma_inf: int = 1  # copies of |sigma + n l| beyond sigma
    max_lines: int = 8
    members: tuple[tuple[int, ...], ...] = ()
    require_sigma: bool = False
    fiber_floor: Fraction = Fraction(0)
    sigma_floor: Fraction = Fraction(0)
    fiber_floor_below_sigma: Optional[int] = None  # fibers >= coeff_sigma - this


@dataclass(frozen=True)
class Cell:
    surface: SurfaceModel
    index: MultiIndex
    lcoeffs: tuple[int, ...]
    k: int
    plan: RolePlan
    branch: str

    @property
    def lclass(self) -> DivisorClass:
        return DivisorClass.of(self.surface, *self.lcoeffs)

    @property
    def eclass(self) -> DivisorClass:
        return canonical_class(self.surface) * (-self.index.a) - self.lclass * self.index.b


def _branch(surface: SurfaceModel, lclass: DivisorClass) -> str:
    if surface.is_plane:
        return "p2"
    kl = canonical_class(surface) + lclass
    return "fn_big" if is_nef(kl) and intersect(kl, kl) > 0 else "fn_small"


def _make_cell(surface: SurfaceModel, index: MultiIndex, lcoeffs: tuple[int, ...], plan: Optional[RolePlan]) -> Optional[Cell]:
    """A cell if L passes the numerical conditions; ``plan=None`` derives the raw plan."""
    lclass = DivisorClass.of(surface, *lcoeffs)
    kl = canonical_class(surface) + lclass
    if not is_nef(kl) or intersect(kl, lclass) <= 0:
        return None
    ecls = canonical_class(surface) * (-index.a) - lclass * index.b
    # E is effective and meets a line or fiber positively
    if any(c < 0 for c in ecls.coeffs) or intersect(ecls, catalog_line(surface)) < 1:
        return None
    le = intersect(lclass, ecls)
    if le <= 0 or le % index.s:
        return None
    k = int(le / index.s)
    if surface.is_plane and k < 2:
        return None
    if plan is None:
        if not surface.is_plane and surface.n == 0 and _branch(surface, lclass) == "fn_small":
            return None  # rejected by C7 on F0
        plan = raw_plan(surface, lclass, k)
        if plan is None:
            return None
    return Cell(surface, index, lcoeffs, k, plan, _branch(surface, lclass))


def catalog_line(surface: SurfaceModel) -> DivisorClass:
    return DivisorClass.of(surface, 1) if surface.is_plane else DivisorClass.of(surface, 0, 1)


def _surfaces(n_max: int) -> list[SurfaceModel]:
    return [SurfaceModel.p2()] + [SurfaceModel.hirzebruch(n) for n in range(n_max + 1)]


def _l_candidates(surface: SurfaceModel, index: MultiIndex) -> Iterator[tuple[int, ...]]:
    """Every L with K+L nef and E = -aK - bL effective."""
    a, b = index.a, index.b
    if surface.is_plane:
        for h in range(4, 3 * a // b + 1):
            yield (h,)
        return
    n = surface.n
    for h0 in range(2, 2 * a // b + 1):
        for h in range(n * (h0 - 1) + 2, (n + 2) * a // b + 1):
            yield (h0, h)


def raw_plan(surface: SurfaceModel, lclass: DivisorClass, k: int) -> Optional[RolePlan]:
    """All curve roles allowed by the numerics of the cell, with copy-count certificates."""
    if surface.is_plane:
        h = int(lclass.coeffs[0])
        lines = 0
        while (lines + 1) * h - comb(lines + 1, 2) <= k:
            lines += 1
        members = []
        if 2 * h <= k:
            if 4 * h - 4 <= k:
                raise ModelInsufficient("two conics fit the degree bound")
            members.append((2,))
        return RolePlan(sigma=False, sigma_inf=0, max_lines=lines, members=tuple(members))
    n = surface.n
    h0 = int(lclass.coeffs[0])

    def deg(klass):
        return intersect(lclass, DivisorClass.of(surface, *klass))

    def self_int(klass):
        c = DivisorClass.of(surface, *klass)
        return intersect(c, c)

    fibers = k // h0
    sig = deg((1, 0)) <= k
    # pairwise meetings save at most one unit of degree each
    d_inf = deg((1, n))
    inf = 0
    while (inf + 1) * d_inf - comb(inf + 1, 2) * n <= k:
        inf += 1
    if n == 0:
        # on F0 sigma is the first curve of |sigma|
        inf = max(0, inf - 1) if sig else 0
    members = []
    classes = []
    for u in range(1, k + 1):
        classes.append((1, n + u))
    if n == 0:
        classes.extend((m, 1) for m in range(2, k + 1))
        classes = sorted(set(classes))
    if n == 1:
        classes.append((2, 2))
    for klass in classes:
        d = deg(klass)
        if d > k:
            continue
        if 2 * d - self_int(klass) <= k:
            raise ModelInsufficient(f"two curves of class {klass} fit the degree bound on {surface}")
        members.append(klass)
    return RolePlan(sigma=sig, sigma_inf=inf, max_lines=fibers, members=tuple(members))


def raw_cells(bounds: SearchBounds, indices: Optional[Sequence[MultiIndex]] = None) -> list[Cell]:
    cells = []
    for index in indices if indices is not None else admissible_indices(bounds.a_max):
        for X in _surfaces(bounds.n_max):
            for lc in _l_candidates(X, index):
                cell = _make_cell(X, index, lc, None)
                if cell is not None:
                    cells.append(cell)
    return cells


# Rows of the case analysis: P^2 as (h, k, b/a); F_n with K+L big as (n, h, b/a, k).
P2_ROWS = ((5, 5, Fraction(1, 2)), (4, 4, Fraction(2, 3)), (4, 5, Fraction(7, 11)),
           (4, 6, Fraction(3, 5)), (4, 7, Fraction(5, 9)), (4, 8, Fraction(1, 2)))
BIG_ROWS = ((2, 6, Fraction(3, 5), 3), (2, 6, Fraction(4, 7), 4), (2, 6, Fraction(7, 13), 5),
            (2, 7, Fraction(11, 21), 3))
BIG_HALF_ROWS = ((0, 3, 6), (0, 4, 4), (1, 5, 5), (1, 6, 3), (2, 6, 6), (2, 7, 4), (2, 8, 2), (3, 9, 3), (3, 10, 1))
SMALL_INF_ROWS = {(3, 6), (3, 7), (3, 8), (4, 8)}

# The cases shown empty in the case analysis, as (surface n or None, h0, h, b/a, k).
EXCLUDED_CASES = tuple(
    [(n, 3, h, Fraction(1, 2), k) for n, h, k in BIG_HALF_ROWS]
    + [(1, 2, 4, Fraction(1, 2), 8), (None, 0, 5, Fraction(1, 2), 5)]
)


def _scaled(ratio: Fraction, a_max: int) -> list[MultiIndex]:
    out = []
    t = 1
    while ratio.denominator * t <= a_max:
        a, b = ratio.denominator * t, ratio.numerator * t
        if b >= 2:
            out.append(MultiIndex(a, b))
        t += 1
    return out


def pruned_cells(bounds: SearchBounds, indices: Optional[Sequence[MultiIndex]] = None) -> list[Cell]:
    wanted = set(indices) if indices is not None else None
    cells: list[Cell] = []

    def add(X, index, lc, plan, k):
        if wanted is not None and index not in wanted:
            return
        cell = _make_cell(X, index, lc, plan)
        if cell is not None and cell.k == k:
            cells.append(cell)

    P2 = SurfaceModel.p2()
    for h, k, ratio in P2_ROWS:
        conic = (h, k, ratio) == (4, 8, Fraction(1, 2))
        lines = 2 if k >= 7 else 1
        plan = RolePlan(sigma=False, sigma_inf=0, max_lines=lines, members=((2,),) if conic else ())
        for index in _scaled(ratio, bounds.a_max):
            add(P2, index, (h,), plan, k)

    big = [(n, h, r, k) for n, h, r, k in BIG_ROWS] + [(n, h, Fraction(1, 2), k) for n, h, k in BIG_HALF_ROWS]
    for n, h, ratio, k in big:
        if n > bounds.n_max:
            continue
        X = SurfaceModel.hirzebruch(n)
        members = ((1, 1),) if (n, h, k) == (0, 3, 6) else ()
        inf = (n, h, k) in {(1, 5, 5), (2, 6, 6)} or (n == 0 and 2 * h <= k)
        for index in _scaled(ratio, bounds.a_max):
            plan = RolePlan(sigma=True, sigma_inf=int(inf), max_lines=k // 3, members=members,
                            fiber_floor=Fraction(index.a, 3))
            add(X, index, (3, h), plan, k)

    for n in range(3, bounds.n_max + 1):
        X = SurfaceModel.hirzebruch(n)
        for k in range(2, 9):
            ratio = Fraction(2 * n + 4 - k, 4 * n - k)
            if not Fraction(1, 2) <= ratio < 1:
                continue
            members = ((1, 4),) if (n, k) == (3, 8) else ()
            for index in _scaled(ratio, bounds.a_max):
                s = index.s
                plan = RolePlan(
                    sigma=True,
                    sigma_inf=int((n, k) in SMALL_INF_ROWS),
                    max_lines=k // 2,
                    members=members,
                    require_sigma=True,
                    sigma_floor=Fraction(s, 2) * (4 * n - k) / n,
                    fiber_floor_below_sigma=s,
                )
                add(X, index, (2, 2 * n), plan, k)

    if bounds.n_max >= 1:
        X = SurfaceModel.hirzebruch(1)
        plan = RolePlan(sigma=True, sigma_inf=1, max_lines=4, members=((1, 2), (1, 3), (2, 2)))
        for index in _scaled(Fraction(1, 2), bounds.a_max):
            add(X, index, (2, 4), plan, 8)

    cells.sort(key=lambda c: (c.index, c.surface.sort_key(), c.lcoeffs))
    return cells


# ---------------------------------------------------------------- search inside a cell


def _roles_for(cell: Cell) -> tuple[list[CurveRole], list[CurveRole]]:
    """Optional non-line roles and the kind used for lines/fibers."""
    X = cell.surface
    extra = []
    if not X.is_plane:
        if cell.plan.sigma:
            extra.append(CurveRole.sigma())
        extra.extend(CurveRole.sigma_inf(i) for i in range(int(cell.plan.sigma_inf)))
    for klass in cell.plan.members:
        role = CurveRole.member(*klass)
        try:
            role.check_surface(X)
        except ValueError:
            continue
        extra.append(role)
    return extra, []


def _line_role(X: SurfaceModel, i: int) -> CurveRole:
    return CurveRole.line(i) if X.is_plane else CurveRole.fiber(i)


def _supports(cell: Cell) -> Iterator[list[CurveRole]]:
    X = cell.surface
    extra, _ = _roles_for(cell)
    lc = cell.lclass
    deg = {r: intersect(lc, r.divisor_class(X)) for r in extra}
    line_deg = intersect(lc, catalog_line(X))
    for mask in range(1 << len(extra)):
        chosen = [r for i, r in enumerate(extra) if mask >> i & 1]
        if cell.plan.require_sigma and CurveRole.sigma() not in chosen:
            continue
        copies = [r.ident for r in chosen if r.kind is RoleKind.SECTION_INF]
        if copies != list(range(len(copies))):
            continue
        if X.n == 0 and not X.is_plane and copies and CurveRole.sigma() not in chosen:
            continue
        for j in range(cell.plan.max_lines + 1):
            roles = chosen + [_line_role(X, i + 1) for i in range(j)]
            if not roles:
                continue
            total = sum(deg[r] for r in chosen) + j * line_deg
            saved = 0
            for x, r1 in enumerate(roles):
                for r2 in roles[x + 1:]:
                    saved += meeting_count(X, r1, r2)
            if total - saved > cell.k:
                continue
            yield roles


def _coefficients(cell: Cell, roles: list[CurveRole]) -> Iterator[dict[CurveRole, int]]:
    """Integer coefficients in [1, a-1] realizing the class of E on the given support."""
    X = cell.surface
    a = cell.index.a
    target = [int(c) for c in cell.eclass.coeffs]
    plan = cell.plan
    others = [r for r in roles if r.kind not in (RoleKind.LINE, RoleKind.FIBER)]
    nlines = len(roles) - len(others)
    classes = {r: r.divisor_class(X).int_coeffs() for r in others}

    def floor_of(r: CurveRole) -> int:
        if r.kind is RoleKind.MIN_SECTION:
            return max(1, _ceil(plan.sigma_floor))
        return 1

    def rec(i: int, rest: list[int], acc: dict[CurveRole, int]) -> Iterator[dict[CurveRole, int]]:
        if i == len(others):
            yield from _line_coefficients(rest, nlines, acc, roles, X, a, plan)
            return
        r = others[i]
        cls = classes[r]
        hi = a - 1
        for j, v in enumerate(cls):
            if v > 0:
                hi = min(hi, rest[j] // v)
        for c in range(floor_of(r), hi + 1):
            acc[r] = c
            yield from rec(i + 1, [rest[j] - c * cls[j] for j in range(len(rest))], acc)
        acc.pop(r, None)

    yield from rec(0, target, {})


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _line_coefficients(rest, nlines, acc, roles, X, a, plan) -> Iterator[dict[CurveRole, int]]:
    line_idx = 0 if X.is_plane else 1
    if any(v != 0 for j, v in enumerate(rest) if j != line_idx):
        return
    total = rest[line_idx]
    lo = max(1, _ceil(plan.fiber_floor))
    if plan.fiber_floor_below_sigma is not None:
        lo = max(lo, acc.get(CurveRole.sigma(), 0) - plan.fiber_floor_below_sigma)
    lines = [r for r in roles if r.kind in (RoleKind.LINE, RoleKind.FIBER)]
    if nlines == 0:
        if total == 0:
            yield dict(acc)
        return
    for parts in _nonincreasing(total, nlines, lo, a - 1):
        out = dict(acc)
        for r, c in zip(lines, parts):
            out[r] = c
        yield out


def _nonincreasing(total: int, count: int, lo: int, hi: int) -> Iterator[list[int]]:
    if count == 0:
        if total == 0:
            yield []
        return
    for first in range(min(hi, total - lo * (count - 1)), lo - 1, -1):
        if first * count < total:
            break
        for tail in _nonincreasing(total - first, count - 1, lo, first):
            yield [first] + tail


def _site_options(i1, i2, coeff, degs, s, a, k) -> list[tuple[int, int, int, int]]:
    """(transversal, tangent, contact, length) choices for a point at a crossing of i1 and i2."""
    ends = (i1, i2)
    return [
        (ends[t], ends[1 - t], l2, kp)
        for t, l2, kp in _site_shapes(coeff[i1], coeff[i2], degs[i1], degs[i2], s, a, k)
    ]


@lru_cache(maxsize=None)
def _site_shapes(c1, c2, d1, d2, s, a, k) -> tuple[tuple[int, int, int], ...]:
    coeff, degs = (c1, c2), (d1, d2)
    opts = []
    for t in (0, 1):
        if degs[t] < 1:
            continue
        for l2 in range(1, degs[1 - t] + 1):
            if l2 == 1 and t == 1:
                continue
            num = coeff[t] + coeff[1 - t] * l2
            if num % s:
                continue
            kp = num // s
            if kp < l2 or kp > k or s * (kp - l2) >= a:
                continue
            opts.append((t, l2, kp))
    return tuple(opts)


@lru_cache(maxsize=None)
def _curve_contacts(m: int, s: int, a: int, k: int) -> tuple[tuple[int, int], ...]:
    """(contact, length) pairs allowed for a point on a single component of coefficient m."""
    out = []
    for l in range(1, k + 1):
        if (m * l) % s:
            continue
        kp = m * l // s
        if l <= kp <= k and s * (kp - l) < a:
            out.append((l, kp))
    return tuple(out)


def _partitions(total: int, parts: list[tuple[int, int]], max_idx: int) -> Iterator[list[tuple[int, int]]]:
    if total == 0:
        yield []
        return
    for i in range(max_idx, -1, -1):
        l, kp = parts[i]
        if l <= total:
            for tail in _partitions(total - l, parts, i):
                yield [(l, kp)] + tail


def _deltas(
    roles: Sequence[CurveRole], coeff: Sequence[int], degs: Sequence[int], meets: dict, s: int, a: int, k: int
) -> Iterator[tuple[SubschemePoint, ...]]:
    """Every Delta compatible with the degrees and balance at each point."""
    nr = len(roles)
    pairs = []
    reach = [False] * nr
    for (i1, i2), c in meets.items():
        opts = _site_options(i1, i2, coeff, degs, s, a, k)
        if opts:
            pairs.append((i1, i2, c, opts))
            reach[i1] = reach[i2] = True
    curve_opts = [_curve_contacts(coeff[i], s, a, k) for i in range(nr)]
    for i in range(nr):
        if degs[i] and not curve_opts[i] and not reach[i]:
            return

    def crossings(p: int, used: list, total: int, chosen: list):
        if p == len(pairs):
            yield chosen, used, total
            return
        yield from multiset(p, 0, pairs[p][2], used, total, chosen, [])

    def multiset(p, start, cap, used, total, chosen, picked):
        yield from crossings(p + 1, used, total, chosen + [(pairs[p][0], pairs[p][1], picked)] if picked else chosen)
        if cap == 0:
            return
        opts = pairs[p][3]
        for j in range(start, len(opts)):
            trans, tang, l2, kp = opts[j]
            if used[trans] + 1 > degs[trans] or used[tang] + l2 > degs[tang] or total + kp > k:
                continue
            nu = list(used)
            nu[trans] += 1
            nu[tang] += l2
            yield from multiset(p, j, cap - 1, nu, total + kp, chosen, picked + [opts[j]])

    def on_curves(idx: int, used: list, total: int, pts: list):
        if idx == nr:
            if total == k:
                yield pts
            return
        rest = degs[idx] - used[idx]
        opts = curve_opts[idx]
        if rest and not opts:
            return
        for part in _partitions(rest, opts, len(opts) - 1):
            add = sum(kp for _, kp in part)
            if total + add <= k:
                yield from on_curves(idx + 1, used, total + add, pts + [(idx, l, kp) for l, kp in part])

    for chosen, used, total in crossings(0, [0] * nr, 0, []):
        for singles in on_curves(0, used, total, []):
            pts = [SubschemePoint.on(roles[i], kp, l) for i, l, kp in singles]
            for _, _, picked in chosen:
                for slot, (trans, tang, l2, kp) in enumerate(picked):
                    pts.append(SubschemePoint.at(roles[trans], roles[tang], kp, l2, slot))
            yield tuple(pts)


_PERMUTABLE = (RoleKind.LINE, RoleKind.FIBER, RoleKind.SECTION_INF)


def _relabelings(roles: Sequence[CurveRole]) -> Iterator[dict[CurveRole, CurveRole]]:
    """Maps permuting lines, fibers and copies of sigma_inf among themselves."""
    groups = [[r for r in roles if r.kind is kind] for kind in _PERMUTABLE]
    groups = [g for g in groups if len(g) > 1]

    def rec(i: int, acc: dict) -> Iterator[dict]:
        if i == len(groups):
            yield dict(acc)
            return
        g = groups[i]
        for perm in permutations(g):
            for src, dst in zip(g, perm):
                acc[src] = dst
            yield from rec(i + 1, acc)

    yield from rec(0, {})


def canonical_form(t: TripletConfig) -> TripletConfig:
    """Representative under relabeling of interchangeable curves and of crossing slots."""
    best, best_key = None, None
    for mapping in _relabelings(t.config.roles):
        ren = lambda r: mapping.get(r, r)  # noqa: E731
        config = WeightedConfig.of(t.surface, [(ren(r), c) for r, c in t.config.components])
        groups: dict[tuple, list] = {}
        singles = []
        for p in t.points:
            contacts = tuple((ren(r), v) for r, v in p.contacts)
            if len(p.roles) == 2:
                key = tuple(sorted((ren(r) for r in p.roles), key=CurveRole.sort_key))
                groups.setdefault(key, []).append((p.degree, contacts))
            else:
                singles.append(SubschemePoint(Location(tuple(ren(r) for r in p.roles)), p.degree, contacts))
        pts = list(singles)
        for key, items in groups.items():
            items.sort(key=lambda it: (it[0], tuple((r.sort_key(), v) for r, v in it[1])))
            for slot, (deg, contacts) in enumerate(items):
                pts.append(SubschemePoint(Location(key, slot), deg, contacts))
        cand = TripletConfig(t.index, config, tuple(pts))
        ck = (tuple((r.sort_key(), c) for r, c in config.components), cand.delta_signature())
        if best_key is None or ck < best_key:
            best, best_key = cand, ck
    return best


def search_cell(cell: Cell) -> list[TripletConfig]:
    """Canonical forms of all normalized triplets in the cell."""
    X = cell.surface
    s, a, k = cell.index.s, cell.index.a, cell.k
    lc = cell.lclass
    found: dict[tuple, TripletConfig] = {}
    for roles in _supports(cell):
        degs = [int(intersect(lc, r.divisor_class(X))) for r in roles]
        meets = {}
        for i1 in range(len(roles)):
            for i2 in range(i1 + 1, len(roles)):
                c = meeting_count(X, roles[i1], roles[i2])
                if c:
                    meets[(i1, i2)] = c
        for coeffs in _coefficients(cell, roles):
            coeff = [coeffs[r] for r in roles]
            config = None
            for pts in _deltas(roles, coeff, degs, meets, s, a, k):
                if config is None:
                    config = WeightedConfig.of(X, list(zip(roles, coeff)))
                t = TripletConfig(cell.index, config, pts)
                if not is_normalized(t) or not validate(t).ok:
                    continue
                c = canonical_form(t)
                key = (tuple((r.sort_key(), v) for r, v in c.config.components), c.delta_signature())
                found.setdefault(key, c)
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------- labeling


def label_type(t: TripletConfig) -> TypeRecord:
    hits = catalog.match_instance(t)
    if len(hits) != 1:
        raise UnclassifiedTriplet(
            f"{t.index} on {t.surface} with E = {[(str(r), str(c)) for r, c in t.config.components]} "
            f"and Delta = {[(str(p.location), p.degree, [v for _, v in p.contacts]) for p in t.points]} "
            + ("matches no known type" if not hits else f"matches {len(hits)} types")
        )
    inst = hits[0]
    return TypeRecord(
        label=inst.label,
        instance_label=inst.instance_label(),
        family_params=inst.params,
        index=t.index,
        triplet=t,
        graph=support_graph(t),
        cartier=cartier_multiplier(t),
        theorem=inst.template.theorem,
        row=inst.template.row,
    )


# ---------------------------------------------------------------- drivers


def _worker_count(requested: Optional[int]) -> int:
    n = requested if requested is not None else (os.cpu_count() or 1)
    cap = os.environ.get("DELPEZZO_THREADS")
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def run_cells(cells: Sequence[Cell], workers: Optional[int] = None) -> list[TripletConfig]:
    n = _worker_count(workers)
    if n == 1 or len(cells) < 2:
        results = [search_cell(c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(search_cell, cells, chunksize=max(1, len(cells) // (8 * n))))
    return [t for batch in results for t in batch]


def records_from(triplets: Iterable[TripletConfig], strict: bool = True) -> list[TypeRecord]:
    groups: dict[tuple, list[TypeRecord]] = {}
    for t in triplets:
        try:
            rec = label_type(t)
        except UnclassifiedTriplet:
            if strict:
                raise
            continue
        groups.setdefault((rec.label, rec.family_params), []).append(rec)
    out = []
    for recs in groups.values():
        recs.sort(key=TypeRecord.sort_key)
        first = recs[0]
        out.append(
            TypeRecord(
                label=first.label,
                instance_label=first.instance_label,
                family_params=first.family_params,
                index=first.index,
                triplet=first.triplet,
                graph=first.graph,
                realizations=len(recs),
                cartier=first.cartier,
                theorem=first.theorem,
                row=first.row,
            )
        )
    out.sort(key=TypeRecord.sort_key)
    return out


def cells_for(bounds: SearchBounds, prune: bool = True, indices: Optional[Sequence[MultiIndex]] = None) -> list[Cell]:
    return pruned_cells(bounds, indices) if prune else raw_cells(bounds, indices)


def enumerate_all(
    bounds: SearchBounds,
    prune: bool = True,
    workers: Optional[int] = None,
    indices: Optional[Sequence[MultiIndex]] = None,
    branches: Optional[set[str]] = None,
) -> list[TypeRecord]:
    cells = cells_for(bounds, prune, indices)
    if branches is not None:
        cells = [c for c in cells if c.branch in branches]
    return records_from(run_cells(cells, workers))


def enumerate_p2(index: MultiIndex, prune: bool = True) -> list[TypeRecord]:
    return enumerate_all(SearchBounds(index.a, 0), prune, 1, [index], {"p2"})


def enumerate_fn_big(index: MultiIndex, n_max: int, prune: bool = True) -> list[TypeRecord]:
    return enumerate_all(SearchBounds(index.a, n_max), prune, 1, [index], {"fn_big"})


def enumerate_fn_small(index: MultiIndex, n_max: int, prune: bool = True) -> list[TypeRecord]:
    return enumerate_all(SearchBounds(index.a, n_max), prune, 1, [index], {"fn_small"})


def excluded_case_cells(case: tuple, a_max: int) -> list[Cell]:
    """Raw-plan cells of one excluded case over all its multi-indices up to a_max."""
    n, h0, h, ratio, k = case
    X = SurfaceModel.p2() if n is None else SurfaceModel.hirzebruch(n)
    lc = (h,) if n is None else (h0, h)
    cells = []
    for index in _scaled(ratio, a_max):
        cell = _make_cell(X, index, lc, None)
        if cell is not None and cell.k == k:
            cells.append(cell)
    return cells


def enumerate_excluded_case(case: tuple, a_max: int, workers: Optional[int] = 1) -> list[TripletConfig]:
    return run_cells(excluded_case_cells(case, a_max), workers)
