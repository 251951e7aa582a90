"""The known normalized fundamental triplet types and their dual graphs.

Each type is a template: given its family parameter it produces the multi-index,
the surface, the weighted configuration E and a pattern for Delta.  A pattern lists
the points of Delta whose data is pinned down ("fixed") and the components on which
the remaining points may sit freely (always with contact equal to length there).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator, Optional

from .elimination import DualGraph
from .geometry import CurveRole, SubschemePoint, WeightedConfig
from .picard import SurfaceModel, intersect
from .triplet import MultiIndex, TripletConfig, fundamental_divisor


# A fixed point: (transversal tag or None, tangent tag, degree, tangent contact).
# On-curve points use (None, tag, k, l); crossing points give both tags.
FixedPoint = tuple[Optional[str], str, int, int]


@dataclass(frozen=True)
class TypeInstance:
    template: "TypeTemplate"
    params: tuple[tuple[str, int], ...]
    index: MultiIndex
    surface: SurfaceModel
    components: tuple[tuple[str, int], ...]
    fixed: tuple[FixedPoint, ...]
    free: tuple[str, ...]

    @property
    def label(self) -> str:
        return self.template.label

    @property
    def family_params(self) -> dict[str, int]:
        return dict(self.params)

    def role(self, tag: str) -> CurveRole:
        return _tag_role(tag)

    def config(self) -> WeightedConfig:
        return WeightedConfig.of(self.surface, [(self.role(t), c) for t, c in self.components])

    def instance_label(self) -> str:
        return render_label(self.index, self.surface, self.config(), self.template.subscript, self.template.variant)

    def example(self) -> TripletConfig:
        """A concrete triplet of this type; free components carry points of length 1."""
        config = self.config()
        lclass = fundamental_divisor(self.index, config)
        points: list[SubschemePoint] = []
        used: dict[str, int] = {t: 0 for t, _ in self.components}
        slots: dict[frozenset, int] = {}
        for trans, tang, k, l in self.fixed:
            if trans is None:
                points.append(SubschemePoint.on(self.role(tang), k, l))
                used[tang] += l
            else:
                key = frozenset((trans, tang))
                slot = slots.get(key, 0)
                slots[key] = slot + 1
                points.append(SubschemePoint.at(self.role(trans), self.role(tang), k, l, slot))
                used[trans] += 1
                used[tang] += l
        for tag in self.free:
            rest = int(intersect(lclass, self.role(tag).divisor_class(self.surface))) - used[tag]
            points.extend(SubschemePoint.on(self.role(tag), 1, 1) for _ in range(rest))
        return TripletConfig(self.index, config, tuple(points))

    def matches(self, t: TripletConfig) -> bool:
        if t.index != self.index or t.surface != self.surface:
            return False
        actual = sorted((_role_shape(r), c) for r, c in t.config.components)
        wanted = sorted((_role_shape(self.role(tag)), Fraction(c)) for tag, c in self.components)
        if actual != wanted:
            return False
        return any(self._delta_fits(t, assign) for assign in self._assignments(t))

    def _assignments(self, t: TripletConfig) -> Iterator[dict[str, CurveRole]]:
        tags = [tag for tag, _ in self.components]
        roles = list(t.config.roles)
        for perm in permutations(roles):
            assign = dict(zip(tags, perm))
            if all(
                _role_shape(assign[tag]) == _role_shape(self.role(tag)) and t.config.coeff(assign[tag]) == c
                for tag, c in self.components
            ):
                yield assign

    def _delta_fits(self, t: TripletConfig, assign: dict[str, CurveRole]) -> bool:
        inverse = {r: tag for tag, r in assign.items()}
        remaining = [_point_shape(p, inverse) for p in t.points]
        for trans, tang, k, l in self.fixed:
            if trans is None:
                want = (frozenset({(tang, l)}), k)
            else:
                want = (frozenset({(trans, 1), (tang, l)}), k)
            if want not in remaining:
                return False
            remaining.remove(want)
        for contacts, k in remaining:
            if len(contacts) != 1:
                return False
            ((tag, l),) = contacts
            if tag not in self.free or l != k:
                return False
        return True


def _point_shape(p: SubschemePoint, inverse: dict[CurveRole, str]) -> tuple[frozenset, int]:
    return frozenset((inverse[r], v) for r, v in p.contacts), p.degree


def _role_shape(r: CurveRole) -> tuple:
    return (r.kind.value, r.klass)


def _tag_role(tag: str) -> CurveRole:
    if tag == "s":
        return CurveRole.sigma()
    if tag == "inf":
        return CurveRole.sigma_inf()
    if tag.startswith("l"):
        return CurveRole.line(int(tag[1:]))
    if tag.startswith("f"):
        return CurveRole.fiber(int(tag[1:]))
    raise ValueError(tag)


Builder = Callable[[int], dict]


@dataclass(frozen=True)
class TypeTemplate:
    key: str
    label: str
    subscript: str
    variant: str
    family: str  # "sporadic", "n" or "m"
    row: str
    build: Builder = field(compare=False, repr=False)
    admissible: Callable[[int], bool] = field(compare=False, repr=False, default=lambda p: True)
    theorem: int = 1

    def instance(self, param: int = 0) -> TypeInstance:
        data = self.build(param)
        if self.family == "sporadic":
            params: tuple = ()
        elif self.family == "n":
            params = (("n", param),)
        else:
            params = (("m", param), ("n", data["n"]))
        surface = SurfaceModel.p2() if data["n"] is None else SurfaceModel.hirzebruch(data["n"])
        return TypeInstance(
            template=self,
            params=params,
            index=MultiIndex(*data["ab"]),
            surface=surface,
            components=tuple(data["E"]),
            fixed=tuple(data.get("fixed", ())),
            free=tuple(data.get("free", ())),
        )

    def instances(self, a_max: int, n_max: int) -> list[TypeInstance]:
        out = []
        if self.family == "sporadic":
            inst = self.instance()
            if inst.index.a <= a_max and (inst.surface.is_plane or inst.surface.n <= n_max):
                out.append(inst)
            return out
        p = 3 if self.family == "n" else 1
        while True:
            if self.admissible(p):
                inst = self.instance(p)
                if inst.surface.n > n_max:
                    break
                if inst.index.a <= a_max:
                    out.append(inst)
            elif self.family == "n" and p > n_max:
                break
            p += 1
        return out


def _sub(text: str) -> str:
    return f"_{text}" if len(text) == 1 else "_{" + text + "}"


def render_label(
    index: MultiIndex, surface: SurfaceModel, config: WeightedConfig, subscript: str, variant: str = ""
) -> str:
    coords = ",".join(str(int(c)) for c in config.divisor_class().coeffs)
    if surface.is_plane:
        head = f"[({index.a},{index.b}),{coords}]"
    else:
        head = f"[({index.a},{index.b}),{surface.n};{coords}]"
    return head + _sub(subscript) + variant


def _t(key, label, subscript, variant, family, row, build, admissible=lambda p: True, theorem=1):
    return TypeTemplate(key, label, subscript, variant, family, row, build, admissible, theorem)


def _on(tag: str, k: int, l: int) -> FixedPoint:
    return (None, tag, k, l)


def _at(trans: str, tang: str, k: int, l: int) -> FixedPoint:
    return (trans, tang, k, l)


def _n_odd(n: int) -> bool:
    return n >= 3 and n % 2 == 1


TEMPLATES: tuple[TypeTemplate, ...] = (
    # plane, 1/2 < b/a < 1
    _t("p2_1", "[(3,2),1]_0", "0", "", "sporadic", "T1.1",
       lambda _: dict(ab=(3, 2), n=None, E=[("l1", 1)], free=["l1"])),
    _t("p2_5", "[(11,7),5]_0", "0", "", "sporadic", "T1.2",
       lambda _: dict(ab=(11, 7), n=None, E=[("l1", 5)], fixed=[_on("l1", 5, 4)])),
    _t("p2_3a", "[(5,3),3]_0(1)", "0", "(1)", "sporadic", "T1.3",
       lambda _: dict(ab=(5, 3), n=None, E=[("l1", 3)], fixed=[_on("l1", 6, 4)])),
    _t("p2_3b", "[(5,3),3]_0(2)", "0", "(2)", "sporadic", "T1.4",
       lambda _: dict(ab=(5, 3), n=None, E=[("l1", 3)], fixed=[_on("l1", 3, 2), _on("l1", 3, 2)])),
    _t("p2_43", "[(9,5),7]_{×43}", "×43", "", "sporadic", "T1.5",
       lambda _: dict(ab=(9, 5), n=None, E=[("l1", 4), ("l2", 3)], fixed=[_at("l1", "l2", 4, 4)], free=["l1"])),
    # F_2 sporadic
    _t("f2_3", "[(5,3),2;1,2]_1", "1", "", "sporadic", "T1.6",
       lambda _: dict(ab=(5, 3), n=2, E=[("s", 1), ("f1", 2)], free=["f1"])),
    _t("f2_4", "[(7,4),2;2,4]_1", "1", "", "sporadic", "T1.7",
       lambda _: dict(ab=(7, 4), n=2, E=[("s", 2), ("f1", 4)], fixed=[_on("f1", 4, 3)])),
    _t("f2_5", "[(13,7),2;5,10]_1", "1", "", "sporadic", "T1.8",
       lambda _: dict(ab=(13, 7), n=2, E=[("s", 5), ("f1", 10)], fixed=[_on("f1", 5, 3)])),
    _t("f2_x", "[(21,11),2;9,7]_1", "1", "", "sporadic", "T1.9",
       lambda _: dict(ab=(21, 11), n=2, E=[("s", 9), ("f1", 7)], fixed=[_at("s", "f1", 3, 3)])),
    # families
    _t("k2_n", "[(2n-1,n+1),n;2(n-2),n-2]_1", "1", "", "n", "T1.10",
       lambda n: dict(ab=(2 * n - 1, n + 1), n=n, E=[("s", 2 * (n - 2)), ("f1", n - 2)], free=["f1"]),
       lambda n: n >= 3 and (n - 2) % 3 != 0),
    _t("k2_m", "[(2m+1,m+1),3m+2;2m,m]_1", "1", "", "m", "T1.10",
       lambda m: dict(ab=(2 * m + 1, m + 1), n=3 * m + 2, E=[("s", 2 * m), ("f1", m)], free=["f1"])),
    _t("k3_n", "[(4n-3,2n+1),n;4(n-2),3(n-2)]_1", "1", "", "n", "T1.11",
       lambda n: dict(ab=(4 * n - 3, 2 * n + 1), n=n, E=[("s", 4 * (n - 2)), ("f1", 3 * (n - 2))],
                      fixed=[_on("f1", 3, 2)]),
       lambda n: n >= 3 and (n - 2) % 5 != 0),
    _t("k3_m", "[(4m+1,2m+1),5m+2;4m,3m]_1", "1", "", "m", "T1.11",
       lambda m: dict(ab=(4 * m + 1, 2 * m + 1), n=5 * m + 2, E=[("s", 4 * m), ("f1", 3 * m)],
                      fixed=[_on("f1", 3, 2)])),
    _t("k4_11_n", "[(2n-2,n),n;2(n-2),2(n-2)]_{11}", "11", "", "n", "T1.12",
       lambda n: dict(ab=(2 * n - 2, n), n=n, E=[("s", 2 * (n - 2)), ("f1", n - 2), ("f2", n - 2)],
                      free=["f1", "f2"]),
       _n_odd),
    _t("k4_11_m", "[(2m+1,m+1),2m+2;2m,2m]_{11}", "11", "", "m", "T1.12",
       lambda m: dict(ab=(2 * m + 1, m + 1), n=2 * m + 2, E=[("s", 2 * m), ("f1", m), ("f2", m)],
                      free=["f1", "f2"])),
    _t("k4_1a_n", "[(2n-2,n),n;2(n-2),2(n-2)]_1(1)", "1", "(1)", "n", "T1.13",
       lambda n: dict(ab=(2 * n - 2, n), n=n, E=[("s", 2 * (n - 2)), ("f1", 2 * (n - 2))],
                      fixed=[_on("f1", 4, 2)]),
       _n_odd),
    _t("k4_1a_m", "[(2m+1,m+1),2m+2;2m,2m]_1(1)", "1", "(1)", "m", "T1.13",
       lambda m: dict(ab=(2 * m + 1, m + 1), n=2 * m + 2, E=[("s", 2 * m), ("f1", 2 * m)],
                      fixed=[_on("f1", 4, 2)])),
    _t("k4_1b_n", "[(2n-2,n),n;2(n-2),2(n-2)]_1(2)", "1", "(2)", "n", "T1.14",
       lambda n: dict(ab=(2 * n - 2, n), n=n, E=[("s", 2 * (n - 2)), ("f1", 2 * (n - 2))],
                      fixed=[_on("f1", 2, 1), _on("f1", 2, 1)]),
       _n_odd),
    _t("k4_1b_m", "[(2m+1,m+1),2m+2;2m,2m]_1(2)", "1", "(2)", "m", "T1.14",
       lambda m: dict(ab=(2 * m + 1, m + 1), n=2 * m + 2, E=[("s", 2 * m), ("f1", 2 * m)],
                      fixed=[_on("f1", 2, 1), _on("f1", 2, 1)])),
    _t("k5_32_n", "[(4n-5,2n-1),n;4(n-2),5(n-2)]_{32}", "32", "", "n", "T1.15",
       lambda n: dict(ab=(4 * n - 5, 2 * n - 1), n=n,
                      E=[("s", 4 * (n - 2)), ("f1", 3 * (n - 2)), ("f2", 2 * (n - 2))],
                      fixed=[_on("f1", 3, 2)], free=["f2"]),
       lambda n: n >= 3 and (n - 2) % 3 != 0),
    _t("k5_32_m", "[(4m+1,2m+1),3m+2;4m,5m]_{32}", "32", "", "m", "T1.15",
       lambda m: dict(ab=(4 * m + 1, 2 * m + 1), n=3 * m + 2, E=[("s", 4 * m), ("f1", 3 * m), ("f2", 2 * m)],
                      fixed=[_on("f1", 3, 2)], free=["f2"])),
    _t("f3_75", "[(7,5),3;4,5]_1", "1", "", "sporadic", "T1.16",
       lambda _: dict(ab=(7, 5), n=3, E=[("s", 4), ("f1", 5)], fixed=[_on("f1", 5, 2)])),
    _t("k6_111", "[(2n-3,n-1),n;2(n-2),3(n-2)]_{111}", "111", "", "n", "T1.17",
       lambda n: dict(ab=(2 * n - 3, n - 1), n=n,
                      E=[("s", 2 * (n - 2)), ("f1", n - 2), ("f2", n - 2), ("f3", n - 2)],
                      free=["f1", "f2", "f3"]),
       lambda n: n >= 3),
    _t("k6_21a", "[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(1)", "21", "(1)", "n", "T1.18",
       lambda n: dict(ab=(2 * n - 3, n - 1), n=n, E=[("s", 2 * (n - 2)), ("f1", 2 * (n - 2)), ("f2", n - 2)],
                      fixed=[_on("f1", 4, 2)], free=["f2"]),
       lambda n: n >= 3),
    _t("k6_21b", "[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(2)", "21", "(2)", "n", "T1.19",
       lambda n: dict(ab=(2 * n - 3, n - 1), n=n, E=[("s", 2 * (n - 2)), ("f1", 2 * (n - 2)), ("f2", n - 2)],
                      fixed=[_on("f1", 2, 1), _on("f1", 2, 1)], free=["f2"]),
       lambda n: n >= 3),
    _t("k6_11_n", "[(4n-6,2n-2),n;4(n-2),6(n-2)]_{11}", "11", "", "n", "T1.20",
       lambda n: dict(ab=(4 * n - 6, 2 * n - 2), n=n,
                      E=[("s", 4 * (n - 2)), ("f1", 3 * (n - 2)), ("f2", 3 * (n - 2))],
                      fixed=[_on("f1", 3, 2), _on("f2", 3, 2)]),
       _n_odd),
    _t("k6_11_m", "[(4m+1,2m+1),2m+2;4m,6m]_{11}", "11", "", "m", "T1.20",
       lambda m: dict(ab=(4 * m + 1, 2 * m + 1), n=2 * m + 2, E=[("s", 4 * m), ("f1", 3 * m), ("f2", 3 * m)],
                      fixed=[_on("f1", 3, 2), _on("f2", 3, 2)])),
    _t("f3_1inf", "[(3,2),3;2,3]_{1∞}", "1∞", "", "sporadic", "T1.21",
       lambda _: dict(ab=(3, 2), n=3, E=[("s", 1), ("inf", 1)], free=["inf"])),
    _t("k7_322", "[(4n-7,2n-3),n;4(n-2),7(n-2)]_{322}", "322", "", "n", "T1.22",
       lambda n: dict(ab=(4 * n - 7, 2 * n - 3), n=n,
                      E=[("s", 4 * (n - 2)), ("f1", 3 * (n - 2)), ("f2", 2 * (n - 2)), ("f3", 2 * (n - 2))],
                      fixed=[_on("f1", 3, 2)], free=["f2", "f3"]),
       lambda n: n >= 3),
    _t("k7_43a", "[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(1)", "43", "(1)", "n", "T1.23",
       lambda n: dict(ab=(4 * n - 7, 2 * n - 3), n=n, E=[("s", 4 * (n - 2)), ("f1", 4 * (n - 2)), ("f2", 3 * (n - 2))],
                      fixed=[_on("f1", 4, 2), _on("f2", 3, 2)]),
       lambda n: n >= 3),
    _t("k7_43b", "[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(2)", "43", "(2)", "n", "T1.24",
       lambda n: dict(ab=(4 * n - 7, 2 * n - 3), n=n, E=[("s", 4 * (n - 2)), ("f1", 4 * (n - 2)), ("f2", 3 * (n - 2))],
                      fixed=[_on("f1", 2, 1), _on("f1", 2, 1), _on("f2", 3, 2)]),
       lambda n: n >= 3),
    _t("f3_5inf1", "[(15,9),3;12,21]_{5∞1}", "5∞1", "", "sporadic", "T1.25",
       lambda _: dict(ab=(15, 9), n=3, E=[("s", 7), ("inf", 5), ("f1", 6)],
                      fixed=[_at("f1", "inf", 6, 6), _on("f1", 1, 1)])),
    _t("f3_2inf1", "[(5,3),3;4,7]_{2∞1}", "2∞1", "", "sporadic", "T1.26",
       lambda _: dict(ab=(5, 3), n=3, E=[("s", 2), ("inf", 2), ("f1", 1)],
                      fixed=[_at("inf", "f1", 2, 2)], free=["inf"])),
    # b/a = 1/2
    _t("p2_21", "[(6,3),6]_{×21}", "×21", "", "sporadic", "T2.1",
       lambda _: dict(ab=(6, 3), n=None, E=[("l1", 4), ("l2", 2)],
                      fixed=[_at("l1", "l2", 4, 4), _on("l1", 4, 3)]), theorem=2),
    _t("f3_2inf11_6", "[(6,3),3;6,12]_{2∞11}", "2∞11", "", "sporadic", "T2.2",
       lambda _: dict(ab=(6, 3), n=3, E=[("s", 4), ("inf", 2), ("f1", 3), ("f2", 3)],
                      fixed=[_at("f1", "inf", 3, 3), _at("f2", "inf", 3, 3), _on("f1", 1, 1), _on("f2", 1, 1)]),
       theorem=2),
    _t("f3_4inf53", "[(10,5),3;10,20]_{4∞53}", "4∞53", "", "sporadic", "T2.3",
       lambda _: dict(ab=(10, 5), n=3, E=[("s", 6), ("inf", 4), ("f1", 5), ("f2", 3)],
                      fixed=[_at("f1", "inf", 5, 5), _at("inf", "f2", 2, 2), _on("f1", 1, 1)]),
       theorem=2),
    _t("f3_2inf11_4", "[(4,2),3;4,8]_{2∞11}", "2∞11", "", "sporadic", "T2.4",
       lambda _: dict(ab=(4, 2), n=3, E=[("s", 2), ("inf", 2), ("f1", 1), ("f2", 1)],
                      fixed=[_at("inf", "f1", 2, 2), _at("inf", "f2", 2, 2)], free=["inf"]),
       theorem=2),
)

TEMPLATES_BY_KEY = {t.key: t for t in TEMPLATES}

# Families whose minimal Cartier multiple of -aK_S is not -a_0 K_S.
NON_UNIT_CARTIER = {"k6_11_n": 2, "f3_5inf1": 3, "p2_21": 3, "f3_2inf11_6": 3, "f3_4inf53": 5, "f3_2inf11_4": 2}


def expected_instances(a_max: int, n_max: int) -> list[TypeInstance]:
    out = []
    for t in TEMPLATES:
        out.extend(t.instances(a_max, n_max))
    return out


def match_instance(t: TripletConfig) -> list[TypeInstance]:
    """All catalog instances whose data agrees with ``t``."""
    X = t.surface
    hits = []
    for tpl in TEMPLATES:
        if tpl.family == "sporadic":
            cands = [tpl.instance()]
        elif tpl.family == "n":
            cands = [tpl.instance(X.n)] if not X.is_plane and tpl.admissible(X.n) else []
        else:
            cands = []
            if not X.is_plane:
                m = 1
                while True:
                    inst = tpl.instance(m)
                    if inst.surface.n > X.n:
                        break
                    if inst.surface.n == X.n:
                        cands.append(inst)
                    m += 1
        hits.extend(c for c in cands if c.matches(t))
    return hits


# Dual graphs of E as drawn in the two tables.  "n" stands for a (-n)-vertex.

Weight = object


def _graph(*parts) -> Callable[[int], DualGraph]:
    """Build a graph from components; each is (path weights, [(attach index, leaf weight), ...])."""

    def build(n: int) -> DualGraph:
        verts, edges = [], []
        for ci, (path, leaves) in enumerate(parts):
            names = []
            for vi, w in enumerate(path):
                name = f"c{ci}v{vi}"
                verts.append((name, -n if w == "n" else w))
                if names:
                    edges.append((names[-1], name))
                names.append(name)
            for li, (at, w) in enumerate(leaves):
                name = f"c{ci}x{li}"
                verts.append((name, -n if w == "n" else w))
                edges.append((names[at], name))
        return DualGraph(tuple(verts), tuple(edges))

    return build


def _p(*ws, leaves=()):
    return (list(ws), list(leaves))


TABLE_ROWS: dict[str, Callable[[int], DualGraph]] = {
    "T1.1": _graph(_p(-3)),
    "T1.2": _graph(_p(-3, -2, -2, -2, -2)),
    "T1.3": _graph(_p(-3, -2, -2, -2, -2, leaves=[(1, -2)])),
    "T1.4": _graph(_p(-2, -2, -3, -2, -2)),
    "T1.5": _graph(_p(-3, -2, -2, -2), _p(-3)),
    "T1.6": _graph(_p(-3, -2)),
    "T1.7": _graph(_p(-2, -3, -2, -2, -2)),
    "T1.8": _graph(_p(-2, -3, -2, -2, -2, leaves=[(2, -2)])),
    "T1.9": _graph(_p(-3, -2, -2), _p(-3)),
    "T1.10": _graph(_p("n", -2)),
    "T1.11": _graph(_p("n", -2, -2, -2)),
    "T1.12": _graph(_p(-2, "n", -2)),
    "T1.13": _graph(_p("n", -2, -2, -2, leaves=[(2, -2)])),
    "T1.14": _graph(_p("n", -2, -2, leaves=[(1, -2)])),
    "T1.15": _graph(_p(-2, "n", -2, -2, -2)),
    "T1.16": _graph(_p(-3, -2, -2, -2, -2, leaves=[(2, -2)])),
    "T1.17": _graph(_p(-2, "n", -2, leaves=[(1, -2)])),
    "T1.18": _graph(_p(-2, "n", -2, -2, -2, leaves=[(3, -2)])),
    "T1.19": _graph(_p(-2, "n", -2, -2, leaves=[(2, -2)])),
    "T1.20": _graph(_p(-2, -2, -2, "n", -2, -2, -2)),
    "T1.21": _graph(_p(-3), _p(-3)),
    "T1.22": _graph(_p(-2, "n", -2, -2, -2, leaves=[(1, -2)])),
    "T1.23": _graph(_p(-2, -2, -2, "n", -2, -2, -2, leaves=[(1, -2)])),
    "T1.24": _graph(_p(-2, -2, "n", -2, -2, -2, leaves=[(1, -2)])),
    "T1.25": _graph(_p(-3, -2, -2, -2, -2, -2, -2), _p(-3)),
    "T1.26": _graph(_p(-3, -2), _p(-3, -2)),
    "T2.1": _graph(_p(-2, -2, -2, -3, -2, -2, -2), _p(-3)),
    "T2.2": _graph(_p(-2, -2, -2, -3, -2, -2, -2), _p(-3)),
    "T2.3": _graph(_p(-2, -3, -2, -2, -2, -2, -2), _p(-3, -2)),
    "T2.4": _graph(_p(-2, -3, -2), _p(-2, -3, -2)),
}

ROW_ORDER = tuple(TABLE_ROWS)


def row_templates(row: str) -> list[TypeTemplate]:
    return [t for t in TEMPLATES if t.row == row]
