"""Command line interface: validation, elimination dumps, enumeration, atlas and indices.

Exit codes are 0 on success, 1 when the input is well formed but fails a check, and
2 when the input cannot be read.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__, catalog
from .classify import SearchBounds, TypeRecord, enumerate_all, fractional_index_set
from .elimination import DualGraph, EliminationError, GraphScope, ResolutionModel, dual_graph_of
from .geometry import CurveRole, GeometryError, Location, SubschemePoint, WeightedConfig
from .picard import SurfaceModel
from .triplet import MultiIndex, NoIntegralSolution, TripletConfig, resolution, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class DocumentError(ValueError):
    """The input document is malformed."""


def rational(x: Fraction | int) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"rationals are integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise DocumentError(f"bad rational {value!r}") from exc
    raise DocumentError(f"bad rational {value!r}")


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer")
    return value


def surface_dict(X: SurfaceModel) -> dict:
    return {"kind": "P2"} if X.is_plane else {"kind": "F", "n": X.n}


def parse_surface(data: Any) -> SurfaceModel:
    if not isinstance(data, dict) or "kind" not in data:
        raise DocumentError("surface needs a kind")
    kind = str(data["kind"]).upper()
    if kind in ("P2", "PLANE"):
        return SurfaceModel.p2()
    if kind in ("F", "FN", "HIRZEBRUCH"):
        return SurfaceModel.hirzebruch(_int(data.get("n"), "surface.n"))
    raise DocumentError(f"unknown surface kind {data['kind']!r}")


@dataclass(frozen=True)
class TripletDocument:
    """The textual form of a candidate triplet."""

    triplet: TripletConfig

    def to_dict(self) -> dict:
        t = self.triplet
        return {
            "index": {"a": t.index.a, "b": t.index.b},
            "surface": surface_dict(t.surface),
            "components": [{"role": str(r), "coeff": rational(c)} for r, c in t.config.components],
            "points": [
                {
                    "location": str(p.location),
                    "degree": p.degree,
                    "contacts": {str(r): v for r, v in p.contacts},
                }
                for p in t.points
            ],
        }

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Any) -> TripletDocument:
        if not isinstance(data, dict):
            raise DocumentError("a triplet document is a JSON object")
        try:
            idx = data["index"]
            index = MultiIndex(_int(idx["a"], "index.a"), _int(idx["b"], "index.b"))
            X = parse_surface(data["surface"])
            comps = [(CurveRole.parse(c["role"]), parse_rational(c["coeff"])) for c in data["components"]]
            config = WeightedConfig.of(X, comps)
            points = []
            for p in data.get("points", []):
                loc = Location.parse(p["location"])
                contacts = p.get("contacts", {})
                if not isinstance(contacts, dict):
                    raise DocumentError("contacts map roles to contact orders")
                pairs = tuple((CurveRole.parse(r), _int(v, "contact")) for r, v in contacts.items())
                points.append(SubschemePoint(loc, _int(p["degree"], "degree"), pairs))
            return cls(TripletConfig(index, config, tuple(points)))
        except DocumentError:
            raise
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"missing or malformed field: {exc}") from exc
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc

    @classmethod
    def parse(cls, text: str) -> TripletDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def graph_dict(g: DualGraph) -> dict:
    return {
        "vertices": [{"name": name, "self_intersection": w} for name, w in g.vertices],
        "edges": [list(e) for e in g.edges],
    }


def _dot_node(w: int) -> str:
    if w == -1:
        return 'label="", style=solid'
    if w == -2:
        return 'label="", style=filled, fillcolor=black'
    if w <= -3:
        return f'label="{-w}"'
    return f'label="{w:+d}", shape=box'


def graph_dot(g: DualGraph, name: str = "E") -> str:
    lines = [f'graph "{name}" {{', "  node [shape=circle, width=0.3, fixedsize=true];"]
    for v, w in g.vertices:
        lines.append(f'  "{v}" [{_dot_node(w)}, selfint="{w}"];')
    for u, v in g.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def resolution_dict(model: ResolutionModel, which: GraphScope) -> dict:
    return {
        "curves": [
            {
                "name": c.name,
                "self_intersection": c.self_intersection,
                "em_coeff": rational(c.em_coeff),
                "lm_degree": rational(c.lm_degree),
                "km_degree": rational(c.km_degree),
                "strict_transform": c.is_strict,
                "terminal": c.terminal,
            }
            for c in model.curves
        ],
        "edges": [[a, b, m] for a, b, m in model.edges],
        "graph": graph_dict(dual_graph_of(model, which)),
    }


def record_dict(rec: TypeRecord) -> dict:
    return {
        "label": rec.label,
        "instance": rec.instance_label,
        "params": dict(rec.family_params),
        "index": {"a": rec.index.a, "b": rec.index.b},
        "ratio": rational(rec.index.ratio),
        "surface": surface_dict(rec.triplet.surface),
        "row": rec.row,
        "theorem": rec.theorem,
        "cartier_multiplier": rec.cartier,
        "realizations": rec.realizations,
        "triplet": TripletDocument(rec.triplet).to_dict(),
        "graph": graph_dict(rec.graph),
    }


def _read_document(path: str) -> TripletDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(exc)) from exc
    return TripletDocument.parse(text)


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def cmd_validate(args) -> int:
    try:
        doc = _read_document(args.path)
    except DocumentError as exc:
        _emit({"error": "parse", "detail": str(exc)})
        return EXIT_INPUT
    report = validate(doc.triplet)
    out = report.as_dict()
    out["failed"] = report.failed
    if report.ok:
        hits = catalog.match_instance(doc.triplet)
        out["types"] = [h.instance_label() for h in hits]
    _emit(out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_eliminate(args) -> int:
    try:
        doc = _read_document(args.path)
    except DocumentError as exc:
        _emit({"error": "parse", "detail": str(exc)})
        return EXIT_INPUT
    which = GraphScope.SUPPORT if args.which == "E" else GraphScope.FULL
    try:
        model = resolution(doc.triplet)
    except (EliminationError, GeometryError, NoIntegralSolution) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_FAIL
    if args.graph == "dot":
        sys.stdout.write(graph_dot(dual_graph_of(model, which)))
    else:
        _emit(resolution_dict(model, which))
    return EXIT_OK


def _parse_index(text: str) -> MultiIndex:
    a, sep, b = text.partition("/")
    if not sep:
        raise ValueError("expected a/b")
    return MultiIndex(int(a), int(b))


def cmd_enumerate(args) -> int:
    indices = None
    a_max = args.a_max
    if args.index:
        try:
            index = _parse_index(args.index)
        except ValueError as exc:
            _emit({"error": "parse", "detail": f"--index: {exc}"})
            return EXIT_INPUT
        indices = [index]
        a_max = max(a_max, index.a)
    records = enumerate_all(SearchBounds(a_max, args.n_max), prune=not args.no_prune, indices=indices)
    for rec in records:
        _emit(record_dict(rec))
    return EXIT_OK


def atlas_records(records: Sequence[TypeRecord]) -> dict[str, TypeRecord]:
    """First enumerated record of each table row, in table order."""
    out: dict[str, TypeRecord] = {}
    for rec in records:
        if rec.row and rec.row not in out:
            out[rec.row] = rec
    return {row: out[row] for row in catalog.ROW_ORDER if row in out}


def cmd_atlas(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    records = enumerate_all(SearchBounds(args.a_max, args.n_max)) if args.a_max > 0 else []
    summary = []
    for row, rec in atlas_records(records).items():
        path = out_dir / f"{row}.dot"
        path.write_text(graph_dot(rec.graph, rec.instance_label), encoding="utf-8")
        X = rec.triplet.surface
        expected = catalog.TABLE_ROWS[row](0 if X.is_plane else X.n)
        summary.append({"row": row, "file": path.name, "type": rec.instance_label,
                        "isomorphic": rec.graph.isomorphic_to(expected)})
    _emit({"rows": summary, "count": len(summary)})
    return EXIT_OK


def cmd_indices(args) -> int:
    if args.denominator_cap < 1:
        _emit({"error": "parse", "detail": "--denominator-cap must be positive"})
        return EXIT_INPUT
    for r in sorted(fractional_index_set(args.denominator_cap)):
        sys.stdout.write(rational(r) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="delpezzo", description="Fundamental triplets of log del Pezzo surfaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a triplet document")
    v.add_argument("path", help="JSON document, or - for stdin")
    v.set_defaults(func=cmd_validate)

    e = sub.add_parser("eliminate", help="resolve a triplet and dump the result")
    e.add_argument("path")
    e.add_argument("--graph", choices=("dot", "json"), default="json")
    e.add_argument("--which", choices=("E", "full"), default="E")
    e.set_defaults(func=cmd_eliminate)

    n = sub.add_parser("enumerate", help="list all normalized types within bounds as JSON lines")
    n.add_argument("--a-max", type=int, default=30)
    n.add_argument("--n-max", type=int, default=12)
    n.add_argument("--index", help="restrict to one multi-index, written a/b")
    n.add_argument("--no-prune", action="store_true", help="search from the raw definition")
    n.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("atlas", help="write one DOT file per table row")
    t.add_argument("--n-max", type=int, default=12)
    t.add_argument("--a-max", type=int, default=30)
    t.add_argument("--out", default="atlas")
    t.set_defaults(func=cmd_atlas)

    i = sub.add_parser("indices", help="fractional indices above 1/2 up to a denominator cap")
    i.add_argument("--denominator-cap", type=int, default=12)
    i.set_defaults(func=cmd_indices)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
