"""Configuration ingestion and report serialization.

Input files are JSON.  Rational literals are accepted as "p/q" or decimal
strings and parsed exactly; every rational in machine-readable output is
emitted as "p/q" in lowest terms with positive denominator, and reports are
serialized with sorted keys so a re-parsed report re-emits byte-identically.

Schemas
-------
space file:
    { "points":  [{"label": "p1", "value": "1/5"}, ...],
      "entries": [{"a": "p1", "b": "p2", "d": "0.05"}, ...],
      "fallback": "sqdiff" | "none",
      "claimed_s": "3" }                     (claimed_s optional)

function spec (one of):
    { "catalog": "cclass_1", "params": {"m": "1/2"}, "inner": {...} }
    { "piecewise": [{"from": "0", "to": "1", "poly": ["0", "1"],
                     "closed": true}, ...] }  (poly constant-first;
                                              "sqrt": true for a root piece;
                                              "to" omitted = unbounded)
    { "ratio": {"num": ["0", "1"], "den": ["1", "1"]} }

self-map (one of):
    { "assign": {"p1": "p2", ...} }
    { "constant": "p0" }
    { "pieces": [{"if_in": ["1/2", "1"], "to": "1/16"},
                 {"else_to": "0"}] }

instance file:
    { "space": <space object or path string>, "map": <self-map>,
      "psi": <function>, "weight_phi": <function>, "control_phi": <function>,
      "F": <function>, "s": "3",
      "variant": "m_max" | "metric_halfsum" |
                 {"convex": {"a": "1", "b": "1", "c": "1"}} }
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from mpmath import mp

from .contraction import (
    CheckReport,
    ContractionInstance,
    MapPiece,
    PairVerdict,
    SelfMap,
    Variant,
    metric_halfsum,
    constant_map,
    explicit_map,
    m_convex,
    m_max,
    piecewise_map,
)
from .errors import FprectError, ParseError
from .exact import format_rational, is_exact, parse_rational
from .functions import (
    FunctionSpec,
    Piece,
    PropertyReport,
    validate_spec,
)
from .solver import FixedPointResult, VanishingReport
from .spaces import (
    AxiomReport,
    FallbackRule,
    GeneralizedMetricSpace,
    Point,
    Witness,
    build_space,
)


def _fail(path: str, message: str) -> ParseError:
    return ParseError(f"{path}: {message}")


def _rational(raw, path: str) -> Fraction:
    try:
        return parse_rational(raw)
    except ValueError as exc:
        raise _fail(path, str(exc)) from None


def _expect(obj, kind, path: str):
    if not isinstance(obj, kind):
        raise _fail(path, f"expected {kind.__name__}, got {type(obj).__name__}")
    return obj


def load_json(path: str | Path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}") from None


def value_str(v) -> str:
    """Canonical string for a report value: exact "p/q" or decimal."""
    if is_exact(v):
        return format_rational(v)
    return mp.nstr(v, 30)


# --- spaces -------------------------------------------------------------------

def space_from_dict(data, path: str = "space") -> GeneralizedMetricSpace:
    _expect(data, dict, path)
    raw_points = _expect(data.get("points", []), list, f"{path}.points")
    points = []
    for i, rp in enumerate(raw_points):
        _expect(rp, dict, f"{path}.points[{i}]")
        if "label" not in rp or "value" not in rp:
            raise _fail(f"{path}.points[{i}]", "needs label and value")
        points.append(Point(str(rp["label"]),
                            _rational(rp["value"], f"{path}.points[{i}].value")))
    entries = []
    for i, re_ in enumerate(_expect(data.get("entries", []), list,
                                    f"{path}.entries")):
        _expect(re_, dict, f"{path}.entries[{i}]")
        for key in ("a", "b", "d"):
            if key not in re_:
                raise _fail(f"{path}.entries[{i}]", f"missing field {key!r}")
        entries.append((str(re_["a"]), str(re_["b"]),
                        _rational(re_["d"], f"{path}.entries[{i}].d")))
    raw_fb = data.get("fallback", "none")
    try:
        fallback = FallbackRule(raw_fb)
    except ValueError:
        raise _fail(f"{path}.fallback",
                    f"expected 'sqdiff' or 'none', got {raw_fb!r}") from None
    claimed = data.get("claimed_s")
    claimed_s = _rational(claimed, f"{path}.claimed_s") if claimed is not None else None
    try:
        return build_space(points, entries, fallback, claimed_s)
    except FprectError as exc:
        raise _fail(path, str(exc)) from None


def space_to_dict(space: GeneralizedMetricSpace) -> dict:
    out = {
        "points": [{"label": p.label, "value": format_rational(p.value)}
                   for p in space.points],
        "entries": [{"a": a, "b": b, "d": format_rational(d)}
                    for (a, b), d in sorted(space.table.entries.items())],
        "fallback": space.table.fallback.value,
    }
    if space.claimed_s is not None:
        out["claimed_s"] = format_rational(space.claimed_s)
    return out


# --- functions ----------------------------------------------------------------

def function_from_dict(data, path: str = "function") -> FunctionSpec:
    _expect(data, dict, path)
    if "piecewise" in data:
        pieces = []
        for i, rp in enumerate(_expect(data["piecewise"], list,
                                       f"{path}.piecewise")):
            _expect(rp, dict, f"{path}.piecewise[{i}]")
            lo = _rational(rp.get("from", "0"), f"{path}.piecewise[{i}].from")
            hi = (_rational(rp["to"], f"{path}.piecewise[{i}].to")
                  if rp.get("to") is not None else None)
            coeffs = tuple(_rational(c, f"{path}.piecewise[{i}].poly")
                           for c in rp.get("poly", []))
            pieces.append(Piece(lo, hi, coeffs,
                                use_sqrt=bool(rp.get("sqrt", False)),
                                closed_hi=bool(rp.get("closed", False))))
        spec = FunctionSpec("piecewise", pieces=tuple(pieces))
    elif "ratio" in data:
        ratio = _expect(data["ratio"], dict, f"{path}.ratio")
        spec = FunctionSpec(
            "ratio",
            num=tuple(_rational(c, f"{path}.ratio.num") for c in ratio.get("num", [])),
            den=tuple(_rational(c, f"{path}.ratio.den") for c in ratio.get("den", [])))
    elif "catalog" in data:
        params = _expect(data.get("params", {}), dict, f"{path}.params")
        inner = (function_from_dict(data["inner"], f"{path}.inner")
                 if data.get("inner") is not None else None)
        spec = FunctionSpec(
            str(data["catalog"]),
            params=tuple(sorted((k, _rational(v, f"{path}.params.{k}"))
                                for k, v in params.items())),
            inner=inner)
    else:
        raise _fail(path, "needs one of 'catalog', 'piecewise', 'ratio'")
    try:
        validate_spec(spec)
    except FprectError as exc:
        raise _fail(path, str(exc)) from None
    return spec


def function_to_dict(spec: FunctionSpec) -> dict:
    if spec.catalog == "piecewise":
        pieces = []
        for p in spec.pieces:
            row: dict = {"from": format_rational(p.lo)}
            if p.hi is not None:
                row["to"] = format_rational(p.hi)
            if p.use_sqrt:
                row["sqrt"] = True
            else:
                row["poly"] = [format_rational(c) for c in p.coeffs]
            if p.closed_hi:
                row["closed"] = True
            pieces.append(row)
        return {"piecewise": pieces}
    if spec.catalog == "ratio":
        return {"ratio": {"num": [format_rational(c) for c in spec.num],
                          "den": [format_rational(c) for c in spec.den]}}
    out: dict = {"catalog": spec.catalog}
    if spec.params:
        out["params"] = {k: format_rational(v) for k, v in spec.params}
    if spec.inner is not None:
        out["inner"] = function_to_dict(spec.inner)
    return out


# --- self-maps ----------------------------------------------------------------

def map_from_dict(data, path: str = "map") -> SelfMap:
    _expect(data, dict, path)
    if "assign" in data:
        assign = _expect(data["assign"], dict, f"{path}.assign")
        return explicit_map({str(k): str(v) for k, v in assign.items()})
    if "constant" in data:
        return constant_map(str(data["constant"]))
    if "pieces" in data:
        pieces, otherwise = [], None
        for i, rp in enumerate(_expect(data["pieces"], list, f"{path}.pieces")):
            _expect(rp, dict, f"{path}.pieces[{i}]")
            if "else_to" in rp:
                otherwise = str(rp["else_to"])
                continue
            if "if_in" not in rp or "to" not in rp:
                raise _fail(f"{path}.pieces[{i}]", "needs if_in and to")
            lo, hi = (_rational(v, f"{path}.pieces[{i}].if_in")
                      for v in rp["if_in"])
            pieces.append(MapPiece(lo, hi, str(rp["to"])))
        return piecewise_map(pieces, otherwise)
    raise _fail(path, "needs one of 'assign', 'constant', 'pieces'")


def map_to_dict(self_map: SelfMap) -> dict:
    if self_map.constant is not None:
        return {"constant": self_map.constant}
    if self_map.assignment:
        return {"assign": dict(self_map.assignment)}
    rows: list[dict] = [
        {"if_in": [format_rational(p.lo), format_rational(p.hi)], "to": p.target}
        for p in self_map.pieces]
    if self_map.otherwise is not None:
        rows.append({"else_to": self_map.otherwise})
    return {"pieces": rows}


# --- instances ----------------------------------------------------------------

def _variant_from(data, path: str) -> Variant:
    if isinstance(data, str):
        if data == "m_max":
            return m_max()
        if data == "metric_halfsum":
            return metric_halfsum()
        raise _fail(path, f"unknown variant {data!r}")
    _expect(data, dict, path)
    if "convex" in data:
        w = _expect(data["convex"], dict, f"{path}.convex")
        try:
            return m_convex(_rational(w.get("a", "0"), f"{path}.convex.a"),
                            _rational(w.get("b", "0"), f"{path}.convex.b"),
                            _rational(w.get("c", "0"), f"{path}.convex.c"))
        except FprectError as exc:
            raise _fail(f"{path}.convex", str(exc)) from None
    raise _fail(path, "expected 'm_max', 'metric_halfsum', or {'convex': ...}")


def variant_to_dict(variant: Variant):
    if variant.kind == "m_convex":
        return {"convex": {"a": format_rational(variant.a),
                           "b": format_rational(variant.b),
                           "c": format_rational(variant.c)}}
    return variant.kind


def instance_from_dict(data, base_dir: str | Path = ".",
                       path: str = "instance") -> ContractionInstance:
    _expect(data, dict, path)
    for key in ("space", "map", "psi", "weight_phi", "control_phi", "F", "s"):
        if key not in data:
            raise _fail(path, f"missing field {key!r}")
    raw_space = data["space"]
    if isinstance(raw_space, str):
        space = space_from_dict(load_json(Path(base_dir) / raw_space),
                                f"{path}.space({raw_space})")
    else:
        space = space_from_dict(raw_space, f"{path}.space")
    try:
        return ContractionInstance(
            space=space,
            self_map=map_from_dict(data["map"], f"{path}.map"),
            psi=function_from_dict(data["psi"], f"{path}.psi"),
            weight_phi=function_from_dict(data["weight_phi"], f"{path}.weight_phi"),
            control_phi=function_from_dict(data["control_phi"],
                                           f"{path}.control_phi"),
            F=function_from_dict(data["F"], f"{path}.F"),
            s=_rational(data["s"], f"{path}.s"),
            variant=_variant_from(data.get("variant", "m_max"), f"{path}.variant"),
        )
    except ParseError:
        raise
    except FprectError as exc:
        raise _fail(path, str(exc)) from None


def instance_to_dict(inst: ContractionInstance) -> dict:
    return {
        "space": space_to_dict(inst.space),
        "map": map_to_dict(inst.self_map),
        "psi": function_to_dict(inst.psi),
        "weight_phi": function_to_dict(inst.weight_phi),
        "control_phi": function_to_dict(inst.control_phi),
        "F": function_to_dict(inst.F),
        "s": format_rational(inst.s),
        "variant": variant_to_dict(inst.variant),
    }


# --- reports ------------------------------------------------------------------

def witness_to_dict(w: Witness) -> dict:
    names = ("x", "u", "y") if len(w.labels) == 3 else ("x", "u", "v", "y")
    out = dict(zip(names, w.labels))
    out["lhs"] = format_rational(w.lhs)
    out["rhs"] = format_rational(w.rhs)
    return out


def axiom_report_to_dict(report: AxiomReport) -> dict:
    return {
        "axiom": report.axiom.value,
        "parameter_s": format_rational(report.parameter_s),
        "verdict": report.verdict,
        "total_violations": report.total_violations,
        "witnesses": [witness_to_dict(w) for w in report.witnesses],
    }


def pair_verdict_to_dict(v: PairVerdict) -> dict:
    out = {
        "x": v.x, "y": v.y,
        "lhs": value_str(v.lhs),
        "M": value_str(v.m_value),
        "rhs": value_str(v.rhs),
        "margin": value_str(v.margin),
        "holds": v.holds,
    }
    if v.l_value is not None:
        out["l"] = value_str(v.l_value)
    return out


def check_report_to_dict(report: CheckReport) -> dict:
    shown = [v for v in report.verdicts if v.x <= v.y]  # deduplicated view
    return {
        "global_holds": report.global_holds,
        "pairs": [pair_verdict_to_dict(v) for v in shown],
        "worst_pair": pair_verdict_to_dict(report.worst_pair)
        if report.worst_pair else None,
    }


def property_report_to_dict(report: PropertyReport) -> dict:
    return {
        "property": report.property,
        "verdict": report.verdict,
        "grid": report.grid,
        "notes": list(report.notes),
        "witnesses": [{"args": list(w.args), "values": list(w.values),
                       "reason": w.reason} for w in report.witnesses],
    }


def solve_result_to_dict(result: FixedPointResult) -> dict:
    tr = result.trace
    return {
        "status": result.status.value,
        "point": result.point,
        "period": result.period,
        "iterations": result.iterations,
        "trace": {
            "orbit": list(tr.orbit),
            "step_dist": [format_rational(d) for d in tr.step_dist],
            "skip_dist": [format_rational(d) for d in tr.skip_dist],
            "weights": [value_str(w) for w in tr.weights],
            "augmented": [value_str(a) for a in tr.augmented],
        },
    }


def vanishing_to_dict(report: VanishingReport) -> dict:
    return {
        "step": {"ok": report.step.ok, "index": report.step.index},
        "skip": {"ok": report.skip.ok, "index": report.skip.index},
        "weights": {"ok": report.weights.ok, "index": report.weights.index},
    }


def canonical_json(obj) -> str:
    """Stable serialization: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
