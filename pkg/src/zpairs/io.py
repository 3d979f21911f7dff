"""Configuration and arrangement files: canonical JSON with exact scalar strings."""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .configuration import Configuration
from .dual import PlumbedArrangement
from .field import QQ, FieldScalar, FieldSpec, FieldError
from .projective import GeometryError, Line, Point


class FormatError(ValueError):
    def __init__(self, source: str, where: str, message: str):
        self.source, self.where = source, where
        super().__init__(f"{source}: {where}: {message}")


_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _q_text(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_json(x: FieldScalar, spec: FieldSpec):
    if spec.is_quadratic:
        return [_q_text(x.a), _q_text(x.b)]
    return _q_text(x.a)


def _parse_rational(v, where: str, source: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise FormatError(source, where, f"expected a rational string like \"p/q\", got {json.dumps(v)}")
    text = str(v).strip()
    if not _RATIONAL_RE.match(text):
        raise FormatError(source, where, f"malformed rational {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise FormatError(source, where, "zero denominator") from None


def scalar_from_json(v, spec: FieldSpec, where: str = "$", source: str = "<input>") -> FieldScalar:
    if isinstance(v, list):
        if not spec.is_quadratic:
            raise FormatError(source, where, "two-component scalar in a rational configuration")
        if len(v) != 2:
            raise FormatError(source, where, "quadratic scalar needs exactly two components")
        a = _parse_rational(v[0], where + "[0]", source)
        b = _parse_rational(v[1], where + "[1]", source)
        return FieldScalar(a, b, spec)
    return FieldScalar(_parse_rational(v, where, source), 0, spec)


def _triple(v, spec, where, source, kind):
    if not isinstance(v, list) or len(v) != 3:
        raise FormatError(source, where, "expected an array of three scalars")
    vals = [scalar_from_json(x, spec, f"{where}[{i}]", source) for i, x in enumerate(v)]
    try:
        return kind(*vals)
    except GeometryError as e:
        raise FormatError(source, where, str(e)) from None


def _check_keys(obj, allowed: set, required: set, where: str, source: str):
    if not isinstance(obj, dict):
        raise FormatError(source, where, "expected an object")
    for key in obj:
        if key not in allowed:
            raise FormatError(source, f"{where}.{key}", "unknown key")
    for key in sorted(required):
        if key not in obj:
            raise FormatError(source, where, f"missing key {key!r}")


def _parse_field(obj, source) -> FieldSpec:
    _check_keys(obj, {"type", "d"}, {"type"}, "$.field", source)
    kind = obj["type"]
    if kind == "rational":
        if "d" in obj:
            raise FormatError(source, "$.field.d", "a rational field takes no d")
        return QQ
    if kind == "quadratic":
        d = obj.get("d")
        if isinstance(d, bool) or not isinstance(d, int):
            raise FormatError(source, "$.field.d", "quadratic field needs an integer d")
        try:
            return FieldSpec.quadratic(d)
        except FieldError as e:
            raise FormatError(source, "$.field.d", str(e)) from None
    raise FormatError(source, "$.field.type", f"unknown field type {kind!r}")


def _field_json(spec: FieldSpec) -> dict:
    return {"type": "quadratic", "d": spec.d} if spec.is_quadratic else {"type": "rational"}


def _load(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(source, f"line {e.lineno} column {e.colno}", e.msg) from None


def _int(v, where, source) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(source, where, "expected an integer")
    return v


def parse_configuration(text: str, source: str = "<input>") -> Configuration:
    obj = _load(text, source)
    return configuration_from_obj(obj, source)


def configuration_from_obj(obj, source: str = "<input>") -> Configuration:
    _check_keys(obj, {"field", "m", "vertices", "surrounding", "name"},
                {"field", "m", "vertices", "surrounding"}, "$", source)
    spec = _parse_field(obj["field"], source)
    m = _int(obj["m"], "$.m", source)
    if m < 2:
        raise FormatError(source, "$.m", "modulus must be at least 2")
    if not isinstance(obj["vertices"], list):
        raise FormatError(source, "$.vertices", "expected an array")
    vertices = [_triple(v, spec, f"$.vertices[{i}]", source, Point) for i, v in enumerate(obj["vertices"])]
    if not isinstance(obj["surrounding"], list):
        raise FormatError(source, "$.surrounding", "expected an array")
    pts, pl, labels = [], [], []
    for i, entry in enumerate(obj["surrounding"]):
        where = f"$.surrounding[{i}]"
        _check_keys(entry, {"coords", "plumbing", "label"}, {"coords", "plumbing"}, where, source)
        pts.append(_triple(entry["coords"], spec, where + ".coords", source, Point))
        k = _int(entry["plumbing"], where + ".plumbing", source)
        if not 0 <= k < m:
            raise FormatError(source, where + ".plumbing", f"plumbing {k} outside 0..{m - 1}")
        pl.append(k)
        label = entry.get("label", f"S{i + 1}")
        if not isinstance(label, str):
            raise FormatError(source, where + ".label", "label must be a string")
        labels.append(label)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError(source, "$.name", "name must be a string")
    return Configuration(tuple(vertices), tuple(pts), m, tuple(pl), spec, tuple(labels), name)


def _row(values) -> str:
    return json.dumps(values, ensure_ascii=False)


def serialize_configuration(c: Configuration) -> str:
    spec = c.field
    lines = ["{"]
    if c.name:
        lines.append(f'  "name": {json.dumps(c.name)},')
    lines.append(f'  "field": {_row(_field_json(spec))},')
    lines.append(f'  "m": {c.m},')
    lines.append('  "vertices": [')
    vs = [_row([scalar_to_json(x, spec) for x in v]) for v in c.vertices]
    lines.append(",\n".join("    " + v for v in vs))
    lines.append("  ],")
    lines.append('  "surrounding": [')
    labels = c.point_labels()[c.t:]
    entries = []
    for s, k, lab in zip(c.surrounding, c.plumbing, labels):
        coords = _row([scalar_to_json(x, spec) for x in s])
        entries.append(f'    {{"label": {json.dumps(lab)}, "coords": {coords}, "plumbing": {k}}}')
    lines.append(",\n".join(entries))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_arrangement(a: PlumbedArrangement) -> str:
    spec = a.spec
    body = [
        "{",
        f'  "field": {_row(_field_json(spec))},',
        f'  "m": {a.m},',
        '  "lines": [',
        ",\n".join("    " + _row([scalar_to_json(x, spec) for x in l]) for l in a.lines),
        "  ],",
        f'  "exponents": {_row(list(a.exponents))},',
        f'  "support": {_row(list(a.support))}',
    ]
    if a.labels:
        body[-1] += ","
        body.append(f'  "labels": {_row(list(a.labels))}')
    body.append("}")
    return "\n".join(body) + "\n"


def arrangement_from_obj(obj, source: str = "<input>") -> PlumbedArrangement:
    _check_keys(obj, {"field", "m", "lines", "exponents", "support", "labels"},
                {"field", "m", "lines", "exponents"}, "$", source)
    spec = _parse_field(obj["field"], source)
    m = _int(obj["m"], "$.m", source)
    if not isinstance(obj["lines"], list):
        raise FormatError(source, "$.lines", "expected an array")
    lines = [_triple(v, spec, f"$.lines[{i}]", source, Line) for i, v in enumerate(obj["lines"])]
    exps = [_int(e, f"$.exponents[{i}]", source) for i, e in enumerate(obj["exponents"])]
    support = [_int(s, f"$.support[{i}]", source) for i, s in enumerate(obj.get("support", [0, 1, 2]))]
    labels = obj.get("labels")
    try:
        return PlumbedArrangement(tuple(lines), m, tuple(exps), tuple(support),
                                  tuple(labels) if labels else None)
    except ValueError as e:
        raise FormatError(source, "$", str(e)) from None


def parse_any(text: str, source: str = "<input>"):
    """A Configuration or a PlumbedArrangement, by the keys present."""
    obj = _load(text, source)
    if isinstance(obj, dict) and "lines" in obj:
        return arrangement_from_obj(obj, source)
    return configuration_from_obj(obj, source)


def read_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_any(fh.read(), path)


_SCALAR_RE = re.compile(r"^\s*(?:(?P<a>-?\d+(?:/\d+)?)(?=[+-]|\s*$))?\s*"
                        r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt(?P<d>\d+))?\s*$")


def parse_scalar(text: str, spec: FieldSpec | None = None) -> FieldScalar:
    """Read "3", "-1/2", "sqrt2", "1-3/2*sqrt5" and similar.

    The field is taken from the text when a root appears, else ``spec`` (default Q).
    """
    m = _SCALAR_RE.match(text)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise FormatError("<argument>", repr(text), "expected a rational or a + b*sqrt(d)")
    try:
        a = Fraction(m.group("a") or 0)
        b = Fraction(m.group("b") or 1)
    except ZeroDivisionError:
        raise FormatError("<argument>", repr(text), "zero denominator") from None
    if m.group("d") is None:
        return FieldScalar(a, 0, spec or QQ)
    d = int(m.group("d"))
    if spec is not None and spec.d != d:
        raise FormatError("<argument>", repr(text), f"root of {d} outside {spec}")
    try:
        root_spec = spec or FieldSpec.quadratic(d)
    except FieldError as e:
        raise FormatError("<argument>", repr(text), str(e)) from None
    if m.group("sign") == "-":
        b = -b
    elif m.group("a") is not None and m.group("sign") is None:
        raise FormatError("<argument>", repr(text), "missing sign before the root term")
    return FieldScalar(a, b, root_spec)
