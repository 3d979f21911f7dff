"""Deterministic SVG pictures of real configurations and arrangements."""
from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from .combinatorics import singular_points
from .configuration import Configuration, config_lines, vertex_pair_lines
from .dual import PlumbedArrangement
from .field import FieldScalar
from .projective import Line, Point, Transform, join, meet

HASH_SALT = "zpairs"
MARGIN = 0.2


class PlotError(ValueError):
    pass


def parse_chart(spec: str | None):
    if spec is None:
        return ("vertex-pair", (1, 2))
    kind, _, rest = spec.partition(":")
    try:
        if kind == "vertex-pair":
            i, j = (int(x) for x in rest.split(","))
            if i == j:
                raise ValueError
            return (kind, (i, j))
        if kind == "line-index":
            return (kind, (int(rest),))
        if kind == "line":
            coeffs = tuple(Fraction(x) for x in rest.split(","))
            if len(coeffs) != 3 or not any(coeffs):
                raise ValueError
            return (kind, coeffs)
    except (ValueError, ZeroDivisionError):
        pass
    raise PlotError(f"bad chart {spec!r}; use vertex-pair:i,j, line-index:k or line:a,b,c")


def chart_transform(line: Line) -> Transform:
    """Projectivity sending ``line`` to z = 0, identity when it already is z = 0."""
    a, b, c = line.coords
    spec = line.spec
    one, zero = FieldScalar(1, 0, spec), FieldScalar(0, 0, spec)
    e = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    if c:
        rows = (e[0], e[1], line.coords)
    elif b:
        rows = (e[0], e[2], line.coords)
    else:
        rows = (e[1], e[2], line.coords)
    return Transform(rows)


def _affine(p: Point):
    x, y, z = p.coords
    if not z:
        return None
    return (float(x / z), float(y / z))


def _clip(line: Line, box):
    """Segment of the affine line inside the box, in floats."""
    a, b, c = (float(v) for v in line.coords)
    x0, x1, y0, y1 = box
    pts = []
    if abs(b) > 1e-15:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if abs(a) > 1e-15:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return pts[0], pts[-1]


def _scene_configuration(c: Configuration, chart):
    kind, args = chart
    cls = config_lines(c)
    if kind == "vertex-pair":
        i, j = args
        if not (1 <= i <= c.t and 1 <= j <= c.t):
            raise PlotError(f"vertex-pair chart {i},{j} outside 1..{c.t}")
        chart_line = join(c.vertices[i - 1], c.vertices[j - 1])
    elif kind == "line":
        chart_line = Line(*args, spec=c.field)
    else:
        (k,) = args
        if not 1 <= k <= len(cls):
            raise PlotError(f"line-index {k} outside 1..{len(cls)}")
        chart_line = cls[k - 1].line
    labels = c.point_labels()
    for idx, s in enumerate(c.surrounding):
        if chart_line.contains(s):
            raise PlotError(f"{labels[c.t + idx]} lies on the chart line; choose another chart")
    solid = [cl.line for cl in cls]
    dashed = list(vertex_pair_lines(c)) if c.t == 3 else []
    points = [(labels[c.t + i], s, "surrounding") for i, s in enumerate(c.surrounding)]
    points += [(labels[i], v, "vertex") for i, v in enumerate(c.vertices) if not chart_line.contains(v)]
    return chart_line, solid, dashed, points


def _scene_arrangement(a: PlumbedArrangement, chart):
    kind, args = chart
    if kind == "line-index":
        (k,) = args
        if not 1 <= k <= len(a.lines):
            raise PlotError(f"line-index {k} outside 1..{len(a.lines)}")
        chart_line = a.lines[k - 1]
    elif kind == "line":
        chart_line = Line(*args, spec=a.spec)
    else:
        spec = a.spec
        chart_line = Line(FieldScalar(0, 0, spec), FieldScalar(0, 0, spec), FieldScalar(1, 0, spec))
    solid = [l for i, l in enumerate(a.lines) if i not in a.support]
    dashed = [a.lines[i] for i in a.support]
    points = []
    for p, through in sorted(singular_points(a.lines).items(), key=lambda ps: sorted(ps[1])):
        if len(through) >= 3 and not chart_line.contains(p):
            points.append(("", p, "singular"))
    return chart_line, solid, dashed, points


@dataclass
class Scene:
    solid: list            # segments ((x0, y0), (x1, y1))
    dashed: list
    points: list           # (label, (x, y), role)
    box: tuple


def build_scene(obj: Union[Configuration, PlumbedArrangement], chart: str | None = None) -> Scene:
    chart_spec = parse_chart(chart)
    if isinstance(obj, Configuration):
        chart_line, solid, dashed, points = _scene_configuration(obj, chart_spec)
    else:
        chart_line, solid, dashed, points = _scene_arrangement(obj, chart_spec)
    T = chart_transform(chart_line)
    solid = [T(l) for l in solid if l != chart_line]
    dashed = [T(l) for l in dashed if l != chart_line]
    drawn = solid + dashed
    finite = []
    for i in range(len(drawn)):
        for j in range(i + 1, len(drawn)):
            q = _affine(meet(drawn[i], drawn[j]))
            if q is not None:
                finite.append(q)
    placed = [(lab, _affine(T(p)), role) for lab, p, role in points]
    finite += [q for _, q, _ in placed if q is not None]
    if not finite:
        finite = [(0.0, 0.0)]
    xs, ys = [q[0] for q in finite], [q[1] for q in finite]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    box = (min(xs) - MARGIN * w, max(xs) + MARGIN * w, min(ys) - MARGIN * h, max(ys) + MARGIN * h)
    segs = lambda lines: [seg for seg in (_clip(l, box) for l in lines) if seg]
    return Scene(segs(solid), segs(dashed), [(lab, q, role) for lab, q, role in placed if q], box)


def render_svg(obj: Union[Configuration, PlumbedArrangement], chart: str | None = None) -> str:
    scene = build_scene(obj, chart)
    box = scene.box
    fig = Figure(figsize=(6, 6))
    FigureCanvasSVG(fig)
    ax = fig.add_axes([0.02, 0.02, 0.96, 0.96])
    for segments, style in ((scene.dashed, "--"), (scene.solid, "-")):
        for (xa, ya), (xb, yb) in segments:
            ax.plot([round(xa, 6), round(xb, 6)], [round(ya, 6), round(yb, 6)],
                    linestyle=style, color="black" if style == "-" else "gray", linewidth=1)
    for lab, q, role in scene.points:
        x, y = round(q[0], 6), round(q[1], 6)
        marker, color = {"surrounding": ("o", "black"), "vertex": ("s", "tab:red"),
                         "singular": ("o", "tab:blue")}[role]
        ax.plot([x], [y], marker=marker, color=color, markersize=5, linestyle="none")
        if lab:
            ax.annotate(lab, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlim(box[0], box[1])
    ax.set_ylim(box[2], box[3])
    ax.set_aspect("auto")
    ax.set_axis_off()
    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()
