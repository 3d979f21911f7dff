from __future__ import annotations

import pytest

from zpairs import catalog
from zpairs.dual import build_dpa
from zpairs.plot import PlotError, build_scene, parse_chart, render_svg


def test_svg_is_byte_identical():
    c = catalog.get("C", [1, 1])
    assert render_svg(c) == render_svg(c)
    assert render_svg(c).startswith("<?xml")


def test_c11_picture():
    scene = build_scene(catalog.get("C", [1, 1]))
    # V1, V2 are at infinity in the default chart, the axes stay dashed
    assert len(scene.dashed) == 2 and len(scene.solid) == 15
    labels = [lab for lab, _, role in scene.points if role == "surrounding"]
    assert labels == [f"S{i}" for i in range(1, 11)]


def test_quadrilateral_picture():
    scene = build_scene(catalog.get("Quadrilateral"), "line:1,1,1")
    assert len(scene.solid) == 6 and len(scene.dashed) == 3
    svg = render_svg(catalog.get("Quadrilateral"), "line:1,1,1")
    assert svg.count("stroke-dasharray") == 3


def test_box_has_margin():
    scene = build_scene(catalog.get("Quadrilateral"), "line:1,1,1")
    x0, x1, y0, y1 = scene.box
    xs = [q[0] for _, q, _ in scene.points]
    assert x0 < min(xs) and x1 > max(xs)


def test_arrangement_picture():
    a = build_dpa(catalog.get("C", [1, -1]))
    scene = build_scene(a, "line-index:1")
    assert len(scene.dashed) == 2 and len(scene.solid) == 10
    assert render_svg(a, "line-index:1") == render_svg(a, "line-index:1")


def test_chart_errors():
    with pytest.raises(PlotError, match="S1 lies on the chart line"):
        build_scene(catalog.get("C", [1, 1]), "line-index:1")
    with pytest.raises(PlotError):
        parse_chart("vertex-pair:1,1")
    with pytest.raises(PlotError):
        parse_chart("line:0,0,0")
