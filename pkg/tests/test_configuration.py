from __future__ import annotations

import pytest

from zpairs import catalog
from zpairs.configuration import (CHAMBER_CLASSES, Configuration, ConfigurationError,
                                  chamber_of_signs, chamber_sums, chamber_weight, config_lines,
                                  is_planar, is_uniform, require_valid, validate)
from zpairs.projective import Point


def _quad(**kw) -> Configuration:
    base = catalog.get("Quadrilateral")
    return Configuration(kw.get("vertices", base.vertices), kw.get("surrounding", base.surrounding),
                         kw.get("m", 2), kw.get("plumbing", base.plumbing))


def test_every_catalog_member_validates():
    for name in catalog.ENTRIES:
        for _, c in catalog.family(name):
            assert validate(c).ok, (name, validate(c).lines())


def test_c_chamber_values():
    expected = {(1, 1): 0, (-1, -1): 0, (1, -1): 1, (-1, 1): 1}
    for params, tau in expected.items():
        c = catalog.get("C", params)
        assert chamber_sums(c) == [tau] * 4
        assert chamber_weight(c) == tau


def test_chamber_ids_are_negation_classes():
    assert len(CHAMBER_CLASSES) == 4
    for v in CHAMBER_CLASSES:
        assert chamber_of_signs(v) == chamber_of_signs(tuple(-x for x in v))
    assert sorted(chamber_of_signs(v) for v in CHAMBER_CLASSES) == [0, 1, 2, 3]


def test_surrounding_point_on_vertex_line_is_rejected():
    c = _quad()
    bad = _quad(surrounding=c.surrounding[:3] + (Point(1, 1, 2),))  # on the line V1V2
    kinds = {v.kind for v in validate(bad).violations}
    assert "condition1" in kinds


def test_plumbing_sum_violation_names_the_line():
    c = _quad(plumbing=(1, 1, 1, 1), m=3)
    report = validate(c)
    assert not report
    assert all(v.kind == "condition2" and v.total == 2 for v in report.violations)
    assert "V1" in report.violations[0].message


def test_duplicates_and_zero_plumbing():
    c = _quad()
    dup = _quad(surrounding=c.surrounding[:3] + (c.surrounding[0],))
    assert [v.kind for v in validate(dup).violations] == ["duplicate"]
    zero = _quad(plumbing=(0, 1, 1, 1))
    assert any("only vertices carry weight 0" in m for m in validate(zero).lines())
    with pytest.raises(ConfigurationError):
        require_valid(zero)


def test_config_lines_and_uniformity():
    c = catalog.get("C", [1, 1])
    lines = config_lines(c)
    assert len(lines) == 15
    assert all(len(cl.surrounding) == 2 for cl in lines)
    assert is_planar(c) and is_uniform(c) == 1
    assert is_uniform(catalog.get("Pappus", m=3, zeta=1)) is None


def test_chamber_sums_are_constant_on_transforms():
    from zpairs.projective import Transform
    T = Transform([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
    for params in ([1, 1], [1, -1]):
        c = catalog.get("C", params)
        assert chamber_weight(c.transformed(T)) == chamber_weight(c)
