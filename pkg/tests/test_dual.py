from __future__ import annotations

from itertools import islice

import pytest

from zpairs import catalog
from zpairs.acceptance import seven_line_arrangement
from zpairs.configuration import chamber_weight
from zpairs.dual import (ArrangementError, PlumbedArrangement, build_dpa, classify_c_leq_3,
                         cyclic_assignments, exponent_from_wiring, i_invariant,
                         is_triangular_inner_cyclic, normalize_support, torus_parameters,
                         verify_relation, wiring_sets)
from zpairs.projective import Line


def test_dpa_of_c():
    a = build_dpa(catalog.get("C", [1, 1]))
    assert len(a.lines) == 13 and a.support == (0, 1, 2)
    assert a.exponents[:3] == (0, 0, 0) and set(a.exponents[3:]) == {1}
    assert a.line_labels()[0] == "V1*"
    assert is_triangular_inner_cyclic(a)


def test_inner_cyclic_reasons():
    a = build_dpa(catalog.get("C", [1, 1]))
    broken = PlumbedArrangement(a.lines, a.m, (1,) + a.exponents[1:], a.support, a.labels)
    report = is_triangular_inner_cyclic(broken)
    assert not report and any("V1*" in r for r in report.reasons)
    with pytest.raises(ArrangementError):
        i_invariant(broken)


def test_torus_parameters_order():
    assert list(islice(torus_parameters(), 6)) == [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]


def test_normalization_hits_the_target_triangle():
    a = build_dpa(catalog.get("D", [1, -1]))
    for asg in cyclic_assignments(a.support):
        n = normalize_support(a, asg)
        moved = [n.arrangement.lines[i] for i in asg]
        assert moved == [Line(0, 0, 1, spec=a.spec), Line(1, 1, 0, spec=a.spec),
                         Line(1, -1, 0, spec=a.spec)]
    tori = {normalize_support(a, a.support, k).torus for k in range(3)}
    assert len(tori) == 3


def test_worked_example():
    a = seven_line_arrangement()
    assert is_triangular_inner_cyclic(a)
    w = wiring_sets(normalize_support(a))
    assert (sorted(w.d1), sorted(w.d2), sorted(w.d3)) == ([5, 6], [4], [4, 6])
    assert exponent_from_wiring(a, w) == 1


@pytest.mark.parametrize("name", list(catalog.ENTRIES))
def test_relation_with_chamber_weight(name):
    for _, c in catalog.family(name):
        assert verify_relation(c, starts=(0, 1), all_assignments=True)


def test_wiring_identity_on_d_family():
    for _, c in catalog.family("D2"):
        a = build_dpa(c)
        w = wiring_sets(normalize_support(a))
        assert w.d2 <= w.d3 and w.d3 - w.d2 == w.d1 & w.d3
        assert exponent_from_wiring(a, w) == (-chamber_weight(c)) % 2


def test_classification():
    for _, c in catalog.family("C"):
        cls = classify_c_leq_3(build_dpa(c).lines)
        assert cls.kind == "CLeq3NonSimple" and cls.per_line == (5, 5, 5)
    quad = classify_c_leq_3(build_dpa(catalog.get("Quadrilateral")).lines)
    assert quad.kind == "CLeq3SimpleType"
    pencil = [Line(1, k, 0) for k in range(4)] + [Line(0, 1, 0)]
    assert classify_c_leq_3(pencil).kind == "CLeq3SimpleType"
