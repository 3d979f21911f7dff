from __future__ import annotations

import pytest

from zpairs import catalog
from zpairs.configuration import chamber_weight
from zpairs.depth import line_counts
from zpairs.dual import build_dpa


def test_registry_counts():
    for name, entry in catalog.ENTRIES.items():
        for params, c in catalog.family(name):
            assert len(build_dpa(c).lines) == entry.n_lines, name
            assert line_counts(c) == entry.line_counts, (name, params)


def test_tau_rule_per_family():
    for name in catalog.ZARISKI_FAMILIES:
        entry = catalog.ENTRIES[name]
        for params, c in catalog.family(name):
            assert chamber_weight(c) == entry.expected_tau(params), (name, params)


def test_family_sizes():
    sizes = {name: len(catalog.ENTRIES[name].parameter_sets()) for name in catalog.ZARISKI_FAMILIES}
    assert sizes == {"C": 4, "C1": 4, "C2": 4, "D": 4, "D1": 4, "D2": 4,
                     "E": 8, "E1": 8, "E2": 4, "E3": 8}


def test_degenerations_move_only_listed_points():
    base = catalog.get("C", [1, -1])
    c1 = catalog.get("C1", [1, -1])
    moved = [lab for lab, p, q in zip(base.point_labels(), base.points, c1.points) if p != q]
    assert moved == ["S3", "S5", "S6", "S7"]


def test_sqrt2_realization_has_c2_combinatorics():
    from zpairs.combinatorics import combinatorics_of, same_combinatorics
    a = combinatorics_of(catalog.get("C2", [1, 1]))
    b = combinatorics_of(catalog.get("C2_sqrt2", [-1, 1]))
    assert same_combinatorics(a, b) is not None


def test_bad_requests():
    with pytest.raises(catalog.CatalogError):
        catalog.get("Nope")
    with pytest.raises(catalog.CatalogError):
        catalog.get("C", [1])
    with pytest.raises(catalog.CatalogError):
        catalog.get("C", [2, 1])
    with pytest.raises(catalog.CatalogError):
        catalog.get("C", [1, 1], m=3)


def test_pappus_plumbing_alternates():
    c = catalog.get("Pappus", m=5, zeta=2)
    assert c.m == 5 and c.plumbing == (2, 3, 2, 3, 3, 2)
    assert chamber_weight(c) == 0
