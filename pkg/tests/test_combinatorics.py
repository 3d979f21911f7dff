from __future__ import annotations

from hypothesis import given, settings, strategies as st

from zpairs import catalog, listings
from zpairs.combinatorics import (Combinatorics, automorphism_group, canonical_form, combinatorics_of,
                                  compose, invert, is_isomorphism, is_stable, same_combinatorics,
                                  weak_combinatorics)
from zpairs.dual import build_dpa


def _named(c):
    return sorted(tuple(s) for s in combinatorics_of(c).named())


def test_printed_listings():
    for name, printed in listings.PRINTED.items():
        assert _named(catalog.get(name, [1] * catalog.ENTRIES[name].arity)) == printed, name
    assert _named(catalog.get("Quadrilateral")) == listings.QUADRILATERAL


def test_degenerations_create_the_tabulated_alignments():
    for name, created in listings.CREATED.items():
        comb = _named(catalog.get(name, [1] * catalog.ENTRIES[name].arity))
        for block in created:
            assert block in comb, (name, block)


def test_subset_counts_match_registry():
    for name, entry in catalog.ENTRIES.items():
        c = catalog.get(name, [1] * entry.arity)
        assert len(combinatorics_of(c).subsets) == entry.n_subsets, name


def test_aut_of_c_contains_printed_generators():
    c = catalog.get("C", [1, -1])
    labels = c.point_labels()
    group = automorphism_group(combinatorics_of(c))
    assert len(group) == 4
    s1 = tuple(labels.index(x) for x in listings.SIGMA1)
    s2 = tuple(labels.index(x) for x in listings.SIGMA2)
    assert s1 in group and s2 in group
    assert compose(s1, s1) in group and invert(s2) in group


def test_group_orders():
    orders = {"C1": 2, "C2": 2, "D": 2, "E": 12, "E3": 4, "Pappus": 108, "NonPappus": 12,
              "Quadrilateral": 24}
    for name, order in orders.items():
        c = catalog.get(name, [1] * catalog.ENTRIES[name].arity)
        assert len(automorphism_group(combinatorics_of(c))) == order, name


def test_stability():
    assert not is_stable(catalog.get("Pappus"))
    assert is_stable(catalog.get("NonPappus"))
    assert is_stable(catalog.get("Quadrilateral"))
    assert is_stable(catalog.get("D2", [1, -1]))


def test_isomorphism_between_family_members():
    k1 = combinatorics_of(catalog.get("E1", [1, 1, 1]))
    k2 = combinatorics_of(catalog.get("E1", [-1, 1, -1]))
    phi = same_combinatorics(k1, k2)
    assert phi is not None and is_isomorphism(k1, k2, phi)
    assert same_combinatorics(k1, combinatorics_of(catalog.get("E2", [1, 1, 1]))) is None


@settings(max_examples=200, deadline=None)
@given(st.permutations(range(13)))
def test_canonical_form_ignores_labels(perm):
    k = combinatorics_of(catalog.get("C1", [1, 1]))
    moved = k.relabel(perm)
    assert canonical_form(moved)[0] == canonical_form(k)[0]
    assert same_combinatorics(k, moved) is not None


def test_canonical_form_separates():
    a = canonical_form(combinatorics_of(catalog.get("C1", [1, 1])))[0]
    b = canonical_form(combinatorics_of(catalog.get("C2", [1, 1])))[0]
    assert a != b


def test_small_isomorphism_search():
    k1 = Combinatorics(4, ((0, 1, 2),))
    k2 = Combinatorics(4, ((1, 2, 3),))
    phi = same_combinatorics(k1, k2)
    assert phi is not None and phi[3] == 0
    assert len(automorphism_group(k1)) == 6


def test_weak_combinatorics_of_the_nine_line_pair():
    w1 = weak_combinatorics(build_dpa(catalog.get("Pappus")).lines)
    w2 = weak_combinatorics(build_dpa(catalog.get("NonPappus")).lines)
    assert w1 == w2
    assert w1.n_lines == 9 and dict(w1.points)[3] == 9
    assert all(m.count(3) == 3 for m in w1.per_line)
    k1 = combinatorics_of(catalog.get("Pappus"))
    k2 = combinatorics_of(catalog.get("NonPappus"))
    assert same_combinatorics(k1, k2) is None
