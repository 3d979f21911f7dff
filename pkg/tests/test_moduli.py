from __future__ import annotations

from fractions import Fraction

import pytest

from zpairs import catalog
from zpairs.acceptance import MODULI_SAMPLE
from zpairs.combinatorics import combinatorics_of_arrangement, same_combinatorics
from zpairs.configuration import chamber_weight
from zpairs.field import FieldScalar, FieldSpec
from zpairs.moduli import (DIFFERENT, PAIR, SAME_TAU, ModuliError, ModuliParams,
                           build_moduli_arrangement, component_characterizations,
                           concurrence_characterization, dual_conic_residual, moduli_configuration,
                           moduli_membership, rybnikov_gluing_check, triple_point,
                           zariski_certificate)
from zpairs.projective import Point, dualize


def test_sample_value_from_the_cli_example():
    p = ModuliParams.make(3, -3)
    v = moduli_membership(p)
    assert v.accepted and v.component == "Sigma1"
    assert component_characterizations(build_moduli_arrangement(p)).as_tuple() == (False, False, False)


def test_equal_parameters_land_in_sigma0():
    p = ModuliParams.make(3, 3)
    assert moduli_membership(p).component == "Sigma0"
    assert component_characterizations(build_moduli_arrangement(p)).as_tuple() == (True, True, True)
    assert concurrence_characterization(moduli_configuration(p))
    assert chamber_weight(moduli_configuration(p)) == 0


def test_rejections_name_the_forbidden_alignment():
    v = moduli_membership(ModuliParams.make(Fraction(-1, 2), Fraction(-1, 2)))
    assert not v.accepted and any("{S2,S6,S9}" in s for s in v.violations)
    assert not moduli_membership(ModuliParams.make(1, 1)).accepted
    assert not moduli_membership(ModuliParams.make(2, 3, 4)).accepted
    with pytest.raises(ModuliError):
        build_moduli_arrangement(ModuliParams.make(2, 3, 4))


@pytest.mark.parametrize("sign", [1, -1])
def test_membership_matches_combinatorics(sign):
    c2 = combinatorics_of_arrangement([dualize(p) for p in catalog.get("C2", [1, 1]).points])
    accepted = 0
    for k in MODULI_SAMPLE:
        p = ModuliParams.make(k, sign * k)
        lines = build_moduli_arrangement(p)
        iso = len(set(lines)) == 13 and same_combinatorics(combinatorics_of_arrangement(lines), c2)
        assert moduli_membership(p).accepted == (iso is not None and iso is not False), k
        accepted += moduli_membership(p).accepted
    assert accepted >= 20


def test_triple_points():
    p = ModuliParams.make(Fraction(2, 3), Fraction(-2, 3))
    lines = build_moduli_arrangement(p)
    assert triple_point(lines, 1, 11, 12) == Point(1, 0, Fraction(2, 3))
    assert triple_point(lines, 2, 8, 9) == Point(0, 1, Fraction(-2, 3))
    assert triple_point(lines, 3, 4, 5) == Point(1, -1, 0)


def test_residual_formula_up_to_sign():
    for k in (3, Fraction(1, 2), -5):
        p = ModuliParams.make(k, -k)
        x = FieldScalar(k)
        f = 2 * x ** -5 * (x * x + 1) * (x * x - x + 1) * (x * x + x + 1) * (x - 1) ** 4 * (x + 1) ** 4
        r = dual_conic_residual(p)
        assert r == f or r == -f
    assert dual_conic_residual(ModuliParams.make(3, 3)) == 0


def test_sqrt2_members():
    r = FieldScalar(0, 1, FieldSpec.quadratic(2))
    for a, b in [(1, 1), (1, -1)]:
        lines = build_moduli_arrangement(ModuliParams.make(a * r, b * r))
        assert lines == [dualize(q) for q in catalog.get("C2_sqrt2", [a, b]).points]


def test_gluing_with_literal_exponent_gives_the_opposite_member():
    for a in (1, -1):
        for b in (1, -1):
            literal = rybnikov_gluing_check(a, b)
            assert literal.matches == (-a, -b) and literal.swap_symmetry
            assert rybnikov_gluing_check(a, b, exponent_sign=-1).holds


def test_certificates():
    c11, c1m = catalog.get("C", [1, 1]), catalog.get("C", [1, -1])
    assert zariski_certificate(c11, c1m).verdict == PAIR
    assert zariski_certificate(c11, catalog.get("C", [-1, -1])).verdict == SAME_TAU
    assert zariski_certificate(c11, catalog.get("D", [1, 1])).verdict == DIFFERENT
    r = zariski_certificate(catalog.get("E", [1, 1, -1]), catalog.get("E", [1, 1, 1]))
    assert r.verdict == PAIR and r.uniform == (1, 1) and (r.tau1, r.tau2) == (1, 0)
