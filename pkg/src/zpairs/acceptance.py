"""The end-to-end acceptance checks, shared by ``zpairs selftest`` and the test suite."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import catalog, listings
from .combinatorics import (automorphism_group, combinatorics_of, combinatorics_of_arrangement,
                            same_combinatorics, is_stable, weak_combinatorics)
from .configuration import chamber_sums, chamber_weight, validate
from .depth import depth_report, line_counts
from .dual import (PlumbedArrangement, build_dpa, classify_c_leq_3, cyclic_assignments,
                   exponent_from_wiring, i_invariant, normalize_support, singular_points,
                   wiring_sets)
from .field import FieldSpec, sqrt_of
from .moduli import (DIFFERENT, PAIR, SAME_TAU, ModuliParams, build_moduli_arrangement,
                     component_characterizations, moduli_configuration, moduli_membership,
                     rybnikov_gluing_check, triple_point, zariski_certificate)
from .projective import Line, Point, dualize


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail}"


def _product(params) -> int:
    out = 1
    for p in params:
        out *= p
    return out


def check_chamber_weights() -> tuple[bool, str]:
    bad = []
    c_values = {p: chamber_weight(catalog.get("C", p)) for p in [(1, 1), (-1, -1), (1, -1), (-1, 1)]}
    if c_values != {(1, 1): 0, (-1, -1): 0, (1, -1): 1, (-1, 1): 1}:
        bad.append(f"C values {c_values}")
    count = 0
    for name in catalog.ZARISKI_FAMILIES:
        for params, c in catalog.family(name):
            count += 1
            want = 0 if _product(params) == 1 else c.m // 2
            if chamber_weight(c) != want:
                bad.append(f"{name}{list(params)}: tau {chamber_weight(c)} != {want}")
    return not bad, "; ".join(bad) or f"{count} members, tau = 0 exactly when the product is 1"


def _named(c) -> list[tuple[str, ...]]:
    k = combinatorics_of(c)
    return sorted(tuple(s) for s in k.named())


def check_combinatorics() -> tuple[bool, str]:
    bad = []
    for name, printed in listings.PRINTED.items():
        for params, c in catalog.family(name):
            if _named(c) != printed:
                bad.append(f"{name}{list(params)} differs from the printed listing")
    for name in catalog.ZARISKI_FAMILIES + ("C2_sqrt2",):
        members = [combinatorics_of(c) for _, c in catalog.family(name)]
        for i, j in combinations(range(len(members)), 2):
            if same_combinatorics(members[i], members[j]) is None:
                bad.append(f"{name} members {i} and {j} are not isomorphic")
    return not bad, "; ".join(bad) or "listings match exactly; every family is pairwise isomorphic"


def _perm(order: list[str], labels: list[str]) -> tuple[int, ...]:
    return tuple(labels.index(x) for x in order)


def check_automorphisms() -> tuple[bool, str]:
    bad = []
    for params, c in catalog.family("C"):
        labels = list(c.point_labels())
        group = automorphism_group(combinatorics_of(c))
        if len(group) != 4:
            bad.append(f"|Aut(C{list(params)})| = {len(group)}")
        for name, images in (("sigma1", listings.SIGMA1), ("sigma2", listings.SIGMA2)):
            if _perm(images, labels) not in group:
                bad.append(f"{name} missing from Aut(C{list(params)})")
    for name in ("C", "C1", "C2", "D", "D1", "D2", "E", "E1", "E2", "E3"):
        for params, c in catalog.family(name):
            if not is_stable(c):
                bad.append(f"{name}{list(params)} unstable")
    if is_stable(catalog.get("Pappus")):
        bad.append("Pappus stable")
    if not is_stable(catalog.get("Quadrilateral")):
        bad.append("Quadrilateral unstable")
    return not bad, "; ".join(bad) or "|Aut(C)| = 4 with sigma1, sigma2; families stable; Pappus unstable"


def check_certificates() -> tuple[bool, str]:
    bad = []
    positive_families = []
    total_pairs = 0
    for name in catalog.ZARISKI_FAMILIES:
        fam = catalog.family(name)
        found = False
        for (p1, c1), (p2, c2) in combinations(fam, 2):
            total_pairs += 1
            verdict = zariski_certificate(c1, c2).verdict
            want = PAIR if _product(p1) != _product(p2) else SAME_TAU
            if verdict != want:
                bad.append(f"{name}{list(p1)} vs {list(p2)}: {verdict}")
            found |= verdict == PAIR
        if found:
            positive_families.append(name)
    # across families the combinatorics must differ
    if zariski_certificate(catalog.get("C", [1, 1]), catalog.get("C1", [1, -1])).verdict != DIFFERENT:
        bad.append("C vs C1 not told apart")
    if len(positive_families) != 10:
        bad.append(f"{len(positive_families)} families certified, expected 10")
    return not bad, "; ".join(bad) or (
        f"{len(positive_families)} Zariski pairs certified, one per family ({total_pairs} member pairs checked)")


SEVEN_LINES = [(0, 0, 1), (1, 1, 0), (1, -1, 0), (8, 1, -8), (8, 1, 8), (1, 8, -8), (1, 8, 8)]


def seven_line_arrangement() -> PlumbedArrangement:
    return PlumbedArrangement(tuple(Line(*l) for l in SEVEN_LINES), 2, (0, 0, 0, 1, 1, 1, 1))


def _relation_entries():
    for name in catalog.ENTRIES:
        for params, c in catalog.family(name):
            yield f"{name}{list(params)}", c
    for m in range(3, 7):
        yield f"Pappus[m={m}]", catalog.get("Pappus", m=m, zeta=1)


def check_i_invariant() -> tuple[bool, str]:
    bad = []
    a = seven_line_arrangement()
    w = wiring_sets(normalize_support(a))
    got = (sorted(w.d1), sorted(w.d2), sorted(w.d3), exponent_from_wiring(a, w))
    # lines D5, D6, D7 sit at indices 4, 5, 6
    if got != ([5, 6], [4], [4, 6], 1):
        bad.append(f"worked example gave D1,D2,D3,exponent = {got}")
    count = 0
    for label, c in _relation_entries():
        dpa = build_dpa(c)
        want = (-chamber_weight(c)) % c.m
        tori = set()
        for asg in cyclic_assignments(dpa.support):
            for start in (0, 1, 2):
                tori.add(normalize_support(dpa, asg, start).torus)
                value = i_invariant(dpa, asg, start)
                count += 1
                if value != want:
                    bad.append(f"{label} {asg} start {start}: {value} != {want}")
        if len(tori) < 2:
            bad.append(f"{label}: only {len(tori)} torus parameter used")
    return not bad, "; ".join(bad[:5]) or f"worked example exponent 1; {count} invariants equal -tau mod m"


def check_wiring() -> tuple[bool, str]:
    bad = []
    count = 0
    for label, c in _relation_entries():
        dpa = build_dpa(c)
        for asg in cyclic_assignments(dpa.support):
            w = wiring_sets(normalize_support(dpa, asg))
            count += 1
            if not w.d2 <= w.d3 or w.d3 - w.d2 != w.d1 & w.d3:
                bad.append(f"{label} {asg}: set identity fails")
            e = exponent_from_wiring(dpa, w)
            if e not in {0, Fraction(c.m, 2)}:
                bad.append(f"{label} {asg}: exponent {e} outside {{0, m/2}}")
    return not bad, "; ".join(bad[:5]) or f"{count} normalized arrangements satisfy the wiring identity"


MODULI_SAMPLE = [Fraction(x) for x in
                 ("2", "3", "4", "5", "6", "7", "8", "1/2", "1/3", "2/3", "3/2", "-2", "-3", "-1/2",
                  "-1/3", "5/2", "2/5", "-3/2", "7/3", "-4", "3/4", "-2/3", "1", "-1")]


def check_moduli() -> tuple[bool, str]:
    bad = []
    c2 = combinatorics_of_arrangement([dualize(p) for p in catalog.get("C2", [1, 1]).points])
    tally = {"Sigma0": 0, "Sigma1": 0}
    for sign in (1, -1):
        for k in MODULI_SAMPLE:
            p = ModuliParams.make(k, sign * k)
            verdict = moduli_membership(p)
            lines = build_moduli_arrangement(p)
            iso = (len(set(lines)) == 13
                   and same_combinatorics(combinatorics_of_arrangement(lines), c2) is not None)
            if verdict.accepted != iso:
                bad.append(f"kappa {k},{sign * k}: accepted {verdict.accepted}, isomorphic {iso}")
            if not verdict.accepted:
                continue
            tally[verdict.component] += 1
            chars = component_characterizations(lines).as_tuple()
            if set(chars) != {sign == 1}:
                bad.append(f"kappa {k},{sign * k}: characterizations {chars}")
            k1, k2 = p.k1, p.k2
            expected = {(1, 11, 12): Point(1, 0, -k2), (2, 8, 9): Point(0, 1, -k1),
                        (3, 4, 5): Point(1, -1, 0, spec=p.spec)}
            for idx, pt in expected.items():
                if triple_point(lines, *idx) != pt:
                    bad.append(f"kappa {k}: triple point {idx}")
    if min(tally.values()) < 20:
        bad.append(f"accepted samples per component {tally}")
    root = sqrt_of(FieldSpec.quadratic(2))
    for a in (1, -1):
        for b in (1, -1):
            lines = build_moduli_arrangement(ModuliParams.make(a * root, b * root))
            cat = [dualize(q) for q in catalog.get("C2_sqrt2", [a, b]).points]
            if lines != cat:
                bad.append(f"sqrt2 realization {a},{b} differs from the catalog")
    return not bad, "; ".join(bad[:5]) or (
        f"accepted {tally['Sigma0']} + {tally['Sigma1']} samples, all consistent; sqrt2 members reproduced")


def check_gluing() -> tuple[bool, str]:
    bad, notes = [], []
    for a in (1, -1):
        for b in (1, -1):
            r = rybnikov_gluing_check(a, b)
            if not r.holds:
                bad.append(f"({a},{b}) glues to {r.matches}")
            if not r.swap_symmetry:
                notes.append("swap symmetry fails")
    if bad:
        return False, "literal identity fails: " + "; ".join(bad)
    return not notes, "; ".join(notes) or "all four members equal their gluing"


def check_c_leq_3() -> tuple[bool, str]:
    bad = []
    for params, c in catalog.family("C"):
        a = build_dpa(c)
        cls = classify_c_leq_3(a.lines)
        pts = singular_points(a.lines)
        if cls.kind != "CLeq3NonSimple" or set(cls.cover) != set(a.support):
            bad.append(f"C{list(params)}: {cls.kind} cover {cls.cover}")
        for i in a.support:
            triple = sum(1 for s in pts.values() if i in s and len(s) == 3)
            if triple != 5:
                bad.append(f"C{list(params)}: support line {i} carries {triple} triple points")
    return not bad, "; ".join(bad) or "non-simple, covered by the support, 5 triple points per line"


def check_depth() -> tuple[bool, str]:
    bad, good = [], []
    pappus = []
    for m in range(2, 7):
        for zeta in range(1, m):
            r = depth_report(catalog.get("Pappus", m=m, zeta=zeta))
            pappus.append(r.depth)
            if r.depth != 0:
                bad.append(f"Pappus m={m} zeta={zeta}: depth {r.depth} (tau {r.tau}, j {r.j})")
    non = depth_report(catalog.get("NonPappus"))
    if non.depth <= 0:
        bad.append(f"non-Pappus: depth {non.depth} (tau {non.tau}, j {non.j})")
    w1 = weak_combinatorics(build_dpa(catalog.get("Pappus")).lines)
    w2 = weak_combinatorics(build_dpa(catalog.get("NonPappus")).lines)
    if w1 != w2:
        bad.append("weak combinatorics differ")
    else:
        good.append("weak combinatorics equal")
    heavy = 0
    for name in catalog.ENTRIES:
        for params, c in catalog.family(name):
            if min(line_counts(c)) >= 4:
                heavy += 1
                if depth_report(c).depth != 0:
                    bad.append(f"{name}{list(params)}: depth nonzero with all counts >= 4")
    good.append(f"{heavy} configurations with counts >= 4 have depth 0")
    if bad:
        # keep the failure message short: the Pappus lines repeat
        pappus_bad = sum(1 for d in pappus if d)
        rest = [b for b in bad if not b.startswith("Pappus")]
        head = [f"Pappus depth nonzero for {pappus_bad}/{len(pappus)} plumbings ({bad[0]})"] if pappus_bad else []
        return False, "; ".join(head + rest + good)
    return True, "; ".join(["Pappus depth 0", "non-Pappus depth > 0"] + good)


def check_properties() -> tuple[bool, str]:
    """The deterministic part; the randomized suites live in the test files."""
    bad = []
    count = 0
    for name in catalog.ENTRIES:
        for params, c in catalog.family(name):
            count += 1
            if not validate(c):
                bad.append(f"{name}{list(params)} invalid")
            sums = chamber_sums(c)
            if len(set(sums)) != 1 or sums[0] not in {0, Fraction(c.m, 2)}:
                bad.append(f"{name}{list(params)}: chamber sums {sums}")
            k = combinatorics_of(c)
            kd = combinatorics_of_arrangement([dualize(p) for p in c.points])
            if k != kd:
                bad.append(f"{name}{list(params)}: point and line combinatorics differ")
    moduli = 0
    for sign in (1, -1):
        for k in MODULI_SAMPLE:
            p = ModuliParams.make(k, sign * k)
            if not moduli_membership(p).accepted:
                continue
            moduli += 1
            sums = chamber_sums(moduli_configuration(p))
            if len(set(sums)) != 1 or sums[0] not in {0, 1}:
                bad.append(f"moduli {k},{sign * k}: chamber sums {sums}")
    return not bad, "; ".join(bad[:5]) or (
        f"{count} catalog members and {moduli} moduli duals have constant chamber sums in {{0, m/2}}")


CHECKS: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "chamber weights", check_chamber_weights),
    (2, "combinatorics", check_combinatorics),
    (3, "automorphisms and stability", check_automorphisms),
    (4, "Zariski certificates", check_certificates),
    (5, "I-invariant", check_i_invariant),
    (6, "wiring invariant", check_wiring),
    (7, "moduli", check_moduli),
    (8, "Rybnikov gluing", check_gluing),
    (9, "C<=3 classification", check_c_leq_3),
    (10, "depth", check_depth),
    (11, "property suites", check_properties),
]


def run_check(number: int) -> CheckResult:
    for n, name, fn in CHECKS:
        if n == number:
            try:
                passed, detail = fn()
            except Exception as e:  # a crash is a failure, reported like one
                passed, detail = False, f"{type(e).__name__}: {e}"
            return CheckResult(n, name, passed, detail)
    raise KeyError(number)


def run_all() -> list[CheckResult]:
    return [run_check(n) for n, _, _ in CHECKS]
