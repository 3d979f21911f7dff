"""The 13-line family M(k1, k2; gamma): membership, components, characterizations, certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import catalog
from .combinatorics import (combinatorics_of, combinatorics_of_arrangement, is_stable,
                            same_combinatorics)
from .configuration import Configuration, chamber_weight, is_planar, is_uniform, require_valid
from .field import QQ, FieldScalar, FieldSpec, coerce
from .projective import Line, Point, concurrent, conic_through_five, det3, dualize, join, meet


class ModuliError(ValueError):
    pass


@dataclass(frozen=True)
class ModuliParams:
    k1: FieldScalar
    k2: FieldScalar
    gamma: FieldScalar

    @classmethod
    def make(cls, k1, k2, gamma=None, spec: FieldSpec | None = None) -> "ModuliParams":
        if spec is None:
            spec = next((v.spec for v in (k1, k2, gamma) if isinstance(v, FieldScalar)), QQ)
        k1, k2 = coerce(k1, spec), coerce(k2, spec)
        gamma = k1 * k1 if gamma is None else coerce(gamma, spec)
        return cls(k1, k2, gamma)

    @property
    def spec(self) -> FieldSpec:
        return self.k1.spec


def moduli_equations(p: ModuliParams) -> list[tuple[FieldScalar, FieldScalar, FieldScalar]]:
    """Coefficients of L1..L13 exactly as the equations are written, not rescaled."""
    k1, k2, g = p.k1, p.k2, p.gamma
    if k1 * k1 != g or k2 * k2 != g:
        raise ModuliError("parameters must satisfy k1^2 = k2^2 = gamma")
    if not k1 or not k2:
        raise ModuliError("k1 and k2 must be nonzero")
    one, zero = FieldScalar(1, 0, p.spec), FieldScalar(0, 0, p.spec)
    i1, i2 = k1.inverse(), k2.inverse()
    return [
        (zero, one, zero), (one, zero, zero), (zero, zero, one), (one, one, one),
        (g, g, one), (one, g, one), (g, one, one),
        (i1, k1, one), (one, k1, one), (i1, one, one),
        (k2, i2, one), (k2, one, one), (one, i2, one),
    ]


def build_moduli_arrangement(p: ModuliParams) -> list[Line]:
    return [Line(*r) for r in moduli_equations(p)]


@dataclass
class ModuliVerdict:
    accepted: bool
    component: str | None
    violations: list[str] = field(default_factory=list)


def _equal_case(k) -> list[tuple[str, FieldScalar]]:
    return [
        ("{S2,S5,S8}: 2k^2+k+1 = 0", 2 * k * k + k + 1),
        ("{S2,S5,S9},{S2,S6,S8},{S2,S7,S10}: 2k^2+2k+1 = 0", 2 * k * k + 2 * k + 1),
        ("{S2,S6,S9}: k = -1/2", 2 * k + 1),
        ("{S2,S5,S10},{S2,S7,S8}: k^3+3k^2+2k+1 = 0", k ** 3 + 3 * k * k + 2 * k + 1),
        ("{S3,S7,S8},{S4,S5,S10}: k^3+2k^2+k+1 = 0", k ** 3 + 2 * k * k + k + 1),
    ]


def _opposite_case(k) -> list[tuple[str, FieldScalar]]:
    return [
        ("{S2,S5,S10}: k^3+k^2+1 = 0", k ** 3 + k * k + 1),
        ("{S2,S7,S8}: k^3-k^2-1 = 0", k ** 3 - k * k - 1),
        ("{S2,S7,S10}: 2k^2+1 = 0", 2 * k * k + 1),
        ("{S3,S7,S8}: k^3+k-1 = 0", k ** 3 + k - 1),
        ("{S4,S5,S10}: k^3+k+1 = 0", k ** 3 + k + 1),
    ]


def moduli_membership(p: ModuliParams) -> ModuliVerdict:
    k1, k2, g = p.k1, p.k2, p.gamma
    bad: list[str] = []
    if k1 * k1 != g or k2 * k2 != g:
        bad.append("k1^2 = k2^2 = gamma fails")
    if not g or g == 1:
        bad.append("gamma must avoid 0 and 1")
    if k1 ** 3 == 1:
        bad.append("S4 = S7: k1^3 = 1")
    if k2 ** 3 == 1:
        bad.append("S3 = S10: k2^3 = 1")
    if k1 * k2 == 1:
        bad.append("S5 = S8, S6 = S10, S7 = S9: k1*k2 = 1")
    component = None
    if k1 == k2 and k1:
        component = "Sigma0"
        checks = _equal_case(k1)
    elif k1 == -k2 and k1:
        component = "Sigma1"
        checks = _opposite_case(k1)
    else:
        checks = []
        if not bad:
            bad.append("k1 = +-k2 fails")
    bad.extend(name for name, value in checks if not value)
    if bad:
        return ModuliVerdict(False, None, bad)
    return ModuliVerdict(True, component, [])


def triple_point(lines: Sequence[Line], i: int, j: int, k: int) -> Point:
    """Common point of lines i, j, k (numbered from 1)."""
    a, b, c = lines[i - 1], lines[j - 1], lines[k - 1]
    if not concurrent(a, b, c):
        raise ModuliError(f"lines {i}, {j}, {k} are not concurrent")
    return meet(a, b)


def _six_on_smooth_conic(pts: Sequence[Point]) -> bool:
    conic = conic_through_five(pts[:5])
    return conic.contains(pts[5]) and conic.is_smooth()


TANGENT_LINES = (6, 7, 8, 10, 11, 13)
CONIC_TRIPLES = ((1, 8, 10), (1, 11, 12), (2, 8, 9), (2, 11, 13), (3, 9, 10), (3, 12, 13))


@dataclass(frozen=True)
class Characterizations:
    tangent_conic: bool
    six_triple_points_conic: bool
    three_points_aligned: bool
    alignment_det: FieldScalar

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.tangent_conic, self.six_triple_points_conic, self.three_points_aligned)


def component_characterizations(lines: Sequence[Line]) -> Characterizations:
    duals = [dualize(lines[i - 1]) for i in TANGENT_LINES]
    tangent = _six_on_smooth_conic(duals)
    triples = [triple_point(lines, *t) for t in CONIC_TRIPLES]
    on_conic = _six_on_smooth_conic(triples)
    p1 = triple_point(lines, 1, 11, 12)
    p2 = triple_point(lines, 2, 8, 9)
    p3 = triple_point(lines, 3, 4, 5)
    det = det3((p1.coords, p2.coords, p3.coords))
    return Characterizations(tangent, on_conic, not det, det)


def dual_conic_residual(p: ModuliParams) -> FieldScalar:
    """Determinant of the 6x6 conic evaluation matrix at the six tangent-line duals.

    Rows use the coefficients as written in the equations, so the value
    is not rescaled by canonicalization.
    """
    eqs = moduli_equations(p)
    rows = []
    for i in TANGENT_LINES:
        x, y, z = eqs[i - 1]
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    return _det(rows)


def _det(rows) -> FieldScalar:
    a = [list(r) for r in rows]
    n = len(a)
    result = FieldScalar(1, 0, a[0][0].spec)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c]), None)
        if pivot is None:
            return FieldScalar(0, 0, a[0][0].spec)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            result = -result
        result = result * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return result


def moduli_configuration(p: ModuliParams) -> Configuration:
    """The (3,2)-configuration whose dual is M(k1, k2; gamma)."""
    pts = [dualize(l) for l in build_moduli_arrangement(p)]
    labels = tuple(f"S{i}" for i in range(1, 11))
    return Configuration(tuple(pts[:3]), tuple(pts[3:]), 2, (1,) * 10, p.spec, labels,
                         f"M[{p.k1},{p.k2}]")


# ---------------------------------------------------------------- configuration-side checks

def concurrence_characterization(c: Configuration) -> bool:
    s = c.surrounding
    return concurrent(join(s[0], s[1]), join(s[4], s[5]), join(s[7], s[8]))


def _dual_set(points) -> frozenset[Line]:
    return frozenset(dualize(p) for p in points)


def _swap(line: Line) -> Line:
    return line.swap_xy()


def _galois_power(lines, e: int):
    return frozenset(l.conjugate() if e else l for l in lines)


@dataclass(frozen=True)
class GluingResult:
    holds: bool
    matches: tuple[int, int] | None  # which member the glued set equals, if any
    swap_symmetry: bool


def rybnikov_gluing_check(alpha: int, beta: int, exponent_sign: int = 1) -> GluingResult:
    """Compare A2(alpha, beta) with phi_alpha(A1) U psi_beta(A1).

    phi_alpha is Galois conjugation raised to (1 + s*alpha)/2 and psi_beta is
    the swap x<->y after conjugation raised to (1 + s*beta)/2, where
    s = ``exponent_sign``.
    """
    base = catalog.get("C2_sqrt2", [1, 1])
    v, s = base.vertices, base.surrounding
    a1 = _dual_set(v + s[:4] + s[4:7])
    e_a = (1 + exponent_sign * alpha) // 2
    e_b = (1 + exponent_sign * beta) // 2
    glued = _galois_power(a1, e_a) | frozenset(_swap(l) for l in _galois_power(a1, e_b))
    matches = None
    for a in (1, -1):
        for b in (1, -1):
            if _dual_set(catalog.get("C2_sqrt2", [a, b]).points) == glued:
                matches = (a, b)
    swap_ok = True
    for a in (1, -1):
        cfg = catalog.get("C2_sqrt2", [a, a])
        blk_a = _dual_set(cfg.vertices + cfg.surrounding[:7])
        blk_b = _dual_set(cfg.vertices + cfg.surrounding[:4] + cfg.surrounding[7:])
        swap_ok &= frozenset(_swap(l) for l in blk_a) == blk_b
    return GluingResult(matches == (alpha, beta), matches, swap_ok)


# ---------------------------------------------------------------- certificates

PAIR = "ZARISKI PAIR"
SAME_TAU = "INDISTINGUISHABLE BY τ"
DIFFERENT = "DIFFERENT COMBINATORICS"


@dataclass(frozen=True)
class CertificateReport:
    isomorphism: tuple[int, ...] | None
    stable: tuple[bool, bool]
    uniform: tuple[int | None, int | None]
    tau1: int
    tau2: int
    verdict: str


def zariski_certificate(c1: Configuration, c2: Configuration) -> CertificateReport:
    for c in (c1, c2):
        require_valid(c)
        if c.t != 3 or not is_planar(c):
            raise ModuliError("certificates need planar configurations with three vertices")
    phi = same_combinatorics(combinatorics_of(c1), combinatorics_of(c2))
    stable = (is_stable(c1), is_stable(c2))
    uniform = (is_uniform(c1), is_uniform(c2))
    tau1, tau2 = chamber_weight(c1), chamber_weight(c2)
    if phi is None:
        verdict = DIFFERENT
    elif all(stable) and None not in uniform and tau1 != tau2:
        verdict = PAIR
    elif tau1 == tau2:
        verdict = SAME_TAU
    else:
        verdict = "UNDECIDED: same combinatorics, different τ, hypotheses not met"
    return CertificateReport(phi, stable, uniform, tau1, tau2, verdict)


def moduli_arrangement_combinatorics(p: ModuliParams):
    return combinatorics_of_arrangement(build_moduli_arrangement(p))
