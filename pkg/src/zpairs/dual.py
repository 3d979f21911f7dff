"""Dual plumbed arrangements, the wiring sets and the inner-cyclic invariant."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .combinatorics import singular_points
from .configuration import (Configuration, ConsistencyError, chamber_weight,
                            require_valid)
from .field import FieldScalar
from .projective import (Line, Point, Transform, concurrent, dualize, mat_inverse,
                         meet)


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class PlumbedArrangement:
    lines: tuple[Line, ...]
    m: int
    exponents: tuple[int, ...]
    support: tuple[int, ...] = (0, 1, 2)
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "exponents", tuple(int(e) % self.m for e in self.exponents))
        object.__setattr__(self, "support", tuple(self.support))
        if len(self.exponents) != len(self.lines):
            raise ArrangementError("one exponent per line is required")
        if len(set(self.lines)) != len(self.lines):
            raise ArrangementError("arrangement lines must be distinct")

    @property
    def spec(self):
        return self.lines[0].spec

    def line_labels(self) -> list[str]:
        return list(self.labels) if self.labels else [f"D{i + 1}" for i in range(len(self.lines))]

    def non_support(self) -> list[int]:
        return [i for i in range(len(self.lines)) if i not in self.support]

    def transformed(self, T: Transform) -> "PlumbedArrangement":
        return PlumbedArrangement(tuple(T(l) for l in self.lines), self.m, self.exponents,
                                  self.support, self.labels)

    def with_support(self, support: Sequence[int]) -> "PlumbedArrangement":
        return PlumbedArrangement(self.lines, self.m, self.exponents, tuple(support), self.labels)


def build_dpa(c: Configuration) -> PlumbedArrangement:
    require_valid(c)
    lines = tuple(dualize(p) for p in c.points)
    exps = (0,) * c.t + c.plumbing
    labels = tuple(lab + "*" for lab in c.point_labels())
    return PlumbedArrangement(lines, c.m, exps, tuple(range(c.t)), labels)


# ---------------------------------------------------------------- inner-cyclic check

@dataclass
class CyclicReport:
    reasons: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.reasons

    def __bool__(self):
        return self.ok


def is_triangular_inner_cyclic(a: PlumbedArrangement) -> CyclicReport:
    report = CyclicReport()
    names = a.line_labels()
    if len(a.support) != 3:
        report.reasons.append(f"support has {len(a.support)} lines, a triangle needs 3")
        return report
    s1, s2, s3 = (a.lines[i] for i in a.support)
    if concurrent(s1, s2, s3):
        report.reasons.append("support lines are concurrent, not a triangle")
        return report
    pts = singular_points(a.lines)
    for i, j in combinations(a.support, 2):
        corner = meet(a.lines[i], a.lines[j])
        through = pts[corner]
        if len(through) != 2:
            extra = ", ".join(names[k] for k in sorted(through - {i, j}))
            report.reasons.append(f"corner {names[i]}∩{names[j]} is not a double point (also {extra})")
    for i in a.support:
        if a.exponents[i]:
            report.reasons.append(f"support line {names[i]} has exponent {a.exponents[i]}")
    for i in a.non_support():
        if a.exponents[i] == 0:
            report.reasons.append(f"line {names[i]} outside the support has trivial character")
    on_support = [(p, s) for p, s in pts.items() if s & set(a.support)]
    on_support.sort(key=lambda ps: sorted(ps[1]))
    for p, through in on_support:
        total = sum(a.exponents[k] for k in through) % a.m
        if total:
            members = ",".join(names[k] for k in sorted(through))
            report.reasons.append(f"exponents at {p} on {{{members}}} sum to {total} mod {a.m}")
    return report


# ---------------------------------------------------------------- normalization



def _targets(spec):
    one, zero = FieldScalar(1, 0, spec), FieldScalar(0, 0, spec)
    return (Line(zero, zero, one), Line(one, one, zero), Line(one, -one, zero))


def torus_parameters() -> Iterator[tuple[int, int]]:
    """Pairs drawn from 1, 2, 3, 5, 7, 11, ... ordered by index sum."""
    seq = [1, 2]
    def grow():
        k = seq[-1] + 1
        while any(k % p == 0 for p in seq[1:]):
            k += 1
        seq.append(k)
    total = 0
    while True:
        while len(seq) <= total:
            grow()
        for i in range(total + 1):
            yield seq[i], seq[total - i]
        total += 1


def _generic(line: Line) -> bool:
    a, b, c = line.coords
    return bool(a) and bool(b) and bool(a - b) and bool(a + b) and bool(c)


def base_transform(a: PlumbedArrangement, assignment: Sequence[int], s: int = 1, t: int = 1) -> Transform:
    d1, d2, d3 = (a.lines[i] for i in assignment)
    p12, p13, p23 = meet(d1, d2), meet(d1, d3), meet(d2, d3)
    spec = a.spec
    cols = (p12.coords, p13.coords, p23.coords)
    m = tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))
    minv = mat_inverse(m)
    one, zero = FieldScalar(1, 0, spec), FieldScalar(0, 0, spec)
    b = ((one * s, one * t, zero), (-one * s, one * t, zero), (zero, zero, one))
    mat = tuple(tuple(sum((b[r][k] * minv[k][c] for k in range(1, 3)), b[r][0] * minv[0][c])
                      for c in range(3)) for r in range(3))
    return Transform(mat)


@dataclass(frozen=True)
class Normalized:
    arrangement: PlumbedArrangement
    transform: Transform
    assignment: tuple[int, int, int]
    torus: tuple[int, int]


def normalize_support(a: PlumbedArrangement, assignment: Sequence[int] | None = None,
                      start: int = 0, max_tries: int = 400) -> Normalized:
    """Move the support onto z=0, x+y=0, x-y=0 with every other line in generic position.

    ``start`` skips that many usable parameter pairs, so each value of
    ``start`` yields a different torus element.
    """
    assignment = tuple(assignment or a.support)
    if sorted(assignment) != sorted(a.support):
        raise ArrangementError("assignment must be a permutation of the support")
    if concurrent(*(a.lines[i] for i in assignment)):
        raise ArrangementError("support is not a triangle")
    targets = _targets(a.spec)
    others = [i for i in range(len(a.lines)) if i not in assignment]
    skip = start
    for k, (s, t) in enumerate(torus_parameters()):
        if k >= start + max_tries:
            break
        T = base_transform(a, assignment, s, t)
        moved = a.transformed(T)
        if tuple(moved.lines[i] for i in assignment) != targets:
            raise ConsistencyError("normalizing transform missed the target triangle")
        if all(_generic(moved.lines[i]) for i in others):
            if skip:
                skip -= 1
                continue
            moved = PlumbedArrangement(moved.lines, a.m, a.exponents, assignment, a.labels)
            return Normalized(moved, T, assignment, (s, t))
    bad = [a.line_labels()[i] for i in others]
    raise ArrangementError(f"no generic torus element among {max_tries} tries (lines {bad})")


# ---------------------------------------------------------------- wiring sets

@dataclass(frozen=True)
class WiringSets:
    d1: frozenset[int]
    d2: frozenset[int]
    d3: frozenset[int]
    normalized: Normalized
    slopes: dict = field(compare=False, default_factory=dict)


def slope(line: Line) -> FieldScalar:
    a, b, _ = line.coords
    if not b:
        raise ConsistencyError(f"vertical line {line}")
    return -a / b


def _x_on(line: Line, diagonal: int) -> FieldScalar:
    """x-coordinate of the affine meet with y = diagonal * x."""
    a, b, c = line.coords
    denom = a + b * diagonal
    if not denom:
        raise ConsistencyError(f"{line} is parallel to y={diagonal}x")
    return -c / denom


def wiring_sets(n: Normalized) -> WiringSets:
    a = n.arrangement
    d1, d2, d3 = set(), set(), set()
    slopes = {}
    for i in a.non_support():
        line = a.lines[i]
        s = slope(line)
        slopes[i] = s
        if s == 1 or s == -1:
            raise ConsistencyError(f"{line} has slope {s}")
        if -1 < s < 1:
            d1.add(i)
        x2, x3 = _x_on(line, -1), _x_on(line, 1)
        if not x2 or not x3:
            raise ConsistencyError(f"{line} meets the support on x = 0")
        if x2.sign() < 0 and s < -1:
            d2.add(i)
        if x3.sign() < 0 and s < 1:
            d3.add(i)
    if not d2 <= d3 or d3 - d2 != d1 & d3:
        raise ConsistencyError(f"wiring sets violate D2 ⊆ D3, D3∖D2 = D1∩D3: {d1}, {d2}, {d3}")
    return WiringSets(frozenset(d1), frozenset(d2), frozenset(d3), n, slopes)


def exponent_from_wiring(a: PlumbedArrangement, w: WiringSets) -> int:
    return (-sum(a.exponents[i] for i in w.d1 & w.d3)) % a.m


def i_invariant(a: PlumbedArrangement, assignment: Sequence[int] | None = None, start: int = 0) -> int:
    report = is_triangular_inner_cyclic(a)
    if not report:
        raise ArrangementError("not triangular inner-cyclic: " + "; ".join(report.reasons))
    w = wiring_sets(normalize_support(a, assignment, start))
    return exponent_from_wiring(a, w)


def cyclic_assignments(support: Sequence[int]) -> list[tuple[int, int, int]]:
    s = tuple(support)
    return [s[k:] + s[:k] for k in range(3)]


def verify_relation(c: Configuration, starts: Sequence[int] = (0,), all_assignments: bool = False) -> bool:
    a = build_dpa(c)
    tau = chamber_weight(c)
    assignments = cyclic_assignments(a.support) if all_assignments else [a.support]
    values = {i_invariant(a, asg, st) for asg in assignments for st in starts}
    return values == {(-tau) % c.m}


# ---------------------------------------------------------------- C<=3 predicates

@dataclass(frozen=True)
class Classification:
    kind: str  # "NotCLeq3" | "CLeq3SimpleType" | "CLeq3NonSimple"
    heavy_points: tuple[Point, ...]
    cover: tuple[int, ...]
    per_line: tuple[int, ...]  # heavy points on each cover line


def classify_c_leq_3(lines: Sequence[Line], threshold: int = 3) -> Classification:
    """Cover the points of multiplicity >= threshold by at most three lines."""
    lines = list(lines)
    pts = singular_points(lines)
    heavy = [(p, s) for p, s in pts.items() if len(s) >= threshold]
    heavy.sort(key=lambda ps: sorted(ps[1]))
    heavy_pts = tuple(p for p, _ in heavy)
    if not heavy:
        return Classification("CLeq3SimpleType", (), (), ())
    sets = [s for _, s in heavy]
    for size in (1, 2, 3):
        covers = [cov for cov in combinations(range(len(lines)), size)
                  if all(s & set(cov) for s in sets)]
        if not covers:
            continue
        if size < 3:
            cov = covers[0]
            counts = tuple(sum(1 for s in sets if i in s) for i in cov)
            return Classification("CLeq3SimpleType", heavy_pts, cov, counts)
        for cov in covers:
            counts = tuple(sum(1 for s in sets if i in s) for i in cov)
            if concurrent(*(lines[i] for i in cov)) or sum(1 for c in counts if c == 1) == 1:
                return Classification("CLeq3SimpleType", heavy_pts, cov, counts)
        cov = covers[0]
        counts = tuple(sum(1 for s in sets if i in s) for i in cov)
        return Classification("CLeq3NonSimple", heavy_pts, cov, counts)
    return Classification("NotCLeq3", heavy_pts, (), ())
