"""(t,m)-configurations: validation, configuration lines, chambers and the chamber weight."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .field import QQ, FieldSpec
from .projective import Line, Point, Transform, join, rank


class ConfigurationError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Raised when an invariant that valid input guarantees turns out false."""


@dataclass(frozen=True)
class Configuration:
    vertices: tuple[Point, ...]
    surrounding: tuple[Point, ...]
    m: int
    plumbing: tuple[int, ...]
    field: FieldSpec = QQ
    labels: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "surrounding", tuple(self.surrounding))
        object.__setattr__(self, "plumbing", tuple(int(k) for k in self.plumbing))
        if len(self.plumbing) != len(self.surrounding):
            raise ConfigurationError("one plumbing value per surrounding point is required")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(self.surrounding):
                raise ConfigurationError("one label per surrounding point is required")
            object.__setattr__(self, "labels", labels)
        for p in self.points:
            if p.spec != self.field:
                raise ConfigurationError(f"point {p} is not over {self.field}")

    @property
    def t(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.surrounding)

    @property
    def points(self) -> tuple[Point, ...]:
        return self.vertices + self.surrounding

    def point_labels(self) -> list[str]:
        s_labels = self.labels or tuple(f"S{i + 1}" for i in range(self.n))
        return [f"V{i + 1}" for i in range(self.t)] + list(s_labels)

    def transformed(self, T: Transform) -> "Configuration":
        return Configuration(tuple(T(p) for p in self.vertices), tuple(T(p) for p in self.surrounding),
                             self.m, self.plumbing, self.field, self.labels, self.name)

    def with_plumbing(self, plumbing: Sequence[int], m: int | None = None) -> "Configuration":
        return Configuration(self.vertices, self.surrounding, self.m if m is None else m,
                             tuple(plumbing), self.field, self.labels, self.name)


@dataclass(frozen=True)
class Violation:
    kind: str  # "duplicate" | "condition1" | "condition2" | "plumbing"
    message: str
    indices: tuple[int, ...] = ()
    line: Line | None = None
    total: int | None = None


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def lines(self) -> list[str]:
        return [v.message for v in self.violations]


@dataclass(frozen=True)
class ConfigLine:
    vertex: int
    surrounding: tuple[int, ...]
    line: Line


def _line_groups(c: Configuration) -> list[ConfigLine]:
    out = []
    for vi, v in enumerate(c.vertices):
        groups: dict[Line, list[int]] = {}
        for si, s in enumerate(c.surrounding):
            if s != v:
                groups.setdefault(join(v, s), []).append(si)
        for line, members in groups.items():
            out.append(ConfigLine(vi, tuple(sorted(members)), line))
    out.sort(key=lambda cl: (cl.vertex, cl.surrounding))
    return out


def validate(c: Configuration) -> ValidationReport:
    report = ValidationReport()
    labels = c.point_labels()
    pts = c.points
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            j = seen[p]
            report.violations.append(Violation(
                "duplicate", f"points {labels[j]} and {labels[i]} coincide at {p}", (j, i)))
        else:
            seen[p] = i
    if c.m < 2:
        report.violations.append(Violation("plumbing", f"modulus m={c.m} must be at least 2"))
    for si, k in enumerate(c.plumbing):
        if not 0 <= k < max(c.m, 1):
            report.violations.append(Violation(
                "plumbing", f"plumbing of {labels[c.t + si]} is {k}, outside 0..{c.m - 1}", (c.t + si,)))
        elif k == 0:
            report.violations.append(Violation(
                "plumbing", f"plumbing of {labels[c.t + si]} is 0; only vertices carry weight 0",
                (c.t + si,)))
    if not report.ok and any(v.kind == "duplicate" for v in report.violations):
        return report
    for i, j in combinations(range(c.t), 2):
        vv = join(c.vertices[i], c.vertices[j])
        for si, s in enumerate(c.surrounding):
            if vv.contains(s):
                report.violations.append(Violation(
                    "condition1",
                    f"{labels[c.t + si]} lies on the line ({labels[i]},{labels[j]})",
                    (i, j, c.t + si), vv))
    for cl in _line_groups(c):
        total = sum(c.plumbing[s] for s in cl.surrounding) % c.m
        if total:
            names = ",".join([labels[cl.vertex]] + [labels[c.t + s] for s in cl.surrounding])
            report.violations.append(Violation(
                "condition2", f"plumbing sum on line {{{names}}} {cl.line} is {total} mod {c.m}",
                (cl.vertex,) + tuple(c.t + s for s in cl.surrounding), cl.line, total))
    return report


def require_valid(c: Configuration) -> None:
    report = validate(c)
    if not report.ok:
        raise ConfigurationError("invalid configuration: " + "; ".join(report.lines()))


def config_lines(c: Configuration) -> list[ConfigLine]:
    require_valid(c)
    return _line_groups(c)


def is_planar(c: Configuration) -> bool:
    if c.t < 3:
        return False
    return rank([v.coords for v in c.vertices]) == 3


def is_uniform(c: Configuration) -> int | None:
    values = set(c.plumbing)
    return values.pop() if len(values) == 1 else None


def vertex_pair_lines(c: Configuration) -> tuple[Line, Line, Line]:
    if c.t != 3:
        raise ConfigurationError("chambers are defined only for three vertices")
    v1, v2, v3 = c.vertices
    return join(v1, v2), join(v2, v3), join(v3, v1)


# Sign classes modulo global negation, each represented by its smaller member.
CHAMBER_CLASSES = tuple(v for v in product((-1, 1), repeat=3) if v[0] == -1)


def chamber_of_signs(signs: tuple[int, int, int]) -> int:
    if 0 in signs:
        raise ConsistencyError(f"point on a vertex-pair line (signs {signs})")
    rep = min(signs, tuple(-s for s in signs))
    return CHAMBER_CLASSES.index(rep)


@dataclass(frozen=True)
class ChamberAssignment:
    chamber: tuple[int, ...]
    lines: tuple[Line, Line, Line]

    def members(self, k: int) -> list[int]:
        return [i for i, ch in enumerate(self.chamber) if ch == k]


def chamber_partition(c: Configuration) -> ChamberAssignment:
    require_valid(c)
    if not is_planar(c):
        raise ConfigurationError("chambers need three non-collinear vertices")
    lines = vertex_pair_lines(c)
    chambers = []
    for s in c.surrounding:
        signs = tuple(line.evaluate(s).sign() for line in lines)
        chambers.append(chamber_of_signs(signs))
    return ChamberAssignment(tuple(chambers), lines)


def chamber_sums(c: Configuration) -> list[int]:
    part = chamber_partition(c)
    sums = [0, 0, 0, 0]
    for si, ch in enumerate(part.chamber):
        sums[ch] += c.plumbing[si]
    return [s % c.m for s in sums]


def chamber_weight(c: Configuration) -> int:
    sums = chamber_sums(c)
    if len(set(sums)) != 1:
        raise ConsistencyError(f"chamber sums disagree: {sums}")
    tau = sums[0]
    allowed = {0, c.m // 2} if c.m % 2 == 0 else {0}
    if tau not in allowed:
        raise ConsistencyError(f"chamber weight {tau} outside {sorted(allowed)}")
    return tau
