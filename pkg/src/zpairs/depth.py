"""Quasi-projective depth of the character of a dual plumbed arrangement."""
from __future__ import annotations

from dataclasses import dataclass

from .configuration import (Configuration, ConfigurationError, chamber_weight, config_lines,
                            is_planar)
from .dual import build_dpa
from .combinatorics import singular_points
from .field import QQ, FieldScalar
from .projective import rank


def line_counts(c: Configuration) -> tuple[int, ...]:
    counts = [0] * c.t
    for cl in config_lines(c):
        counts[cl.vertex] += 1
    return tuple(counts)


def line_counts_from_dual(c: Configuration) -> tuple[int, ...]:
    """Same counts read off the arrangement: singular points on each support line,
    less the two triangle corners."""
    a = build_dpa(c)
    pts = singular_points(a.lines)
    out = []
    for i in a.support:
        on = [s for s in pts.values() if i in s]
        corners = sum(1 for s in on if len(s & set(a.support)) == 2)
        out.append(len(on) - corners)
    return tuple(out)


def corank3(matrix) -> int:
    rows = [[v if isinstance(v, FieldScalar) else FieldScalar(v, 0, QQ) for v in row] for row in matrix]
    return 3 - rank(rows)


def depth_matrix(l: tuple[int, int, int], j: int) -> list[list[int]]:
    l1, l2, l3 = l
    return [[1 - l1, 1, 1], [1, 1 - l2, j], [1, j, 1 - l3]]


@dataclass(frozen=True)
class DepthReport:
    l: tuple[int, int, int]
    tau: int
    j: int
    matrix: list
    rank: int
    depth: int

    def as_dict(self) -> dict:
        return {"l": list(self.l), "tau": self.tau, "j": self.j, "matrix": self.matrix,
                "rank": self.rank, "depth": self.depth}


def depth_report(c: Configuration) -> DepthReport:
    if c.t != 3 or not is_planar(c):
        raise ConfigurationError("depth needs a planar configuration with three vertices")
    l = line_counts(c)
    tau = chamber_weight(c)
    # tau is 0 or m/2; for odd m it is always 0
    j = 1 if tau == 0 else -1
    mat = depth_matrix(l, j)
    cr = corank3(mat)
    return DepthReport(l, tau, j, mat, 3 - cr, cr)


def depth(c: Configuration) -> int:
    return depth_report(c).depth
