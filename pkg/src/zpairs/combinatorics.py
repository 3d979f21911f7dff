"""Maximal incident subsets, isomorphisms, automorphisms and weak combinatorics."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .configuration import Configuration, require_valid
from .projective import Line, Point, join, meet


class CombinatoricsError(ValueError):
    pass


@dataclass(frozen=True)
class Combinatorics:
    size: int
    subsets: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        subs = tuple(sorted(tuple(sorted(s)) for s in self.subsets))
        object.__setattr__(self, "subsets", subs)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def named(self) -> list[list[str]]:
        return [[self.label(i) for i in s] for s in self.subsets]

    def profile(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.subsets if i in s))

    def triples(self) -> set[tuple[int, ...]]:
        return {t for s in self.subsets for t in combinations(s, 3)}

    def pair_blocks(self) -> dict[tuple[int, int], int]:
        out = {}
        for b, s in enumerate(self.subsets):
            for i, j in combinations(s, 2):
                out[(i, j)] = out[(j, i)] = b
        return out

    def relabel(self, perm: Sequence[int]) -> "Combinatorics":
        """Image under i -> perm[i]."""
        return Combinatorics(self.size, tuple(tuple(perm[i] for i in s) for s in self.subsets))

    def __eq__(self, other):
        return (isinstance(other, Combinatorics) and self.size == other.size
                and self.subsets == other.subsets)

    def __hash__(self):
        return hash((self.size, self.subsets))


def _group_incidences(objs, connect, kind: str, labels) -> Combinatorics:
    objs = list(objs)
    if len(set(objs)) != len(objs):
        raise CombinatoricsError(f"duplicate {kind} in input")
    groups: dict = {}
    for i, j in combinations(range(len(objs)), 2):
        key = connect(objs[i], objs[j])
        members = groups.setdefault(key, set())
        members.update((i, j))
    subsets = [tuple(sorted(g)) for g in groups.values() if len(g) >= 3]
    return Combinatorics(len(objs), tuple(subsets), labels)


def combinatorics_of_points(pts: Sequence[Point], labels=None) -> Combinatorics:
    return _group_incidences(pts, join, "points", labels)


def combinatorics_of_arrangement(lines: Sequence[Line], labels=None) -> Combinatorics:
    return _group_incidences(lines, meet, "lines", labels)


def combinatorics_of(c: Configuration) -> Combinatorics:
    return combinatorics_of_points(c.points, c.point_labels())


# ---------------------------------------------------------------- backtracking search

def _search(k1: Combinatorics, k2: Combinatorics) -> Iterator[tuple[int, ...]]:
    """Yield every bijection phi (as a tuple, phi[i] in k2) carrying k1 onto k2."""
    n = k1.size
    if n != k2.size or len(k1.subsets) != len(k2.subsets):
        return
    prof1 = [k1.profile(i) for i in range(n)]
    prof2 = [k2.profile(i) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return
    if sorted(len(s) for s in k1.subsets) != sorted(len(s) for s in k2.subsets):
        return
    blk1, blk2 = k1.pair_blocks(), k2.pair_blocks()
    candidates = {p: [j for j in range(n) if prof2[j] == p] for p in set(prof1)}
    freq = Counter(prof1)

    # Visit rare profiles first; among equals prefer elements tied to earlier ones.
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        placed = set(order)

        def key(i):
            ties = sum(1 for j in placed if (i, j) in blk1)
            return (freq[prof1[i]], -ties, i)
        nxt = min(remaining, key=key)
        order.append(nxt)
        remaining.discard(nxt)

    phi = [-1] * n
    used = [False] * n
    bmap: dict[int, int] = {}
    binv: dict[int, int] = {}

    def extend(depth: int):
        if depth == n:
            yield tuple(phi)
            return
        x = order[depth]
        for y in candidates[prof1[x]]:
            if used[y]:
                continue
            added = []
            ok = True
            for xp in order[:depth]:
                yp = phi[xp]
                b1 = blk1.get((x, xp))
                b2 = blk2.get((y, yp))
                if (b1 is None) != (b2 is None):
                    ok = False
                    break
                if b1 is None:
                    continue
                m1 = bmap.get(b1)
                m2 = binv.get(b2)
                if m1 is None and m2 is None:
                    bmap[b1] = b2
                    binv[b2] = b1
                    added.append(b1)
                elif m1 != b2 or m2 != b1:
                    ok = False
                    break
            if ok:
                phi[x] = y
                used[y] = True
                yield from extend(depth + 1)
                phi[x] = -1
                used[y] = False
            for b1 in added:
                del binv[bmap.pop(b1)]

    yield from extend(0)


def same_combinatorics(k1: Combinatorics, k2: Combinatorics) -> tuple[int, ...] | None:
    return next(_search(k1, k2), None)


def is_isomorphism(k1: Combinatorics, k2: Combinatorics, phi: Sequence[int]) -> bool:
    return sorted(phi) == list(range(k1.size)) and k1.relabel(phi) == k2


def automorphism_group(k: Combinatorics, limit: int = 100_000) -> list[tuple[int, ...]]:
    out = []
    for phi in _search(k, k):
        out.append(phi)
        if len(out) > limit:
            raise CombinatoricsError(f"automorphism group larger than {limit}")
    return sorted(out)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_stable(c: Configuration) -> bool:
    require_valid(c)
    k = combinatorics_of(c)
    t = c.t
    return all(all(phi[i] < t for i in range(t)) for phi in automorphism_group(k))


# ---------------------------------------------------------------- canonical form

def canonical_form(k: Combinatorics) -> tuple[Combinatorics, tuple[int, ...]]:
    """A relabeling that is identical for isomorphic inputs.

    New labels are handed out one element at a time; each element is
    encoded by the smallest new label in the block it shares with every
    earlier element, and the lexicographically least encoding wins.
    """
    n = k.size
    blk = k.pair_blocks()
    prof = [k.profile(i) for i in range(n)]
    best: list = [None, None]

    def row(x, chosen, block_first):
        r = []
        for j, y in enumerate(chosen):
            b = blk.get((x, y))
            r.append(n if b is None else block_first.get(b, j))
        return (tuple(sorted(prof[x], reverse=True)), tuple(r))

    def rec(chosen, rows, block_first):
        depth = len(chosen)
        if best[0] is not None and rows > best[0][:depth]:
            return
        if depth == n:
            if best[0] is None or rows < best[0]:
                best[0], best[1] = list(rows), list(chosen)
            return
        options = {}
        for x in range(n):
            if x in chosen:
                continue
            options.setdefault(row(x, chosen, block_first), []).append(x)
        least = min(options)
        if best[0] is not None and rows + [least] > best[0][:depth + 1]:
            return
        for x in options[least]:
            nb = dict(block_first)
            for y in chosen:
                b = blk.get((x, y))
                if b is not None and b not in nb:
                    nb[b] = chosen.index(y)
            rec(chosen + [x], rows + [least], nb)

    rec([], [], {})
    order = best[1]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    return k.relabel(perm), tuple(perm)


# ---------------------------------------------------------------- weak combinatorics

@dataclass(frozen=True)
class WeakCombinatorics:
    n_lines: int
    points: tuple[tuple[int, int], ...]       # (multiplicity, count), sorted
    per_line: tuple[tuple[int, ...], ...]     # multiplicities on each line, input order

    def signature(self):
        return (self.n_lines, self.points, tuple(sorted(self.per_line)))

    def __eq__(self, other):
        return isinstance(other, WeakCombinatorics) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())


def singular_points(lines: Sequence[Line]) -> dict[Point, set[int]]:
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise CombinatoricsError("duplicate lines in input")
    pts: dict[Point, set[int]] = {}
    for i, j in combinations(range(len(lines)), 2):
        pts.setdefault(meet(lines[i], lines[j]), set()).update((i, j))
    return pts


def weak_combinatorics(lines: Sequence[Line]) -> WeakCombinatorics:
    pts = singular_points(lines)
    counts = Counter(len(s) for s in pts.values())
    per_line = []
    for i in range(len(lines)):
        per_line.append(tuple(sorted(len(s) for s in pts.values() if i in s)))
    return WeakCombinatorics(len(lines), tuple(sorted(counts.items())), tuple(per_line))
