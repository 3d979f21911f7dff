"""Exact coordinates of every named configuration, parameterized by signs in {-1, 1}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .configuration import Configuration
from .field import QQ, FieldScalar, FieldSpec
from .projective import Point

Q2 = FieldSpec.quadratic(2)


class CatalogError(ValueError):
    pass


def _r2(k) -> FieldScalar:
    """k * sqrt(2)"""
    return FieldScalar(0, Fraction(k), Q2)


def _pt(coords, spec: FieldSpec) -> Point:
    return Point(*coords, spec=spec)


def _config(name, spec, vertices, surrounding: dict, m=2, plumbing=None) -> Configuration:
    keys = sorted(surrounding, key=lambda s: int(s[1:]))
    plumbing = plumbing or [1] * len(keys)
    return Configuration(
        tuple(_pt(v, spec) for v in vertices),
        tuple(_pt(surrounding[k], spec) for k in keys),
        m, tuple(p % m for p in plumbing), spec, tuple(keys), name)


# ---------------------------------------------------------------- 13 lines

V_C = ((0, 1, 0), (1, 0, 0), (0, 0, 1))


def _c_points(a: int, b: int) -> dict:
    return {
        "S1": (1, 1, 1), "S2": (4, 4, 1), "S3": (-1, 8, 2), "S4": (8, -1, 2),
        "S5": (-1, 8, 4 * a), "S6": (-1, 4 * a, 2), "S7": (-a, 4, 4),
        "S8": (8, -1, 4 * b), "S9": (4 * b, -1, 2), "S10": (4, -b, 4),
    }


def build_c(a: int, b: int) -> Configuration:
    return _config(f"C[{a},{b}]", QQ, V_C, _c_points(a, b))


def build_c1(a: int, b: int) -> Configuration:
    pts = _c_points(a, b)
    pts.update({"S3": (1, 4, 1), "S5": (1, 4, 2 * a), "S6": (1, 2 * a, 1), "S7": (a, 2, 2)})
    return _config(f"C1[{a},{b}]", QQ, V_C, pts)


def build_c2(a: int, b: int) -> Configuration:
    pts = {
        "S1": (1, 1, 1), "S2": (4, 4, 1), "S3": (1, 4, 1), "S4": (4, 1, 1),
        "S5": (1, 4, 2 * a), "S6": (1, 2 * a, 1), "S7": (a, 2, 2),
        "S8": (4, 1, 2 * b), "S9": (2 * b, 1, 1), "S10": (2, b, 2),
    }
    return _config(f"C2[{a},{b}]", QQ, V_C, pts)


def build_c2_sqrt2(a: int, b: int) -> Configuration:
    pts = {
        "S1": (1, 1, 1), "S2": (2, 2, 1), "S3": (1, 2, 1), "S4": (2, 1, 1),
        "S5": (1, 2, _r2(a)), "S6": (1, _r2(a), 1), "S7": (_r2(a), 2, 2),
        "S8": (2, 1, _r2(b)), "S9": (_r2(b), 1, 1), "S10": (2, _r2(b), 2),
    }
    return _config(f"C2_sqrt2[{a},{b}]", Q2, V_C, pts)


# ---------------------------------------------------------------- 15 lines

V_D = ((0, 0, 1), (1, 0, 0), (0, 1, 0))


def _d_points(a: int, b: int) -> dict:
    return {
        "S1": (1, 1, 1), "S2": (4, 1, 1), "S3": (4, 1, 4),
        "S4": (2, 2, 1), "S5": (4, -2, 1), "S6": (-1, 1, 4),
        "S7": (4, -2, _r2(a)), "S8": (_r2(2 * a), -2, 1), "S9": (2, _r2(-a), 1),
        "S10": (-1, 1, _r2(b)), "S11": (-1, _r2(2 * b), 4), "S12": (_r2(-b), 4, 2),
    }


def _d1_changes(a: int) -> dict:
    return {"S5": (4, 2, 1), "S7": (4, 2, _r2(a)), "S8": (_r2(2 * a), 2, 1), "S9": (2, _r2(a), 1)}


def build_d(a: int, b: int) -> Configuration:
    return _config(f"D[{a},{b}]", Q2, V_D, _d_points(a, b))


def build_d1(a: int, b: int) -> Configuration:
    pts = _d_points(a, b)
    pts.update(_d1_changes(a))
    return _config(f"D1[{a},{b}]", Q2, V_D, pts)


def build_d2(a: int, b: int) -> Configuration:
    pts = _d_points(a, b)
    pts.update(_d1_changes(a))
    pts.update({"S6": (8, 1, 4), "S10": (8, 1, _r2(b)), "S11": (4, _r2(b), 2),
                "S12": (_r2(4 * b), 2, 1)})
    return _config(f"D2[{a},{b}]", Q2, V_D, pts)


# ---------------------------------------------------------------- 17 lines

V_E = V_D


def _e_points(a: int, b: int, g: int) -> dict:
    return {
        "S1": (1, 2, 1), "S2": (2, 1, 1),
        "S3": (2, -4, 1), "S4": (-4, 2, 1), "S5": (5, 10, -2),
        "S6": (2, -4, _r2(a)), "S7": (_r2(a), -4, 1), "S8": (1, _r2(-2 * a), 1),
        "S9": (-4, 2, _r2(b)), "S10": (-4, _r2(b), 1), "S11": (_r2(-2 * b), 1, 1),
        "S12": (5, 5 * g, -2), "S13": (5 * g, 5, -1), "S14": (10, 5, -2 * g),
    }


def _e1_changes(a: int) -> dict:
    return {"S3": (2, -5, 1), "S6": (2, -5, _r2(a)), "S7": (_r2(a), -5, 1),
            "S8": (2, _r2(-5 * a), 2)}


def build_e(a: int, b: int, g: int) -> Configuration:
    return _config(f"E[{a},{b},{g}]", Q2, V_E, _e_points(a, b, g))


def build_e1(a: int, b: int, g: int) -> Configuration:
    pts = _e_points(a, b, g)
    pts.update(_e1_changes(a))
    return _config(f"E1[{a},{b},{g}]", Q2, V_E, pts)


def build_e2(a: int, b: int, g: int) -> Configuration:
    if g != 1:
        raise CatalogError("E2 exists only for gamma = 1")
    pts = _e_points(a, b, g)
    pts.update(_e1_changes(a))
    pts.update({"S4": (-5, 2, 1), "S9": (-5, 2, _r2(b)), "S10": (-5, _r2(b), 1),
                "S11": (_r2(-5 * b), 2, 2)})
    return _config(f"E2[{a},{b},{g}]", Q2, V_E, pts)


def build_e3(a: int, b: int, g: int) -> Configuration:
    pts = _e_points(a, b, g)
    pts.update({
        "S3": (2, 4, 1), "S4": (4, 2, 1),
        "S6": (2, 4, _r2(a)), "S7": (_r2(a), 4, 1), "S8": (1, _r2(2 * a), 1),
        "S9": (4, 2, _r2(b)), "S10": (4, _r2(b), 1), "S11": (_r2(2 * b), 1, 1),
    })
    return _config(f"E3[{a},{b},{g}]", Q2, V_E, pts)


# ---------------------------------------------------------------- small configurations

V_AXES = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def build_pappus(m: int = 2, zeta: int = 1) -> Configuration:
    """Rational Pappus realization; the plumbing alternates zeta, -zeta."""
    pts = {"S1": (1, 1, 1), "S2": (2, 2, 1), "S3": (-2, 2, 1),
           "S4": (-2, 1, 1), "S5": (1, -1, 1), "S6": (2, -1, 1)}
    pl = [zeta, -zeta, zeta, -zeta, -zeta, zeta]
    return _config(f"Pappus[m={m},zeta={zeta}]", QQ, V_AXES, pts, m, pl)


def build_non_pappus() -> Configuration:
    pts = {"S1": (1, 1, 1), "S2": (2, 2, 1), "S3": (2, 1, 1),
           "S4": (-2, 2, 1), "S5": (1, -1, 1), "S6": (-2, -1, 1)}
    return _config("NonPappus", QQ, V_AXES, pts)


def build_quadrilateral() -> Configuration:
    """Complete quadrilateral: the frame plus its three diagonal points."""
    vertices = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    pts = {"S1": (1, 0, 0), "S2": (0, 1, 0), "S3": (0, 0, 1), "S4": (1, 1, 1)}
    return _config("Quadrilateral", QQ, vertices, pts)


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    arity: int
    builder: Callable[..., Configuration]
    n_lines: int
    tau_rule: str               # how tau depends on the parameters
    stable: bool
    line_counts: tuple[int, int, int]
    n_subsets: int
    note: str = ""

    def parameter_sets(self) -> list[tuple[int, ...]]:
        if self.arity == 0:
            return [()]
        out = []
        for bits in range(2 ** self.arity):
            params = tuple(1 if not (bits >> (self.arity - 1 - i)) & 1 else -1 for i in range(self.arity))
            if self.name == "E2" and params[2] != 1:
                continue
            out.append(params)
        return out

    def expected_tau(self, params: Sequence[int]) -> int | None:
        """None when only the dependence on the product is known."""
        prod = 1
        for p in params:
            prod *= p
        if self.tau_rule == "zero iff product is 1":
            return 0 if prod == 1 else 1
        if self.tau_rule.startswith("constant "):
            return int(self.tau_rule.split()[1])
        return None


ENTRIES: dict[str, CatalogEntry] = {e.name: e for e in [
    CatalogEntry("C", 2, build_c, 13, "zero iff product is 1", True, (5, 5, 5), 15),
    CatalogEntry("C1", 2, build_c1, 13, "zero iff product is 1", True, (4, 5, 5), 14,
                 "V1 carries one 5-point line"),
    CatalogEntry("C2", 2, build_c2, 13, "zero iff product is 1", True, (4, 4, 5), 13,
                 "two 5-point lines through V1 and V2"),
    CatalogEntry("C2_sqrt2", 2, build_c2_sqrt2, 13, "zero iff product is 1", True, (4, 4, 5), 13,
                 "realization of C2 over Q(sqrt2)"),
    CatalogEntry("D", 2, build_d, 15, "zero iff product is 1", True, (6, 6, 6), 18),
    CatalogEntry("D1", 2, build_d1, 15, "zero iff product is 1", True, (6, 5, 6), 17),
    CatalogEntry("D2", 2, build_d2, 15, "zero iff product is 1", True, (6, 5, 5), 16),
    CatalogEntry("E", 3, build_e, 17, "zero iff product is 1", True, (7, 7, 7), 21),
    CatalogEntry("E1", 3, build_e1, 17, "zero iff product is 1", True, (7, 6, 7), 20),
    CatalogEntry("E2", 3, build_e2, 17, "zero iff product is 1", True, (7, 6, 6), 19,
                 "gamma = 1 only"),
    CatalogEntry("E3", 3, build_e3, 17, "zero iff product is 1", True, (5, 7, 7), 19),
    CatalogEntry("Pappus", 0, build_pappus, 9, "constant 0", False, (3, 3, 3), 9,
                 "rational realization; accepts m and zeta"),
    CatalogEntry("NonPappus", 0, build_non_pappus, 9, "constant 1", True, (3, 3, 3), 9,
                 "rational non-Pappus (9_3) realization"),
    CatalogEntry("Quadrilateral", 0, build_quadrilateral, 7, "constant 1", True, (2, 2, 2), 6,
                 "complete quadrilateral, frame plus diagonal points"),
]}

ZARISKI_FAMILIES = ("C", "C1", "C2", "D", "D1", "D2", "E", "E1", "E2", "E3")


def get(name: str, params: Sequence[int] = (), **kwargs) -> Configuration:
    entry = ENTRIES.get(name)
    if entry is None:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(ENTRIES)}")
    params = tuple(int(p) for p in params)
    if len(params) != entry.arity:
        raise CatalogError(f"{name} takes {entry.arity} parameters, got {len(params)}")
    if any(p not in (-1, 1) for p in params):
        raise CatalogError("parameters must be -1 or 1")
    if kwargs and name != "Pappus":
        raise CatalogError(f"{name} takes no keyword options")
    return entry.builder(*params, **kwargs)


def family(name: str) -> list[tuple[tuple[int, ...], Configuration]]:
    entry = ENTRIES[name]
    return [(p, get(name, p)) for p in entry.parameter_sets()]


def listing() -> list[dict]:
    rows = []
    for e in ENTRIES.values():
        rows.append({"name": e.name, "arity": e.arity, "lines": e.n_lines, "tau": e.tau_rule,
                     "stable": e.stable, "line_counts": list(e.line_counts), "note": e.note})
    return rows
