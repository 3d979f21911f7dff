"""Points, lines, conics and projectivities of the projective plane over an exact field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import QQ, FieldScalar, FieldSpec, coerce


class GeometryError(ValueError):
    pass


def _normalize(values: Sequence, spec: FieldSpec | None) -> tuple[FieldScalar, ...]:
    if spec is None:
        spec = next((v.spec for v in values if isinstance(v, FieldScalar)), QQ)
    vals = tuple(coerce(v, spec) for v in values)
    lead = next((v for v in vals if v), None)
    if lead is None:
        raise GeometryError("all homogeneous coordinates are zero")
    if lead == 1:
        return vals
    inv = lead.inverse()
    return tuple(v * inv for v in vals)


class _Homogeneous:
    __slots__ = ("coords",)

    def __init__(self, *values, spec: FieldSpec | None = None):
        if len(values) == 1 and not isinstance(values[0], (int, FieldScalar)):
            values = tuple(values[0])
        if len(values) != 3:
            raise GeometryError(f"expected three homogeneous coordinates, got {len(values)}")
        object.__setattr__(self, "coords", _normalize(values, spec))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @property
    def spec(self) -> FieldSpec:
        return self.coords[0].spec

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def conjugate(self):
        return type(self)(*(c.conjugate() for c in self.coords))

    def swap_xy(self):
        x, y, z = self.coords
        return type(self)(y, x, z)


class Point(_Homogeneous):
    __slots__ = ()

    def __repr__(self):
        return f"Point{self}"

    def on(self, line: "Line") -> bool:
        return dot(self.coords, line.coords) == 0


class Line(_Homogeneous):
    """The line  a*x + b*y + c*z = 0."""

    __slots__ = ()

    def __repr__(self):
        return f"Line{self}"

    def contains(self, p: Point) -> bool:
        return dot(self.coords, p.coords) == 0

    def evaluate(self, p: Point) -> FieldScalar:
        return dot(self.coords, p.coords)


def dot(u, v) -> FieldScalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def det3(m) -> FieldScalar:
    return dot(m[0], cross(m[1], m[2]))


def dualize(obj):
    if isinstance(obj, Point):
        return Line(*obj.coords)
    if isinstance(obj, Line):
        return Point(*obj.coords)
    raise TypeError(f"cannot dualize {type(obj).__name__}")


def join(p: Point, q: Point) -> Line:
    if p == q:
        raise GeometryError(f"join of equal points {p}")
    return Line(*cross(p.coords, q.coords))


def meet(l: Line, m: Line) -> Point:
    if l == m:
        raise GeometryError(f"meet of equal lines {l}")
    return Point(*cross(l.coords, m.coords))


def collinear(p: Point, q: Point, r: Point) -> bool:
    return det3((p.coords, q.coords, r.coords)) == 0


def concurrent(l: Line, m: Line, n: Line) -> bool:
    return det3((l.coords, m.coords, n.coords)) == 0


# ---------------------------------------------------------------- linear algebra

def row_reduce(rows):
    """Reduced row echelon form over the field; returns (matrix, pivot columns)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c].inverse()
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def null_space(rows) -> list[list[FieldScalar]]:
    red, pivots = row_reduce(rows)
    ncols = len(rows[0])
    spec = rows[0][0].spec
    zero, one = FieldScalar(0, 0, spec), FieldScalar(1, 0, spec)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [zero] * ncols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(v)
    return basis


def mat_mul(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(1, 3)), a[i][0] * b[0][j])
                       for j in range(3)) for i in range(3))


def mat_inverse(m):
    d = det3(m)
    if not d:
        raise GeometryError("singular matrix")
    cols = [[m[r][c] for r in range(3)] for c in range(3)]
    # adjugate: rows of inverse are cross products of columns
    adj = (cross(cols[1], cols[2]), cross(cols[2], cols[0]), cross(cols[0], cols[1]))
    inv = d.inverse()
    return tuple(tuple(v * inv for v in row) for row in adj)


def transpose(m):
    return tuple(tuple(m[r][c] for r in range(3)) for c in range(3))


# ---------------------------------------------------------------- conics

_MONOMIALS = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))


def veronese(p: Point) -> list[FieldScalar]:
    c = p.coords
    return [c[i] * c[j] for i, j in _MONOMIALS]


@dataclass(frozen=True)
class Conic:
    """Coefficients of x^2, y^2, z^2, xy, xz, yz (first nonzero equal to 1)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize_vec(self.coeffs))

    def matrix(self):
        a, b, c, d, e, f = self.coeffs
        h = FieldScalar(1, 0, a.spec) / 2
        return ((a, d * h, e * h), (d * h, b, f * h), (e * h, f * h, c))

    def is_smooth(self) -> bool:
        return bool(det3(self.matrix()))

    def evaluate(self, p: Point) -> FieldScalar:
        return sum(map(lambda u, v: u * v, self.coeffs, veronese(p)), FieldScalar(0, 0, p.spec))

    def contains(self, p: Point) -> bool:
        return not self.evaluate(p)


def _normalize_vec(values):
    values = tuple(values)
    lead = next((v for v in values if v), None)
    if lead is None:
        raise GeometryError("zero coefficient vector")
    inv = lead.inverse()
    return tuple(v * inv for v in values)


def conic_through_five(pts: Sequence[Point]) -> Conic:
    pts = list(pts)
    if len(pts) != 5 or len(set(pts)) != 5:
        raise GeometryError("need five distinct points")
    basis = null_space([veronese(p) for p in pts])
    if len(basis) != 1:
        raise GeometryError("points not in general position: conic is not unique")
    return Conic(tuple(basis[0]))


def on_conic(c: Conic, p: Point) -> bool:
    return c.contains(p)


# ---------------------------------------------------------------- projectivities

class Transform:
    """Projectivity acting on points by p -> M p and on lines by l -> l M^-1."""

    __slots__ = ("matrix", "_inverse")

    def __init__(self, matrix, spec: FieldSpec | None = None):
        flat = _normalize([v for row in matrix for v in row], spec)
        m = tuple(tuple(flat[3 * i:3 * i + 3]) for i in range(3))
        if not det3(m):
            raise GeometryError("transform matrix is singular")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_inverse", None)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def identity(cls, spec: FieldSpec = QQ) -> "Transform":
        one, zero = FieldScalar(1, 0, spec), FieldScalar(0, 0, spec)
        return cls(tuple(tuple(one if i == j else zero for j in range(3)) for i in range(3)))

    def inverse_matrix(self):
        if self._inverse is None:
            object.__setattr__(self, "_inverse", mat_inverse(self.matrix))
        return self._inverse

    def inverse(self) -> "Transform":
        return Transform(self.inverse_matrix())

    def __call__(self, obj):
        if isinstance(obj, Point):
            return Point(*(dot(row, obj.coords) for row in self.matrix))
        if isinstance(obj, Line):
            inv = self.inverse_matrix()
            return Line(*(dot(obj.coords, [inv[r][c] for r in range(3)]) for c in range(3)))
        raise TypeError(f"cannot transform {type(obj).__name__}")

    def compose(self, other: "Transform") -> "Transform":
        """self after other."""
        return Transform(mat_mul(self.matrix, other.matrix))

    def __eq__(self, other):
        return isinstance(other, Transform) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.matrix)
        return f"Transform[{rows}]"


def _columns(points: Iterable[Point]):
    cols = [p.coords for p in points]
    return tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))


def transform_to_frame(p1: Point, p2: Point, p3: Point, p4: Point) -> Transform:
    pts = (p1, p2, p3, p4)
    for i in range(4):
        a, b, c = (pts[k] for k in range(4) if k != i)
        if collinear(a, b, c):
            raise GeometryError("frame points are not in general position")
    m = _columns((p1, p2, p3))
    lam = [dot(row, p4.coords) for row in mat_inverse(m)]
    scaled = tuple(tuple(m[r][c] * lam[c] for c in range(3)) for r in range(3))
    return Transform(mat_inverse(scaled))
