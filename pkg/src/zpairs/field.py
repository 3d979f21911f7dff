"""Exact scalars in Q and in real quadratic fields Q(sqrt d)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gmpy2 import mpq


class FieldError(ValueError):
    pass


def _is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``d is None``) or Q(sqrt d) for square-free d >= 2."""

    d: int | None = None

    def __post_init__(self):
        if self.d is not None and not _is_squarefree(self.d):
            raise FieldError(f"d={self.d} is not a square-free integer >= 2")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def quadratic(cls, d: int) -> "FieldSpec":
        return cls(d)

    @property
    def kind(self) -> str:
        return "rational" if self.d is None else "quadratic"

    @property
    def is_quadratic(self) -> bool:
        return self.d is not None

    def __call__(self, a=0, b=0) -> "FieldScalar":
        return FieldScalar(a, b, self)

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt{self.d})"


QQ = FieldSpec()

Number = Union[int, Fraction]
_RATIONAL = (int, Fraction, type(mpq()))


def _cmp0(q) -> int:
    return (q > 0) - (q < 0)


def _new(a, b, spec: FieldSpec) -> "FieldScalar":
    x = object.__new__(FieldScalar)
    object.__setattr__(x, "a", a)
    object.__setattr__(x, "b", b)
    object.__setattr__(x, "spec", spec)
    return x


class FieldScalar:
    """The real number a + b*sqrt(d), stored exactly.

    Plain integer and rational operands are coerced into the scalar's
    field; mixing two different fields raises ``FieldError``.
    """

    __slots__ = ("a", "b", "spec")

    def __init__(self, a: Number = 0, b: Number = 0, spec: FieldSpec = QQ):
        a = mpq(a)
        b = mpq(b)
        if spec.d is None and b != 0:
            raise FieldError("rational scalar with nonzero sqrt part")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "spec", spec)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    # coercion
    def _lift(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldError(f"mixed fields {self.spec} and {other.spec}")
            return other
        if isinstance(other, _RATIONAL):
            return _new(mpq(other), _ZERO, self.spec)
        return NotImplemented

    @property
    def d(self) -> int:
        return self.spec.d or 0

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _new(self.a + o.a, self.b + o.b, self.spec)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _new(self.a - o.a, self.b - o.b, self.spec)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.b and not o.b:
            return _new(self.a * o.a, _ZERO, self.spec)
        return _new(self.a * o.a + self.d * self.b * o.b,
                    self.a * o.b + self.b * o.a, self.spec)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "FieldScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in " + str(self.spec))
        return _new(self.a / n, -self.b / n, self.spec)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = _new(_ONE, _ZERO, self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return _new(-self.a, -self.b, self.spec)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.spec == other.spec and self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.spec.d))

    def sign(self) -> int:
        sa, sb = _cmp0(self.a), _cmp0(self.b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa * _cmp0(diff)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def conjugate(self) -> "FieldScalar":
        return _new(self.a, -self.b, self.spec)

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"FieldScalar({self})"

    def __str__(self):
        if self.b == 0:
            return _qstr(self.a)
        root = f"sqrt{self.d}"
        bpart = root if self.b == 1 else f"-{root}" if self.b == -1 else f"{_qstr(self.b)}*{root}"
        if self.a == 0:
            return bpart
        if bpart.startswith("-"):
            return f"{_qstr(self.a)}{bpart}"
        return f"{_qstr(self.a)}+{bpart}"


_ZERO = mpq(0)
_ONE = mpq(1)


def _qstr(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def sign(x: FieldScalar) -> int:
    return x.sign()


def galois_conjugate(x: FieldScalar) -> FieldScalar:
    return x.conjugate()


def sqrt_of(spec: FieldSpec) -> FieldScalar:
    if spec.d is None:
        raise FieldError("the rationals have no adjoined square root")
    return FieldScalar(0, 1, spec)


def coerce(value, spec: FieldSpec) -> FieldScalar:
    if isinstance(value, FieldScalar):
        if value.spec != spec:
            if value.b == 0:
                return _new(value.a, _ZERO, spec)
            raise FieldError(f"cannot embed {value} into {spec}")
        return value
    return _new(mpq(value), _ZERO, spec)
