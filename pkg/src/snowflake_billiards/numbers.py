"""Exact scalars for the quadratic field Q(sqrt3), plus arbitrary-precision floats.

Every vertex of a snowflake prefractal, every direction obtained by rotating
through multiples of 30 degrees, and every reflection of such data stays inside
the field Q(sqrt3) = {a + b*sqrt(3) : a, b rational}.  Doing all geometry there
makes vertex hits and periodicity decidable instead of guessed.

The rational components are gmpy2.mpq when available (much faster gcd
normalization) and fractions.Fraction otherwise; both store lowest terms with
a positive denominator.
"""

from __future__ import annotations

import math

import mpmath

try:
    from gmpy2 import mpq as _mpq

    def rational(num=0, den=1):
        return _mpq(num, den)

    _RATIONAL_TYPES = (type(_mpq(0)),)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Fraction

    def rational(num=0, den=1):
        return _Fraction(num, den)

    _RATIONAL_TYPES = (_Fraction,)

_R0 = rational(0)
_R1 = rational(1)


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) or isinstance(x, int)


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise ValueError("negative value has no real square root")
    num, den = q.numerator, q.denominator
    rn = math.isqrt(int(num))
    rd = math.isqrt(int(den))
    if rn * rn != num or rd * rd != den:
        return None
    return rational(rn, rd)


class QSqrt3:
    """An exact number a + b*sqrt(3) with rational a, b.

    Field operations are closed and exact; sign, equality and ordering are
    decided without any floating point.  Instances are immutable and hashable,
    so phase states of the billiard flow can be dictionary keys.
    """

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if is_rational(a) and not isinstance(a, int) else rational(a))
        object.__setattr__(self, "b", b if is_rational(b) and not isinstance(b, int) else rational(b))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt3 is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "QSqrt3":
        return cls(q, 0)

    @classmethod
    def coerce(cls, x) -> "QSqrt3":
        if isinstance(x, QSqrt3):
            return x
        if is_rational(x):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} into QSqrt3")

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return QSqrt3(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __mul__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        # (a + b r)(c + d r) = ac + 3bd + (ad + bc) r,  r = sqrt(3)
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        # multiply by the conjugate: (c + d r)^-1 = (c - d r)/(c^2 - 3 d^2)
        norm = o.a * o.a - 3 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        return QSqrt3(
            (self.a * o.a - 3 * self.b * o.b) / norm,
            (self.b * o.a - self.a * o.b) / norm,
        )

    def __rtruediv__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    # -- exact predicates --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(3)."""
        sa = _rsign(self.a)
        sb = _rsign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite rational/irrational parts: compare a^2 against 3 b^2
        return sa * _rsign(self.a * self.a - 3 * self.b * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __lt__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = _as_q3(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.a, self.b))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    # -- square root inside the field ---------------------------------------------

    def sqrt(self):
        """Exact square root if it exists in Q(sqrt3), else None.

        Solves (x + y r)^2 = a + b r, i.e. x^2 + 3 y^2 = a and 2 x y = b.
        """
        if self.sign() < 0:
            raise ValueError("negative value has no real square root")
        if self.b == 0:
            r = rational_sqrt(self.a)
            if r is not None:
                return QSqrt3(r, 0)
            r = rational_sqrt(self.a / 3)
            if r is not None:
                return QSqrt3(0, r)
            return None
        disc = self.a * self.a - 3 * self.b * self.b
        if disc < 0:
            return None
        q = rational_sqrt(disc)
        if q is None:
            return None
        for x2 in ((self.a + q) / 2, (self.a - q) / 2):
            if x2 < 0:
                continue
            x = rational_sqrt(x2)
            if x is None or x == 0:
                continue
            y = self.b / (2 * x)
            cand = QSqrt3(x, y)
            if cand.sign() >= 0 and cand * cand == self:
                return cand
        return None

    # -- conversions ---------------------------------------------------------------

    def to_mpf(self, prec: int | None = None):
        """Value as an mpmath float at `prec` bits (current context if None)."""
        if prec is None:
            return mpmath.mpf(self.a.numerator) / mpmath.mpf(self.a.denominator) + (
                mpmath.mpf(self.b.numerator) / mpmath.mpf(self.b.denominator)
            ) * mpmath.sqrt(3)
        with mpmath.workprec(prec):
            return self.to_mpf()

    def __float__(self):
        return float(self.to_mpf(80))

    # -- text form -------------------------------------------------------------------

    def __repr__(self):
        return f"QSqrt3({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


def _as_q3(x):
    if isinstance(x, QSqrt3):
        return x
    if is_rational(x):
        return QSqrt3(x, 0)
    return None


def _rsign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


Q3_ZERO = QSqrt3(0, 0)
Q3_ONE = QSqrt3(1, 0)
Q3_HALF = QSqrt3(rational(1, 2), 0)
SQRT3 = QSqrt3(0, 1)
SQRT3_HALF = QSqrt3(0, rational(1, 2))


def sgn(x) -> int:
    """Sign of an exact or floating scalar (-1, 0, +1)."""
    if isinstance(x, QSqrt3):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def scalar_sqrt(x, prec: int = 200):
    """Square root: exact QSqrt3 when it exists in the field, else mpf at `prec` bits."""
    if isinstance(x, QSqrt3):
        r = x.sqrt()
        if r is not None:
            return r
        return mpmath.sqrt(x.to_mpf(prec))
    return mpmath.sqrt(x)


# -- the documented plain-text scalar format: "a/b+c/d√3" ----------------------------

_SQRT_TOKEN = "√3"


def format_rational(q) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rational(int(num), int(den))
    return rational(int(text))


def format_scalar(x) -> str:
    """Canonical exact text form, e.g. ``1/2+0/1√3`` or ``5/12-1/12√3``."""
    x = QSqrt3.coerce(x)
    sign = "-" if x.b < 0 else "+"
    return f"{format_rational(x.a)}{sign}{format_rational(abs(x.b))}{_SQRT_TOKEN}"


def parse_scalar(text: str) -> QSqrt3:
    """Parse the canonical form; a bare rational ``a/b`` is also accepted."""
    text = text.strip().replace("sqrt3", _SQRT_TOKEN)
    if _SQRT_TOKEN not in text:
        return QSqrt3(parse_rational(text), 0)
    head = text[: -len(_SQRT_TOKEN)]
    # split at the sign separating the two components (not a leading sign)
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-" and head[i - 1] not in "+-/":
            a = parse_rational(head[:i])
            b = parse_rational(head[i + 1 :])
            if head[i] == "-":
                b = -b
            return QSqrt3(a, b)
    raise ValueError(f"malformed exact scalar: {text!r}")


def decimal_str(x, digits: int = 40) -> str:
    """Deterministic decimal rendering at `digits` significant digits."""
    if isinstance(x, QSqrt3):
        with mpmath.workdps(digits + 10):
            v = x.to_mpf()
            return mpmath.nstr(v, digits, strip_zeros=False)
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False)
