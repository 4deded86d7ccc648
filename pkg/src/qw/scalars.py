"""Exact arithmetic in the rational function field Q(q).

A :class:`QScalar` is stored as a pair of integer-coefficient polynomials in
lowest terms: numerator and denominator share no common factor over Q, the
joint integer content is 1 and the denominator has a positive leading
coefficient.  Every element of Q(q) therefore has exactly one stored
representation and ``==`` is plain tuple comparison.

Polynomials are dense coefficient tuples, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from numbers import Rational

from .errors import DivisionByZero, PoleError

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "QPolynomial",
    "QScalar",
    "canonicalize",
    "q_integer",
    "q_power",
    "central_coeff",
    "eval_at",
    "ZERO",
    "ONE",
    "Q",
]


# ---------------------------------------------------------------------------
# integer polynomial kernels (tuples, lowest degree first, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] += x
    return _trim(r)


def _psub(a, b):
    r = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        r[i] -= x
    return _trim(r)


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        k = a[0]
        return tuple(k * x for x in b)
    if len(b) == 1:
        k = b[0]
        return tuple(k * x for x in a)
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return tuple(r)


def _pscale(a, k):
    return tuple(k * x for x in a)


def _content(a):
    g = 0
    for x in a:
        g = igcd(g, x)
        if g == 1:
            break
    return g


def _valuation(a):
    for i, x in enumerate(a):
        if x:
            return i
    return len(a)


def _is_monomial(a):
    return sum(1 for x in a if x) == 1


def _primitive(a):
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(x // g for x in a)


def _prem(a, b):
    """Pseudo-remainder of a by b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _pgcd(a, b):
    """Primitive gcd over Z[q] with positive leading coefficient."""
    if not a:
        return _primitive(b) if b else (1,)
    if not b:
        return _primitive(a)
    va, vb = _valuation(a), _valuation(b)
    v = min(va, vb)
    a, b = a[va:], b[vb:]
    if len(a) == 1 or len(b) == 1:
        return (0,) * v + (1,)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)
    else:
        if b:
            return (0,) * v + (1,)
    return (0,) * v + _primitive(b)


def _pdivexact(a, b):
    """Quotient a / b in Z[q]; b must divide a exactly."""
    if len(b) == 1:
        k = b[0]
        return tuple(x // k for x in a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    qout = [0] * (len(a) - db)
    for shift in range(len(a) - 1 - db, -1, -1):
        c = r[shift + db]
        if c:
            k, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            qout[shift] = k
            for i, y in enumerate(b):
                r[i + shift] -= k * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return tuple(qout)


def _peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_text(a):
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = "q" if d == 1 else f"q^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------
# QPolynomial
# ---------------------------------------------------------------------------

class QPolynomial:
    """Polynomial in q with exact rational coefficients (lowest degree first)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        cs = [Fraction(c) for c in coefficients]
        self.coefficients = _trim(cs)

    @classmethod
    def q(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def leading(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def _ints(self):
        """Integer polynomial and positive common denominator with self = ints / den."""
        den = 1
        for c in self.coefficients:
            den = den * c.denominator // igcd(den, c.denominator)
        return tuple(int(c * den) for c in self.coefficients), den

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return QPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        r = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                r[i + j] += x * y
        return QPolynomial(r)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coefficients)
        db = other.degree
        lb = other.leading()
        quo = [Fraction(0)] * max(0, len(r) - db)
        while len(r) - 1 >= db and r:
            k = r[-1] / lb
            shift = len(r) - 1 - db
            quo[shift] = k
            for i, y in enumerate(other.coefficients):
                r[i + shift] -= k * y
            r = list(_trim(r))
        return QPolynomial(quo), QPolynomial(r)

    def gcd(self, other):
        """Monic gcd over Q."""
        a, _ = self._ints()
        b, _ = _as_poly(other)._ints()
        g = _pgcd(a, b)
        lead = g[-1]
        return QPolynomial(Fraction(c, lead) for c in g)

    def __call__(self, x):
        return _peval(self.coefficients, Fraction(x))

    def __str__(self):
        ints, den = self._ints()
        body = _poly_text(ints)
        return body if den == 1 else f"({body})/{den}"

    def __repr__(self):
        return f"QPolynomial({[str(c) for c in self.coefficients]})"


def _as_poly(x):
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Rational)):
        return QPolynomial((x,))
    raise TypeError(f"cannot interpret {x!r} as a polynomial in q")


# ---------------------------------------------------------------------------
# QScalar
# ---------------------------------------------------------------------------

def _normalize_content(num, den):
    g = igcd(_content(num), _content(den))
    if den[-1] < 0:
        g = -g
    if g != 1:
        num = tuple(x // g for x in num)
        den = tuple(x // g for x in den)
    return num, den


def _reduce(num, den):
    """Canonical (num, den) from arbitrary integer polynomials, den != 0."""
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return (), (1,)
    v = min(_valuation(num), _valuation(den))
    if v:
        num, den = num[v:], den[v:]
    if len(den) > 1 and len(num) > 1 and not (_is_monomial(num) or _is_monomial(den)):
        g = _pgcd(num, den)
        if len(g) > 1:
            num, den = _pdivexact(num, g), _pdivexact(den, g)
    return _normalize_content(num, den)


class QScalar:
    """Element of Q(q), immutable, in canonical reduced form."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, QScalar):
            self._num, self._den = value._num, value._den
        elif isinstance(value, int):
            self._num, self._den = ((value,) if value else ()), (1,)
        elif isinstance(value, Rational):
            f = Fraction(value)
            self._num = (f.numerator,) if f else ()
            self._den = (f.denominator,)
        elif isinstance(value, QPolynomial):
            s = canonicalize(value, QPolynomial((1,)))
            self._num, self._den = s._num, s._den
        else:
            raise TypeError(f"cannot build a QScalar from {value!r}")
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = num, den, None
        return obj

    @classmethod
    def from_int_polys(cls, num, den=(1,)):
        """Build from integer coefficient sequences (lowest degree first)."""
        n, d = _reduce(_trim(list(num)), _trim(list(den)))
        return cls._raw(n, d)

    # -- views --------------------------------------------------------------
    @property
    def numerator(self):
        return QPolynomial(self._num)

    @property
    def denominator(self):
        return QPolynomial(self._den)

    @property
    def int_numerator(self):
        return self._num

    @property
    def int_denominator(self):
        return self._den

    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_constant(self):
        return len(self._num) <= 1 and len(self._den) == 1

    def is_negative(self):
        """True when the leading numerator coefficient is negative (display sign)."""
        return bool(self._num) and self._num[-1] < 0

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._num[0] if self._num else 0, self._den[0])

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QScalar):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == QScalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- field operations ----------------------------------------------------
    def __neg__(self):
        return QScalar._raw(tuple(-x for x in self._num), self._den)

    def __add__(self, other):
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not self._num:
            return other
        if not other._num:
            return self
        a, b, c, d = self._num, self._den, other._num, other._den
        if b == d:
            return QScalar._raw(*_reduce(_padd(a, c), b))
        if len(b) == 1 and len(d) == 1:
            return QScalar._raw(*_reduce(_padd(_pscale(a, d[0]), _pscale(c, b[0])), (b[0] * d[0],)))
        g = _pgcd(b, d)
        if len(g) > 1 or g[0] != 1:
            b1, d1 = _pdivexact(b, g), _pdivexact(d, g)
        else:
            b1, d1 = b, d
        num = _padd(_pmul(a, d1), _pmul(c, b1))
        return QScalar._raw(*_reduce(num, _pmul(b1, d)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not self._num or not other._num:
            return ZERO
        a, b, c, d = self._num, self._den, other._num, other._den
        if b == (1,) and d == (1,):
            num, den = _pmul(a, c), (1,)
            return QScalar._raw(*_normalize_content(num, den))
        g1 = _pgcd(a, d)
        g2 = _pgcd(c, b)
        if g1 != (1,):
            a, d = _pdivexact(a, g1), _pdivexact(d, g1)
        if g2 != (1,):
            c, b = _pdivexact(c, g2), _pdivexact(b, g2)
        return QScalar._raw(*_normalize_content(_pmul(a, c), _pmul(b, d)))

    __rmul__ = __mul__

    def inv(self):
        if not self._num:
            raise DivisionByZero("inverse of zero")
        num, den = self._den, self._num
        if den[-1] < 0:
            num, den = tuple(-x for x in num), tuple(-x for x in den)
        return QScalar._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- text -----------------------------------------------------------------
    def __str__(self):
        num = _poly_text(self._num)
        if self._den == (1,):
            return num
        if sum(1 for x in self._num if x) > 1:
            num = f"({num})"
        den = _poly_text(self._den)
        if sum(1 for x in self._den if x) > 1 or (len(self._den) > 1 and self._den[-1] != 1):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"QScalar('{self}')"


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Rational)):
        return QScalar(x)
    if isinstance(x, QPolynomial):
        return QScalar(x)
    return None


ZERO = QScalar(0)
ONE = QScalar(1)
Q = QScalar._raw((0, 1), (1,))


def canonicalize(raw_num, raw_den):
    """Canonical representative of ``raw_num / raw_den``."""
    raw_num, raw_den = _as_poly(raw_num), _as_poly(raw_den)
    if raw_den.is_zero():
        raise DivisionByZero("zero denominator")
    n, dn = raw_num._ints()
    d, dd = raw_den._ints()
    # raw_num/raw_den = (n/dn)/(d/dd) = (n*dd)/(d*dn)
    return QScalar._raw(*_reduce(_pscale(n, dd), _pscale(d, dn)))


@lru_cache(maxsize=None)
def q_power(m: int) -> QScalar:
    """q**m; negative exponents give 1/q**|m|."""
    if m >= 0:
        return QScalar._raw((0,) * m + (1,), (1,))
    return QScalar._raw((1,), (0,) * (-m) + (1,))


@lru_cache(maxsize=None)
def q_integer(n: int) -> QScalar:
    """The q-number [n]_q = (q^n - 1)/(q - 1)."""
    if n == 0:
        return ZERO
    if n > 0:
        return QScalar._raw((1,) * n, (1,))
    # (q^-k - 1)/(q - 1) = -(1 + q + ... + q^(k-1)) / q^k
    k = -n
    return QScalar._raw((-1,) * k, (0,) * k + (1,))


@lru_cache(maxsize=None)
def central_coeff(m: int) -> QScalar:
    """Coefficient of C in [L_m, L_{-m}]_q and [L_m, W_{-m}]_q."""
    if m in (-1, 0, 1):
        return ZERO
    top = q_power(-m) * q_integer(m - 1) * q_integer(m) * q_integer(m + 1)
    return top / (6 * (1 + q_power(m)))


def eval_at(s: QScalar, point) -> Fraction:
    """Exact value of ``s`` at q = point."""
    x = Fraction(point)
    den = _peval(s.int_denominator, x)
    if den == 0:
        raise PoleError(f"denominator of {s} vanishes at q = {x}")
    return _peval(s.int_numerator, x) / den
