"""Exact scalar arithmetic for the coefficient fields.

Two fields are supported: the rationals, represented directly by
``fractions.Fraction``, and a real quadratic extension Q(sqrt(d)) for a
positive square-free integer d, represented by :class:`QuadraticScalar`
pairs ``a + b*sqrt(d)``.

A quadratic scalar with b == 0 is always collapsed back to a plain
``Fraction``, so equality and hashing are canonical across the two
representations.  All arithmetic is exact; nothing here ever touches a
float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd


__all__ = [
    "QuadraticScalar",
    "ScalarField",
    "UnsupportedField",
    "quad",
    "sc_div",
    "sc_sign",
    "sc_str",
]


class UnsupportedField(Exception):
    """A requested constant does not live in the configured field."""


_SQUAREFREE_CACHE: dict[int, bool] = {}


def _is_squarefree(n: int) -> bool:
    if n in _SQUAREFREE_CACHE:
        return _SQUAREFREE_CACHE[n]
    ok = n > 1
    m = n
    p = 2
    while ok and p * p <= m:
        if m % (p * p) == 0:
            ok = False
        while m % p == 0:
            m //= p
        p += 1
    _SQUAREFREE_CACHE[n] = ok
    return ok


def quad(a, b, d: int):
    """Build ``a + b*sqrt(d)``, collapsing to Fraction when b == 0."""
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadraticScalar(a, b, d)


class QuadraticScalar:
    """An element a + b*sqrt(d) of Q(sqrt(d)) with b != 0.

    Stored as an integer triple (an + bn*sqrt(d)) / den with den > 0
    and gcd(an, bn, den) = 1, which keeps the arithmetic on machine
    integers with a single normalization per operation.  Mixed
    arithmetic with ints and Fractions coerces the rational side;
    mixing two different extensions raises ``ValueError``.
    """

    __slots__ = ("d", "an", "bn", "den")

    def __init__(self, a, b, d: int):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            raise ValueError("use quad() so rational values stay Fractions")
        if not _is_squarefree(d):
            raise ValueError(f"d = {d} must be square-free and > 1")
        da, db = a.denominator, b.denominator
        den = da * (db // _gcd(da, db))
        self.an = a.numerator * (den // da)
        self.bn = b.numerator * (den // db)
        self.den = den
        self.d = d

    @classmethod
    def _make(cls, an: int, bn: int, den: int, d: int):
        """Normalize a raw triple; collapses to Fraction when bn == 0."""
        if bn == 0:
            return Fraction(an, den)
        if den < 0:
            an, bn, den = -an, -bn, -den
        g = _gcd(_gcd(an, bn), den)
        if g > 1:
            an //= g
            bn //= g
            den //= g
        out = object.__new__(cls)
        out.an = an
        out.bn = bn
        out.den = den
        out.d = d
        return out

    @property
    def a(self) -> Fraction:
        return Fraction(self.an, self.den)

    @property
    def b(self) -> Fraction:
        return Fraction(self.bn, self.den)

    # -- coercion helpers ------------------------------------------------

    def _triple(self, other):
        # Return (an, bn, den) of `other` in the same field, or None.
        if isinstance(other, QuadraticScalar):
            if other.d != self.d:
                raise UnsupportedField(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) scalars")
            return other.an, other.bn, other.den
        if isinstance(other, int):
            return other, 0, 1
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        t = self._triple(other)
        if t is None:
            return NotImplemented
        oan, obn, oden = t
        return QuadraticScalar._make(self.an * oden + oan * self.den,
                                     self.bn * oden + obn * self.den,
                                     self.den * oden, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._triple(other)
        if t is None:
            return NotImplemented
        oan, obn, oden = t
        return QuadraticScalar._make(self.an * oden - oan * self.den,
                                     self.bn * oden - obn * self.den,
                                     self.den * oden, self.d)

    def __rsub__(self, other):
        t = self._triple(other)
        if t is None:
            return NotImplemented
        oan, obn, oden = t
        return QuadraticScalar._make(oan * self.den - self.an * oden,
                                     obn * self.den - self.bn * oden,
                                     self.den * oden, self.d)

    def __mul__(self, other):
        t = self._triple(other)
        if t is None:
            return NotImplemented
        oan, obn, oden = t
        an, bn = self.an, self.bn
        return QuadraticScalar._make(an * oan + bn * obn * self.d,
                                     an * obn + bn * oan,
                                     self.den * oden, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadraticScalar._make(-self.an, -self.bn, self.den, self.d)

    def __pos__(self):
        return self

    def _inverse(self):
        # (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); the norm is nonzero
        # because d is not a perfect square.
        norm = self.an * self.an - self.bn * self.bn * self.d
        return QuadraticScalar._make(self.an * self.den,
                                     -self.bn * self.den, norm, self.d)

    def __truediv__(self, other):
        t = self._triple(other)
        if t is None:
            return NotImplemented
        oan, obn, oden = t
        if obn:
            return self * QuadraticScalar._make(
                oan * oden, -obn * oden,
                oan * oan - obn * obn * self.d, self.d)
        if oan == 0:
            raise ZeroDivisionError("scalar division by zero")
        return QuadraticScalar._make(self.an * oden, self.bn * oden,
                                     self.den * oan, self.d)

    def __rtruediv__(self, other):
        if self._triple(other) is None:
            return NotImplemented
        return self._inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Fraction(1)
        for _ in range(n):
            out = self * out
        return out

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadraticScalar):
            return (self.d == other.d and self.an == other.an
                    and self.bn == other.bn and self.den == other.den)
        # b != 0 always, so we never equal a rational
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.an, self.bn, self.den, self.d))

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d) as -1, 0 or 1."""
        a, b = self.an, self.bn
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # a and b have opposite signs; compare a^2 against b^2 d
        if a * a > b * b * self.d:
            return 1 if a > 0 else -1
        if a * a < b * b * self.d:
            return 1 if b > 0 else -1
        return 0  # unreachable for square-free d, kept for safety

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadraticScalar({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return sc_str(self)


def sc_sign(c) -> int:
    """Sign of a scalar (Fraction or QuadraticScalar)."""
    if isinstance(c, QuadraticScalar):
        return c.sign()
    return (c > 0) - (c < 0)


def sc_div(x, y):
    """Exact scalar division that stays inside Fraction for rationals."""
    if isinstance(x, QuadraticScalar) or isinstance(y, QuadraticScalar):
        return x / y
    return Fraction(x) / Fraction(y)


def _frac_str(f: Fraction) -> str:
    return str(f)


def sc_str(c) -> str:
    """Render a scalar in the syntax the expression parser accepts.

    Rationals render as ``2`` or ``-3/4``.  Quadratic scalars render
    parenthesised, e.g. ``(1/2+1/2*sqrt5)``, so they can be used as
    multiplicative factors without precedence surprises.
    """
    if not isinstance(c, QuadraticScalar):
        return _frac_str(Fraction(c))
    root = f"sqrt{c.d}"
    if c.b == 1:
        bpart = root
    elif c.b == -1:
        bpart = f"-{root}"
    else:
        bpart = f"{_frac_str(c.b)}*{root}"
    if c.a == 0:
        return f"({bpart})"
    if c.b > 0:
        return f"({_frac_str(c.a)}+{bpart})"
    return f"({_frac_str(c.a)}{bpart})"


class ScalarField:
    """Descriptor for the configured coefficient field.

    ``d == 0`` means plain rationals; otherwise the field is Q(sqrt(d)).
    """

    __slots__ = ("d",)

    def __init__(self, d: int = 0):
        if d != 0 and not _is_squarefree(d):
            raise UnsupportedField(f"sqrt({d}) does not generate a field "
                                   "extension (d must be square-free)")
        self.d = d

    @classmethod
    def parse(cls, spec: str) -> "ScalarField":
        """Parse a field spec: ``rational`` or ``quadratic:<d>``."""
        spec = spec.strip()
        if spec == "rational":
            return cls(0)
        if spec.startswith("quadratic:"):
            try:
                d = int(spec.split(":", 1)[1])
            except ValueError:
                raise UnsupportedField(f"bad field spec {spec!r}") from None
            if d <= 1:
                raise UnsupportedField(f"bad field spec {spec!r}")
            return cls(d)
        raise UnsupportedField(f"unknown field spec {spec!r}")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def sqrt_gen(self):
        """The element sqrt(d); errors on the rational field."""
        if self.d == 0:
            raise UnsupportedField("the rational field has no surd")
        return QuadraticScalar(Fraction(0), Fraction(1), self.d)

    def contains(self, c) -> bool:
        if isinstance(c, QuadraticScalar):
            return self.d == c.d
        return isinstance(c, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, ScalarField) and self.d == other.d

    def __hash__(self):
        return hash(("ScalarField", self.d))

    def __repr__(self):
        if self.d == 0:
            return "ScalarField(rational)"
        return f"ScalarField(quadratic:{self.d})"
