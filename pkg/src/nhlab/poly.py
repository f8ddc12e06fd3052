"""Sparse multivariate polynomials and rational functions, all exact.

A polynomial lives in a :class:`PolyRing` over one of the scalar fields
from :mod:`nhlab.scalars` and is stored as a dict mapping exponent
tuples to nonzero scalars.  The term order everywhere is graded
lexicographic: compare total exponent degree first, then the exponent
tuple itself.  For the graded degree reported to users each variable
sits in degree 2, so ``graded_degree == 2 * total_degree``.

Division is exact or it is an error: ``exact_divide`` raises
:class:`DivisionNotExact` instead of returning a remainder.  That error
signals a broken invariant upstream, never a situation to handle.

Rational functions keep a reduced numerator/denominator pair with the
denominator monic in the graded-lex sense, so equal fractions have
identical representations.  Reduction uses a primitive pseudo-remainder
sequence GCD that works over both supported fields.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as _int_gcd

from .scalars import QuadraticScalar, ScalarField, sc_div, sc_sign, sc_str


__all__ = [
    "DivisionNotExact",
    "LinearAction",
    "Polynomial",
    "PolyRing",
    "RationalFunction",
    "RingMismatch",
    "exact_divide",
    "poly_gcd",
]


class DivisionNotExact(Exception):
    """Polynomial division left a remainder where exactness was required."""


class RingMismatch(Exception):
    """Operands belong to different polynomial rings."""


def _term_key(exp):
    return (sum(exp), exp)


class PolyRing:
    """A polynomial ring: a scalar field plus an ordered variable list."""

    __slots__ = ("field", "variables", "nvars", "_zero", "_one")

    def __init__(self, field: ScalarField, variables):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.variables)
        self._zero = None
        self._one = None

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables)

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.variables})"

    # -- constructors ----------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        if self._zero is None:
            self._zero = Polynomial(self, {})
        return self._zero

    @property
    def one(self) -> "Polynomial":
        if self._one is None:
            self._one = self.from_scalar(1)
        return self._one

    def from_scalar(self, c) -> "Polynomial":
        c = _coerce_scalar(c)
        if sc_sign(c) == 0 and c == 0:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {tuple(e): c for e, c in terms.items() if c != 0}
        return Polynomial(self, clean)

    def monomials(self, max_total: int):
        """All exponent tuples with total degree <= max_total, graded-lex
        ascending."""
        out = [()]
        for _ in range(self.nvars):
            out = [e + (k,) for e in out for k in range(max_total + 1)]
        out = [e for e in out if sum(e) <= max_total]
        out.sort(key=_term_key)
        return out


def _coerce_scalar(c):
    if isinstance(c, (QuadraticScalar, Fraction)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not a scalar: {c!r}")


class Polynomial:
    """Immutable sparse polynomial.  Do not mutate ``terms``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, Fraction(0))

    def total_degree(self) -> int:
        """Exponent-sum degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def graded_degree(self) -> int:
        """Degree with every variable in degree 2; -1 for zero."""
        d = self.total_degree()
        return d if d < 0 else 2 * d

    def leading_term(self):
        """(exponent, coefficient) maximal in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            other = self.ring.from_scalar(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            other = self.ring.from_scalar(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            if other == 0:
                return self.ring.zero
            return Polynomial(self.ring,
                              {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if len(self.terms) * len(other.terms) >= 4:
            return _mul_integerized(self, other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take nonnegative ints")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            other = self.ring.from_scalar(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- substitution ----------------------------------------------------

    def substitute(self, images) -> "Polynomial":
        """Replace variable i by images[i] (a Polynomial); ring-preserving."""
        ring = self.ring
        if len(images) != ring.nvars:
            raise ValueError("need one image per variable")
        powers: dict = {}

        def power(i, k):
            if k == 0:
                return ring.one
            got = powers.get((i, k))
            if got is None:
                got = images[i] ** k
                powers[(i, k)] = got
            return got

        out = ring.zero
        for e, c in self.terms.items():
            term = ring.from_scalar(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    # -- rendering -------------------------------------------------------

    def _monomial_str(self, exp) -> str:
        parts = []
        for name, k in zip(self.ring.variables, exp):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _term_key(t[0]),
                       reverse=True)
        chunks = []
        for exp, c in items:
            mono = self._monomial_str(exp)
            if not mono:
                piece = sc_str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{sc_str(c)}*{mono}"
            chunks.append(piece)
        out = chunks[0]
        for piece in chunks[1:]:
            if piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __repr__(self):
        return f"<poly {self}>"


# -- exact division ------------------------------------------------------

def _int_rows(p: Polynomial):
    """Coefficients of p as integer pairs over one common denominator.

    Returns (rows, den) with rows mapping exponent -> (an, bn) so that
    the coefficient is (an + bn * sqrt(d)) / den; bn is 0 throughout
    for a rational-field polynomial."""
    den = 1
    for c in p.terms.values():
        cd = c.den if isinstance(c, QuadraticScalar) else c.denominator
        den = den * (cd // _int_gcd(den, cd))
    rows = {}
    for e, c in p.terms.items():
        if isinstance(c, QuadraticScalar):
            m = den // c.den
            rows[e] = (c.an * m, c.bn * m)
        else:
            rows[e] = (c.numerator * (den // c.denominator), 0)
    return rows, den


def _mul_integerized(f: Polynomial, g: Polynomial) -> Polynomial:
    """Product via integer convolution: scale both factors to integer
    coefficient pairs, convolve with plain int arithmetic, and
    normalize each output coefficient once at the end."""
    rows1, den1 = _int_rows(f)
    rows2, den2 = _int_rows(g)
    d = f.ring.field.d
    acc: dict = {}
    for e1, (a1, b1) in rows1.items():
        for e2, (a2, b2) in rows2.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            an = a1 * a2 + b1 * b2 * d
            bn = a1 * b2 + b1 * a2
            cur = acc.get(e)
            if cur is None:
                acc[e] = [an, bn]
            else:
                cur[0] += an
                cur[1] += bn
    den = den1 * den2
    terms: dict = {}
    for e, (an, bn) in acc.items():
        if bn:
            terms[e] = QuadraticScalar._make(an, bn, den, d)
        elif an:
            terms[e] = Fraction(an, den)
    return Polynomial(f.ring, terms)


def exact_divide(f: Polynomial, d: Polynomial) -> Polynomial:
    """Return q with f == q * d, else raise DivisionNotExact.

    Works with a single divisor: as long as f stays a multiple of d the
    graded-lex leading term of the running remainder is divisible by the
    leading term of d, so the first failed step proves inexactness.
    The running remainder lives in a dict with a heap of candidate
    monomials, so each step costs one heap pop plus the divisor tail.
    """
    if f.ring != d.ring:
        raise RingMismatch(f"{f.ring!r} vs {d.ring!r}")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if d.is_constant():
        inv = sc_div(1, d.constant_value())
        return f * inv
    de, dc = d.leading_term()
    tail = [(e, c) for e, c in d.terms.items() if e != de]
    monic = dc == 1
    rem = dict(f.terms)
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    q: dict = {}
    while heap:
        nd, ne = heapq.heappop(heap)
        e = tuple(-x for x in ne)
        rc = rem.pop(e, None)
        if rc is None:
            continue
        qe = tuple(a - b for a, b in zip(e, de))
        if any(x < 0 for x in qe):
            raise DivisionNotExact("remainder term not divisible")
        qc = rc if monic else sc_div(rc, dc)
        q[qe] = qc
        for e2, c2 in tail:
            e3 = tuple(a + b for a, b in zip(qe, e2))
            cur = rem.get(e3)
            if cur is None:
                rem[e3] = -(qc * c2)
                heapq.heappush(heap, (-sum(e3), tuple(-x for x in e3)))
            else:
                new = cur - qc * c2
                if new == 0:
                    del rem[e3]
                else:
                    rem[e3] = new
    return ring.from_terms(q)


def divides(d: Polynomial, f: Polynomial) -> bool:
    try:
        exact_divide(f, d)
        return True
    except DivisionNotExact:
        return False


# -- multivariate gcd ----------------------------------------------------

def _univariate(f: Polynomial, i: int):
    """View f as univariate in variable i: a list of coefficient
    polynomials (which do not involve variable i), lowest degree first."""
    ring = f.ring
    buckets: dict[int, dict] = {}
    for e, c in f.terms.items():
        k = e[i]
        rest = e[:i] + (0,) + e[i + 1:]
        buckets.setdefault(k, {})[rest] = c
    if not buckets:
        return []
    top = max(buckets)
    return [Polynomial(ring, buckets.get(k, {})) for k in range(top + 1)]


def _from_univariate(ring: PolyRing, coeffs, i: int) -> Polynomial:
    out: dict = {}
    for k, p in enumerate(coeffs):
        for e, c in p.terms.items():
            e2 = e[:i] + (k,) + e[i + 1:]
            out[e2] = c
    return ring.from_terms(out)


def _trim(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _pseudo_rem(u, v):
    """Classical pseudo-remainder of coefficient lists, deg u >= deg v."""
    m, n = len(u) - 1, len(v) - 1
    lc = v[-1]
    r = list(u)
    for k in range(m - n, -1, -1):
        coef = r[n + k]
        r = [c * lc for c in r]
        if not coef.is_zero():
            for j in range(n + 1):
                r[j + k] = r[j + k] - coef * v[j]
    return _trim(r)


def _content(coeffs) -> Polynomial:
    g = coeffs[0].ring.zero
    for c in coeffs:
        g = poly_gcd(g, c)
    return g


def _primitive(coeffs):
    cont = _content(coeffs)
    if cont.is_zero():
        return coeffs, cont
    return [exact_divide(c, cont) for c in coeffs], cont


def _monic(f: Polynomial) -> Polynomial:
    if f.is_zero():
        return f
    _, lc = f.leading_term()
    if lc == 1:
        return f
    inv = sc_div(1, lc)
    return f * inv


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (graded-lex leading coefficient 1); gcd(0, 0) == 0."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring!r} vs {g.ring!r}")
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    if f.is_constant() or g.is_constant():
        return f.ring.one
    mf, mg = _monic(f), _monic(g)
    if mf == mg:
        return mf
    used = [i for i in range(f.ring.nvars)
            if any(e[i] for e in f.terms) or any(e[i] for e in g.terms)]
    i = used[-1]
    fu = _univariate(f, i)
    gu = _univariate(g, i)
    fp, fc = _primitive(fu)
    gp, gc = _primitive(gu)
    cont = poly_gcd(fc, gc)
    u, v = (fp, gp) if len(fp) >= len(gp) else (gp, fp)
    while True:
        if len(v) == 1:
            pp = [f.ring.one]
            break
        r = _pseudo_rem(u, v)
        if not r:
            pp, _ = _primitive(v)
            break
        r, _ = _primitive(r)
        u, v = v, r
    out = _from_univariate(f.ring, [c * cont for c in pp], i)
    return _monic(out)


# -- rational functions --------------------------------------------------

class RationalFunction:
    """A reduced fraction of polynomials with graded-lex-monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if num.ring != den.ring:
            raise RingMismatch(f"{num.ring!r} vs {den.ring!r}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = num.ring.zero
            self.den = num.ring.one
            return
        g = poly_gcd(num, den)
        if not g.is_constant() or g.constant_value() != 1:
            num = exact_divide(num, g)
            den = exact_divide(den, g)
        _, lc = den.leading_term()
        if lc != 1:
            inv = sc_div(1, lc)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial):
        """Fast path: num/den already coprime; only rescale the denominator."""
        self = object.__new__(cls)
        if num.is_zero():
            self.num = num.ring.zero
            self.den = num.ring.one
            return self
        _, lc = den.leading_term()
        if lc != 1:
            inv = sc_div(1, lc)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_poly(cls, p: Polynomial):
        return cls._reduced(p, p.ring.one)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == self.den.ring.one

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            return RationalFunction.from_poly(self.num.ring.from_scalar(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        g = poly_gcd(b, d)
        b1 = exact_divide(b, g)
        d1 = exact_divide(d, g)
        num = a * d1 + c * b1
        den = b * d1
        h = poly_gcd(num, g)
        if not (h.is_constant() and h.constant_value() == 1):
            num = exact_divide(num, h)
            den = exact_divide(den, h)
        return RationalFunction._reduced(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        a = exact_divide(a, g1)
        d = exact_divide(d, g1)
        c = exact_divide(c, g2)
        b = exact_divide(b, g2)
        return RationalFunction._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._reduced(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def apply_auto(self, fn):
        """Apply a ring automorphism (given on polynomials); reduction is
        preserved, only the monic rescale can change."""
        return RationalFunction._reduced(fn(self.num), fn(self.den))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        ns = str(self.num)
        ds = str(self.den)
        if " " in ns or ns.startswith("-"):
            ns = f"({ns})"
        if " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"<ratfunc {self}>"


# -- linear actions ------------------------------------------------------

class LinearAction:
    """A linear substitution on the variables of a ring.

    ``matrix[i][j]`` is the coefficient of variable i in the image of
    variable j, i.e. columns are images of basis vectors.
    """

    __slots__ = ("ring", "matrix", "_images", "_mono_cache", "_is_id")

    def __init__(self, ring: PolyRing, matrix):
        self.ring = ring
        self.matrix = tuple(tuple(_coerce_scalar(c) for c in row)
                            for row in matrix)
        n = ring.nvars
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix shape does not match the ring")
        self._images = None
        self._mono_cache: dict = {}
        self._is_id = None

    @classmethod
    def identity(cls, ring: PolyRing) -> "LinearAction":
        n = ring.nvars
        return cls(ring, [[Fraction(int(i == j)) for j in range(n)]
                          for i in range(n)])

    def images(self):
        if self._images is None:
            n = self.ring.nvars
            imgs = []
            for j in range(n):
                terms = {}
                for i in range(n):
                    c = self.matrix[i][j]
                    if c != 0:
                        e = [0] * n
                        e[i] = 1
                        terms[tuple(e)] = c
                imgs.append(Polynomial(self.ring, terms))
            self._images = imgs
        return self._images

    def _monomial_image(self, e) -> Polynomial:
        got = self._mono_cache.get(e)
        if got is None:
            imgs = self.images()
            got = self.ring.one
            for i, k in enumerate(e):
                if k:
                    got = got * imgs[i] ** k
            self._mono_cache[e] = got
        return got

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring!r} vs {self.ring!r}")
        if self._is_id is None:
            self._is_id = self.is_identity()
        if self._is_id:
            return f
        out = self.ring.zero
        for e, c in f.terms.items():
            out = out + self._monomial_image(e).scale(c)
        return out

    def compose(self, other: "LinearAction") -> "LinearAction":
        """self after other."""
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        n = self.ring.nvars
        a, b = self.matrix, other.matrix
        prod = [[sum((a[i][k] * b[k][j] for k in range(n)),
                     start=Fraction(0)) for j in range(n)]
                for i in range(n)]
        return LinearAction(self.ring, prod)

    def is_identity(self) -> bool:
        n = self.ring.nvars
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def is_involution(self) -> bool:
        return self.compose(self).is_identity()

    def __eq__(self, other):
        return (isinstance(other, LinearAction) and self.ring == other.ring
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.ring, self.matrix))

    def __repr__(self):
        return f"LinearAction({self.matrix})"
