"""Three worked bialgebroid fixtures beside the nil Hecke algebra.

1.  The Weyl algebra over k[x_1..x_n]: normal-ordered elements
    sum c * x^a d^b, comultiplication by the Leibniz rule, counit by
    the constant-coefficient projection, and a red map that agrees
    with (id (x) S) after delta, where S is the anti-automorphism
    fixing x and negating d.

2.  The n-by-n matrix algebra over its diagonal subalgebra:
    delta(E_ij) = E_ij (x) E_ij, eps(E_ij) = e_i,
    red(E_ij) = E_ij (x) E_ji; every axiom is checked on the full
    basis, no sampling, and the counit representation realizes the
    matrix algebra as the endomorphisms of k^n.

3.  The rank-1 endomorphism comparison: for R = k[alpha] free of rank
    2 over the invariants R' = k[alpha^2], the dual-basis coproduct on
    R (x)_{R'} R* transports to an operator-level comultiplication on
    endomorphisms, and it agrees with delta of the nil Hecke algebra
    when both sides act on pairs of truncated polynomials.

The same rank-1 setup also answers a module-theoretic side question
honestly: with the action (r.phi)(x) = phi(r x), the functional
alpha-dual generates R* freely (alpha . alpha-dual equals 1-dual), so
R* is free of rank one and R is a Frobenius extension of R'; the
report exhibits the generator, the spanning identity, and the absence
of torsion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .coxeter import CoxeterSystem, rank_one_system
from .hopf import delta
from .linalg import rank
from .nilhecke import NilHeckeElement, gen_d, gen_w, gen_weight, nh_one
from .poly import Polynomial, PolyRing
from .sampling import DEFAULT_SEED, make_rng, random_nh
from .scalars import ScalarField

__all__ = [
    "DualModuleReport",
    "EndoCompareReport",
    "MatrixBlue",
    "MatrixElement",
    "MatrixRed",
    "MatrixReport",
    "WeylBlue",
    "WeylElement",
    "WeylRed",
    "WeylReport",
    "dual_module_structure_rank1",
    "endo_compare_rank1",
    "matrix_delta",
    "matrix_epsilon",
    "matrix_galois",
    "matrix_red",
    "matrix_rho_eps_rank",
    "matrix_suite",
    "matrix_transpose",
    "matrix_unit",
    "weyl_delta",
    "weyl_epsilon",
    "weyl_antipode",
    "weyl_from_poly",
    "weyl_gen_d",
    "weyl_gen_x",
    "weyl_id_s_delta",
    "weyl_one",
    "weyl_red",
    "weyl_right_coeffs",
    "weyl_suite",
]


# ======================================================================
# the Weyl algebra over k[x_1..x_n]
# ======================================================================

_weyl_rings: dict = {}


def weyl_ring(n: int) -> PolyRing:
    ring = _weyl_rings.get(n)
    if ring is None:
        ring = PolyRing(ScalarField(0),
                        tuple(f"x{i + 1}" for i in range(n)))
        _weyl_rings[n] = ring
    return ring


def _reorder(b, c):
    """d^b x^c in normal order: pairs ((x-exponent, d-exponent), coeff)."""
    ranges = [range(min(bi, ci) + 1) for bi, ci in zip(b, c)]
    for k in itertools.product(*ranges):
        coeff = 1
        for bi, ci, ki in zip(b, c, k):
            coeff *= comb(bi, ki) * comb(ci, ki) * factorial(ki)
        yield (tuple(ci - ki for ci, ki in zip(c, k)),
               tuple(bi - ki for bi, ki in zip(b, k)),
               Fraction(coeff))


class WeylElement:
    """Normal-ordered element sum c * x^a d^b of the Weyl algebra."""

    __slots__ = ("n", "support")

    def __init__(self, n: int, support: dict):
        self.n = n
        self.support = {k: c for k, c in support.items() if c != 0}

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        out = dict(self.support)
        for k, c in other.support.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return WeylElement(self.n, out)

    def __neg__(self):
        return WeylElement(self.n, {k: -c for k, c in self.support.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeylElement(self.n, {k: c * other
                                        for k, c in self.support.items()})
        if not isinstance(other, WeylElement):
            return NotImplemented
        out: dict = {}
        for (a, b), c1 in self.support.items():
            for (c, d), c2 in other.support.items():
                for xmid, dmid, coeff in _reorder(b, c):
                    key = (tuple(ai + xi for ai, xi in zip(a, xmid)),
                           tuple(di + bi for di, bi in zip(d, dmid)))
                    cur = out.get(key, 0)
                    cur += c1 * c2 * coeff
                    if cur == 0:
                        out.pop(key, None)
                    else:
                        out[key] = cur
        return WeylElement(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        out = weyl_one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.n == other.n and self.support == other.support

    def __hash__(self):
        return hash((self.n, frozenset(self.support.items())))

    def is_zero(self) -> bool:
        return not self.support

    def __str__(self):
        if not self.support:
            return "0"
        def keyfun(kv):
            (a, b), _ = kv
            return (sum(a) + sum(b), a, b)
        parts = []
        for (a, b), c in sorted(self.support.items(), key=keyfun):
            toks = []
            for i, e in enumerate(a):
                if e:
                    toks.append(f"x{i + 1}" + (f"^{e}" if e > 1 else ""))
            for i, e in enumerate(b):
                if e:
                    toks.append(f"d{i + 1}" + (f"^{e}" if e > 1 else ""))
            body = "*".join(toks) if toks else "1"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"WeylElement({self})"


def weyl_one(n: int) -> WeylElement:
    z = (0,) * n
    return WeylElement(n, {(z, z): Fraction(1)})


def weyl_gen_x(n: int, i: int) -> WeylElement:
    z = (0,) * n
    e = tuple(int(j == i) for j in range(n))
    return WeylElement(n, {(e, z): Fraction(1)})


def weyl_gen_d(n: int, i: int) -> WeylElement:
    z = (0,) * n
    e = tuple(int(j == i) for j in range(n))
    return WeylElement(n, {(z, e): Fraction(1)})


def weyl_from_poly(n: int, f: Polynomial) -> WeylElement:
    z = (0,) * n
    return WeylElement(n, {(e, z): c for e, c in f.terms.items()})


def _welem(n: int, f: Polynomial, b) -> WeylElement:
    """The element f(x) * d^b."""
    return WeylElement(n, {(e, b): c for e, c in f.terms.items()})


def weyl_epsilon(h: WeylElement) -> Polynomial:
    """eps(x^a d^b) = x^a if b = 0 else 0."""
    ring = weyl_ring(h.n)
    z = (0,) * h.n
    return ring.from_terms({a: c for (a, b), c in h.support.items()
                            if b == z})


def weyl_antipode(h: WeylElement) -> WeylElement:
    """The anti-automorphism fixing x and negating d, normal-ordered."""
    out = WeylElement(h.n, {})
    z = (0,) * h.n
    for (a, b), c in h.support.items():
        sign = -1 if sum(b) % 2 else 1
        piece = WeylElement(h.n, {(z, b): c * sign}) \
            * WeylElement(h.n, {(a, z): Fraction(1)})
        out = out + piece
    return out


def weyl_right_coeffs(h: WeylElement) -> dict:
    """Rewrite into the right-coefficient form sum c * d^b x^a, as a
    map (b, a) -> coefficient."""
    out: dict = {}
    for (a, b), c in h.support.items():
        ranges = [range(min(ai, bi) + 1) for ai, bi in zip(a, b)]
        for k in itertools.product(*ranges):
            coeff = 1
            for ai, bi, ki in zip(a, b, k):
                coeff *= comb(bi, ki) * comb(ai, ki) * factorial(ki)
            sign = -1 if sum(k) % 2 else 1
            key = (tuple(bi - ki for bi, ki in zip(b, k)),
                   tuple(ai - ki for ai, ki in zip(a, k)))
            cur = out.get(key, 0)
            cur += c * sign * coeff
            if cur == 0:
                out.pop(key, None)
            else:
                out[key] = cur
    return out


class _WeylTensorBase:
    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: f for k, f in entries.items() if not f.is_zero()}

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.entries)
        for k, f in other.entries.items():
            cur = out.get(k)
            g = f if cur is None else cur + f
            if g.is_zero():
                out.pop(k, None)
            else:
                out[k] = g
        return type(self)(self.n, out)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((type(self).__name__, self.n,
                     frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries


def _tacc(out: dict, key, f: Polynomial):
    cur = out.get(key)
    g = f if cur is None else cur + f
    if g.is_zero():
        out.pop(key, None)
    else:
        out[key] = g


class WeylBlue(_WeylTensorBase):
    """Blue tensor square of the Weyl algebra over k[x]: entries map
    (b, q) to f meaning (f d^b) (x) d^q."""

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def unit(cls, n):
        z = (0,) * n
        return cls(n, {(z, z): weyl_ring(n).one})

    def scale(self, f: Polynomial) -> "WeylBlue":
        return WeylBlue(self.n, {k: f * g for k, g in self.entries.items()})

    def mul(self, other: "WeylBlue") -> "WeylBlue":
        n = self.n
        out: dict = {}
        ring = weyl_ring(n)
        for (b, q), f in self.entries.items():
            for (b2, q2), g in other.entries.items():
                prod = _welem(n, f, b) * _welem(n, g, b2)
                q3 = tuple(x + y for x, y in zip(q, q2))
                for (a3, b3), c3 in prod.support.items():
                    _tacc(out, (b3, q3), ring.from_terms({a3: c3}))
        return WeylBlue(n, out)

    def right_mul_slot1(self, g: Polynomial) -> "WeylBlue":
        n = self.n
        ring = weyl_ring(n)
        out: dict = {}
        for (b, q), f in self.entries.items():
            prod = _welem(n, f, b) * weyl_from_poly(n, g)
            for (a2, b2), c2 in prod.support.items():
                _tacc(out, (b2, q), ring.from_terms({a2: c2}))
        return WeylBlue(n, out)

    def right_mul_slot2(self, g: Polynomial) -> "WeylBlue":
        n = self.n
        ring = weyl_ring(n)
        out: dict = {}
        for (b, q), f in self.entries.items():
            prod = _welem(n, ring.one, q) * weyl_from_poly(n, g)
            for (a2, q2), c2 in prod.support.items():
                _tacc(out, (b, q2), f * ring.from_terms({a2: c2}))
        return WeylBlue(n, out)

    def takeuchi_ok(self) -> bool:
        ring = weyl_ring(self.n)
        return all(self.right_mul_slot1(ring.var(v))
                   == self.right_mul_slot2(ring.var(v))
                   for v in ring.variables)

    def counit_contract(self, slot: int) -> WeylElement:
        z = (0,) * self.n
        out = WeylElement(self.n, {})
        for (b, q), f in self.entries.items():
            if slot == 0 and b == z:
                out = out + _welem(self.n, f, q)
            elif slot == 1 and q == z:
                out = out + _welem(self.n, f, b)
        return out


class WeylRed(_WeylTensorBase):
    """Red tensor square: entries map (b, q) to f meaning
    d^b (x) (f d^q); the first slot carries no residual coefficient."""

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def unit(cls, n):
        z = (0,) * n
        return cls(n, {(z, z): weyl_ring(n).one})

    def mul_op(self, other: "WeylRed") -> "WeylRed":
        n = self.n
        ring = weyl_ring(n)
        out: dict = {}
        for (b, q), f in self.entries.items():
            for (b2, q2), g in other.entries.items():
                b3 = tuple(x + y for x, y in zip(b, b2))
                prod = _welem(n, g, q2) * _welem(n, f, q)
                for (a3, q3), c3 in prod.support.items():
                    _tacc(out, (b3, q3), ring.from_terms({a3: c3}))
        return WeylRed(n, out)

    def left_mul_slot1(self, g: Polynomial) -> "WeylRed":
        n = self.n
        ring = weyl_ring(n)
        out: dict = {}
        for (b, q), f in self.entries.items():
            rc = weyl_right_coeffs(_welem(n, g, b))
            for (b2, a2), c2 in rc.items():
                _tacc(out, (b2, q), ring.from_terms({a2: c2}) * f)
        return WeylRed(n, out)

    def right_mul_slot2(self, g: Polynomial) -> "WeylRed":
        n = self.n
        ring = weyl_ring(n)
        out: dict = {}
        for (b, q), f in self.entries.items():
            prod = _welem(n, f, q) * weyl_from_poly(n, g)
            for (a2, q2), c2 in prod.support.items():
                _tacc(out, (b, q2), ring.from_terms({a2: c2}))
        return WeylRed(n, out)

    def takeuchi_ok(self) -> bool:
        ring = weyl_ring(self.n)
        return all(self.left_mul_slot1(ring.var(v))
                   == self.right_mul_slot2(ring.var(v))
                   for v in ring.variables)


def weyl_delta(h: WeylElement) -> WeylBlue:
    """Leibniz comultiplication: delta(x^a d^b) =
    x^a * sum over k <= b of prod binom(b_i, k_i) d^k (x) d^(b-k)."""
    n = h.n
    ring = weyl_ring(n)
    out: dict = {}
    for (a, b), c in h.support.items():
        ranges = [range(bi + 1) for bi in b]
        for k in itertools.product(*ranges):
            coeff = 1
            for bi, ki in zip(b, k):
                coeff *= comb(bi, ki)
            rest = tuple(bi - ki for bi, ki in zip(b, k))
            _tacc(out, (k, rest),
                  ring.from_terms({a: c * coeff}))
    return WeylBlue(n, out)


_weyl_red_cache: dict = {}


def _weyl_red_dpow(n: int, b) -> WeylRed:
    got = _weyl_red_cache.get((n, b))
    if got is None:
        if sum(b) == 0:
            got = WeylRed.unit(n)
        else:
            i = next(j for j, e in enumerate(b) if e)
            z = (0,) * n
            e = tuple(int(j == i) for j in range(n))
            ring = weyl_ring(n)
            gen = WeylRed(n, {(e, z): ring.one,
                              (z, e): -ring.one})
            rest = tuple(bi - int(j == i) for j, bi in enumerate(b))
            got = gen.mul_op(_weyl_red_dpow(n, rest))
        _weyl_red_cache[(n, b)] = got
    return got


def weyl_red(h: WeylElement) -> WeylRed:
    """Multiplicative red map with red(x_i) = 1 (x) x_i and
    red(d_i) = d_i (x) 1 - 1 (x) d_i."""
    n = h.n
    ring = weyl_ring(n)
    z = (0,) * n
    out = WeylRed.zero(n)
    for (a, b), c in h.support.items():
        xpart = WeylRed(n, {(z, z): ring.from_terms({a: c})})
        out = out + xpart.mul_op(_weyl_red_dpow(n, b))
    return out


def weyl_id_s_delta(h: WeylElement) -> WeylRed:
    """(id (x) S) after delta, renormalized into the red convention by
    rewriting slot one into right-coefficient form and moving those
    coefficients across the balancing."""
    n = h.n
    ring = weyl_ring(n)
    out: dict = {}
    for (k, m), f in weyl_delta(h).entries.items():
        sign = -1 if sum(m) % 2 else 1
        rc = weyl_right_coeffs(_welem(n, f, k))
        for (b2, a2), c2 in rc.items():
            _tacc(out, (b2, m), ring.from_terms({a2: c2 * sign}))
    return WeylRed(n, out)


@dataclass
class WeylReport:
    n: int
    max_deg: int
    relation_example: bool
    epsilon_examples: bool
    takeuchi_all: bool
    red_matches_id_s_delta: bool
    delta_morphism: bool
    counit_laws: bool
    holds: bool = False

    def lines(self):
        yield f"Weyl algebra, n = {self.n}, monomial degree <= {self.max_deg}"
        yield "  d1 * x1 = x1*d1 + 1:            " + _pf(self.relation_example)
        yield "  counit formula on examples:     " + _pf(self.epsilon_examples)
        yield "  delta lands in Takeuchi:        " + _pf(self.takeuchi_all)
        yield "  red = (id (x) S) o delta:       " + _pf(
            self.red_matches_id_s_delta)
        yield "  delta is multiplicative:        " + _pf(self.delta_morphism)
        yield "  counit laws:                    " + _pf(self.counit_laws)


def _pf(b: bool) -> str:
    return "PASS" if b else "FAIL"


def _weyl_monomials(n: int, max_deg: int):
    for total in range(max_deg + 1):
        for xa in itertools.product(range(total + 1), repeat=n):
            rest = total - sum(xa)
            if rest < 0:
                continue
            for db in itertools.product(range(rest + 1), repeat=n):
                if sum(db) == rest:
                    yield WeylElement(n, {(xa, db): Fraction(1)})


def weyl_suite(n: int, max_deg: int = 4, seed: int = DEFAULT_SEED,
               samples: int = 10) -> WeylReport:
    ring = weyl_ring(n)
    d1, x1 = weyl_gen_d(n, 0), weyl_gen_x(n, 0)
    relation = (d1 * x1 == x1 * d1 + weyl_one(n))
    eps_ok = (weyl_epsilon(x1 * x1 * d1).is_zero()
              and weyl_epsilon(x1 * x1) == ring.var(ring.variables[0]) ** 2
              and weyl_epsilon(weyl_one(n)) == ring.one)
    monos = list(_weyl_monomials(n, max_deg))
    takeuchi = all(weyl_delta(m).takeuchi_ok() for m in monos)
    red_id = all(weyl_red(m) == weyl_id_s_delta(m) for m in monos)
    counit = all(weyl_delta(m).counit_contract(0) == m
                 and weyl_delta(m).counit_contract(1) == m for m in monos)
    rnd = make_rng(seed)
    morphism = True
    small = [m for m in monos if sum(m.support and next(
        iter(m.support))[0]) + sum(next(iter(m.support))[1]) <= 3]
    for _ in range(samples):
        a = rnd.choice(small)
        b = rnd.choice(small)
        if weyl_delta(a * b) != weyl_delta(a).mul(weyl_delta(b)):
            morphism = False
            break
    rep = WeylReport(n, max_deg, relation, eps_ok, takeuchi, red_id,
                     morphism, counit)
    rep.holds = all((relation, eps_ok, takeuchi, red_id, morphism, counit))
    return rep


# ======================================================================
# the matrix algebra over its diagonal subalgebra
# ======================================================================

class MatrixElement:
    """An n-by-n matrix over the rationals, sparse by entry."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: c for k, c in entries.items() if c != 0}

    def __add__(self, other):
        if not isinstance(other, MatrixElement):
            return NotImplemented
        out = dict(self.entries)
        for k, c in other.entries.items():
            cur = out.get(k, 0)
            cur += c
            if cur == 0:
                out.pop(k, None)
            else:
                out[k] = cur
        return MatrixElement(self.n, out)

    def __neg__(self):
        return MatrixElement(self.n,
                             {k: -c for k, c in self.entries.items()})

    def __sub__(self, other):
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MatrixElement):
            return NotImplemented
        out: dict = {}
        for (i, j), c1 in self.entries.items():
            for (p, q), c2 in other.entries.items():
                if j == p:
                    cur = out.get((i, q), 0)
                    cur += c1 * c2
                    if cur == 0:
                        out.pop((i, q), None)
                    else:
                        out[(i, q)] = cur
        return MatrixElement(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for (i, j) in sorted(self.entries):
            c = self.entries[(i, j)]
            body = f"E{i + 1}{j + 1}"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def matrix_unit(n: int, i: int, j: int) -> MatrixElement:
    return MatrixElement(n, {(i, j): Fraction(1)})


def matrix_transpose(m: MatrixElement) -> MatrixElement:
    return MatrixElement(m.n,
                         {(j, i): c for (i, j), c in m.entries.items()})


def _diag_mul(m: MatrixElement, diag, side: str) -> MatrixElement:
    if side == "left":
        return MatrixElement(m.n, {(i, j): diag[i] * c
                                   for (i, j), c in m.entries.items()})
    return MatrixElement(m.n, {(i, j): c * diag[j]
                               for (i, j), c in m.entries.items()})


class MatrixBlue:
    """Blue tensor square over the diagonals: basis E_ij (x) E_il,
    keyed (i, j, l)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: c for k, c in entries.items() if c != 0}

    def __add__(self, other):
        out = dict(self.entries)
        for k, c in other.entries.items():
            cur = out.get(k, 0)
            cur += c
            if cur == 0:
                out.pop(k, None)
            else:
                out[k] = cur
        return MatrixBlue(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, MatrixBlue):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def mul(self, other: "MatrixBlue") -> "MatrixBlue":
        out: dict = {}
        for (i, j, l), c1 in self.entries.items():
            for (p, q, r), c2 in other.entries.items():
                if j == p and l == p:
                    key = (i, q, r)
                    cur = out.get(key, 0)
                    cur += c1 * c2
                    if cur == 0:
                        out.pop(key, None)
                    else:
                        out[key] = cur
        return MatrixBlue(self.n, out)

    def right_mul_slot1(self, diag) -> "MatrixBlue":
        return MatrixBlue(self.n, {(i, j, l): c * diag[j]
                                   for (i, j, l), c in self.entries.items()})

    def right_mul_slot2(self, diag) -> "MatrixBlue":
        return MatrixBlue(self.n, {(i, j, l): c * diag[l]
                                   for (i, j, l), c in self.entries.items()})

    def takeuchi_ok(self) -> bool:
        for t in range(self.n):
            diag = tuple(Fraction(int(p == t)) for p in range(self.n))
            if self.right_mul_slot1(diag) != self.right_mul_slot2(diag):
                return False
        return True

    def counit_contract(self, slot: int) -> MatrixElement:
        out: dict = {}
        for (i, j, l), c in self.entries.items():
            key = (i, l) if slot == 0 else (i, j)
            cur = out.get(key, 0)
            cur += c
            if cur == 0:
                out.pop(key, None)
            else:
                out[key] = cur
        return MatrixElement(self.n, out)


class MatrixRed:
    """Red tensor square: basis E_ij (x) E_jl, keyed (i, j, l)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: c for k, c in entries.items() if c != 0}

    def __eq__(self, other):
        if not isinstance(other, MatrixRed):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))


def matrix_delta(m: MatrixElement) -> MatrixBlue:
    return MatrixBlue(m.n, {(i, j, j): c
                            for (i, j), c in m.entries.items()})


def matrix_epsilon(m: MatrixElement):
    """eps(E_ij) = e_i, as a diagonal vector."""
    out = [Fraction(0)] * m.n
    for (i, _), c in m.entries.items():
        out[i] += c
    return tuple(out)


def matrix_red(m: MatrixElement) -> MatrixRed:
    return MatrixRed(m.n, {(i, j, i): c
                           for (i, j), c in m.entries.items()})


def matrix_id_s_delta(m: MatrixElement) -> MatrixRed:
    """(id (x) transpose) after delta, renormalized: the image of a
    blue key (i, j, l) survives exactly when l = j."""
    out: dict = {}
    for (i, j, l), c in matrix_delta(m).entries.items():
        if l == j:
            key = (i, j, i)
            out[key] = out.get(key, 0) + c
    return MatrixRed(m.n, out)


def matrix_galois(t: MatrixRed) -> MatrixBlue:
    """Gal(E_ij (x) E_jl) = delta(E_ij) * (1 (x) E_jl) = E_ij (x) E_il."""
    return MatrixBlue(t.n, dict(t.entries))


def matrix_rho_eps_rank(n: int) -> int:
    """Rank of the counit representation E_ij |-> (e_l |-> eps(E_ij e_l))
    as a linear map into the endomorphisms of k^n."""
    rows = []
    for i in range(n):
        for j in range(n):
            row = []
            eij = matrix_unit(n, i, j)
            for l in range(n):
                el = MatrixElement(n, {(l, l): Fraction(1)})
                row.extend(matrix_epsilon(eij * el))
            rows.append(row)
    return rank(rows)


@dataclass
class MatrixReport:
    n: int
    coassoc: bool
    counit_laws: bool
    takeuchi_all: bool
    galois_red_section: bool
    red_matches_id_s_delta: bool
    delta_morphism: bool
    rho_eps_iso: bool
    holds: bool = False

    def lines(self):
        yield f"matrix algebra over the diagonals, n = {self.n}"
        yield "  coassociativity:                " + _pf(self.coassoc)
        yield "  counit laws:                    " + _pf(self.counit_laws)
        yield "  delta lands in Takeuchi:        " + _pf(self.takeuchi_all)
        yield "  galois o red = ( . (x) 1):      " + _pf(
            self.galois_red_section)
        yield "  red = (id (x) transpose) o delta: " + _pf(
            self.red_matches_id_s_delta)
        yield "  delta is multiplicative:        " + _pf(self.delta_morphism)
        yield "  counit representation is iso:   " + _pf(self.rho_eps_iso)


def _matrix_coassoc_ok(m: MatrixElement) -> bool:
    left: dict = {}
    right: dict = {}
    for (i, j, l), c in matrix_delta(m).entries.items():
        # delta on slot one of E_ij (x) E_il, then on slot two
        key = (i, j, j, l)
        left[key] = left.get(key, 0) + c
        key = (i, j, l, l)
        right[key] = right.get(key, 0) + c
    left = {k: c for k, c in left.items() if c != 0}
    right = {k: c for k, c in right.items() if c != 0}
    return left == right


def _matrix_tensor_embed(m: MatrixElement) -> MatrixBlue:
    """m (x) 1 in blue normal form: E_ij (x) E_ii."""
    return MatrixBlue(m.n, {(i, j, i): c
                            for (i, j), c in m.entries.items()})


def matrix_suite(n: int) -> MatrixReport:
    units = [matrix_unit(n, i, j) for i in range(n) for j in range(n)]
    dense = MatrixElement(n, {(i, j): Fraction(2 * i + j + 1)
                              for i in range(n) for j in range(n)})
    cases = units + [dense]
    coassoc = all(_matrix_coassoc_ok(m) for m in cases)
    counit = all(matrix_delta(m).counit_contract(0) == m
                 and matrix_delta(m).counit_contract(1) == m for m in cases)
    takeuchi = all(matrix_delta(m).takeuchi_ok() for m in cases)
    galois_ok = all(matrix_galois(matrix_red(m)) == _matrix_tensor_embed(m)
                    for m in cases)
    red_id = all(matrix_red(m) == matrix_id_s_delta(m) for m in cases)
    morphism = all(matrix_delta(a * b) == matrix_delta(a).mul(matrix_delta(b))
                   for a in units for b in units)
    iso = (matrix_rho_eps_rank(n) == n * n)
    rep = MatrixReport(n, coassoc, counit, takeuchi, galois_ok, red_id,
                       morphism, iso)
    rep.holds = all((coassoc, counit, takeuchi, galois_ok, red_id,
                     morphism, iso))
    return rep


# ======================================================================
# rank-1 endomorphism comparison and the dual module
# ======================================================================

def _even_odd(p: Polynomial):
    """Split p in k[alpha] as even + alpha * odd with both parts in the
    invariant subring k[alpha^2]."""
    ring = p.ring
    even: dict = {}
    odd: dict = {}
    for (e,), c in p.terms.items():
        if e % 2 == 0:
            even[(e,)] = c
        else:
            odd[(e - 1,)] = c
    return ring.from_terms(even), ring.from_terms(odd)


class DualFunctional:
    """An invariant-linear functional on k[alpha], stored by its values
    phi(1) and phi(alpha), both in k[alpha^2]."""

    __slots__ = ("system", "u0", "u1")

    def __init__(self, system: CoxeterSystem, u0: Polynomial,
                 u1: Polynomial):
        for u in (u0, u1):
            if any(e[0] % 2 for e in u.terms):
                raise ValueError("functional values must be invariant")
        self.system = system
        self.u0 = u0
        self.u1 = u1

    def __call__(self, p: Polynomial) -> Polynomial:
        even, odd = _even_odd(p)
        return even * self.u0 + odd * self.u1

    def r_mul(self, r: Polynomial) -> "DualFunctional":
        """(r . phi)(x) = phi(r x)."""
        re, ro = _even_odd(r)
        alpha2 = self.system.roots[0] ** 2
        return DualFunctional(self.system,
                              re * self.u0 + ro * self.u1,
                              ro * alpha2 * self.u0 + re * self.u1)

    def is_zero(self) -> bool:
        return self.u0.is_zero() and self.u1.is_zero()

    def __eq__(self, other):
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return self.u0 == other.u0 and self.u1 == other.u1

    def __hash__(self):
        return hash((self.u0, self.u1))

    def __str__(self):
        return f"(1 -> {self.u0}, alpha -> {self.u1})"


@dataclass
class EndoCompareReport:
    trunc: int
    cases: list = field(default_factory=list)
    holds: bool = False

    def lines(self):
        yield (f"endomorphism comparison on polynomials of degree <= "
               f"{self.trunc} (doubled grading)")
        for label, ok in self.cases:
            yield f"  h = {label}: " + _pf(ok)


def endo_compare_rank1(system: CoxeterSystem | None = None, trunc: int = 6,
                       seed: int = DEFAULT_SEED,
                       samples: int = 10) -> EndoCompareReport:
    """Compare delta against the dual-basis coproduct, as operators on
    pairs of truncated polynomials.

    Side A applies the two slots of delta(h) to p and q separately.
    Side B expands the endomorphism rho(h) in the basis {1, alpha} with
    dual functionals, applies the dual-basis coproduct
    mu*(b_i-dual) = sum b_i-dual(b_j b_l) b_j-dual (x) b_l-dual,
    and evaluates the transported tensor on (p, q).
    """
    if system is None:
        system = rank_one_system()
    if system.rank != 1:
        raise ValueError("the comparison is a rank-1 construction")
    ring = system.ring
    alpha = system.roots[0]
    basis = [ring.one, alpha]
    duals = [DualFunctional(system, ring.one, ring.zero),
             DualFunctional(system, ring.zero, ring.one)]
    # c[i][j][l] = b_i-dual(b_j * b_l), an invariant polynomial
    c = [[[duals[i](basis[j] * basis[l]) for l in range(2)]
          for j in range(2)] for i in range(2)]
    monos = [ring.var(ring.variables[0]) ** k
             for k in range(trunc // 2 + 1)]

    def side_a(h, p, q):
        out = ring.zero
        for (v, w), f in delta(h).entries.items():
            out = out + f * system.demazure_word(v.word, p) \
                * system.demazure_word(w.word, q)
        return out

    def side_b(h, p, q):
        tb = [h.act(b) for b in basis]
        out = ring.zero
        for i in range(2):
            for j in range(2):
                for l in range(2):
                    cij = c[i][j][l]
                    if cij.is_zero():
                        continue
                    out = out + tb[i] * cij * duals[j](p) * duals[l](q)
        return out

    def check(h):
        return all(side_a(h, p, q) == side_b(h, p, q)
                   for p in monos for q in monos)

    named = [
        ("alpha", gen_weight(system, alpha)),
        ("d[s]", gen_d(system, 0)),
        ("w[s]", gen_w(system, 0)),
        ("d[s]*alpha", gen_d(system, 0) * gen_weight(system, alpha)),
    ]
    rep = EndoCompareReport(trunc)
    for label, h in named:
        rep.cases.append((label, check(h)))
    rnd = make_rng(seed)
    for k in range(samples):
        h = random_nh(rnd, system, max_deg=3)
        rep.cases.append((f"random #{k + 1}", check(h)))
    rep.holds = all(ok for _, ok in rep.cases)
    return rep


@dataclass
class DualModuleReport:
    relation_holds: bool
    generator_spans: bool
    torsion_free: bool
    injective_on_truncation: bool
    holds: bool = False

    def lines(self):
        yield "dual module of k[alpha] over k[alpha^2]"
        yield ("  alpha . alpha-dual = 1-dual:    "
               + _pf(self.relation_holds))
        yield ("  alpha-dual generates freely:    "
               + _pf(self.generator_spans))
        yield ("  no torsion on monomials:        "
               + _pf(self.torsion_free))
        yield ("  r -> r . alpha-dual injective:  "
               + _pf(self.injective_on_truncation))


def dual_module_structure_rank1(system: CoxeterSystem | None = None,
                                max_deg: int = 8) -> DualModuleReport:
    """Compute the module structure of the dual of k[alpha] over the
    invariants under (r . phi)(x) = phi(r x).

    The functional alpha-dual is a free generator: alpha . alpha-dual
    equals 1-dual, every functional phi equals
    (phi(alpha) + phi(1) * alpha) . alpha-dual, and r . alpha-dual
    vanishes only for r = 0.  In particular the dual is free of rank
    one and the ring extension is Frobenius.
    """
    if system is None:
        system = rank_one_system()
    if system.rank != 1:
        raise ValueError("the dual-module computation is rank-1")
    ring = system.ring
    alpha = system.roots[0]
    one_dual = DualFunctional(system, ring.one, ring.zero)
    alpha_dual = DualFunctional(system, ring.zero, ring.one)
    relation = (alpha_dual.r_mul(alpha) == one_dual)
    a2 = alpha * alpha
    probes = [one_dual, alpha_dual,
              DualFunctional(system, a2, ring.one),
              DualFunctional(system, a2 * a2 + ring.one, a2),
              DualFunctional(system, 3 * a2, 2 * a2 * a2)]
    spans = all(alpha_dual.r_mul(phi.u1 + phi.u0 * alpha) == phi
                for phi in probes)
    a = ring.var(ring.variables[0])
    monos = [a ** k for k in range(1, max_deg + 1)]
    torsion = all(not alpha_dual.r_mul(r).is_zero()
                  and not one_dual.r_mul(r).is_zero() for r in monos)
    images = [alpha_dual.r_mul(r) for r in [ring.one] + monos]
    injective = len(set(images)) == len(images) \
        and not any(im.is_zero() for im in images)
    rep = DualModuleReport(relation, spans, torsion, injective)
    rep.holds = all((relation, spans, torsion, injective))
    return rep
