"""The twisted group algebra over the fraction field, as an oracle.

Elements are finite sums  sum_w r_w * w  with coefficients from the
fraction field, multiplied with a twist by the group action:

    (r * v) * (q * w) = (r * v(q)) * (v w).

The nil Hecke algebra embeds via  d_s |-> (1/root_s) * (1 - s), and on
this side every structure map has a closed form that never touches the
nil Hecke normal-form arithmetic:

    delta(r * g) = r * (g (x) g)
    eps(sum r_w w) = sum r_w
    red(r * g) = g (x) ginv(r) * ginv
    antipode(sum r_w w) = sum winv(r_w) * winv

so images under the embedding can be compared against the intrinsic
maps as an independent cross-check.  The antipode exists here because
the root coefficients are invertible; pulling it back along the
embedding lands outside the polynomial-coefficient subalgebra, which is
detected by `in_image_of_nh`.

Every denominator this algebra ever produces lies in the multiplicative
set generated by the roots w(root_s), so coefficients are kept as a
:class:`RootFraction`: a polynomial numerator over a multiset of monic
linear forms.  Reduction then only ever divides by those forms, which
keeps the arithmetic exact without any multivariate gcd.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .coxeter import CoxeterSystem, GroupElement, SystemMismatch
from .nilhecke import NilHeckeElement
from .poly import DivisionNotExact, Polynomial, exact_divide
from .scalars import QuadraticScalar, sc_div
from .tensors import BlueTensor, RedTensor

__all__ = [
    "QWElement",
    "QWTensor",
    "RootFraction",
    "antipode_qw",
    "blue_to_qw",
    "delta_qw",
    "embed",
    "embed_basis",
    "epsilon_qw",
    "eps_id_red_qw",
    "in_image_of_nh",
    "oracle_equal",
    "qw_group",
    "qw_one",
    "qw_to_nh",
    "qw_zero",
    "red_qw",
    "red_to_qw",
    "to_nh_coords",
]


def _root_table(system: CoxeterSystem):
    table = system.caches.get("root_table")
    if table is None:
        table = {"ids": {}, "polys": []}
        system.caches["root_table"] = table
    return table


def _root_split(system: CoxeterSystem, p: Polynomial):
    """Write a nonzero linear form as  lc * beta  with beta monic, and
    return (lc, id of beta) in the per-system root table."""
    _, lc = p.leading_term()
    monic = p if lc == 1 else p * sc_div(1, lc)
    table = _root_table(system)
    i = table["ids"].get(monic)
    if i is None:
        i = len(table["polys"])
        table["ids"][monic] = i
        table["polys"].append(monic)
    return lc, i


def _den_poly(system: CoxeterSystem, ids) -> Polynomial:
    out = system.ring.one
    polys = _root_table(system)["polys"]
    for i in ids:
        out = out * polys[i]
    return out


class RootFraction:
    """An element of the fraction field whose denominator is a product
    of roots, stored as a polynomial numerator over a multiset of monic
    linear forms (root ids in the per-system table).

    The representation is canonical: `_make` cancels every root that
    divides the numerator, and monic linear forms are pairwise
    non-associate primes, so equal fractions have equal (num, den)
    pairs.  All arithmetic stays inside this localization except
    division, which raises when the quotient would leave it.
    """

    __slots__ = ("system", "num", "den")

    def __init__(self, system: CoxeterSystem, num: Polynomial, den=()):
        made = RootFraction._make(system, num, tuple(den))
        self.system = system
        self.num = made.num
        self.den = made.den

    @classmethod
    def _raw(cls, system, num, den):
        self = object.__new__(cls)
        self.system = system
        self.num = num
        self.den = den
        return self

    @classmethod
    def _make(cls, system, num, den):
        if num.is_zero():
            return cls._raw(system, system.ring.zero, ())
        if den:
            counts = Counter(den)
            polys = _root_table(system)["polys"]
            for i in sorted(counts):
                while counts[i]:
                    try:
                        num = exact_divide(num, polys[i])
                    except DivisionNotExact:
                        break
                    counts[i] -= 1
            den = tuple(sorted(counts.elements()))
        return cls._raw(system, num, den)

    @classmethod
    def from_poly(cls, system, p: Polynomial):
        return cls._raw(system, p, ())

    def _coerce(self, other):
        if isinstance(other, RootFraction):
            return other
        if isinstance(other, Polynomial):
            return RootFraction._raw(self.system, other, ())
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            return RootFraction._raw(
                self.system, self.system.ring.from_scalar(other), ())
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.den and not o.den:
            return RootFraction._raw(self.system, self.num + o.num, ())
        c1, c2 = Counter(self.den), Counter(o.den)
        lcm = c1 | c2
        n1 = self.num * _den_poly(self.system, (lcm - c1).elements())
        n2 = o.num * _den_poly(self.system, (lcm - c2).elements())
        return RootFraction._make(self.system, n1 + n2,
                                  tuple(sorted(lcm.elements())))

    __radd__ = __add__

    def __neg__(self):
        return RootFraction._raw(self.system, -self.num, self.den)

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
        return RootFraction._make(self.system, self.num * o.num,
                                  tuple(sorted(self.den + o.den)))

    __rmul__ = __mul__

    def inverse(self):
        return RootFraction._raw(self.system, self.system.ring.one,
                                 ()) / self

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero fraction")
        num = self.num * _den_poly(self.system, o.den)
        if o.num.is_constant():
            num = num * sc_div(1, o.num.constant_value())
        else:
            try:
                num = exact_divide(num, o.num)
            except DivisionNotExact:
                raise ZeroDivisionError(
                    "quotient leaves the localization at the roots")
        return RootFraction._make(self.system, num, self.den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def apply_auto(self, act):
        """Apply a ring automorphism that permutes the roots up to
        scalars (any group action does)."""
        num = act(self.num)
        if not self.den:
            return RootFraction._raw(self.system, num, ())
        den = []
        polys = _root_table(self.system)["polys"]
        scal = 1
        for i in self.den:
            lc, j = _root_split(self.system, act(polys[i]))
            den.append(j)
            if lc != 1:
                scal = scal * lc
        if scal != 1:
            num = num * sc_div(1, scal)
        return RootFraction._raw(self.system, num, tuple(sorted(den)))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if not self.den:
            return str(self.num)
        ns = str(self.num)
        if " " in ns or ns.startswith("-"):
            ns = f"({ns})"
        polys = _root_table(self.system)["polys"]
        parts = []
        for i in self.den:
            ps = str(polys[i])
            parts.append(f"({ps})" if " " in ps else ps)
        ds = "*".join(parts)
        if len(parts) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"<rootfrac {self}>"


def _rf(system: CoxeterSystem, value) -> RootFraction | None:
    if isinstance(value, RootFraction):
        return value
    if isinstance(value, Polynomial):
        return RootFraction.from_poly(system, value)
    if isinstance(value, (int, Fraction, QuadraticScalar)):
        return RootFraction.from_poly(system, system.ring.from_scalar(value))
    return None


class QWElement:
    """A finite sum of group elements with fraction-field coefficients."""

    __slots__ = ("system", "support")

    def __init__(self, system: CoxeterSystem, support: dict):
        self.system = system
        self.support = {w: r for w, r in support.items() if not r.is_zero()}

    def _check(self, other: "QWElement"):
        if self.system is not other.system:
            raise SystemMismatch("elements from different systems")

    def __add__(self, other):
        if not isinstance(other, QWElement):
            return NotImplemented
        self._check(other)
        out = dict(self.support)
        for w, r in other.support.items():
            cur = out.get(w)
            out[w] = r if cur is None else cur + r
        return QWElement(self.system, out)

    def __neg__(self):
        return QWElement(self.system, {w: -r for w, r in self.support.items()})

    def __sub__(self, other):
        if not isinstance(other, QWElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QWElement):
            r = _rf(self.system, other)
            if r is None:
                return NotImplemented
            other = QWElement(self.system, {self.system.one: r})
        self._check(other)
        out: dict = {}
        for v, r in self.support.items():
            for w, q in other.support.items():
                vw = v * w
                piece = r * q.apply_auto(v.action)
                cur = out.get(vw)
                out[vw] = piece if cur is None else cur + piece
        return QWElement(self.system, out)

    def __rmul__(self, other):
        r = _rf(self.system, other)
        if r is None:
            return NotImplemented
        return QWElement(self.system,
                         {w: r * q for w, q in self.support.items()})

    def __eq__(self, other):
        if not isinstance(other, QWElement):
            return NotImplemented
        return self.system is other.system and self.support == other.support

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def is_zero(self) -> bool:
        return not self.support

    def sorted_items(self):
        return sorted(self.support.items(),
                      key=lambda kv: kv[0].sort_key())

    def __str__(self):
        if not self.support:
            return "0"
        parts = []
        for w, r in self.sorted_items():
            ws = "1" if w.is_identity() else "*".join(w.name_word())
            rs = str(r)
            if rs == "1":
                parts.append(ws)
            elif " " in rs and not (rs.startswith("(") and rs.endswith(")")):
                parts.append(f"({rs}) * {ws}")
            else:
                parts.append(f"{rs} * {ws}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QWElement({self})"


def qw_zero(system: CoxeterSystem) -> QWElement:
    return QWElement(system, {})


def qw_one(system: CoxeterSystem) -> QWElement:
    return qw_group(system, system.one)


def qw_group(system: CoxeterSystem, w: GroupElement) -> QWElement:
    return QWElement(system, {w: _rf(system, 1)})


def embed_gen(system: CoxeterSystem, s) -> QWElement:
    """d_s |-> (1/root_s) * (1 - s)."""
    j = system.gen_index(s)
    lc, rid = _root_split(system, system.roots[j])
    inv = RootFraction._raw(
        system, system.ring.from_scalar(sc_div(1, lc)), (rid,))
    return QWElement(system, {system.one: inv,
                              system.gen_element(j): -inv})


def embed_basis(system: CoxeterSystem, w: GroupElement) -> QWElement:
    cache = system.caches.setdefault("qw_embed_basis", {})
    got = cache.get(w)
    if got is None:
        if w.is_identity():
            got = qw_one(system)
        else:
            j = w.word[0]
            rest = system.element_from_word(w.word[1:])
            got = embed_gen(system, j) * embed_basis(system, rest)
        cache[w] = got
    return got


def embed(h: NilHeckeElement) -> QWElement:
    out = qw_zero(h.system)
    for w, f in h.support.items():
        out = out + f * embed_basis(h.system, w)
    return out


def oracle_equal(a: NilHeckeElement, b: NilHeckeElement) -> bool:
    return embed(a) == embed(b)


# -- structure maps in closed form ---------------------------------------

class QWTensor:
    """Normal form of a balanced tensor square of the twisted group
    algebra: coefficient by basis pair, stored on the second slot."""

    __slots__ = ("system", "entries")

    def __init__(self, system: CoxeterSystem, entries: dict):
        self.system = system
        self.entries = {k: r for k, r in entries.items() if not r.is_zero()}

    def __add__(self, other):
        if not isinstance(other, QWTensor):
            return NotImplemented
        out = dict(self.entries)
        for k, r in other.entries.items():
            cur = out.get(k)
            out[k] = r if cur is None else cur + r
        return QWTensor(self.system, out)

    def __eq__(self, other):
        if not isinstance(other, QWTensor):
            return NotImplemented
        return self.system is other.system and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __str__(self):
        if not self.entries:
            return "0"
        def name(w):
            return "1" if w.is_identity() else "*".join(w.name_word())
        keys = sorted(self.entries,
                      key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        parts = []
        for k in keys:
            rs = str(self.entries[k])
            if " " in rs:
                rs = f"({rs})"
            parts.append(f"{rs} * {name(k[0])} (x) {name(k[1])}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QWTensor({self})"


def delta_qw(x: QWElement) -> QWTensor:
    return QWTensor(x.system, {(w, w): r for w, r in x.support.items()})


def epsilon_qw(x: QWElement) -> RootFraction:
    out = _rf(x.system, 0)
    for r in x.support.values():
        out = out + r
    return out


def red_qw(x: QWElement) -> QWTensor:
    out: dict = {}
    for w, r in x.support.items():
        wi = w.inverse()
        piece = r.apply_auto(w.inv_action)
        key = (w, wi)
        cur = out.get(key)
        out[key] = piece if cur is None else cur + piece
    return QWTensor(x.system, out)


def antipode_qw(x: QWElement) -> QWElement:
    out: dict = {}
    for w, r in x.support.items():
        wi = w.inverse()
        piece = r.apply_auto(w.inv_action)
        cur = out.get(wi)
        out[wi] = piece if cur is None else cur + piece
    return QWElement(x.system, out)


def eps_id_red_qw(t: QWTensor) -> QWElement:
    """Contract the first slot of a red-form tensor with the counit."""
    out: dict = {}
    for (_, h), r in t.entries.items():
        cur = out.get(h)
        out[h] = r if cur is None else cur + r
    return QWElement(t.system, out)


# -- transporting nil Hecke tensors into the oracle ----------------------

def blue_to_qw(t: BlueTensor) -> QWTensor:
    """Image of a blue tensor; left coefficients of both slots simply
    multiply, since the balancing is by left actions on both sides."""
    system = t.system
    out: dict = {}
    for (v, w), f in t.entries.items():
        q1 = embed(NilHeckeElement(system, {v: f}))
        q2 = embed_basis(system, w)
        for g1, r1 in q1.support.items():
            for g2, r2 in q2.support.items():
                key = (g1, g2)
                piece = r1 * r2
                cur = out.get(key)
                out[key] = piece if cur is None else cur + piece
    return QWTensor(system, out)


def red_to_qw(t: RedTensor) -> QWTensor:
    """Image of a red tensor; a left coefficient r on the first slot
    moves across the balancing as  r*g (x) y  =  g (x) ginv(r)*y."""
    system = t.system
    out: dict = {}
    for (v, w), f in t.entries.items():
        q1 = embed_basis(system, v)
        q2 = embed(NilHeckeElement(system, {w: f}))
        for g1, r1 in q1.support.items():
            moved = r1.apply_auto(g1.inv_action)
            for g2, r2 in q2.support.items():
                key = (g1, g2)
                piece = moved * r2
                cur = out.get(key)
                out[key] = piece if cur is None else cur + piece
    return QWTensor(system, out)


# -- recognizing the image of the nil Hecke algebra ----------------------

def to_nh_coords(x: QWElement) -> dict:
    """Coordinates of x in the basis embed(d_w), by triangular
    elimination against the longest remaining group element."""
    system = x.system
    rem = dict(x.support)
    coords: dict = {}
    while rem:
        u = max(rem, key=lambda g: g.sort_key())
        base = embed_basis(system, u)
        c = rem.pop(u) / base.support[u]
        coords[u] = c
        for g, r in base.support.items():
            if g == u:
                continue
            cur = rem.get(g, _rf(system, 0))
            new = cur - c * r
            if new.is_zero():
                rem.pop(g, None)
            else:
                rem[g] = new
    return coords


def qw_to_nh(x: QWElement) -> NilHeckeElement | None:
    """The nil Hecke element mapping to x, or None if there is none."""
    coords = to_nh_coords(x)
    support = {}
    for u, c in coords.items():
        if not c.is_polynomial():
            return None
        support[u] = c.num
    return NilHeckeElement(x.system, support)


def in_image_of_nh(x: QWElement) -> bool:
    return qw_to_nh(x) is not None
