"""The nil Hecke algebra of a Coxeter system, in normal form.

Elements are finite sums  sum_w  f_w * d_w  with polynomial left
coefficients and w running over group elements; d_w is the composite of
nil generators along any reduced word for w (well defined, and verified
by the braid tests).  The defining moves used by multiplication are

    d_s * f  =  s(f) * d_s + demazure_s(f)          (nil Leibniz)
    d_s * d_w = d_{sw}  if length goes up, else 0

which let any product be pushed back into normal form.  The group embeds
by  s |-> 1 - root_s * d_s,  and the whole algebra acts on the ring by
f_w * d_w |-> f_w * (Demazure along w); that action is faithful, which
is what the normal form comparison tests lean on.
"""

from __future__ import annotations

from fractions import Fraction

from .coxeter import CoxeterSystem, GroupElement, SystemMismatch
from .poly import DivisionNotExact, Polynomial, exact_divide
from .scalars import QuadraticScalar


__all__ = [
    "NilHeckeElement",
    "counit",
    "e_triv",
    "from_right_coeffs",
    "gen_d",
    "gen_w",
    "gen_weight",
    "group_to_nh",
    "nh_one",
    "nh_zero",
    "to_right_coeffs",
]


class NilHeckeElement:
    """A nil Hecke element as a dict {group element: coefficient}."""

    __slots__ = ("system", "support")

    def __init__(self, system: CoxeterSystem, support: dict):
        self.system = system
        self.support = {w: f for w, f in support.items() if not f.is_zero()}

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NilHeckeElement):
            if other.system is not self.system:
                raise SystemMismatch("nil Hecke elements from different "
                                     "systems")
            return other
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            return gen_weight(self.system, self.system.ring.from_scalar(other))
        if isinstance(other, Polynomial):
            return gen_weight(self.system, other)
        return None

    def is_zero(self) -> bool:
        return not self.support

    def sorted_items(self):
        """Terms ordered for display: longest first, then by word."""
        return sorted(self.support.items(),
                      key=lambda t: (-t[0].length, t[0].word))

    # -- additive structure ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.support)
        for w, f in o.support.items():
            g = out.get(w)
            out[w] = f if g is None else g + f
        return NilHeckeElement(self.system, out)

    __radd__ = __add__

    def __neg__(self):
        return NilHeckeElement(self.system,
                               {w: -f for w, f in self.support.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    # -- multiplication --------------------------------------------------

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        system = self.system
        out: dict = {}
        for v, f in self.support.items():
            for w, g in o.support.items():
                acc: dict = {}
                for e, c in g.terms.items():
                    for u, h in _nil_mono_times(system, v, e, w).items():
                        hc = h.scale(c)
                        cur = acc.get(u)
                        acc[u] = hc if cur is None else cur + hc
                for u, h in acc.items():
                    fh = f * h
                    if not fh.is_zero():
                        cur = out.get(u)
                        out[u] = fh if cur is None else cur + fh
        return NilHeckeElement(system, out)

    def __rmul__(self, other):
        # Only ring elements and scalars land here; they commute into
        # the left coefficients directly.
        if isinstance(other, (int, Fraction, QuadraticScalar, Polynomial)):
            return NilHeckeElement(
                self.system,
                {w: other * f for w, f in self.support.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nil Hecke powers take nonnegative ints")
        out = nh_one(self.system)
        for _ in range(n):
            out = out * self
        return out

    # -- representation on the ring --------------------------------------

    def act(self, f: Polynomial) -> Polynomial:
        """Apply sum f_w * (Demazure along w) to a polynomial."""
        out = self.system.ring.zero
        for w, c in self.support.items():
            out = out + c * self.system.demazure_word(w.word, f)
        return out

    def counit(self) -> Polynomial:
        """The identity coefficient; equals act on 1."""
        f = self.support.get(self.system.one)
        return self.system.ring.zero if f is None else f

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.support == o.support

    def __hash__(self):
        return hash((id(self.system),
                     frozenset((w, f) for w, f in self.support.items())))

    def __str__(self):
        return render_nh(self)

    def __repr__(self):
        return f"<nh {self}>"


def _nil_mono_times(system: CoxeterSystem, v: GroupElement,
                    e: tuple, w: GroupElement) -> dict:
    """Normal form of d_v * (x^e * d_w), cached; multiplication is
    linear over scalars in the middle polynomial, so monomial products
    cover the general case."""
    cache = system.caches.setdefault("nil_mono", {})
    key = (v, e, w)
    got = cache.get(key)
    if got is None:
        mono = system.ring.from_terms({e: Fraction(1)})
        got = _nil_word_times(system, v.word, w, mono)
        cache[key] = got
    return got


def _nil_word_times(system: CoxeterSystem, word, w: GroupElement,
                    g: Polynomial) -> dict:
    """Normal form of d_word * (g * d_w)."""
    supp = {w: g}
    for j in reversed(word):
        nxt: dict = {}
        act = system.gen_actions[j]
        sj = system.gen_element(j)
        for u, f in supp.items():
            if not system.is_left_descent(j, u):
                sf = act(f)
                if not sf.is_zero():
                    su = sj * u
                    cur = nxt.get(su)
                    nxt[su] = sf if cur is None else cur + sf
            df = system.demazure(j, f)
            if not df.is_zero():
                cur = nxt.get(u)
                nxt[u] = df if cur is None else cur + df
        supp = nxt
    return supp


# -- constructors --------------------------------------------------------

def nh_zero(system: CoxeterSystem) -> NilHeckeElement:
    return NilHeckeElement(system, {})

def nh_one(system: CoxeterSystem) -> NilHeckeElement:
    return NilHeckeElement(system, {system.one: system.ring.one})


def gen_weight(system: CoxeterSystem, f) -> NilHeckeElement:
    """A ring element as a nil Hecke element."""
    if isinstance(f, (int, Fraction, QuadraticScalar)):
        f = system.ring.from_scalar(f)
    return NilHeckeElement(system, {system.one: f})


def gen_d(system: CoxeterSystem, s) -> NilHeckeElement:
    """The nil generator attached to a simple generator."""
    j = system.gen_index(s)
    return NilHeckeElement(system,
                           {system.gen_element(j): system.ring.one})


def gen_w(system: CoxeterSystem, s) -> NilHeckeElement:
    """A group generator, embedded as 1 - root_s * d_s."""
    j = system.gen_index(s)
    return NilHeckeElement(system, {
        system.one: system.ring.one,
        system.gen_element(j): -system.roots[j],
    })


def nh_basis_element(system: CoxeterSystem, w: GroupElement) \
        -> NilHeckeElement:
    return NilHeckeElement(system, {w: system.ring.one})


def group_to_nh(system: CoxeterSystem, w: GroupElement) -> NilHeckeElement:
    """The embedded image of a group element, as a product of embedded
    generators along the canonical word.  Cached per system."""
    cache = system.caches.setdefault("group_to_nh", {})
    got = cache.get(w)
    if got is None:
        got = nh_one(system)
        for j in w.word:
            got = got * gen_w(system, j)
        cache[w] = got
    return got


def counit(h: NilHeckeElement) -> Polynomial:
    return h.counit()


# -- right-coefficient basis ---------------------------------------------

def to_right_coeffs(h: NilHeckeElement) -> dict:
    """Rewrite sum f_w d_w as sum d_w g_w; returns {w: g_w}.

    Uses  f * d_s = d_s * s(f) + demazure_s(f)  letter by letter, with
    termination by induction on word length.
    """
    out: dict = {}
    for w, f in h.support.items():
        _rc_merge(out, _rc(h.system, f, w))
    return {w: g for w, g in out.items() if not g.is_zero()}


def _rc(system: CoxeterSystem, f: Polynomial, w: GroupElement) -> dict:
    if f.is_zero():
        return {}
    if w.is_identity():
        return {w: f}
    out: dict = {}
    for e, c in f.terms.items():
        for x, g in _rc_mono(system, e, w).items():
            _rc_add(out, x, g.scale(c))
    return out


def _rc_mono(system: CoxeterSystem, e: tuple, w: GroupElement) -> dict:
    """Right-coefficient rewrite of x^e d_w, cached; the rewrite is
    linear over scalars."""
    cache = system.caches.setdefault("rc_mono", {})
    key = (e, w)
    got = cache.get(key)
    if got is None:
        j = w.word[0]
        u = system.element_from_word(w.word[1:])
        mono = system.ring.from_terms({e: Fraction(1)})
        got = {}
        sj = system.gen_element(j)
        for x, g in _rc(system, system.gen_actions[j](mono), u).items():
            if not system.is_left_descent(j, x):
                _rc_add(got, sj * x, g)
        _rc_merge(got, _rc(system, system.demazure(j, mono), u))
        cache[key] = got
    return got


def _rc_add(out, w, g):
    cur = out.get(w)
    out[w] = g if cur is None else cur + g


def _rc_merge(out, part):
    for w, g in part.items():
        _rc_add(out, w, g)


def from_right_coeffs(system: CoxeterSystem, coeffs: dict) \
        -> NilHeckeElement:
    out = nh_zero(system)
    for w, g in coeffs.items():
        out = out + nh_basis_element(system, w) * gen_weight(system, g)
    return out


# -- the averaging idempotent --------------------------------------------

def e_triv(system: CoxeterSystem) -> NilHeckeElement:
    """(1/|W|) * sum of all embedded group elements.

    Also equal to (1/|W|) * d_{longest} * product of positive roots;
    both forms are computed and compared here.
    """
    elems = system.elements()
    n = Fraction(1, len(elems))
    avg = nh_zero(system)
    for w in elems:
        avg = avg + group_to_nh(system, w)
    avg = n * avg
    top = system.longest_element()
    prod = system.ring.one
    for coords in system.positive_roots():
        prod = prod * system.root_polynomial(coords)
    alt = n * (nh_basis_element(system, top) * gen_weight(system, prod))
    if avg != alt:
        raise RuntimeError("averaging idempotent: the two defining "
                           "formulas disagree; invariant broken")
    return avg


# -- rendering -----------------------------------------------------------

def _token_string(system: CoxeterSystem, word, token: str) -> str:
    if not word:
        return "1"
    return "*".join(f"{token}[{system.generators[j]}]" for j in word)


def _coeff_prefix(f: Polynomial) -> str:
    """Render a coefficient as a multiplicative prefix ('' or '-' for
    units, otherwise 'c*' with parens when f has several terms)."""
    if f == 1:
        return ""
    if f == -1:
        return "-"
    s = str(f)
    if len(f.terms) > 1:
        return f"({s})*"
    return f"{s}*"


def try_factor_group(h: NilHeckeElement):
    """If h = c * (embedded group element w) with polynomial c, return
    (c, w); else None.  Used for friendlier tensor-slot rendering."""
    if h.is_zero():
        return None
    w = max(h.support, key=lambda u: (u.length, u.word))
    if w.is_identity():
        return None
    gw = group_to_nh(h.system, w)
    try:
        c = exact_divide(h.support[w], gw.support[w])
    except DivisionNotExact:
        return None
    if (c * gw).support == h.support:
        return c, w
    return None


def render_nh(h: NilHeckeElement, recognize_group: bool = False) -> str:
    """Canonical text form; with recognize_group, elements that factor
    as coefficient * embedded group element use w[..] tokens."""
    if h.is_zero():
        return "0"
    if recognize_group:
        fac = try_factor_group(h)
        if fac is not None:
            c, w = fac
            return _coeff_prefix(c) + _token_string(h.system, w.word, "w")
    chunks = []
    for w, f in h.sorted_items():
        dpart = _token_string(h.system, w.word, "d")
        if w.is_identity():
            s = str(f) if len(f.terms) <= 1 else f"({f})"
        else:
            s = _coeff_prefix(f) + dpart
        chunks.append(s)
    out = chunks[0]
    for piece in chunks[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out
