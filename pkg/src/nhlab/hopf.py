"""Comultiplication, counit, red map, Galois map, and their verifiers.

On generators the structure maps are

    delta(f)   = f * (1 (x) 1)
    delta(d_s) = d_s (x) s + 1 (x) d_s      (blue tensor)
    eps(h)     = identity coefficient = h acting on 1
    red(f)     = 1 (x) f
    red(d_s)   = d_s (x) s + 1 (x) d_s      (red tensor)

extended multiplicatively along canonical words; the braid property of
the nil generators makes this independent of the word.  delta lands in
the blue Takeuchi subalgebra, red in the red one, and the Galois map
    gal(a (x) b) = delta(a) * (1 (x) b)
sends red(h) back to h (x) 1.

The module also builds the mixed dihedral relations: for a dihedral
pair s, t of order m and a parabolic element w other than the longest
one, summing the mixed monomials over all embedded reduced
subexpressions equal to w gives the same nil Hecke element for both
alternating host words.  Masks pick, per letter, the embedded group
generator (kept) or the nil generator (dropped).

Finally, the rank-1 antipode obstruction: an antipode would be forced
to fix the embedded reflection, but then its value on the nil generator
would have to solve  root^2 * p = 2 * root  in the polynomial ring,
which is impossible.  The report walks exactly those steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coxeter import (CoxeterSystem, GroupElement, INFINITE,
                      alternating_word, embedded_subexpressions)
from .nilhecke import (NilHeckeElement, gen_d, gen_w, gen_weight,
                       nh_basis_element, nh_one, nh_zero)
from .poly import Polynomial, divides
from .tensors import BlueTensor, BlueTensorN, RedTensor, blue_embed, red_embed


__all__ = [
    "AntipodeObstructionReport",
    "MixedRelationReport",
    "all_mixed_relations",
    "antipode_obstruction_rank1",
    "coassoc_sides",
    "counit_contract",
    "delta",
    "delta_along_word",
    "delta_basis",
    "galois",
    "mix_monomial",
    "mixed_relation",
    "red_basis",
    "red_map",
    "verify_coassoc",
    "verify_cocommutative",
    "verify_counit",
    "verify_delta_morphism",
    "verify_delta_word_independence",
    "verify_galois_inverse",
    "verify_red_morphism",
]


# -- the structure maps --------------------------------------------------

def delta_gen(system: CoxeterSystem, s) -> BlueTensor:
    j = system.gen_index(s)
    return (blue_embed(gen_d(system, j), gen_w(system, j))
            + blue_embed(nh_one(system), gen_d(system, j)))


def delta_basis(system: CoxeterSystem, w: GroupElement) -> BlueTensor:
    """delta(d_w), built along the canonical word and cached."""
    cache = system.caches.setdefault("delta_basis", {})
    got = cache.get(w)
    if got is None:
        if w.is_identity():
            got = BlueTensor.unit(system)
        else:
            j = w.word[0]
            rest = system.element_from_word(w.word[1:])
            got = delta_gen(system, j).mul(delta_basis(system, rest))
        cache[w] = got
    return got


def delta(h: NilHeckeElement) -> BlueTensor:
    out = BlueTensor.zero(h.system)
    for w, f in h.support.items():
        out = out + delta_basis(h.system, w).scale(f)
    return out


def delta_along_word(system: CoxeterSystem, word) -> BlueTensor:
    """delta of the nil product over an explicit word, without routing
    through the canonical reduced word."""
    out = BlueTensor.unit(system)
    for j in word:
        out = out.mul(delta_gen(system, j))
    return out


def verify_delta_word_independence(system: CoxeterSystem,
                                   w: GroupElement) -> bool:
    """delta computed along every reduced word of w agrees."""
    ref = delta_basis(system, w)
    return all(delta_along_word(system, wd) == ref
               for wd in system.reduced_words(w))


def red_gen(system: CoxeterSystem, s) -> RedTensor:
    j = system.gen_index(s)
    return (red_embed(gen_d(system, j), gen_w(system, j))
            + red_embed(nh_one(system), gen_d(system, j)))


def red_basis(system: CoxeterSystem, w: GroupElement) -> RedTensor:
    cache = system.caches.setdefault("red_basis", {})
    got = cache.get(w)
    if got is None:
        if w.is_identity():
            got = RedTensor.unit(system)
        else:
            j = w.word[0]
            rest = system.element_from_word(w.word[1:])
            got = red_gen(system, j).mul_op(red_basis(system, rest))
        cache[w] = got
    return got


def _red_mono(system: CoxeterSystem, w: GroupElement, e: tuple) -> RedTensor:
    """red of x^e * d_w, cached; red is linear over scalars."""
    cache = system.caches.setdefault("red_mono", {})
    key = (w, e)
    got = cache.get(key)
    if got is None:
        mono = system.ring.from_terms({e: Fraction(1)})
        rf = RedTensor(system, {(system.one, system.one): mono})
        got = rf.mul_op(red_basis(system, w))
        cache[key] = got
    return got


def red_map(h: NilHeckeElement) -> RedTensor:
    system = h.system
    out: dict = {}
    for w, f in h.support.items():
        for e, c in f.terms.items():
            for k, g in _red_mono(system, w, e).entries.items():
                cur = out.get(k)
                gc = g.scale(c)
                out[k] = gc if cur is None else cur + gc
    return RedTensor(system, out)


def galois(t: RedTensor) -> BlueTensor:
    """gal(sum d_v (x) f d_w) = sum delta(d_v) * (1 (x) f d_w)."""
    system = t.system
    out = BlueTensor.zero(system)
    for (v, w), f in t.entries.items():
        piece = delta_basis(system, v).right_mul_slot2(
            NilHeckeElement(system, {w: f}))
        out = out + piece
    return out


# -- axiom checks --------------------------------------------------------

def _expand_slot(t: BlueTensor, slot: int) -> BlueTensorN:
    """Apply delta to one slot of a two-fold blue tensor."""
    system = t.system
    out: dict = {}
    for (v, w), f in t.entries.items():
        if slot == 0:
            inner = delta_basis(system, v)
            for (a, b), g in inner.entries.items():
                key = (a, b, w)
                cur = out.get(key)
                fg = f * g
                out[key] = fg if cur is None else cur + fg
        else:
            inner = delta_basis(system, w)
            for (b, c), g in inner.entries.items():
                key = (v, b, c)
                cur = out.get(key)
                fg = f * g
                out[key] = fg if cur is None else cur + fg
    return BlueTensorN(system, out)


def coassoc_sides(h: NilHeckeElement):
    d = delta(h)
    return _expand_slot(d, 0), _expand_slot(d, 1)


def verify_coassoc(h: NilHeckeElement) -> bool:
    lhs, rhs = coassoc_sides(h)
    return lhs == rhs


def counit_contract(t: BlueTensor, slot: int) -> NilHeckeElement:
    """Apply the counit to one slot; the resulting ring coefficient is
    transported onto the surviving slot."""
    system = t.system
    out: dict = {}
    for (v, w), f in t.entries.items():
        if slot == 0 and v.is_identity():
            cur = out.get(w)
            out[w] = f if cur is None else cur + f
        elif slot == 1 and w.is_identity():
            cur = out.get(v)
            out[v] = f if cur is None else cur + f
    return NilHeckeElement(system, out)


def verify_counit(h: NilHeckeElement) -> bool:
    d = delta(h)
    return (counit_contract(d, 0) == h) and (counit_contract(d, 1) == h)


def verify_delta_morphism(a: NilHeckeElement, b: NilHeckeElement,
                          checked: bool = False) -> bool:
    return delta(a * b) == delta(a).mul(delta(b), checked=checked)


def verify_red_morphism(a: NilHeckeElement, b: NilHeckeElement,
                        checked: bool = False) -> bool:
    return red_map(a * b) == red_map(a).mul_op(red_map(b), checked=checked)


def verify_cocommutative(h: NilHeckeElement) -> bool:
    d = delta(h)
    return d.swap() == d


def verify_galois_inverse(h: NilHeckeElement,
                          h2: NilHeckeElement | None = None) -> bool:
    """gal(red(h) right-multiplied in slot two by h2) == h (x) h2."""
    if h2 is None:
        h2 = nh_one(h.system)
    t = red_map(h).right_mul_slot2(h2)
    return galois(t) == blue_embed(h, h2)


# -- mixed dihedral relations --------------------------------------------

@dataclass
class MixedRelationReport:
    system: CoxeterSystem
    s: int
    t: int
    w: GroupElement
    lhs_masks: list = field(default_factory=list)
    rhs_masks: list = field(default_factory=list)
    lhs: NilHeckeElement = None
    rhs: NilHeckeElement = None
    holds: bool = False

    def _host(self, first: int, second: int):
        m = self.system.m_matrix[self.s][self.t]
        return alternating_word(first, second, m)

    def _side_str(self, host, masks) -> str:
        if not masks:
            return "0"
        chunks = []
        names = self.system.generators
        for mask in masks:
            toks = [f"w[{names[j]}]" if keep else f"d[{names[j]}]"
                    for j, keep in zip(host, mask)]
            chunks.append("*".join(toks))
        return " + ".join(chunks)

    def equation_str(self) -> str:
        lhs = self._side_str(self._host(self.s, self.t), self.lhs_masks)
        rhs = self._side_str(self._host(self.t, self.s), self.rhs_masks)
        return f"{lhs} = {rhs}"

    def label(self) -> str:
        if self.w.is_identity():
            return "1"
        return "*".join(self.w.name_word())


def mix_monomial(system: CoxeterSystem, host, mask) -> NilHeckeElement:
    """Product over the host word: kept letters contribute the embedded
    group generator, dropped letters the nil generator."""
    out = nh_one(system)
    for j, keep in zip(host, mask):
        out = out * (gen_w(system, j) if keep else gen_d(system, j))
    return out


def _side(system, host, w):
    masks = []
    total = nh_zero(system)
    for mask in embedded_subexpressions(host):
        sub = tuple(j for j, keep in zip(host, mask) if keep)
        elem = system.element_from_word(sub)
        if elem.length == len(sub) and elem == w:
            masks.append(mask)
            total = total + mix_monomial(system, host, mask)
    return masks, total


def mixed_relation(system: CoxeterSystem, s, t, w: GroupElement) \
        -> MixedRelationReport:
    si, ti = system.gen_index(s), system.gen_index(t)
    if si == ti:
        raise ValueError("need two distinct generators")
    m = system.m_matrix[si][ti]
    if m is INFINITE:
        raise ValueError("mixed relations need a finite dihedral pair")
    longest = system.element_from_word(alternating_word(si, ti, m))
    if w == longest:
        raise ValueError("the longest parabolic element is excluded")
    if w not in set(system.parabolic_elements(si, ti)):
        raise ValueError(f"{w} is not in the parabolic generated by the "
                         "pair")
    rep = MixedRelationReport(system, si, ti, w)
    rep.lhs_masks, rep.lhs = _side(system, alternating_word(si, ti, m), w)
    rep.rhs_masks, rep.rhs = _side(system, alternating_word(ti, si, m), w)
    rep.holds = rep.lhs == rep.rhs
    return rep


def all_mixed_relations(system: CoxeterSystem, s, t):
    """Reports for every parabolic element except the longest one,
    sorted by (length, word); 2m - 1 relations for a pair of order m."""
    si, ti = system.gen_index(s), system.gen_index(t)
    m = system.m_matrix[si][ti]
    longest = system.element_from_word(alternating_word(si, ti, m))
    out = []
    for w in system.parabolic_elements(si, ti):
        if w != longest:
            out.append(mixed_relation(system, si, ti, w))
    return out


# -- the rank-1 antipode obstruction -------------------------------------

@dataclass
class AntipodeObstructionReport:
    red_of_s: RedTensor
    delta_group_like: bool
    red_group_like: bool
    forced_value: NilHeckeElement
    forced_matches_s: bool
    slot_consistent: bool
    equation_lhs_factor: Polynomial
    equation_rhs: Polynomial
    equation_solvable: bool
    obstruction_established: bool

    def lines(self):
        yield "delta(s) = s (x) s: " + _pf(self.delta_group_like)
        yield "red(s) = s (x) s: " + _pf(self.red_group_like)
        yield (f"coefficients force S(s) = {self.forced_value}: "
               + _pf(self.forced_matches_s and self.slot_consistent))
        yield (f"no polynomial p solves ({self.equation_lhs_factor}) * p"
               f" = {self.equation_rhs}: "
               + _pf(not self.equation_solvable))
        yield "no antipode exists: " + _pf(self.obstruction_established)


def _pf(b: bool) -> str:
    return "PASS" if b else "FAIL"


def antipode_obstruction_rank1(system: CoxeterSystem) \
        -> AntipodeObstructionReport:
    """Establish, for a rank-1 system, that no antipode exists.

    Steps: (1) the embedded reflection s is group-like for delta and
    red; (2) reading red(s) in the right-free module with basis
    {1 (x) 1, d (x) 1} forces S(s) = s; (3) an anti-automorphism fixing
    the ring then needs a polynomial p with root^2 * p = 2 * root, and
    no such p exists (degrees in the image of multiplication by root^2
    are too large).
    """
    if system.rank != 1:
        raise ValueError("the obstruction argument is a rank-1 statement")
    s_nh = gen_w(system, 0)
    alpha = system.roots[0]
    r = red_map(s_nh)
    dlt_ok = delta(s_nh) == blue_embed(s_nh, s_nh)
    red_ok = r == red_embed(s_nh, s_nh)
    # red(s) = (d * root - 1) (x) S(s); the basis coefficient at
    # 1 (x) 1 is -S(s), the one at d (x) 1 is root * S(s).
    groups = r.slot2_groups()
    y_e = groups.get(system.one, nh_zero(system))
    y_d = groups.get(system.gen_element(0), nh_zero(system))
    forced = -y_e
    forced_ok = forced == s_nh
    slot_ok = y_d == gen_weight(system, alpha) * forced
    # S(d) * root = 1 - s = root * d as operators; evaluated on root
    # (using that root^2 is invariant) this forces
    # root^2 * S(d)(1) = 2 * root.
    lhs_factor = alpha * alpha
    rhs = (gen_weight(system, alpha) * gen_d(system, 0)).act(alpha)
    assert rhs == 2 * alpha
    assert system.is_invariant(lhs_factor)
    solvable = divides(lhs_factor, rhs)
    established = (dlt_ok and red_ok and forced_ok and slot_ok
                   and not solvable)
    return AntipodeObstructionReport(
        red_of_s=r,
        delta_group_like=dlt_ok,
        red_group_like=red_ok,
        forced_value=forced,
        forced_matches_s=forced_ok,
        slot_consistent=slot_ok,
        equation_lhs_factor=lhs_factor,
        equation_rhs=rhs,
        equation_solvable=solvable,
        obstruction_established=established,
    )
