"""Balanced tensor squares of the nil Hecke algebra over its base ring.

Two balancing conventions appear, named here by the module-structure
each slot carries:

* blue: both slots are left modules over the ring, so a coefficient can
  sit in either slot.  Normal form keeps all coefficients in slot one:
  entries map a pair (v, w) to f meaning  f * (d_v (x) d_w).

* red: slot one is balanced through its right module structure against
  the left structure of slot two.  Normal form writes slot one in the
  right-coefficient basis and keeps coefficients in slot two: entries
  map (v, w) to f meaning  d_v (x) f * d_w.

Both are free over their basis pairs, so dict equality of normal forms
is equality of tensors.  Componentwise products are only well defined
on the subspaces where right and left multiplications agree slotwise
(the Takeuchi condition); ``mul(checked=True)`` asserts it and raises
:class:`TakeuchiViolation` otherwise.  Membership is tested against the
ring variables, which suffices because the admissible elements form a
subalgebra over the scalars.
"""

from __future__ import annotations

from fractions import Fraction

from .coxeter import CoxeterSystem, GroupElement, SystemMismatch
from .nilhecke import (NilHeckeElement, group_to_nh, nh_basis_element,
                       gen_weight, render_nh, to_right_coeffs)
from .poly import Polynomial
from .scalars import QuadraticScalar


__all__ = [
    "BlueTensor",
    "BlueTensorN",
    "RedTensor",
    "TakeuchiViolation",
    "blue_embed",
    "nil_basis_product",
    "red_embed",
]


class TakeuchiViolation(Exception):
    """A componentwise tensor product was taken outside the subspace
    where it is well defined."""


def nil_basis_product(system: CoxeterSystem, v: GroupElement,
                      w: GroupElement):
    """d_v * d_w as a basis element: d_{vw} when lengths add, else None."""
    table = system.caches.setdefault("nil_basis_mul", {})
    key = (v, w)
    if key in table:
        return table[key]
    u = v * w
    got = u if u.length == v.length + w.length else None
    table[key] = got
    return got


def _acc(entries: dict, key, f: Polynomial):
    cur = entries.get(key)
    f = f if cur is None else cur + f
    if f.is_zero():
        entries.pop(key, None)
    else:
        entries[key] = f


def _coerce_weight(system, r):
    if isinstance(r, (int, Fraction, QuadraticScalar)):
        r = system.ring.from_scalar(r)
    if isinstance(r, Polynomial):
        return gen_weight(system, r)
    if isinstance(r, NilHeckeElement):
        return r
    raise TypeError(f"cannot interpret {r!r} as a nil Hecke element")


class _TensorBase:
    __slots__ = ("system", "entries")

    def __init__(self, system: CoxeterSystem, entries: dict):
        self.system = system
        self.entries = {k: f for k, f in entries.items() if not f.is_zero()}

    def is_zero(self) -> bool:
        return not self.entries

    def _check(self, other):
        if self.__class__ is not other.__class__:
            raise TypeError("cannot mix tensor conventions")
        if self.system is not other.system:
            raise SystemMismatch("tensors over different systems")

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for k, f in other.entries.items():
            _acc(out, k, f)
        return self.__class__(self.system, out)

    def __neg__(self):
        return self.__class__(self.system,
                              {k: -f for k, f in self.entries.items()})

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def scale(self, c):
        return self.__class__(self.system,
                              {k: c * f for k, f in self.entries.items()})

    def __eq__(self, other):
        if self.__class__ is not other.__class__:
            return NotImplemented
        return self.system is other.system and self.entries == other.entries

    def __hash__(self):
        return hash((id(self.system),
                     frozenset(self.entries.items())))


class BlueTensor(_TensorBase):
    """Left/left balanced tensor square, coefficients in slot one."""

    @classmethod
    def zero(cls, system):
        return cls(system, {})

    @classmethod
    def unit(cls, system):
        one = system.one
        return cls(system, {(one, one): system.ring.one})

    # -- module operations -----------------------------------------------

    def left_mul(self, r) -> "BlueTensor":
        """Multiply by a ring element on the left (either slot; they
        agree by balancing)."""
        return self.scale(r)

    def right_mul_slot1(self, h) -> "BlueTensor":
        """Right-multiply slot one by a nil Hecke element."""
        h = _coerce_weight(self.system, h)
        out: dict = {}
        for (v, w), f in self.entries.items():
            prod = NilHeckeElement(self.system, {v: f}) * h
            for u, g in prod.support.items():
                _acc(out, (u, w), g)
        return BlueTensor(self.system, out)

    def right_mul_slot2(self, h) -> "BlueTensor":
        """Right-multiply slot two; new left coefficients transport to
        slot one.  The basis product is shared across entries with the
        same slot-two element."""
        h = _coerce_weight(self.system, h)
        prods: dict = {}
        out: dict = {}
        for (v, w), f in self.entries.items():
            prod = prods.get(w)
            if prod is None:
                prod = prods[w] = \
                    (nh_basis_element(self.system, w) * h).support
            for u, g in prod.items():
                _acc(out, (v, u), f * g)
        return BlueTensor(self.system, out)

    def takeuchi_ok(self) -> bool:
        """True when right multiplication by every ring variable agrees
        between the slots."""
        for name in self.system.ring.variables:
            lam = self.system.ring.var(name)
            if self.right_mul_slot1(lam) != self.right_mul_slot2(lam):
                return False
        return True

    def mul(self, other: "BlueTensor", checked: bool = False) \
            -> "BlueTensor":
        """Componentwise product; with checked=True, asserts self passes
        the Takeuchi test first."""
        self._check(other)
        if checked and not self.takeuchi_ok():
            raise TakeuchiViolation("left factor fails the blue Takeuchi "
                                    "condition")
        system = self.system
        out: dict = {}
        for (v, w), f in self.entries.items():
            for (v2, w2), g in other.entries.items():
                u = nil_basis_product(system, w, w2)
                if u is None:
                    continue
                prod = (NilHeckeElement(system, {v: f})
                        * NilHeckeElement(system, {v2: g}))
                for p, fa in prod.support.items():
                    _acc(out, (p, u), fa)
        return BlueTensor(system, out)

    def swap(self) -> "BlueTensor":
        """Exchange the slots; blue coefficients ride along unchanged."""
        return BlueTensor(self.system,
                          {(w, v): f for (v, w), f in self.entries.items()})

    # -- views -----------------------------------------------------------

    def slot2_groups(self):
        """Regroup as sum_v d_v (x) (element), transporting each
        coefficient into slot two.  Legal by blue balancing."""
        groups: dict = {}
        for (v, w), f in self.entries.items():
            groups.setdefault(v, {})[w] = f
        return {v: NilHeckeElement(self.system, supp)
                for v, supp in groups.items()}

    def __str__(self):
        if not self.entries:
            return "0"
        diag = _diagonal_str(self, blue_embed)
        if diag is not None:
            return diag
        groups = self.slot2_groups()
        chunks = []
        for v in sorted(groups, key=lambda u: (-u.length, u.word)):
            left = _basis_str(self.system, v)
            right = _slot_str(groups[v])
            chunks.append(f"{left} (x) {right}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"<blue {self}>"


class BlueTensorN(_TensorBase):
    """n-fold blue tensor power; entries map element tuples to the
    slot-one coefficient."""

    @classmethod
    def zero(cls, system):
        return cls(system, {})

    def __str__(self):
        if not self.entries:
            return "0"
        chunks = []
        for key in sorted(self.entries,
                          key=lambda t: tuple((-u.length, u.word)
                                              for u in t)):
            f = self.entries[key]
            left = _coeff_str(f)
            body = " (x) ".join(_basis_str(self.system, u) for u in key)
            chunks.append(f"{left}{body}" if left else body)
        return " + ".join(chunks)


class RedTensor(_TensorBase):
    """Right/left balanced tensor square, coefficients in slot two."""

    @classmethod
    def zero(cls, system):
        return cls(system, {})

    @classmethod
    def unit(cls, system):
        one = system.one
        return cls(system, {(one, one): system.ring.one})

    # -- module operations -----------------------------------------------

    def left_mul_slot1(self, r) -> "RedTensor":
        """Left-multiply slot one by a ring element; the slot-one factor
        is rewritten back into the right-coefficient basis.  The rewrite
        is shared across entries with the same slot-one element."""
        if isinstance(r, (int, Fraction, QuadraticScalar)):
            r = self.system.ring.from_scalar(r)
        rcs: dict = {}
        out: dict = {}
        for (v, w), f in self.entries.items():
            rc = rcs.get(v)
            if rc is None:
                rc = rcs[v] = to_right_coeffs(
                    NilHeckeElement(self.system, {v: r}))
            for x, h in rc.items():
                _acc(out, (x, w), h * f)
        return RedTensor(self.system, out)

    def right_mul_slot2(self, h) -> "RedTensor":
        h = _coerce_weight(self.system, h)
        out: dict = {}
        for (v, w), f in self.entries.items():
            prod = NilHeckeElement(self.system, {w: f}) * h
            for u, g in prod.support.items():
                _acc(out, (v, u), g)
        return RedTensor(self.system, out)

    def takeuchi_ok(self) -> bool:
        for name in self.system.ring.variables:
            lam = self.system.ring.var(name)
            if self.left_mul_slot1(lam) != self.right_mul_slot2(lam):
                return False
        return True

    def mul_op(self, other: "RedTensor", checked: bool = False) \
            -> "RedTensor":
        """Componentwise product with slot two in the opposite algebra:
        (a (x) b) * (c (x) d) = a c (x) d b."""
        self._check(other)
        if checked and not self.takeuchi_ok():
            raise TakeuchiViolation("left factor fails the red Takeuchi "
                                    "condition")
        system = self.system
        out: dict = {}
        for (v, w), f in self.entries.items():
            for (v2, w2), g in other.entries.items():
                u = nil_basis_product(system, v, v2)
                if u is None:
                    continue
                prod = (NilHeckeElement(system, {w2: g})
                        * NilHeckeElement(system, {w: f}))
                for c, h in prod.support.items():
                    _acc(out, (u, c), h)
        return RedTensor(system, out)

    def slot2_groups(self):
        groups: dict = {}
        for (v, w), f in self.entries.items():
            groups.setdefault(v, {})[w] = f
        return {v: NilHeckeElement(self.system, supp)
                for v, supp in groups.items()}

    def __str__(self):
        if not self.entries:
            return "0"
        diag = _diagonal_str(self, red_embed, invert_second=True)
        if diag is not None:
            return diag
        groups = self.slot2_groups()
        chunks = []
        for v in sorted(groups, key=lambda u: (-u.length, u.word)):
            left = _basis_str(self.system, v)
            right = _slot_str(groups[v])
            chunks.append(f"{left} (x) {right}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"<red {self}>"


def blue_embed(a: NilHeckeElement, b: NilHeckeElement) -> BlueTensor:
    """The class of a (x) b in the blue tensor square: transport the
    left coefficients of b across to slot one."""
    if a.system is not b.system:
        raise SystemMismatch("tensor factors from different systems")
    entries: dict = {}
    for w, g in b.support.items():
        ga = g * a
        for v, f in ga.support.items():
            _acc(entries, (v, w), f)
    return BlueTensor(a.system, entries)


def red_embed(a: NilHeckeElement, b: NilHeckeElement) -> RedTensor:
    """The class of a (x) b in the red tensor square: rewrite a in the
    right-coefficient basis and push those coefficients into slot two."""
    if a.system is not b.system:
        raise SystemMismatch("tensor factors from different systems")
    entries: dict = {}
    for v, g in to_right_coeffs(a).items():
        gb = g * b
        for w, h in gb.support.items():
            _acc(entries, (v, w), h)
    return RedTensor(a.system, entries)


# -- rendering helpers ---------------------------------------------------

def _basis_str(system, v: GroupElement) -> str:
    if v.is_identity():
        return "1"
    return "*".join(f"d[{system.generators[j]}]" for j in v.word)


def _diagonal_str(t, embed_fn, invert_second=False):
    """Recognize the expansion of g (x) g (blue) or g (x) ginv (red)
    for an embedded group element g; these render far more readably
    than their normal forms."""
    top = max((k[0] for k in t.entries), key=lambda u: u.sort_key())
    if top.is_identity():
        return None
    second = top.inverse() if invert_second else top
    g = group_to_nh(t.system, top)
    h = group_to_nh(t.system, second)
    if t == embed_fn(g, h):
        name1 = "*".join(f"w[{n}]" for n in top.name_word())
        name2 = "*".join(f"w[{n}]" for n in second.name_word())
        return f"{name1} (x) {name2}"
    return None


def _coeff_str(f: Polynomial) -> str:
    if f == 1:
        return ""
    if f == -1:
        return "-"
    s = str(f)
    if len(f.terms) > 1:
        return f"({s})*"
    return f"{s}*"


def _slot_str(h: NilHeckeElement) -> str:
    s = render_nh(h, recognize_group=True)
    if " " in s:
        return f"({s})"
    return s
