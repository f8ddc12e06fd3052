"""Coxeter systems acting faithfully on a polynomial ring.

A system is built from a Coxeter matrix plus a pairing of simple roots
against simple coroots.  Each generator acts on the ring by the exact
reflection  s_j(v) = v - <v, coroot_j> * root_j,  and a group element is
identified with its action matrix: two products are the same element
exactly when their matrices agree.  The faithfulness of this action is
what makes matrix comparison a sound equality test.

Every element carries its canonical reduced word, the lexicographically
smallest one, computed greedily: repeatedly strip the smallest generator
s with  w^-1(root_s) < 0  (the left-descent test).  Words are tuples of
generator indices internally; the public helpers accept names.

Supported pairings for the built-in geometric default, per edge order m:

    m = 2        0, 0
    m = 3       -1, -1
    m = 4       -1, -2        (integral, order checked at build time)
    m = 5       golden ratio pair, needs the field Q(sqrt(5))
    m = 6       -1, -3
    m = inf     -2, -2

Any other finite m has no exact pairing in the supported fields and
raises :class:`~nhlab.scalars.UnsupportedField`.  Explicit rational
pairing matrices and the gl(n) preset (variables x1..xn, adjacent
transpositions) are also available.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

from .linalg import solve_exact
from .poly import LinearAction, Polynomial, PolyRing, exact_divide
from .scalars import QuadraticScalar, ScalarField, UnsupportedField, sc_sign


__all__ = [
    "CoxeterSystem",
    "GroupElement",
    "SystemMismatch",
    "alternating_word",
    "build_system",
    "dihedral_system",
    "embedded_subexpressions",
    "gl_system",
    "rank_one_system",
]

INFINITE = None  # marker for m_st = infinity in Coxeter matrices

_DEFAULT_CEILING = 10 ** 6


def _enumeration_ceiling() -> int:
    raw = os.environ.get("NHLAB_MAX_ELEMENTS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return _DEFAULT_CEILING


class SystemMismatch(Exception):
    """Elements of different Coxeter systems were combined."""


def _sc_key(c):
    if isinstance(c, QuadraticScalar):
        return (c.a, c.b)
    return (Fraction(c), Fraction(0))


class GroupElement:
    """A group element: its action, the inverse action, and the
    canonical (lex-smallest) reduced word as generator indices."""

    __slots__ = ("system", "action", "inv_action", "word", "length",
                 "_hash", "_inv")

    def __init__(self, system, action, inv_action, word):
        self.system = system
        self.action = action
        self.inv_action = inv_action
        self.word = word
        self.length = len(word)
        self._hash = None
        self._inv = None

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.system is not other.system:
            raise SystemMismatch("elements from different systems")
        table = self.system.caches.setdefault("group_mul", {})
        key = (self, other)
        got = table.get(key)
        if got is None:
            got = self.system._element(
                self.action.compose(other.action),
                other.inv_action.compose(self.inv_action))
            table[key] = got
        return got

    def inverse(self) -> "GroupElement":
        if self._inv is None:
            self._inv = self.system._element(self.inv_action, self.action)
        return self._inv

    def is_identity(self) -> bool:
        return self.length == 0

    def sort_key(self):
        return (self.length, self.word)

    def name_word(self):
        return tuple(self.system.generators[j] for j in self.word)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.system is other.system
                and self.action.matrix == other.action.matrix)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((id(self.system), self.action.matrix))
        return h

    def __str__(self):
        if not self.word:
            return "1"
        return "*".join(self.name_word())

    def __repr__(self):
        return f"<elt {self}>"


class CoxeterSystem:
    """A Coxeter system realized on a polynomial ring.  Build via
    :func:`build_system` or one of the presets."""

    def __init__(self, generators, m_matrix, ring, gen_actions, roots,
                 var_pairings, cartan, finite):
        self.generators = tuple(generators)
        self.rank = len(self.generators)
        self.m_matrix = m_matrix
        self.ring = ring
        self.gen_actions = gen_actions
        self.roots = roots              # simple roots as linear polynomials
        self.var_pairings = var_pairings  # vp[v][j] = <var_v, coroot_j>
        self.cartan = cartan            # cartan[i][j] = <root_i, coroot_j>
        self.finite = finite
        self.caches: dict = {}
        self._elements: dict = {}
        self._root_rows = [[roots[j].coefficient(_unit(ring.nvars, v))
                            for j in range(self.rank)]
                           for v in range(ring.nvars)]
        ident = LinearAction.identity(ring)
        self.one = GroupElement(self, ident, ident, ())
        self._elements[ident.matrix] = self.one
        self._validate()

    # -- construction checks ---------------------------------------------

    def _validate(self):
        for j in range(self.rank):
            if self.cartan[j][j] != 2:
                raise ValueError("a simple root must pair to 2 with its "
                                 "own coroot")
            if not self.gen_actions[j].is_involution():
                raise ValueError(
                    f"generator {self.generators[j]} does not square to 1")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.m_matrix[i][j]
                if m is INFINITE:
                    continue
                p = self.gen_actions[i].compose(self.gen_actions[j])
                power = p
                order = 1
                while not power.is_identity():
                    power = power.compose(p)
                    order += 1
                    if order > m:
                        break
                if order != m:
                    raise ValueError(
                        f"pairing gives {self.generators[i]}*"
                        f"{self.generators[j]} order {order}, expected {m}")

    # -- generator-level data --------------------------------------------

    def gen_index(self, s) -> int:
        if isinstance(s, int):
            if not 0 <= s < self.rank:
                raise ValueError(f"generator index {s} out of range")
            return s
        try:
            return self.generators.index(s)
        except ValueError:
            raise ValueError(f"unknown generator {s!r}") from None

    def order(self, s, t):
        return self.m_matrix[self.gen_index(s)][self.gen_index(t)]

    def act_gen(self, s, f: Polynomial) -> Polynomial:
        return self.gen_actions[self.gen_index(s)](f)

    def demazure(self, s, f: Polynomial) -> Polynomial:
        """(f - s(f)) / root_s; exact by the reflection invariance of
        the complement hyperplane.  Linear over scalars, so the images
        of monomials are cached."""
        j = self.gen_index(s)
        cache = self.caches.setdefault(("demazure", j), {})
        act = self.gen_actions[j]
        root = self.roots[j]
        ring = self.ring
        out = ring.zero
        for e, c in f.terms.items():
            img = cache.get(e)
            if img is None:
                mono = ring.from_terms({e: Fraction(1)})
                img = exact_divide(mono - act(mono), root)
                cache[e] = img
            if not img.is_zero():
                out = out + img.scale(c)
        return out

    def demazure_word(self, word, f: Polynomial) -> Polynomial:
        """Compose Demazure operators along a word (leftmost outermost)."""
        for s in reversed(tuple(word)):
            f = self.demazure(s, f)
        return f

    def pair_with_coroot(self, weight: Polynomial, s):
        """<weight, coroot_s> for a linear weight."""
        j = self.gen_index(s)
        if weight.total_degree() > 1:
            raise ValueError("pairing is defined for linear weights")
        total = Fraction(0)
        for v in range(self.ring.nvars):
            c = weight.coefficient(_unit(self.ring.nvars, v))
            if c != 0:
                total = total + c * self.var_pairings[v][j]
        return total

    def is_invariant(self, f: Polynomial) -> bool:
        return all(self.gen_actions[j](f) == f for j in range(self.rank))

    # -- elements ----------------------------------------------------------

    def _descent_from_inverse(self, inv_action, j) -> bool:
        # s_j is a left descent of w iff w^-1(root_j) is a negative root.
        img = inv_action(self.roots[j])
        coords = self.root_coords(img)
        return all(sc_sign(c) <= 0 for c in coords)

    def _element(self, action, inv_action) -> GroupElement:
        got = self._elements.get(action.matrix)
        if got is not None:
            return got
        word = []
        a, inv = action, inv_action
        while not a.is_identity():
            for j in range(self.rank):
                if self._descent_from_inverse(inv, j):
                    word.append(j)
                    mj = self.gen_actions[j]
                    a = mj.compose(a)
                    inv = inv.compose(mj)
                    break
            else:
                raise RuntimeError("element has no left descent; the "
                                   "pairing must be inconsistent")
        elem = GroupElement(self, action, inv_action, tuple(word))
        self._elements[action.matrix] = elem
        return elem

    def gen_element(self, s) -> GroupElement:
        j = self.gen_index(s)
        mj = self.gen_actions[j]
        return self._element(mj, mj)

    def element_from_word(self, word) -> GroupElement:
        out = self.one
        for s in word:
            out = out * self.gen_element(s)
        return out

    def is_left_descent(self, s, w: GroupElement) -> bool:
        return self._descent_from_inverse(w.inv_action, self.gen_index(s))

    def is_reduced(self, word) -> bool:
        word = tuple(word)
        return self.element_from_word(word).length == len(word)

    def canonical_form(self, word) -> GroupElement:
        return self.element_from_word(word)

    def reduced_words(self, w: GroupElement):
        """All reduced words for w, in lexicographic order."""
        if w.is_identity():
            return [()]
        out = []
        for j in range(self.rank):
            if self.is_left_descent(j, w):
                rest = self.gen_element(j) * w
                out.extend((j,) + tail for tail in self.reduced_words(rest))
        return out

    # -- roots -------------------------------------------------------------

    def root_coords(self, linear_poly: Polynomial):
        """Coordinates of a linear polynomial in the simple-root basis."""
        n = self.ring.nvars
        rhs = [linear_poly.coefficient(_unit(n, v)) for v in range(n)]
        sol = solve_exact(self._root_rows, rhs)
        if sol is None:
            raise ValueError(f"{linear_poly} is not in the root span")
        return tuple(sol)

    def reflect_root_coords(self, j, coords):
        """Apply generator j to a root written in simple-root coordinates."""
        shift = Fraction(0)
        for i, v in enumerate(coords):
            if v != 0:
                shift = shift + v * self.cartan[i][j]
        out = list(coords)
        out[j] = out[j] - shift
        return tuple(out)

    def positive_roots(self):
        """All positive roots, in simple-root coordinates.  Finite only."""
        if not self.finite:
            raise ValueError("positive roots of an infinite system")
        ceiling = _enumeration_ceiling()
        simple = [tuple(Fraction(int(i == j)) for i in range(self.rank))
                  for j in range(self.rank)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for j in range(self.rank):
                    img = self.reflect_root_coords(j, r)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
                        if len(seen) > 2 * ceiling:
                            raise RuntimeError("root enumeration exceeded "
                                               "the ceiling")
            frontier = nxt
        pos = [r for r in seen if all(sc_sign(c) >= 0 for c in r)]
        pos.sort(key=lambda r: tuple(_sc_key(c) for c in r))
        return pos

    def root_polynomial(self, coords) -> Polynomial:
        out = self.ring.zero
        for c, root in zip(coords, self.roots):
            if c != 0:
                out = out + root * c
        return out

    # -- enumeration -------------------------------------------------------

    def elements(self, max_length=None):
        """All elements of length <= max_length, or the full group when
        max_length is None (declared-finite systems only).  Sorted by
        (length, canonical word)."""
        if max_length is None and not self.finite:
            raise ValueError("cannot enumerate an infinite system fully; "
                             "pass max_length")
        ceiling = _enumeration_ceiling()
        out = [self.one]
        seen = {self.one}
        frontier = [self.one]
        length = 0
        while frontier:
            if max_length is not None and length >= max_length:
                break
            nxt = []
            for w in frontier:
                for j in range(self.rank):
                    u = w * self.gen_element(j)
                    if u not in seen and u.length == length + 1:
                        seen.add(u)
                        nxt.append(u)
                        if len(seen) > ceiling:
                            raise RuntimeError(
                                "group enumeration exceeded the ceiling "
                                f"({ceiling}); set NHLAB_MAX_ELEMENTS to "
                                "raise it")
            out.extend(nxt)
            frontier = nxt
            length += 1
        out.sort(key=GroupElement.sort_key)
        return out

    def longest_element(self) -> GroupElement:
        elems = self.elements()
        top = max(w.length for w in elems)
        longest = [w for w in elems if w.length == top]
        if len(longest) != 1:
            raise RuntimeError("longest element is not unique; system "
                               "cannot be finite")
        return longest[0]

    def parabolic_elements(self, s, t):
        """Elements of the rank-2 parabolic generated by s and t."""
        i, j = self.gen_index(s), self.gen_index(t)
        if self.m_matrix[i][j] is INFINITE:
            raise ValueError("infinite dihedral parabolic")
        out = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for w in frontier:
                for k in (i, j):
                    u = w * self.gen_element(k)
                    if u not in out:
                        out.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(out, key=GroupElement.sort_key)

    def __repr__(self):
        return f"<CoxeterSystem {','.join(self.generators)}>"


def _unit(n, v):
    e = [0] * n
    e[v] = 1
    return tuple(e)


# -- words and subexpressions --------------------------------------------

def alternating_word(s, t, m: int):
    """The word s t s t ... with m letters."""
    return tuple(s if k % 2 == 0 else t for k in range(m))


def embedded_subexpressions(word):
    """All keep/drop masks for a host word, lexicographically largest
    (all kept) first.  Deterministic order matters for rendering."""
    return list(itertools.product((True, False), repeat=len(word)))


# -- builders ------------------------------------------------------------

def _geometric_pair(m, field: ScalarField):
    if m is INFINITE:
        return Fraction(-2), Fraction(-2)
    if m == 2:
        return Fraction(0), Fraction(0)
    if m == 3:
        return Fraction(-1), Fraction(-1)
    if m == 4:
        return Fraction(-1), Fraction(-2)
    if m == 6:
        return Fraction(-1), Fraction(-3)
    if m == 5:
        if field.d != 5:
            raise UnsupportedField(
                "edge order 5 needs the field quadratic:5")
        golden = (1 + field.sqrt_gen()) / 2
        return -golden, -golden
    raise UnsupportedField(
        f"no exact pairing for edge order {m} in the supported fields")


def _normalize_m(m_matrix, rank):
    out = []
    for i in range(rank):
        row = []
        for j in range(rank):
            v = m_matrix[i][j]
            if isinstance(v, str):
                v = INFINITE if v.strip() in ("inf", "infinity") else int(v)
            row.append(v)
        out.append(tuple(row))
    for i in range(rank):
        if out[i][i] != 1:
            raise ValueError("diagonal of a Coxeter matrix must be 1")
        for j in range(rank):
            if out[i][j] != out[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
            if i != j and out[i][j] is not INFINITE and out[i][j] < 2:
                raise ValueError("off-diagonal entries must be >= 2 or inf")
    return tuple(out)


def build_system(generators, m_matrix, pairing="geometric",
                 field="rational", finite=None, variables=None):
    """Build a Coxeter system.

    generators: iterable of generator names.
    m_matrix:   Coxeter matrix entries (ints, 'inf', or None).
    pairing:    'geometric', or an explicit rational matrix of
                <root_i, coroot_j> values with 2 on the diagonal.
    field:      'rational', 'quadratic:<d>', or a ScalarField.
    finite:     declare finiteness (enables full enumeration); default
                True exactly when every m entry is finite.
    variables:  ring variable names; default a1..ak.
    """
    generators = tuple(generators)
    rank = len(generators)
    if rank == 0:
        raise ValueError("a system needs at least one generator")
    m_matrix = _normalize_m(m_matrix, rank)
    if isinstance(field, str):
        field = ScalarField.parse(field)
    if variables is None:
        variables = tuple(f"a{i + 1}" for i in range(rank))
    else:
        variables = tuple(variables)
        if len(variables) != rank:
            raise ValueError("need one variable per generator")
    ring = PolyRing(field, variables)

    if pairing == "geometric":
        cartan = [[Fraction(2) if i == j else None for j in range(rank)]
                  for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                cij, cji = _geometric_pair(m_matrix[i][j], field)
                cartan[i][j] = cij
                cartan[j][i] = cji
    else:
        cartan = [[_as_scalar(pairing[i][j], field) for j in range(rank)]
                  for i in range(rank)]
    cartan = tuple(tuple(row) for row in cartan)

    # Variables are the simple roots themselves.
    gen_actions = []
    for j in range(rank):
        mat = [[Fraction(int(r == i)) for i in range(rank)]
               for r in range(rank)]
        for i in range(rank):
            mat[j][i] = mat[j][i] - cartan[i][j]
        gen_actions.append(LinearAction(ring, mat))
    roots = [ring.var(v) for v in variables]
    var_pairings = tuple(tuple(cartan[v][j] for j in range(rank))
                         for v in range(rank))
    if finite is None:
        finite = all(m_matrix[i][j] is not INFINITE
                     for i in range(rank) for j in range(rank))
    return CoxeterSystem(generators, m_matrix, ring, gen_actions, roots,
                         var_pairings, cartan, finite)


def _as_scalar(v, field: ScalarField):
    if isinstance(v, QuadraticScalar):
        if field.d != v.d:
            raise UnsupportedField("pairing entry outside the field")
        return v
    return Fraction(v)


def gl_system(n: int) -> CoxeterSystem:
    """The symmetric group S_n permuting x1..xn, with simple roots
    x_i - x_{i+1}."""
    if n < 2:
        raise ValueError("gl preset needs n >= 2")
    rank = n - 1
    generators = tuple(f"s{i + 1}" for i in range(rank))
    m_matrix = tuple(tuple(
        1 if i == j else (3 if abs(i - j) == 1 else 2)
        for j in range(rank)) for i in range(rank))
    field = ScalarField(0)
    variables = tuple(f"x{i + 1}" for i in range(n))
    ring = PolyRing(field, variables)
    gen_actions = []
    for j in range(rank):
        mat = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        mat[j][j], mat[j][j + 1] = Fraction(0), Fraction(1)
        mat[j + 1][j], mat[j + 1][j + 1] = Fraction(1), Fraction(0)
        gen_actions.append(LinearAction(ring, mat))
    roots = [ring.var(f"x{j + 1}") - ring.var(f"x{j + 2}")
             for j in range(rank)]
    # <x_v, coroot_j> = delta(v, j) - delta(v, j+1)
    var_pairings = tuple(tuple(
        Fraction(int(v == j) - int(v == j + 1)) for j in range(rank))
        for v in range(n))
    cartan = tuple(tuple(var_pairings[i][j] - var_pairings[i + 1][j]
                         for j in range(rank)) for i in range(rank))
    return CoxeterSystem(generators, m_matrix, ring, gen_actions, roots,
                         var_pairings, cartan, finite=True)


def rank_one_system(variable: str = "a") -> CoxeterSystem:
    """The rank-1 system: one generator s negating one variable."""
    return build_system(("s",), ((1,),), pairing=((2,),),
                        variables=(variable,))


def dihedral_system(m, field=None) -> CoxeterSystem:
    """The dihedral system on generators s, t with order(st) = m."""
    if field is None:
        field = "quadratic:5" if m == 5 else "rational"
    mm = ((1, m), (m, 1))
    finite = m is not INFINITE and not (isinstance(m, str)
                                        and m.startswith("inf"))
    return build_system(("s", "t"), mm, field=field, finite=finite)
