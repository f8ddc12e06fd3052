"""Coxeter systems: group structure, words, actions, Demazure operators."""

import random
from fractions import Fraction

import pytest

from nhlab.coxeter import (alternating_word, build_system, dihedral_system,
                           gl_system, rank_one_system)
from nhlab.poly import Polynomial


def rand_poly(rnd, ring, maxdeg=2, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rnd.randrange(maxdeg + 1) for _ in range(ring.nvars))
        c = Fraction(rnd.randrange(-5, 6))
        if c != 0:
            terms[e] = c
    return ring.from_terms(terms)


def test_dihedral_orders():
    for m in (2, 3, 4, 5, 6):
        sys = dihedral_system(m)
        elems = sys.elements()
        assert len(elems) == 2 * m
        wo = sys.longest_element()
        assert wo.length == m
        s, t = sys.gen_element(0), sys.gen_element(1)
        rot = s * t
        acc = sys.one
        for _ in range(m):
            acc = acc * rot
        assert acc == sys.one


def test_gl3_group():
    sys = gl_system(3)
    elems = sys.elements()
    assert len(elems) == 6
    assert sorted(w.length for w in elems) == [0, 1, 1, 2, 2, 3]
    wo = sys.longest_element()
    assert wo.word == (0, 1, 0)
    assert sys.reduced_words(wo) == [(0, 1, 0), (1, 0, 1)]


def test_gl4_count():
    sys = gl_system(4)
    assert len(sys.elements()) == 24
    assert sys.longest_element().length == 6


def test_rank_one():
    sys = rank_one_system()
    assert sys.generators == ("s",)
    s = sys.gen_element("s")
    assert s * s == sys.one
    assert len(sys.elements()) == 2


def test_canonical_word_is_lex_smallest_reduced():
    sys = gl_system(3)
    for w in sys.elements():
        words = sys.reduced_words(w)
        assert w.word == min(words)
        assert all(sys.is_reduced(u) for u in words)
        assert all(sys.element_from_word(u) == w for u in words)


def test_is_reduced():
    sys = gl_system(3)
    assert sys.is_reduced((0, 1, 0))
    assert sys.is_reduced(())
    assert not sys.is_reduced((0, 0))
    assert not sys.is_reduced((0, 1, 0, 1))


def test_element_interning():
    sys = dihedral_system(4)
    a = sys.element_from_word((0, 1, 0))
    b = sys.element_from_word((0, 1, 0))
    assert a is b
    # braid relation: alternating words of length m agree
    assert (sys.element_from_word(alternating_word(0, 1, 4))
            is sys.element_from_word(alternating_word(1, 0, 4)))


def test_group_laws_randomized():
    sys = gl_system(3)
    elems = sys.elements()
    rnd = random.Random(7)
    for _ in range(40):
        a, b, c = (rnd.choice(elems) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == sys.one
        assert (a * b).inverse() == b.inverse() * a.inverse()


def test_action_is_homomorphism():
    sys = gl_system(3)
    elems = sys.elements()
    rnd = random.Random(8)
    for _ in range(20):
        a, b = rnd.choice(elems), rnd.choice(elems)
        f = rand_poly(rnd, sys.ring)
        assert (a * b).action(f) == a.action(b.action(f))


def test_demazure_pinned_values():
    one = rank_one_system()
    a = one.ring.var("a")
    assert one.demazure("s", a) == one.ring.from_scalar(2)
    assert one.demazure("s", a * a).is_zero()
    assert one.demazure("s", a * a * a) == (a * a) * 2
    sys = gl_system(3)
    x1, x2, x3 = sys.ring.gens()
    assert sys.demazure(0, x1) == sys.ring.one
    assert sys.demazure(0, x2) == -sys.ring.one
    assert sys.demazure(0, x3).is_zero()
    assert sys.demazure(0, x1 * x2).is_zero()
    assert sys.demazure(0, x1 * x1) == x1 + x2


def test_demazure_square_zero():
    sys = gl_system(3)
    rnd = random.Random(9)
    for _ in range(15):
        f = rand_poly(rnd, sys.ring, 3)
        assert sys.demazure(0, sys.demazure(0, f)).is_zero()
        assert sys.demazure(1, sys.demazure(1, f)).is_zero()


def test_demazure_braid_identity():
    sys = gl_system(3)
    rnd = random.Random(10)
    for _ in range(10):
        f = rand_poly(rnd, sys.ring, 3)
        assert (sys.demazure_word((0, 1, 0), f)
                == sys.demazure_word((1, 0, 1), f))


def test_demazure_twisted_leibniz():
    sys = gl_system(3)
    rnd = random.Random(11)
    for _ in range(10):
        f = rand_poly(rnd, sys.ring, 2)
        g = rand_poly(rnd, sys.ring, 2)
        lhs = sys.demazure(0, f * g)
        rhs = sys.demazure(0, f) * g + sys.act_gen(0, f) * sys.demazure(0, g)
        assert lhs == rhs


def test_pair_with_coroot():
    sys = gl_system(3)
    for j in range(2):
        assert sys.pair_with_coroot(sys.roots[j], j) == 2
    one = rank_one_system()
    assert one.pair_with_coroot(one.roots[0], "s") == 2


def test_positive_roots_counts():
    assert len(gl_system(3).positive_roots()) == 3
    for m in (2, 3, 4, 6):
        assert len(dihedral_system(m).positive_roots()) == m
    assert len(dihedral_system(5).positive_roots()) == 5


def test_reflection_sends_root_to_negative():
    sys = gl_system(3)
    for j in range(2):
        s = sys.gen_element(j)
        assert s.action(sys.roots[j]) == -sys.roots[j]


def test_invariance():
    sys = gl_system(3)
    x1, x2, x3 = sys.ring.gens()
    e1 = x1 + x2 + x3
    e2 = x1 * x2 + x1 * x3 + x2 * x3
    assert sys.is_invariant(e1)
    assert sys.is_invariant(e2)
    assert not sys.is_invariant(x1)
    assert sys.demazure(0, e1 * x1) == sys.demazure(0, x1) * e1


def test_infinite_dihedral():
    sys = dihedral_system("inf")
    assert not sys.finite
    words = sys.elements(max_length=5)
    assert len(words) == 11    # 1 + 2 per positive length
    with pytest.raises(ValueError):
        sys.elements()


def test_enumeration_ceiling(monkeypatch):
    monkeypatch.setenv("NHLAB_MAX_ELEMENTS", "4")
    sys = dihedral_system(6)
    with pytest.raises(RuntimeError) as e:
        sys.elements()
    assert "NHLAB_MAX_ELEMENTS" in str(e.value)


def test_build_system_matrix_pairing():
    sys = build_system(
        ("s", "t"), [[1, 3], [3, 1]],
        pairing=[[2, -1], [-1, 2]],
        variables=("u", "v"))
    assert len(sys.elements()) == 6
    u, v = sys.ring.gens()
    assert sys.demazure("s", u) == sys.ring.from_scalar(2)
    assert sys.demazure("s", v) == sys.ring.from_scalar(-1)


def test_quadratic_field_system():
    sys = dihedral_system(5)
    assert sys.ring.field.d == 5
    wo = sys.longest_element()
    assert wo.length == 5
    for j in (0, 1):
        f = sys.roots[j]
        assert sys.demazure(j, f) == sys.ring.from_scalar(2)


def test_longest_element_descents():
    for sys in (gl_system(3), dihedral_system(4)):
        wo = sys.longest_element()
        for j in range(sys.rank):
            assert sys.is_left_descent(j, wo)
        assert wo * wo == sys.one or wo.inverse() == wo
