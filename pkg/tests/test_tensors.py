"""Balanced tensor squares: module structure, Takeuchi test, products."""

import random
from fractions import Fraction

import pytest

from nhlab.coxeter import dihedral_system, gl_system, rank_one_system
from nhlab.hopf import delta, red_map
from nhlab.nilhecke import gen_d, gen_w, gen_weight, nh_basis_element
from nhlab.tensors import (BlueTensor, RedTensor, TakeuchiViolation,
                           blue_embed, nil_basis_product, red_embed)


def rand_nh(rnd, system, maxdeg=2, size=2):
    from nhlab.nilhecke import nh_zero
    elems = system.elements()
    h = nh_zero(system)
    for _ in range(size):
        w = rnd.choice(elems)
        terms = {}
        for _ in range(3):
            e = tuple(rnd.randrange(maxdeg + 1)
                      for _ in range(system.ring.nvars))
            c = Fraction(rnd.randrange(-4, 5))
            if c != 0:
                terms[e] = c
        f = system.ring.from_terms(terms)
        h = h + gen_weight(system, f) * nh_basis_element(system, w)
    return h


def test_nil_basis_product_table():
    sys = gl_system(3)
    s0, s1 = sys.gen_element(0), sys.gen_element(1)
    assert nil_basis_product(sys, s0, s0) is None
    assert nil_basis_product(sys, s0, s1) == s0 * s1
    assert nil_basis_product(sys, sys.one, s0) == s0
    wo = sys.longest_element()
    assert nil_basis_product(sys, wo, s0) is None


def test_unit_and_addition():
    sys = rank_one_system()
    u = BlueTensor.unit(sys)
    assert (u - u).is_zero()
    assert u + u == u.scale(2)
    assert u.mul(u) == u


def test_balancing_transport():
    # a variable acts the same through either slot on a balanced tensor
    sys = gl_system(3)
    t = delta(gen_d(sys, 0) * gen_d(sys, 1))
    x2 = sys.ring.var("x2")
    assert t.right_mul_slot1(x2) == t.right_mul_slot2(x2)


def test_takeuchi_detects_unbalanced():
    sys = rank_one_system()
    s = sys.gen_element("s")
    # d_s (x) 1 alone fails: slot-two multiplication by the root does
    # not match slot-one multiplication
    bad = BlueTensor(sys, {(s, sys.one): sys.ring.one})
    assert not bad.takeuchi_ok()
    assert delta(gen_d(sys, "s")).takeuchi_ok()


def test_checked_mul_raises():
    sys = rank_one_system()
    s = sys.gen_element("s")
    bad = BlueTensor(sys, {(s, sys.one): sys.ring.one})
    good = delta(gen_d(sys, "s"))
    with pytest.raises(TakeuchiViolation):
        bad.mul(good, checked=True)
    # checked multiplication succeeds on a balanced left factor
    assert good.mul(good, checked=True) == delta(
        gen_d(sys, "s") * gen_d(sys, "s"))


def test_blue_embed_group_like():
    sys = gl_system(3)
    for j in (0, 1):
        t = blue_embed(gen_w(sys, j), gen_w(sys, j))
        assert t.takeuchi_ok()
        assert t.mul(t) == BlueTensor.unit(sys)


def test_red_embed_group_like():
    sys = gl_system(3)
    for j in (0, 1):
        t = red_embed(gen_w(sys, j), gen_w(sys, j))
        assert t.takeuchi_ok()
        assert t.mul_op(t) == RedTensor.unit(sys)


def test_swap():
    sys = gl_system(3)
    t = delta(gen_d(sys, 0))
    assert t.swap().swap() == t
    one = sys.one
    s = sys.gen_element(0)
    raw = BlueTensor(sys, {(s, one): sys.ring.var("x1")})
    assert raw.swap() == BlueTensor(sys, {(one, s): sys.ring.var("x1")})


def test_mul_matches_delta_of_product():
    # delta is an algebra map, so products of images stay in the image
    for system in (gl_system(3), dihedral_system(4)):
        rnd = random.Random(31)
        for _ in range(8):
            a = rand_nh(rnd, system)
            b = rand_nh(rnd, system)
            assert delta(a).mul(delta(b)) == delta(a * b)


def test_mul_op_matches_red_of_product():
    for system in (gl_system(3), dihedral_system(4)):
        rnd = random.Random(32)
        for _ in range(8):
            a = rand_nh(rnd, system)
            b = rand_nh(rnd, system)
            assert red_map(a).mul_op(red_map(b)) == red_map(a * b)


def test_blue_mul_associative():
    sys = gl_system(3)
    rnd = random.Random(33)
    ts = [delta(rand_nh(rnd, sys, maxdeg=1)) for _ in range(3)]
    a, b, c = ts
    assert a.mul(b).mul(c) == a.mul(b.mul(c))


def test_str_headers_absent_from_tensor_str():
    # rendering of a tensor never includes the header; the CLI adds it
    sys = rank_one_system()
    s = str(delta(gen_d(sys, "s")))
    assert "(x)" in s
    assert "blue" not in s
