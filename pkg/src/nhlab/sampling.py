"""Seeded random elements for the verification suites.

All randomness flows through an explicit `random.Random` instance, so a
run is reproducible from its seed alone.  The default sampling profile
is seed 1, 50 samples, coefficient degree at most 3, support at most 4.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coxeter import CoxeterSystem
from .nilhecke import NilHeckeElement
from .poly import Polynomial, PolyRing
from .scalars import quad

__all__ = [
    "DEFAULT_MAX_DEG",
    "DEFAULT_MAX_SUPPORT",
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "make_rng",
    "random_nh",
    "random_polynomial",
    "random_scalar",
]

DEFAULT_SEED = 1
DEFAULT_SAMPLES = 50
DEFAULT_MAX_DEG = 3
DEFAULT_MAX_SUPPORT = 4


def make_rng(seed: int = DEFAULT_SEED) -> random.Random:
    return random.Random(seed)


def random_scalar(rnd: random.Random, field):
    num = rnd.choice([-3, -2, -1, 1, 1, 2, 2, 3, 5])
    den = rnd.choice([1, 1, 1, 2, 3])
    a = Fraction(num, den)
    if field.d and rnd.random() < 0.4:
        return quad(a, Fraction(rnd.choice([-2, -1, 1, 1, 2])), field.d)
    return a


def random_polynomial(rnd: random.Random, ring: PolyRing,
                      max_deg: int = DEFAULT_MAX_DEG,
                      max_terms: int = 3) -> Polynomial:
    """A random polynomial with exponent degree at most max_deg; may be
    zero only with tiny probability (empty term draw)."""
    terms: dict = {}
    for _ in range(rnd.randint(1, max_terms)):
        deg = rnd.randint(0, max_deg)
        expo = [0] * ring.nvars
        for _ in range(deg):
            expo[rnd.randrange(ring.nvars)] += 1
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + random_scalar(rnd, ring.field)
    return ring.from_terms({e: c for e, c in terms.items() if c != 0})


def random_nh(rnd: random.Random, system: CoxeterSystem,
              max_deg: int = DEFAULT_MAX_DEG,
              max_support: int = DEFAULT_MAX_SUPPORT,
              max_length: int | None = None) -> NilHeckeElement:
    """A random nil Hecke element: up to max_support basis elements with
    random polynomial coefficients."""
    if max_length is None:
        pool = system.elements() if system.finite else system.elements(3)
    else:
        pool = system.elements(max_length)
    count = min(rnd.randint(1, max_support), len(pool))
    chosen = rnd.sample(pool, count)
    support = {}
    for w in chosen:
        f = random_polynomial(rnd, system.ring, max_deg)
        if not f.is_zero():
            support[w] = f
    return NilHeckeElement(system, support)
