"""Nil Hecke algebras of Coxeter systems as Hopf algebroids.

Exact arithmetic throughout: scalars are rationals or elements of a
real quadratic field, polynomials are sparse with graded-lex ordering,
and every identity is checked by normal-form equality, never
numerically.

The main objects:

* :func:`build_system` / :func:`gl_system` / :func:`dihedral_system` /
  :func:`rank_one_system` build a Coxeter system acting on its
  polynomial ring.
* :class:`NilHeckeElement` is the algebra of divided-difference
  operators in the basis  sum_w f_w d_w.
* :func:`delta`, :func:`counit`, :func:`red_map`, :func:`galois` are
  the Hopf-algebroid structure maps, valued in :class:`BlueTensor` /
  :class:`RedTensor` normal forms.
* :mod:`nhlab.qstarw` embeds everything into the twisted group algebra
  over the fraction field, an independent computational oracle.
* :func:`run_suite` runs the deterministic verification suites that the
  `nhlab` command line exposes.
"""

from .scalars import QuadraticScalar, ScalarField, quad
from .poly import (DivisionNotExact, LinearAction, Polynomial, PolyRing,
                   RationalFunction, divides, exact_divide, poly_gcd)
from .coxeter import (CoxeterSystem, GroupElement, SystemMismatch,
                      build_system, dihedral_system, gl_system,
                      rank_one_system)
from .nilhecke import (NilHeckeElement, counit, e_triv, from_right_coeffs,
                       gen_d, gen_w, gen_weight, nh_basis_element, nh_one,
                       nh_zero, render_nh, to_right_coeffs)
from .tensors import (BlueTensor, BlueTensorN, RedTensor, TakeuchiViolation,
                      blue_embed, red_embed)
from .hopf import (all_mixed_relations, antipode_obstruction_rank1, delta,
                   galois, mixed_relation, red_map, verify_coassoc,
                   verify_cocommutative, verify_counit,
                   verify_delta_morphism, verify_galois_inverse,
                   verify_red_morphism)
from .qstarw import (QWElement, QWTensor, RootFraction, antipode_qw,
                     blue_to_qw, delta_qw, embed, embed_basis, epsilon_qw,
                     in_image_of_nh, oracle_equal, qw_to_nh, red_qw,
                     red_to_qw)
from .exprparse import ExprError, parse_element, parse_polynomial
from .verify import CheckRecord, SUITES, default_systems, run_suite

__version__ = "0.1.0"

__all__ = [
    "BlueTensor",
    "BlueTensorN",
    "CheckRecord",
    "CoxeterSystem",
    "DivisionNotExact",
    "ExprError",
    "GroupElement",
    "LinearAction",
    "NilHeckeElement",
    "PolyRing",
    "Polynomial",
    "QWElement",
    "QWTensor",
    "QuadraticScalar",
    "RationalFunction",
    "RedTensor",
    "RootFraction",
    "SUITES",
    "ScalarField",
    "SystemMismatch",
    "TakeuchiViolation",
    "all_mixed_relations",
    "antipode_obstruction_rank1",
    "antipode_qw",
    "blue_embed",
    "blue_to_qw",
    "build_system",
    "counit",
    "default_systems",
    "delta",
    "delta_qw",
    "dihedral_system",
    "divides",
    "e_triv",
    "embed",
    "embed_basis",
    "epsilon_qw",
    "exact_divide",
    "from_right_coeffs",
    "galois",
    "gen_d",
    "gen_w",
    "gen_weight",
    "gl_system",
    "in_image_of_nh",
    "mixed_relation",
    "nh_basis_element",
    "nh_one",
    "nh_zero",
    "oracle_equal",
    "parse_element",
    "parse_polynomial",
    "poly_gcd",
    "quad",
    "qw_to_nh",
    "rank_one_system",
    "red_embed",
    "red_map",
    "red_qw",
    "red_to_qw",
    "render_nh",
    "run_suite",
    "to_right_coeffs",
    "verify_coassoc",
    "verify_cocommutative",
    "verify_counit",
    "verify_delta_morphism",
    "verify_galois_inverse",
    "verify_red_morphism",
]
