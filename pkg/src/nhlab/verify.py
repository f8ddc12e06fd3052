"""Deterministic verification suites with one record per check.

Each suite returns a list of CheckRecord values; a record renders as
`suite | case | PASS` (with a short witness appended after a FAIL).
Given the same systems and seed the records are byte-identical across
runs, so reports can be diffed.
"""

from __future__ import annotations

import inspect
import itertools
from dataclasses import dataclass

from .coxeter import CoxeterSystem, dihedral_system, gl_system, \
    rank_one_system
from .gallery import dual_module_structure_rank1, endo_compare_rank1, \
    matrix_suite, weyl_suite
from .hopf import all_mixed_relations, antipode_obstruction_rank1, delta, \
    red_map, verify_coassoc, verify_cocommutative, verify_counit, \
    verify_delta_morphism, verify_galois_inverse, verify_red_morphism
from .linalg import rank
from .nilhecke import NilHeckeElement, e_triv, gen_d, nh_basis_element, \
    nh_one
from .qstarw import antipode_qw, blue_to_qw, delta_qw, embed, embed_basis, \
    in_image_of_nh
from .sampling import DEFAULT_MAX_DEG, DEFAULT_MAX_SUPPORT, \
    DEFAULT_SAMPLES, DEFAULT_SEED, make_rng, random_nh

__all__ = [
    "CheckRecord",
    "SUITES",
    "default_systems",
    "run_suite",
    "suite_antipode",
    "suite_basis",
    "suite_etriv",
    "suite_faithfulness",
    "suite_gallery",
    "suite_hopf",
    "suite_mixed",
    "suite_oracle",
]


@dataclass
class CheckRecord:
    suite: str
    case: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{self.suite} | {self.case} | {status}"
        if not self.ok and self.witness:
            out += f" | {self.witness}"
        return out


def default_systems():
    """The four standard example systems, smallest first."""
    return [("s2", rank_one_system()),
            ("gl3", gl_system(3)),
            ("b2", dihedral_system(4)),
            ("i2_5", dihedral_system(5))]


# -- comultiplication, counit, Takeuchi, Galois --------------------------

def suite_hopf(systems=None, seed: int = DEFAULT_SEED,
               samples: int = DEFAULT_SAMPLES,
               max_deg: int = DEFAULT_MAX_DEG,
               max_support: int = DEFAULT_MAX_SUPPORT,
               checked: bool = False):
    records = []
    for label, system in systems or default_systems():
        rnd = make_rng(seed)
        draws = [random_nh(rnd, system, max_deg, max_support)
                 for _ in range(samples)]
        laws = [
            ("coassociativity", verify_coassoc),
            ("counit laws", verify_counit),
            ("cocommutativity", verify_cocommutative),
            ("blue image in Takeuchi", lambda h: delta(h).takeuchi_ok()),
            ("red image in Takeuchi", lambda h: red_map(h).takeuchi_ok()),
            ("galois inversion, unit case", verify_galois_inverse),
        ]
        for name, law in laws:
            bad = next((i for i, h in enumerate(draws) if not law(h)), None)
            records.append(CheckRecord(
                "hopf", f"{name} [{label}]", bad is None,
                "" if bad is None else f"sample {bad}: {draws[bad]}"))
        pairs = list(zip(draws[0::2], draws[1::2]))
        pair_laws = [
            ("delta multiplicative",
             lambda a, b: verify_delta_morphism(a, b, checked=checked)),
            ("red multiplicative",
             lambda a, b: verify_red_morphism(a, b, checked=checked)),
            ("galois inversion", verify_galois_inverse),
        ]
        for name, law in pair_laws:
            bad = next((i for i, (a, b) in enumerate(pairs)
                        if not law(a, b)), None)
            records.append(CheckRecord(
                "hopf", f"{name} [{label}]", bad is None,
                "" if bad is None else f"pair {bad}"))
    return records


# -- mixed dihedral relations --------------------------------------------

def suite_mixed(ms=(2, 3, 4, 5, 6)):
    records = []
    for m in ms:
        system = dihedral_system(m)
        for rep in all_mixed_relations(system, 0, 1):
            records.append(CheckRecord(
                "mixed", f"m={m} w={rep.label()}", rep.holds,
                "" if rep.holds else rep.equation_str()))
    return records


# -- nonzero products exactly on reduced words ---------------------------

def basis_specs():
    return [("b2", dihedral_system(4), 6),
            ("i2_5", dihedral_system(5), 6),
            ("gl3", gl_system(3), 4)]


def suite_basis(specs=None):
    records = []
    for label, system, max_len in specs or basis_specs():
        nz_ok, nz_wit = True, ""
        nf_ok, nf_wit = True, ""
        orc_ok, orc_wit = True, ""
        for length in range(max_len + 1):
            for word in itertools.product(range(system.rank), repeat=length):
                prod = nh_one(system)
                for j in word:
                    prod = prod * gen_d(system, j)
                reduced = system.is_reduced(word)
                if (not prod.is_zero()) != reduced:
                    nz_ok, nz_wit = False, f"word {word}"
                if not reduced:
                    continue
                w = system.element_from_word(word)
                if prod != nh_basis_element(system, w):
                    nf_ok, nf_wit = False, f"word {word}"
                if embed(prod) != embed_basis(system, w):
                    orc_ok, orc_wit = False, f"word {word}"
        forms = {nh_basis_element(system, w)
                 for w in system.elements(max_len)}
        inj = len(forms) == len(system.elements(max_len))
        records.append(CheckRecord(
            "basis", f"product nonzero iff reduced [{label}]", nz_ok, nz_wit))
        records.append(CheckRecord(
            "basis", f"normal form depends only on the element [{label}]",
            nf_ok, nf_wit))
        records.append(CheckRecord(
            "basis", f"distinct elements, distinct forms [{label}]", inj))
        records.append(CheckRecord(
            "basis", f"oracle embedding agrees [{label}]", orc_ok, orc_wit))
    return records


# -- the twisted group algebra oracle ------------------------------------

def suite_oracle(systems=None, seed: int = DEFAULT_SEED,
                 products: int = 200, deltas: int = 50,
                 max_deg: int = DEFAULT_MAX_DEG,
                 max_support: int = DEFAULT_MAX_SUPPORT):
    records = []
    for label, system in systems or default_systems():
        rnd = make_rng(seed)
        bad = None
        for i in range(products):
            a = random_nh(rnd, system, max_deg, max_support)
            b = random_nh(rnd, system, max_deg, max_support)
            if embed(a * b) != embed(a) * embed(b):
                bad = f"pair {i}: a = {a}; b = {b}"
                break
        records.append(CheckRecord(
            "oracle", f"multiplicative embedding, {products} products "
            f"[{label}]", bad is None, bad or ""))
        bad = None
        for i in range(deltas):
            h = random_nh(rnd, system, max_deg, max_support)
            if blue_to_qw(delta(h)) != delta_qw(embed(h)):
                bad = f"sample {i}: {h}"
                break
        records.append(CheckRecord(
            "oracle", f"delta agrees after embedding, {deltas} samples "
            f"[{label}]", bad is None, bad or ""))
    return records


# -- the averaging idempotent --------------------------------------------

def etriv_systems():
    return [("s2", rank_one_system()),
            ("gl3", gl_system(3)),
            ("b2", dihedral_system(4))]


def suite_etriv(systems=None):
    records = []
    for label, system in systems or etriv_systems():
        try:
            e = e_triv(system)
            forms_ok, idem_ok = True, (e * e == e)
            wit = "" if idem_ok else "e * e != e"
        except RuntimeError as exc:
            forms_ok, idem_ok, wit = False, False, str(exc)
        records.append(CheckRecord(
            "etriv", f"the two defining forms agree [{label}]", forms_ok,
            wit if not forms_ok else ""))
        records.append(CheckRecord(
            "etriv", f"idempotent [{label}]", idem_ok,
            wit if forms_ok and not idem_ok else ""))
    return records


# -- the rank-1 antipode obstruction -------------------------------------

def suite_antipode():
    system = rank_one_system()
    rep = antipode_obstruction_rank1(system)
    records = [
        CheckRecord("antipode-obstruction", "delta(s) = s (x) s",
                    rep.delta_group_like),
        CheckRecord("antipode-obstruction", "red(s) = s (x) s",
                    rep.red_group_like),
        CheckRecord("antipode-obstruction",
                    f"coefficients force S(s) = {rep.forced_value}",
                    rep.forced_matches_s and rep.slot_consistent),
        CheckRecord("antipode-obstruction",
                    f"no polynomial p solves ({rep.equation_lhs_factor})"
                    f" * p = {rep.equation_rhs}",
                    not rep.equation_solvable),
        CheckRecord("antipode-obstruction", "no antipode exists",
                    rep.obstruction_established),
    ]
    x = antipode_qw(embed(gen_d(system, 0)))
    records.append(CheckRecord(
        "antipode-obstruction",
        "oracle: the would-be antipode of d[s] leaves the algebra",
        not in_image_of_nh(x)))
    return records


# -- faithfulness of the polynomial representation -----------------------

def _monomial_exponents(nvars: int, max_deg: int):
    out = []
    for total in range(max_deg + 1):
        for e in itertools.product(range(total + 1), repeat=nvars):
            if sum(e) == total:
                out.append(e)
    return out


def operator_matrix(system: CoxeterSystem, coeff_deg: int = 4,
                    domain_deg: int = 4):
    """Rows: the operators f_w d_w for monomial f_w of degree at most
    coeff_deg; columns: coefficients of the images of the monomials of
    degree at most domain_deg, restricted to the monomials that occur."""
    ring = system.ring
    one = ring.one.terms[(0,) * ring.nvars]
    zero = one - one
    coeffs = _monomial_exponents(ring.nvars, coeff_deg)
    domain = _monomial_exponents(ring.nvars, domain_deg)
    rows = []
    used = set()
    for w in sorted(system.elements(), key=lambda u: u.sort_key()):
        for a in coeffs:
            h = NilHeckeElement(system, {w: ring.from_terms({a: one})})
            row = {}
            for pi, p in enumerate(domain):
                img = h.act(ring.from_terms({p: one}))
                for e, c in img.terms.items():
                    row[(pi, e)] = c
            rows.append(row)
            used.update(row)
    index = {col: i for i, col in enumerate(sorted(used))}
    dense = []
    for row in rows:
        vec = [zero] * len(index)
        for col, c in row.items():
            vec[index[col]] = c
        dense.append(vec)
    return dense


def suite_faithfulness():
    records = []
    for label, system in [("s2", rank_one_system()), ("gl3", gl_system(3))]:
        rows = operator_matrix(system)
        want = len(rows)
        got = rank(rows)
        records.append(CheckRecord(
            "faithfulness",
            f"operator matrix has full rank {want} "
            f"({want} x {len(rows[0])}) [{label}]",
            got == want, f"rank {got}" if got != want else ""))
    return records


# -- the gallery fixtures ------------------------------------------------

def suite_gallery(trunc: int = 6, seed: int = DEFAULT_SEED):
    records = []
    for n in (1, 2):
        rep = weyl_suite(n, max_deg=4, seed=seed)
        for name, ok in [
                ("generator relation", rep.relation_example),
                ("counit formula", rep.epsilon_examples),
                ("delta lands in Takeuchi", rep.takeuchi_all),
                ("red = (id (x) S) o delta", rep.red_matches_id_s_delta),
                ("delta multiplicative", rep.delta_morphism),
                ("counit laws", rep.counit_laws)]:
            records.append(CheckRecord("gallery", f"weyl n={n}: {name}", ok))
    for n in (2, 3, 4):
        rep = matrix_suite(n)
        for name, ok in [
                ("coassociativity", rep.coassoc),
                ("counit laws", rep.counit_laws),
                ("delta lands in Takeuchi", rep.takeuchi_all),
                ("galois o red = ( . (x) 1)", rep.galois_red_section),
                ("red = (id (x) transpose) o delta",
                 rep.red_matches_id_s_delta),
                ("delta multiplicative", rep.delta_morphism),
                ("counit representation is iso", rep.rho_eps_iso)]:
            records.append(CheckRecord("gallery", f"matrix n={n}: {name}",
                                       ok))
    endo = endo_compare_rank1(trunc=trunc, seed=seed)
    for label, ok in endo.cases:
        records.append(CheckRecord("gallery", f"endo agree, h = {label}",
                                   ok))
    dual = dual_module_structure_rank1()
    for name, ok in [
            ("alpha . alpha-dual = 1-dual", dual.relation_holds),
            ("alpha-dual generates freely", dual.generator_spans),
            ("no torsion on monomials", dual.torsion_free),
            ("r -> r . alpha-dual injective",
             dual.injective_on_truncation)]:
        records.append(CheckRecord("gallery", f"dual module: {name}", ok))
    return records


SUITES = {
    "hopf": suite_hopf,
    "mixed": suite_mixed,
    "basis": suite_basis,
    "oracle": suite_oracle,
    "etriv": suite_etriv,
    "antipode-obstruction": suite_antipode,
    "faithfulness": suite_faithfulness,
    "gallery": suite_gallery,
}


def run_suite(name: str, **kwargs):
    """Run one suite by name, or every suite for name 'all'."""
    if name == "all":
        records = []
        for key in SUITES:
            records.extend(run_suite(key, **kwargs))
        return records
    fn = SUITES[name]
    allowed = set(inspect.signature(fn).parameters)
    return fn(**{k: v for k, v in kwargs.items() if k in allowed})
