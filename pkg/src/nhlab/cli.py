"""Batch command line front end.

Subcommands: eval, act, delta, epsilon, red, mixed, verify, gallery.
A system is described by an ini-style config file; without one the
rank-1 system on generator s with variable a is used (verify defaults
to the four standard example systems instead).  Output is deterministic
for a fixed (config, command, seed), so runs can be diffed.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import configparser
import re
import sys
from fractions import Fraction
from pathlib import Path

from .coxeter import CoxeterSystem, build_system, gl_system, rank_one_system
from .exprparse import ExprError, parse_element, parse_polynomial
from .hopf import all_mixed_relations, delta, red_map
from .nilhecke import counit, render_nh
from .verify import SUITES, run_suite

__all__ = ["ConfigError", "load_system", "main"]

BLUE_HEADER = ("blue tensor: both slots left modules; "
               "coefficients normalized into slot one")
RED_HEADER = ("red tensor: slot one in the right-coefficient basis; "
              "coefficients normalized into slot two")


class ConfigError(Exception):
    """A system configuration file could not be understood."""


# -- system configuration ------------------------------------------------

def _split_list(raw: str):
    return [tok for tok in re.split(r"[,\s]+", raw.strip()) if tok]


def _parse_matrix(raw: str, what: str):
    rows = [
        _split_list(line) for line in raw.strip().splitlines() if line.strip()
    ]
    if not rows:
        raise ConfigError(f"{what} matrix is empty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ConfigError(f"{what} matrix rows have unequal lengths")
    return rows


def _parse_rational(tok: str, what: str):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"bad {what} entry {tok!r}")


def load_system(path) -> CoxeterSystem:
    """Build a system from an ini config file.

    Section [system] keys: generators, coxeter_matrix, pairing
    (geometric, gl(n), or an explicit rational matrix), field
    (rational or quadratic:<d>), finite (true/false), variables.
    """
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    if "system" not in parser:
        raise ConfigError(f"{path}: missing [system] section")
    sec = parser["system"]
    known = {"generators", "coxeter_matrix", "pairing", "field", "finite",
             "variables"}
    for key in sec:
        if key not in known:
            raise ConfigError(f"{path}: unknown key {key!r} in [system]")

    pairing = sec.get("pairing", "geometric").strip()
    m = re.fullmatch(r"gl\((\d+)\)", pairing)
    if m:
        for key in ("generators", "coxeter_matrix", "variables"):
            if key in sec:
                raise ConfigError(
                    f"{path}: the gl(n) preset fixes {key}; remove it")
        n = int(m.group(1))
        if n < 2:
            raise ConfigError(f"{path}: gl(n) needs n >= 2")
        return gl_system(n)

    if "generators" not in sec:
        raise ConfigError(f"{path}: missing generators")
    generators = _split_list(sec["generators"])
    if "coxeter_matrix" not in sec:
        raise ConfigError(f"{path}: missing coxeter_matrix")
    m_matrix = _parse_matrix(sec["coxeter_matrix"], "coxeter")
    if len(m_matrix) != len(generators) or \
            len(m_matrix[0]) != len(generators):
        raise ConfigError(f"{path}: coxeter_matrix must be "
                          f"{len(generators)} x {len(generators)}")

    if pairing != "geometric":
        rows = _parse_matrix(pairing, "pairing")
        pairing = [[_parse_rational(tok, "pairing") for tok in row]
                   for row in rows]

    field = sec.get("field", "rational").strip()
    finite = sec.getboolean("finite", fallback=None)
    variables = _split_list(sec["variables"]) if "variables" in sec else None
    try:
        return build_system(generators, m_matrix, pairing=pairing,
                            field=field, finite=finite, variables=variables)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"{path}: {exc}")


def _system_for(args) -> tuple[str, CoxeterSystem]:
    if getattr(args, "system", None):
        return Path(args.system).stem, load_system(args.system)
    return "s2", rank_one_system()


# -- subcommands ---------------------------------------------------------

def cmd_eval(args) -> int:
    _, system = _system_for(args)
    h = parse_element(system, args.expr)
    print(render_nh(h))
    return 0


def cmd_act(args) -> int:
    _, system = _system_for(args)
    h = parse_element(system, args.expr)
    f = parse_polynomial(system, args.poly)
    print(h.act(f))
    return 0


def cmd_delta(args) -> int:
    _, system = _system_for(args)
    h = parse_element(system, args.expr)
    t = delta(h)
    if args.checked and not t.takeuchi_ok():
        print("FAIL: image leaves the blue Takeuchi product",
              file=sys.stderr)
        return 1
    print(BLUE_HEADER)
    print(t)
    return 0


def cmd_epsilon(args) -> int:
    _, system = _system_for(args)
    h = parse_element(system, args.expr)
    print(counit(h))
    return 0


def cmd_red(args) -> int:
    _, system = _system_for(args)
    h = parse_element(system, args.expr)
    t = red_map(h)
    if args.checked and not t.takeuchi_ok():
        print("FAIL: image leaves the red Takeuchi product",
              file=sys.stderr)
        return 1
    print(RED_HEADER)
    print(t)
    return 0


def cmd_mixed(args) -> int:
    _, system = _system_for(args)
    if system.rank < 2:
        raise ConfigError("mixed relations need a system with at least "
                          "two generators")
    s = args.s if args.s is not None else system.generators[0]
    t = args.t if args.t is not None else system.generators[1]
    for name in (s, t):
        if name not in system.generators:
            raise ConfigError(f"unknown generator {name!r}; have "
                              f"{', '.join(system.generators)}")
    if s == t:
        raise ConfigError("mixed relations need two distinct generators")
    m = system.order(s, t)
    print(f"mixed relations for m({s},{t}) = {m}: one per proper element "
          "of the dihedral parabolic")
    failed = 0
    for rep in all_mixed_relations(system, s, t):
        print(f"w = {rep.label()}")
        print(f"  relation: {rep.equation_str()}")
        print(f"  lhs normal form: {render_nh(rep.lhs)}")
        print(f"  rhs normal form: {render_nh(rep.rhs)}")
        print("  PASS" if rep.holds else "  FAIL")
        failed += not rep.holds
    total = 2 * m - 1
    print(f"summary: {total} relations, {total - failed} passed, "
          f"{failed} failed")
    return 1 if failed else 0


def _print_records(records) -> int:
    failed = 0
    for rec in records:
        print(rec.line())
        failed += not rec.ok
    total = len(records)
    print(f"summary: {total} checks, {total - failed} passed, "
          f"{failed} failed")
    return 1 if failed else 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise ConfigError(
            f"unknown suite {args.suite!r}; have "
            f"{', '.join(list(SUITES) + ['all'])}")
    kwargs = {
        "seed": args.seed,
        "samples": args.samples,
        "max_deg": args.max_deg,
        "max_support": args.max_support,
        "trunc": args.trunc,
        "checked": args.checked,
    }
    if args.m is not None:
        kwargs["ms"] = (args.m,)
    if args.system:
        label, system = _system_for(args)
        kwargs["systems"] = [(label, system)]
        max_len = 6 if system.rank <= 2 else 4
        kwargs["specs"] = [(label, system, max_len)]
    return _print_records(run_suite(args.suite, **kwargs))


def cmd_gallery(args) -> int:
    return _print_records(
        run_suite("gallery", trunc=args.trunc, seed=args.seed))


# -- argument plumbing ---------------------------------------------------

def _add_system_flag(p):
    p.add_argument("--system", metavar="FILE",
                   help="system config file (default: rank-1 on s)")


def _add_checked_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--checked", dest="checked", action="store_true",
                   help="assert Takeuchi membership during tensor products")
    g.add_argument("--unchecked", dest="checked", action="store_false")
    p.set_defaults(checked=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nhlab",
        description="Nil Hecke algebras as Hopf algebroids: evaluate, "
                    "act, comultiply, and verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="normal form of an expression")
    p.add_argument("expr")
    _add_system_flag(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("act", help="apply an operator to a polynomial")
    p.add_argument("expr")
    p.add_argument("poly")
    _add_system_flag(p)
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("delta", help="comultiplication, blue normal form")
    p.add_argument("expr")
    _add_system_flag(p)
    _add_checked_flags(p)
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("epsilon", help="counit")
    p.add_argument("expr")
    _add_system_flag(p)
    p.set_defaults(fn=cmd_epsilon)

    p = sub.add_parser("red", help="red comultiplication, red normal form")
    p.add_argument("expr")
    _add_system_flag(p)
    _add_checked_flags(p)
    p.set_defaults(fn=cmd_red)

    p = sub.add_parser("mixed",
                       help="verify the mixed relations for a generator "
                            "pair")
    p.add_argument("s", nargs="?", help="first generator (default: first)")
    p.add_argument("t", nargs="?", help="second generator (default: second)")
    _add_system_flag(p)
    p.set_defaults(fn=cmd_mixed)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"{', '.join(list(SUITES) + ['all'])}")
    _add_system_flag(p)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--max-support", type=int, default=4)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("--m", type=int, default=None,
                   help="restrict the mixed suite to one dihedral order")
    _add_checked_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gallery", help="run the example fixtures")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trunc", type=int, default=6)
    p.set_defaults(fn=cmd_gallery)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
