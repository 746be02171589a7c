"""Command-line frontend.

Ideal arguments are either a path to a file in the ideal text format or
``builtin:NAME`` for a corpus entry. Variables are numbered from 1 here,
as in the printed monomials.

Exit codes: 0 success, 1 failed check or not Borel-fixed, 2 bad argument,
3 parse error, 4 overflow, 5 invalid exponent override, 6 precondition of a
check not met.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import corpus
from .betti import betti_tables, diff_tables
from .borel import BorelWitness, check_characteristic, is_p_borel_fixed
from .ideals import (
    IdealFormatError,
    colon_power,
    format_ideal,
    minimalize,
    monomial_str,
    parse_ideal,
    saturate_var,
)
from .stretch import ConstructionError, StretchSpec, pardue_construct, regularity_bound, stretch_phi
from .verify import (
    PreconditionError,
    RegionSpec,
    verify_char_independence_props,
    verify_main_theorem,
    verify_stage_dichotomy,
    verify_stretch_proposition,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_OVERFLOW = 4
EXIT_CONSTRUCTION = 5
EXIT_PRECONDITION = 6


class UsageError(Exception):
    pass


def load(spec: str):
    if spec.startswith("builtin:"):
        try:
            return corpus.builtin(spec.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    try:
        with open(spec) as fh:
            return parse_ideal(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _characteristic(text: str) -> int:
    try:
        return check_characteristic(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _prime(text: str) -> int:
    p = _characteristic(text)
    if p == 0:
        raise argparse.ArgumentTypeError("a prime is required")
    return p


def _var(text: str) -> int:
    j = int(text)
    if j < 1:
        raise argparse.ArgumentTypeError("variables are numbered from 1")
    return j - 1


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fname(p: int) -> str:
    return "QQ" if p == 0 else f"GF({p})"


# -- subcommands -------------------------------------------------------------

def cmd_construct(args) -> int:
    I = load(args.ideal)
    J, trace = pardue_construct(I, args.p, e_override=args.e, early_exit=args.early_exit)
    comment = f"p={args.p} e={','.join(map(str, trace.e))} r={','.join(map(str, trace.r))} bound={trace.bound}"
    _emit(args, format_ideal(J, comment))
    if args.trace or args.trace_ideals:
        text = trace.to_json(ideals=args.trace_ideals) + "\n"
        if args.trace_file:
            with open(args.trace_file, "w") as fh:
                fh.write(text)
        else:
            sys.stderr.write(text)
    return EXIT_OK


def cmd_borel_check(args) -> int:
    I = load(args.ideal)
    res = is_p_borel_fixed(I, args.p)
    if res is True:
        print(f"BOREL-FIXED (p={args.p})")
        return EXIT_OK
    assert isinstance(res, BorelWitness)
    print(f"NOT BOREL-FIXED (p={args.p})")
    print(f"witness: {res}")
    print(f"missing: {monomial_str(res.missing)}")
    return EXIT_FAIL


def cmd_betti(args) -> int:
    I = load(args.ideal)
    chars = args.char or [0]
    tables = betti_tables(I, chars, workers=args.jobs)
    out = []
    if args.diff:
        if len(chars) != 2:
            raise UsageError("--diff needs exactly two --char values")
        a, b = (tables[c] for c in chars)
        rows = diff_tables(a, b)
        if args.graded:
            seen = {}
            for i, deg, x, y in rows:
                key = (i, sum(deg))
                gx, gy = a.graded().get(key, 0), b.graded().get(key, 0)
                seen[key] = (gx, gy)
            for (i, d), (x, y) in sorted(seen.items()):
                out.append(f"i={i} |b|={d} {_fname(chars[0])}={x} {_fname(chars[1])}={y}\n")
        else:
            for i, deg, x, y in rows:
                out.append(
                    f"i={i} b={' '.join(map(str, deg))} |b|={sum(deg)} "
                    f"{_fname(chars[0])}={x} {_fname(chars[1])}={y}\n"
                )
        if not rows:
            out.append("no differences\n")
    elif args.format == "json":
        out.append(json.dumps([r for c in chars for r in tables[c].records()], indent=1) + "\n")
    elif args.format == "records":
        out.extend(tables[c].format_records() for c in chars)
    elif args.graded:
        out.extend(tables[c].format_grid() for c in chars)
    else:
        for c in chars:
            out.append(f"{_fname(c)} multigraded (ideal convention)\n")
            for (i, deg), v in tables[c].entries.items():
                out.append(f"  beta_{i} at {monomial_str(deg)} (|b|={sum(deg)}): {v}\n")
    _emit(args, "".join(out))
    return EXIT_OK


def _report(args, report) -> int:
    _emit(args, report.format(all_lines=args.all))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    chars = args.char or [0, 2]
    kind = args.claim
    if kind == "theorem":
        I = load(args.ideal)
        if args.target:
            J = load(args.target)
            if args.e is None:
                raise UsageError("give --e when J is supplied")
            e = args.e
        else:
            J, trace = pardue_construct(I, args.p, e_override=args.e)
            e = list(trace.e)
        r1 = args.r1 if args.r1 is not None else regularity_bound(I)
        return _report(args, verify_main_theorem(I, J, RegionSpec(r1, args.p, tuple(e)), chars))
    if kind == "stretch":
        if args.random is not None:
            rng = random.Random(args.random)
            worst = None
            for t in range(args.trials):
                n = rng.randint(1, 4)
                gens = [[rng.randint(0, 2) for _ in range(n)] for _ in range(rng.randint(1, 4))]
                I = minimalize(n, gens)
                d = sorted(rng.sample(range(10), 3))
                rep = verify_stretch_proposition(I, StretchSpec.explicit(rng.randrange(n), d), chars)
                if not rep.passed:
                    worst = rep
                    break
            print(f"{args.trials} random trials (seed {args.random}): {'FAIL' if worst else 'PASS'}")
            if worst:
                _emit(args, worst.format())
                return EXIT_FAIL
            return EXIT_OK
        I = load(args.ideal)
        return _report(args, verify_stretch_proposition(I, _stretch_spec(args), chars))
    if kind == "stage":
        I = load(args.ideal)
        if not args.e:
            raise UsageError("give --e with the stage exponent")
        return _report(args, verify_stage_dichotomy(I, args.var, args.e[0], args.p, chars))
    if kind == "charprops":
        J = load(args.ideal)
        return _report(args, verify_char_independence_props(J, args.p, chars))
    raise UsageError(f"unknown claim {kind}")


def _stretch_spec(args) -> StretchSpec:
    if args.z is None:
        raise UsageError("give --z")
    if (args.step is None) == (args.d is None):
        raise UsageError("give exactly one of --step or --d")
    try:
        if args.step is not None:
            return StretchSpec.arithmetic(args.z, args.step)
        return StretchSpec.explicit(args.z, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_stretch(args) -> int:
    I = load(args.ideal)
    _emit(args, format_ideal(stretch_phi(I, _stretch_spec(args))))
    return EXIT_OK


def cmd_colon(args) -> int:
    I = load(args.ideal)
    _emit(args, format_ideal(colon_power(I, args.var, args.power)))
    return EXIT_OK


def cmd_saturate(args) -> int:
    I = load(args.ideal)
    _emit(args, format_ideal(saturate_var(I, args.var)))
    return EXIT_OK


def cmd_repro_rp2(args) -> int:
    p = 2
    chars = [0, 2, 3] + [c for c in (args.char or []) if c not in (0, 2, 3)]
    I = corpus.rp2()
    out = [f"I = {I}\n"]
    J, trace = pardue_construct(I, p)
    out.append(f"construction p={p}: r={trace.r} e={trace.e}\n")
    out.append(f"J = {J}\n")
    out.append(f"J matches the printed generators: {J == corpus.rp2_pardue_j()}\n")
    borel = is_p_borel_fixed(J, p)
    out.append(f"J is {p}-Borel-fixed: {borel is True}\n")
    wit = is_p_borel_fixed(I, p)
    out.append(f"I is {p}-Borel-fixed: {wit is True}" + ("" if wit is True else f" ({wit})") + "\n")
    tables = betti_tables(J, chars, workers=args.jobs)
    tables_I = betti_tables(I, chars)
    for c in chars:
        out.append(f"I over {_fname(c)}: total Betti numbers {tables_I[c].totals()}\n")
    for c in chars:
        t = tables[c]
        out.append(
            f"J over {_fname(c)}: total Betti numbers {t.totals()}, "
            f"regularity {t.regularity()}, projective dimension {t.projective_dimension()}\n"
        )
    b = (1, 8, 32, 128, 512, 2048)
    for i in (2, 3):
        vals = ", ".join(f"{_fname(c)}={tables[c][i, b]}" for c in chars)
        out.append(f"beta_{i} of J at {monomial_str(b)} (|b|=2729): {vals}\n")
    spec = RegionSpec.from_trace(trace)
    rep = verify_main_theorem(I, J, spec, chars)
    out.append(f"main theorem over {', '.join(map(_fname, chars))}: {rep.verdict}\n")
    props = verify_char_independence_props(J, p, chars)
    out.append(f"regularity and projective dimension agree: {props.verdict}\n")
    graded = {c: tables[c].graded() for c in chars}
    violated = sorted(
        {k for c in chars for k in set(graded[c]) | set(graded[0]) if graded[c].get(k, 0) != graded[0].get(k, 0)}
    )
    ok = borel is True and rep.passed and props.passed and J == corpus.rp2_pardue_j()
    if violated and ok:
        where = ",".join(f"({i},{d})" for i, d in violated)
        out.append(f"graded Betti table of the {p}-Borel-fixed ideal J depends on the field\n")
        out.append(f"CONJECTURE VIOLATED AT (i,|b|) in {{{where}}}\n")
    else:
        out.append("reproduction FAILED\n")
    _emit(args, "".join(out))
    return EXIT_OK if violated and ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pborel", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="write the result here instead of stdout")
        return sp

    sp = add("construct", cmd_construct, "build the p-Borel-fixed ideal J from I")
    sp.add_argument("ideal")
    sp.add_argument("-p", type=_prime, required=True)
    sp.add_argument("--e", type=_int_list, help="exponent override, e.g. 3,5,7,9,11")
    sp.add_argument("--trace", action="store_true", help="print per-stage r, e, generator counts (stderr)")
    sp.add_argument("--trace-ideals", action="store_true", help="include intermediate ideals in the trace")
    sp.add_argument("--trace-file", help="write the trace here instead of stderr")
    sp.add_argument("--early-exit", action="store_true", help="stop once the ideal is p-Borel-fixed")

    sp = add("borel-check", cmd_borel_check, "test the p-Borel criterion")
    sp.add_argument("ideal")
    sp.add_argument("-p", type=_characteristic, required=True)

    sp = add("betti", cmd_betti, "multigraded or graded Betti tables")
    sp.add_argument("ideal")
    sp.add_argument("--char", type=_characteristic, action="append", help="0 or a prime; repeatable")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--graded", action="store_true")
    g.add_argument("--multigraded", action="store_true")
    sp.add_argument("--format", choices=["text", "records", "json"], default="text")
    sp.add_argument("--diff", action="store_true", help="only entries differing between two --char values")
    sp.add_argument("--jobs", type=int, default=None)

    sp = add("verify", cmd_verify, "check theorem, stretch, stage or charprops claims")
    sp.add_argument("claim", choices=["theorem", "stretch", "stage", "charprops"])
    sp.add_argument("ideal", nargs="?", default="builtin:rp2")
    sp.add_argument("target", nargs="?", help="J for 'theorem' (constructed when omitted)")
    sp.add_argument("-p", type=_prime, default=2)
    sp.add_argument("--e", type=_int_list)
    sp.add_argument("--r1", type=int)
    sp.add_argument("--var", type=_var, default=0, help="variable for 'stage' (1-based)")
    sp.add_argument("--z", type=_var, help="stretched variable for 'stretch' (1-based)")
    sp.add_argument("--step", type=int)
    sp.add_argument("--d", type=_int_list)
    sp.add_argument("--random", type=int, metavar="SEED", help="random campaign for 'stretch'")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--char", type=_characteristic, action="append")
    sp.add_argument("--all", action="store_true", help="list zero comparisons too")

    sp = add("repro-rp2", cmd_repro_rp2, "reproduce the RP2 counter-example end to end")
    sp.add_argument("--char", type=_characteristic, action="append", help="extra characteristics")
    sp.add_argument("--jobs", type=int, default=None)

    sp = add("stretch", cmd_stretch, "apply the stretch operator")
    sp.add_argument("ideal")
    sp.add_argument("--z", type=_var, required=True)
    sp.add_argument("--step", type=int)
    sp.add_argument("--d", type=_int_list)

    sp = add("colon", cmd_colon, "colon by a power of one variable")
    sp.add_argument("ideal")
    sp.add_argument("--var", type=_var, required=True)
    sp.add_argument("--power", type=int, required=True)

    sp = add("saturate", cmd_saturate, "saturate with respect to one variable")
    sp.add_argument("ideal")
    sp.add_argument("--var", type=_var, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except IdealFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConstructionError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except PreconditionError as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OverflowError, MemoryError) as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
