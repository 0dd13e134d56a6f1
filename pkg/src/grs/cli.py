"""The ``grs`` command line."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import calculus, suites
from .algebra import DEFAULT_BOUND, Bound, antipode, coproduct, counit, normal_form
from .dual import pair
from .parser import ParseError, parse_expression
from .report import Report
from .scalars import ScalarError, _rational_sqrt

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_spot(text: str, seed: int = 0) -> tuple[Fraction, Fraction]:
    """``r=4,s=9`` or ``random``; both values must be nonzero rational squares."""
    if text == "random":
        rng = random.Random(seed)
        pick = lambda: Fraction(rng.randint(2, 9), rng.randint(1, 9)) ** 2
        r0 = pick()
        s0 = pick()
        return r0, s0
    values = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in ("r", "s"):
            raise UsageError(f"--spot expects r=<square>,s=<square>, got {part!r}")
        try:
            values[key] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--spot value {val!r} is not a rational number") from None
    if set(values) != {"r", "s"}:
        raise UsageError("--spot needs both r and s")
    for key, v in values.items():
        try:
            _rational_sqrt(v)
        except ScalarError as exc:
            raise UsageError(f"--spot {key}: {exc}") from None
    return values["r"], values["s"]


def _bound(text: str | None) -> Bound:
    if not text:
        return DEFAULT_BOUND
    try:
        return Bound.parse(text)
    except ValueError as exc:
        raise UsageError(f"--bound: {exc}") from None


def _parse(text: str):
    return parse_expression(text)


# -- one-shot commands -----------------------------------------------------------

def _emit_value(args, command: str, inputs: list[str], result) -> int:
    if args.format == "json":
        payload = {"command": command, "inputs": inputs, "result": str(result)}
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(f"{result}\n")
    return EXIT_OK


def cmd_normalize(args) -> int:
    words = _parse(args.expr).words()
    return _emit_value(args, "normalize", [args.expr], normal_form(words, args.strategy))


def cmd_coproduct(args) -> int:
    return _emit_value(args, "coproduct", [args.expr], coproduct(_parse(args.expr).element(), args.rank))


def cmd_counit(args) -> int:
    return _emit_value(args, "counit", [args.expr], counit(_parse(args.expr).element()))


def cmd_antipode(args) -> int:
    return _emit_value(args, "antipode", [args.expr], antipode(_parse(args.expr).element()))


def cmd_pair(args) -> int:
    phi = _parse(args.functional).functional()
    x = _parse(args.expr).element()
    return _emit_value(args, "pair", [args.functional, args.expr], pair(phi, x))


def cmd_convolve(args) -> int:
    phi = _parse(args.functional).functional()
    x = _parse(args.expr).element()
    return _emit_value(args, "convolve", [args.functional, args.expr], calculus.convolve(phi, x))


def cmd_d(args) -> int:
    return _emit_value(args, "d", [args.expr], calculus.exterior_d(_parse(args.expr).element()))


def cmd_omega(args) -> int:
    index = args.index.lstrip("w")
    if index not in calculus.FORM_INDICES:
        raise UsageError(f"one-form index must be one of {', '.join(calculus.FORM_INDICES)}")
    x = _parse(args.expr).element()
    return _emit_value(args, "omega", [args.index, args.expr], calculus.omega_commute(index, x))


# -- reports ---------------------------------------------------------------------------

def emit_report(rep: Report, fmt: str) -> None:
    sys.stdout.write(rep.to_json() if fmt == "json" else rep.to_text())


def _apply_spot(rep: Report, args) -> Report:
    spot = args.spot
    if args.rvalue is not None or args.svalue is not None:
        if args.rvalue is None or args.svalue is None:
            raise UsageError("--rvalue and --svalue go together")
        spot = f"r={args.rvalue},s={args.svalue}"
    if not spot:
        return rep
    r0, s0 = parse_spot(spot, args.seed)
    return rep.spot_check(r0, s0)


def cmd_verify(args) -> int:
    name = args.suite_opt or args.suite or "all"
    if name != "all" and name not in suites.SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(list(suites.SUITES) + ['all'])}")
    bound = _bound(args.bound)
    rep = _apply_spot(suites.run_suite(name, bound), args)
    emit_report(rep, args.format)
    return rep.exit_code()


def cmd_ledger(args) -> int:
    bound = _bound(args.bound)
    full = suites.run_suite("all", bound)
    led = Report("ledger", bound)
    led.checks = full.discrepancies()
    emit_report(led, args.format)
    return EXIT_FAIL if full.failures() else EXIT_OK


def cmd_tables(args) -> int:
    groups: dict[str, list] = {}
    for ident, _, got, want in calculus.table_cells():
        kind = ident.split(":", 1)[0]
        groups.setdefault(kind, []).append({
            "cell": ident.split(":", 1)[1],
            "computed": str(got),
            "printed": str(want),
            "match": got == want,
        })
    if args.format == "json":
        sys.stdout.write(json.dumps(groups, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    titles = {"omega": "one-form relations", "chi": "vector fields", "conv": "convolutions", "d": "exterior derivatives"}
    lines = []
    for kind, rows in groups.items():
        lines.append(f"# {titles.get(kind, kind)}")
        for row in rows:
            mark = "" if row["match"] else f"    [printed: {row['printed']}]"
            lines.append(f"{row['cell']} = {row['computed']}{mark}")
        lines.append("")
    sys.stdout.write("\n".join(lines))
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="grs", description="Exact computations in the quantum group G_{r,s}.")
    sub = top.add_subparsers(dest="verb", metavar="verb")
    sub.required = True

    p = sub.add_parser("normalize", help="normal-order an algebra expression")
    p.add_argument("expr")
    p.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    _common(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("coproduct", help="coproduct of an algebra expression")
    p.add_argument("expr")
    p.add_argument("--rank", type=int, choices=(2, 3), default=2)
    _common(p)
    p.set_defaults(func=cmd_coproduct)

    for verb, fn, text in (("counit", cmd_counit, "counit"), ("antipode", cmd_antipode, "antipode"),
                           ("d", cmd_d, "exterior derivative")):
        p = sub.add_parser(verb, help=f"{text} of an algebra expression")
        p.add_argument("expr")
        _common(p)
        p.set_defaults(func=fn)

    for verb, fn in (("pair", cmd_pair), ("convolve", cmd_convolve)):
        p = sub.add_parser(verb, help=f"{verb} a dual expression with an algebra expression")
        p.add_argument("functional")
        p.add_argument("expr")
        _common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("omega", help="move a one-form past an algebra expression")
    p.add_argument("index", help="one of 0, 1, +, -, 2 (optionally prefixed by w)")
    p.add_argument("expr")
    _common(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("calc", help="calculus commands: calc d EXPR, calc omega INDEX EXPR")
    csub = p.add_subparsers(dest="calc_verb", metavar="calc-verb")
    csub.required = True
    q = csub.add_parser("d")
    q.add_argument("expr")
    _common(q)
    q.set_defaults(func=cmd_d)
    q = csub.add_parser("omega")
    q.add_argument("index")
    q.add_argument("expr")
    _common(q)
    q.set_defaults(func=cmd_omega)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", help=f"one of {', '.join(list(suites.SUITES) + ['all'])}")
    p.add_argument("--suite", dest="suite_opt")
    p.add_argument("--bound", help="e.g. k=2,l=2,m=2,n=2,t=2,j=1,wordlen=4")
    p.add_argument("--spot", help="r=<rational square>,s=<rational square>, or 'random'")
    p.add_argument("--rvalue")
    p.add_argument("--svalue")
    p.add_argument("--seed", type=int, default=0, help="seed for --spot random")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="recompute the calculus tables")
    _common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("ledger", help="list printed-text discrepancies")
    p.add_argument("--bound")
    _common(p)
    p.set_defaults(func=cmd_ledger)
    return top


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n" + (f"{exc.pointer()}\n" if exc.text else ""))
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
    except ScalarError as exc:
        sys.stderr.write(f"error: {exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
