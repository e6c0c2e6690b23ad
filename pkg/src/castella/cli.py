"""Batch command-line front end.

Exit status: 0 on success, 1 on a domain or parse error, 2 when an
enumeration exceeds the node cap (set with CASTELLA_NODE_CAP).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional, Sequence

from . import arith, castle, complexity, functions, words
from .errors import DomainError, ResourceLimitError
from .instances import AbelianMonoid, UVMonoid, folner_ratio, get_instance
from .text import parse_element, render, render_word
from .words import Element


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class Outcome:
    def __init__(self, result: Any, text: str, trace: Optional[list] = None):
        self.result = result
        self.text = text
        self.trace = trace


def _elements(xs) -> Outcome:
    xs = sorted(xs)
    return Outcome([render(x) for x in xs], "\n".join(render(x) for x in xs))


def _sequence(xs) -> Outcome:
    return Outcome([render(x) for x in xs], "\n".join(render(x) for x in xs))


def _element(x: Element) -> Outcome:
    return Outcome(render(x), render(x))


def _word(w) -> Outcome:
    return Outcome(list(w), render_word(w))


def _bool(b: bool) -> Outcome:
    return Outcome(b, "true" if b else "false")


def _int(n: int) -> Outcome:
    return Outcome(n, str(n))


def _multiset(m: arith.PrimeMultiset) -> Outcome:
    return Outcome({f"p{j}": k for j, k in m.items()}, str(m))


def _one(args) -> Element:
    return parse_element(args.elements[0])


def _all(args) -> list[Element]:
    return [parse_element(t) for t in args.elements]


def cmd_words(args) -> Outcome:
    ws = sorted(words.enumerate_words(_one(args)))
    return Outcome([list(w) for w in ws], "\n".join(render_word(w) for w in ws))


def cmd_castle(args) -> Outcome:
    u, v = _all(args)
    op = {"weak": castle.weak_castle, "strong": castle.strong_castle, "free": castle.free_castle}[args.mode]
    trace: list = []
    pair = op(u, v, trace)
    if pair is None:
        raise DomainError(f"({u}, {v}) is not {args.mode}ly castlable" if args.mode != "free"
                          else f"({u}, {v}) is not castled-free")
    return Outcome({"left": render(pair.left), "right": render(pair.right)},
                   f"left: {pair.left}\nright: {pair.right}",
                   [list(step) for step in trace])


def cmd_tau0(args) -> Outcome:
    est = complexity.tau0_estimate(_one(args), args.max_n)
    rows, lines = [], []
    for s in est.samples:
        lo, hi = est.brackets[s.n]
        rows.append({"n": s.n, "tau": s.tau, "root": str(s.root), "lower": lo, "upper": hi})
        lines.append(f"{s.n} {s.tau} {s.root} [{lo}, {hi}]")
    lines.append(f"estimate {est.final_estimate}")
    return Outcome({"samples": rows, "estimate": str(est.final_estimate)}, "\n".join(lines))


def cmd_folner(args) -> Outcome:
    r = folner_ratio(args.k, args.i, args.n)
    return Outcome(str(r), str(r))


def cmd_divides(args) -> Outcome:
    d, u = _all(args)
    return _bool(arith.divides(d, u))


def cmd_instance(args) -> Outcome:
    m = get_instance(args.monoid)
    xs = [m.parse(t) for t in args.elements]
    op = args.op
    if op in ("normalize", "tau", "divisors", "mu") and len(xs) != 1:
        raise UsageError(f"{op} takes exactly one element")
    if op == "normalize":
        r = m.render(xs[0])
        return Outcome(r, r)
    if op == "multiply":
        out = m.identity()
        for x in xs:
            out = m.multiply(out, x)
        return Outcome(m.render(out), m.render(out))
    if op == "tau":
        return _int(m.tau(xs[0]))
    if op == "divisors":
        ds = [m.render(d) for d in m.divisors(xs[0])]
        return Outcome(ds, "\n".join(ds))
    if op == "mu":
        value = functions.inverse(functions.one, m)(xs[0])
        return _int(int(value))
    if op in ("gcd", "lcm"):
        if isinstance(m, AbelianMonoid):
            out = xs[0]
            for x in xs[1:]:
                out = out.gcd(x) if op == "gcd" else out.lcm(x)
        elif isinstance(m, UVMonoid):
            raise DomainError(f"{op} is not provided for the uv2 monoid")
        else:
            out = (arith.gcd if op == "gcd" else arith.lcm)(xs)
        return Outcome(m.render(out), m.render(out))
    raise UsageError(f"unknown instance operation {op!r}")


COMMANDS: dict[str, tuple[Callable[[Any], Outcome], str, str]] = {
    # name: (handler, argument shape, help)
    "normalize": (lambda a: _element(_one(a)), "1", "normal form of an element"),
    "words": (cmd_words, "1", "all words of an element"),
    "minword": (lambda a: _word(words.min_word(_one(a))), "1", "minimum word"),
    "maxword": (lambda a: _word(words.max_word(_one(a))), "1", "maximum word (normal form)"),
    "divisors": (lambda a: _elements(arith.divisors(_one(a))), "1", "left divisors"),
    "codivisors": (lambda a: _elements(arith.co_divisors(_one(a))), "1", "right divisors"),
    "divides": (cmd_divides, "2", "whether the first element divides the second"),
    "gcd": (lambda a: _element(arith.gcd(_all(a))), "+", "greatest common divisor"),
    "lcm": (lambda a: _element(arith.lcm(_all(a))), "+", "least common multiple"),
    "lcmco": (lambda a: _element(arith.lcm_co(_all(a)[0], _all(a)[1:])), "2+", "least common co-multiple below W"),
    "gcdco": (lambda a: _element(arith.gcd_co(_all(a)[0], _all(a)[1:])), "2+", "greatest common co-divisor below W"),
    "castle": (cmd_castle, "2", "castle a pair of elements"),
    "pdm": (lambda a: _multiset(arith.pdm(_one(a))), "1", "prime divisors with multiplicity"),
    "pdmco": (lambda a: _multiset(arith.pdm_co(_one(a))), "1", "prime co-divisors with multiplicity"),
    "tau": (lambda a: _int(arith.tau(_one(a))), "1", "number of divisors"),
    "omega": (lambda a: _int(arith.omega(_one(a))), "1", "number of distinct prime divisors"),
    "bigomega": (lambda a: _int(arith.big_omega(_one(a))), "1", "prime divisors counted with multiplicity"),
    "mu": (lambda a: _int(functions.mu(_one(a))), "1", "Moebius function"),
    "lambda": (lambda a: _int(functions.liouville(_one(a))), "1", "Liouville function"),
    "fully": (lambda a: _bool(arith.is_fully_castlable(_one(a))), "1", "whether the element is fully castlable"),
    "gfc": (lambda a: _sequence(arith.gfc_decompose(_one(a))), "1", "fully castlable decomposition"),
    "tau0": (cmd_tau0, "1", "divisor counts of powers and their n-th roots"),
    "folner": (cmd_folner, None, "Folner ratio of the exponent grid in a free abelian monoid"),
    "instance": (cmd_instance, None, "run an operation in another monoid instance"),
}

_NARGS = {"1": 1, "2": 2, "+": "+", "2+": "+"}


def build_parser() -> argparse.ArgumentParser:
    # --json is accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = _Parser(prog="castella", description="Arithmetic in Thompson's monoid.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, shape, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, parents=[common])
        if name == "folner":
            p.add_argument("k", type=int)
            p.add_argument("i", type=int)
            p.add_argument("n", type=int)
            continue
        if name == "instance":
            p.add_argument("--monoid", default="thompson", help="thompson | abelian:<k> | natural | uv2")
            p.add_argument("op", choices=["normalize", "multiply", "divisors", "tau", "mu", "gcd", "lcm"])
            p.add_argument("elements", nargs="+")
            continue
        p.add_argument("elements", nargs=_NARGS[shape], metavar="ELEMENT")
        if name == "castle":
            p.add_argument("--mode", choices=["weak", "strong", "free"], default="weak")
        if name == "tau0":
            p.add_argument("--max-n", type=int, default=6, dest="max_n")
    return parser


def _input_record(args) -> dict:
    if args.command == "folner":
        record: dict[str, Any] = {"args": [args.k, args.i, args.n]}
    else:
        record = {"args": list(args.elements)}
    options = {}
    for key in ("mode", "max_n", "monoid", "op"):
        if hasattr(args, key):
            options[key] = getattr(args, key)
    if options:
        record["options"] = options
    return record


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if args.command == "lcmco" or args.command == "gcdco":
            if len(args.elements) < 2:
                raise UsageError(f"{args.command} needs W and at least one co-divisor")
        outcome = COMMANDS[args.command][0](args)
    except ResourceLimitError as exc:
        print(f"castella: resource cap: {exc}", file=err)
        return 2
    except (DomainError, OverflowError) as exc:
        print(f"castella: error: {exc}", file=err)
        return 1
    if args.json:
        doc: dict[str, Any] = {"command": args.command, "input": _input_record(args), "result": outcome.result}
        if outcome.trace is not None:
            doc["trace"] = outcome.trace
        print(json.dumps(doc, ensure_ascii=False), file=out)
    else:
        if outcome.text:
            print(outcome.text, file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
