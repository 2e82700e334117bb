"""Command-line front end.

Results go to stdout, diagnostics to stderr, and behavior is fully
determined by the arguments, so identical invocations produce identical
bytes.  Exit codes: 0 success, 1 corpus verification failure, 2 bad
usage or unparsable input, 3 arithmetic error (no reciprocal, no root,
no reading, ...).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import abacus, metrology, procedures, recip, spvn, tables, textio
from .errors import PARSE_ERRORS, SexagesimalError
from .recip import FactorStrategy

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_ARITH = 3

_STRATEGIES = {
    "wedge": FactorStrategy.WEDGE_SUFFIX_LONGEST,
    "largest": FactorStrategy.ANY_DIVISOR_LARGEST,
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mesomath",
        description="Exact floating base-60 arithmetic, tables, conversions, "
        "and tablet procedure replay.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    for op in ("mul",):
        q = sub.add_parser(op, help="multiply two numbers")
        q.add_argument("a")
        q.add_argument("b")
    for op, desc in (
        ("square", "square a number"),
        ("sqrt", "exact square root"),
        ("cbrt", "exact cube root"),
    ):
        q = sub.add_parser(op, help=desc)
        q.add_argument("a")

    q = sub.add_parser("recip", help="reciprocal by trailing-part factorization")
    q.add_argument("a")
    q.add_argument("--trace", action="store_true", help="show the factor columns")
    q.add_argument("--strategy", choices=sorted(_STRATEGIES), default="wedge")

    q = sub.add_parser("table", help="print a curriculum table")
    tsub = q.add_subparsers(dest="table_kind", required=True)
    t = tsub.add_parser("recip")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t = tsub.add_parser("mult")
    t.add_argument("head")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t = tsub.add_parser("squares")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t = tsub.add_parser("metro")
    t.add_argument("system", choices=sorted(metrology.SYSTEMS))
    t.add_argument("--from", dest="start", required=True, metavar="MEASUREMENT")
    t.add_argument("--to", dest="stop", required=True, metavar="MEASUREMENT")
    t.add_argument("--format", choices=("text", "csv"), default="text")

    q = sub.add_parser("convert", help="measurement <-> number conversions")
    csub = q.add_subparsers(dest="convert_kind", required=True)
    c = csub.add_parser("to-spvn")
    c.add_argument("system", choices=sorted(metrology.SYSTEMS))
    c.add_argument("measurement")
    c = csub.add_parser("from-spvn")
    c.add_argument("system", choices=sorted(metrology.SYSTEMS))
    c.add_argument("number")
    c.add_argument("--window", required=True, help='"<m>".."<m>"')
    c = csub.add_parser("readings")
    c.add_argument("system", choices=sorted(metrology.SYSTEMS))
    c.add_argument("number")
    c.add_argument("--span", type=int, default=4)

    q = sub.add_parser("run", help="run one corpus file and print its trace")
    q.add_argument("file")
    q.add_argument("--config", default=None)

    q = sub.add_parser("check", help="verify a corpus directory")
    q.add_argument("directory", nargs="?", default=None)

    sub.add_parser("repl", help="interactive evaluator")

    return p


def _print_recip_trace(fact: recip.Factorization) -> None:
    table = tables.gen_reciprocal_table()
    quots = fact.quotients()
    recs = recip.factor_reciprocals(fact, table)
    width = max(len(str(q)) for q in quots)
    for q, r in zip(quots, recs):
        print(f"{str(q).ljust(width)}  {r}")
    for pr in recip.running_products(fact, table):
        print(pr)


def _print_trace(trace: procedures.Trace) -> None:
    print(f"tablet {trace.tablet}" + (
        f"  (configuration {trace.configuration})" if trace.configuration else ""
    ))
    for r in trace.records:
        status = "ok" if r.matched else "MISMATCH"
        if r.scribal_note:
            status = f"ok (tablet shows {r.attested}: scribal error)"
        line = f"  {r.kind:<6} {r.name:<12} {r.operation:<40} -> {r.computed}"
        if r.expected is not None:
            line += f"  [{status}]"
        print(line)
        if r.factorization is not None:
            facs = " ".join(str(f) for f in r.factorization.factors)
            print(f"         factors: {facs}")
    print("PASS" if trace.passed else "FAIL")


def _cmd_check(directory: str | None) -> int:
    d = Path(directory) if directory else procedures.shipped_corpus_dir()
    summary = procedures.verify_corpus(d)
    for w in summary.warnings:
        print(f"warning: {w}", file=sys.stderr)
    for rep in summary.reports:
        if rep.error is not None:
            print(f"{rep.tablet}: ERROR {rep.error}")
            continue
        notes = sum(len(t.scribal_notes()) for t in rep.traces)
        configs = [t.configuration for t in rep.traces if t.configuration]
        detail = f" configs={','.join(configs)}" if configs else ""
        detail += f" scribal-notes={notes}" if notes else ""
        print(f"{rep.tablet}: {'pass' if rep.passed else 'FAIL'}{detail}")
        for t in rep.traces:
            for r in t.mismatches():
                print(
                    f"  mismatch in {r.kind} {r.name}: expected "
                    f"{r.expected}, computed {r.computed}"
                )
    print(f"{sum(r.passed for r in summary.reports)}/{len(summary.reports)} tablets pass")
    return EXIT_OK if summary.passed else EXIT_VERIFY


def _repl() -> int:
    """One command per line, with named results: ``x = mul 9 7``."""
    scope: dict[str, spvn.FloatingNumber] = {}

    def resolve(tok: str) -> spvn.FloatingNumber:
        if tok in scope:
            return scope[tok]
        return textio.parse_spvn(tok)

    unary = {
        "square": spvn.square,
        "sqrt": recip.sqrt,
        "cbrt": recip.cbrt,
        "recip": lambda a: recip.reciprocal(a)[0],
    }
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            print("> ", end="", file=sys.stderr, flush=True)
        raw = sys.stdin.readline()
        if not raw:
            break
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            break
        target = None
        if "=" in line:
            target, _, line = line.partition("=")
            target = target.strip()
            line = line.strip()
        toks = line.split()
        try:
            if toks[0] == "mul" and len(toks) == 3:
                value = spvn.mul(resolve(toks[1]), resolve(toks[2]))
            elif toks[0] in unary and len(toks) == 2:
                value = unary[toks[0]](resolve(toks[1]))
            elif len(toks) == 1:
                value = resolve(toks[0])
            else:
                print(f"error: cannot evaluate {line!r}", file=sys.stderr)
                continue
        except SexagesimalError as e:
            print(f"error: {e}", file=sys.stderr)
            continue
        if target:
            scope[target] = value
        print(value)
    return EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "mul":
        print(spvn.mul(textio.parse_spvn(args.a), textio.parse_spvn(args.b)))
    elif cmd == "square":
        print(spvn.square(textio.parse_spvn(args.a)))
    elif cmd == "sqrt":
        print(recip.sqrt(textio.parse_spvn(args.a)))
    elif cmd == "cbrt":
        print(recip.cbrt(textio.parse_spvn(args.a)))
    elif cmd == "recip":
        r, fact = recip.reciprocal(
            textio.parse_spvn(args.a), _STRATEGIES[args.strategy]
        )
        if args.trace:
            _print_recip_trace(fact)
        else:
            print(r)
    elif cmd == "table":
        if args.table_kind == "recip":
            out = tables.format_reciprocal_table(
                tables.gen_reciprocal_table(), args.format
            )
        elif args.table_kind == "mult":
            out = tables.format_multiplication_table(
                tables.gen_multiplication_table(textio.parse_spvn(args.head)),
                args.format,
            )
        elif args.table_kind == "squares":
            out = tables.format_squares_table(args.format)
        else:
            t = metrology.gen_metrological_table(
                args.system,
                textio.parse_measurement(args.start, args.system),
                textio.parse_measurement(args.stop, args.system),
            )
            out = metrology.format_metrological_table(t, args.format)
        sys.stdout.write(out)
    elif cmd == "convert":
        if args.convert_kind == "to-spvn":
            m = textio.parse_measurement(args.measurement, args.system)
            print(metrology.to_number(m))
        elif args.convert_kind == "from-spvn":
            lo_text, sep, hi_text = args.window.partition("..")
            if not sep:
                raise SexagesimalError(f'window must look like "<m>".."<m>": {args.window!r}')
            window = metrology.Window(
                textio.parse_measurement(lo_text.strip().strip('"'), args.system),
                textio.parse_measurement(hi_text.strip().strip('"'), args.system),
            )
            m = metrology.from_number(
                textio.parse_spvn(args.number), args.system, window
            )
            print(m)
        else:
            for m in metrology.enumerate_readings(
                textio.parse_spvn(args.number), args.system, args.span
            ):
                print(m)
    elif cmd == "run":
        trace = procedures.run_file(Path(args.file), args.config)
        _print_trace(trace)
        return EXIT_OK if trace.passed else EXIT_VERIFY
    elif cmd == "check":
        return _cmd_check(args.directory)
    elif cmd == "repl":
        return _repl()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(args)
    except PARSE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SexagesimalError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ARITH
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
