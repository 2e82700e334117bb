"""Procedure scripts: parsing, execution, and corpus verification.

A corpus file encodes one tablet's computation: the given measurement
values and their expected abstract numbers, the operation steps with the
numbers the tablet shows, optional anchor configurations for procedures
that add or subtract, and answers read back into measurements.  Running
a script replays the three-stage shape end to end - convert the givens,
compute, convert the result - and records every expected/computed pair
in a :class:`Trace`.

A step may carry both ``expect`` (the correct number) and ``attested``
(what the tablet actually shows).  When the computation matches the
expectation but the tablet disagrees, that is a scribal error: the trace
notes it and the tablet still passes.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from pathlib import Path

from . import abacus, metrology, recip, spvn, textio
from .abacus import AnchoredNumber, Configuration
from .errors import (
    MissingConfig,
    ParseDiagnostic,
    ScriptSyntax,
    SexagesimalError,
    UnknownName,
    UnknownOp,
)
from .recip import Factorization
from .spvn import FloatingNumber

#: The constant applied to the square of a circle's perimeter; the
#: scribes took the circumference-to-diameter ratio as 3, and the
#: reciprocal of 12 is 5.
DISK_AREA_COEFFICIENT = FloatingNumber((5,))


def disk_area(perimeter: FloatingNumber) -> FloatingNumber:
    """Square the perimeter, multiply by the constant 5."""
    return spvn.mul(spvn.square(perimeter), DISK_AREA_COEFFICIENT)


_ARITY = {
    "mul": 2,
    "recip": 1,
    "divrecip": 2,
    "half": 1,
    "square": 1,
    "sqrt": 1,
    "add": 2,
    "sub": 2,
}
STEP_OPS = tuple(_ARITY)
_ANCHORED_ONLY = ("add", "sub")

_HALF_FLOATING = FloatingNumber((30,))


@dataclass(frozen=True)
class Given:
    name: str
    expect: FloatingNumber | None
    attested: FloatingNumber | None = None
    system: str | None = None  # None for direct abstract-number givens
    measurement: metrology.MeasurementValue | None = None
    line: int = 0


@dataclass(frozen=True)
class Step:
    op: str
    args: tuple[str, ...]
    expect: FloatingNumber | AnchoredNumber | None
    attested: FloatingNumber | AnchoredNumber | None
    name: str | None
    line: int = 0


@dataclass(frozen=True)
class Answer:
    name: str
    system: str | None = None
    window: metrology.Window | None = None
    expect: metrology.MeasurementValue | None = None
    line: int = 0


@dataclass(frozen=True)
class ProcedureScript:
    tablet: str
    givens: tuple[Given, ...]
    configurations: tuple[Configuration, ...]
    steps: tuple[Step, ...]
    answers: tuple[Answer, ...]

    def configuration(self, name: str) -> Configuration:
        for c in self.configurations:
            if c.name == name:
                return c
        raise UnknownName(f"no configuration {name!r} in {self.tablet}")


@dataclass(frozen=True)
class TraceRecord:
    kind: str  # "given" | "step" | "answer"
    name: str
    operation: str
    computed: object
    expected: object | None
    matched: bool
    attested: object | None = None
    scribal_note: bool = False
    factorization: Factorization | None = None


@dataclass(frozen=True)
class Trace:
    tablet: str
    configuration: str | None
    records: tuple[TraceRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.matched for r in self.records)

    def mismatches(self) -> tuple[TraceRecord, ...]:
        return tuple(r for r in self.records if not r.matched)

    def scribal_notes(self) -> tuple[TraceRecord, ...]:
        return tuple(r for r in self.records if r.scribal_note)


# --- parsing -------------------------------------------------------------------


def _syntax(line_no: int, msg: str, token: str = "") -> ScriptSyntax:
    return ScriptSyntax(
        f"line {line_no}: {msg}",
        ParseDiagnostic(line=line_no, column=1, message=msg, token=token),
    )


def _parse_number_token(tok: str, line_no: int):
    if "e" in tok and not tok.startswith("e"):
        head, _, tail = tok.rpartition("e")
        stripped = tail.lstrip("-")
        if stripped.isascii() and stripped.isdigit():
            return textio.parse_anchored(tok, line_no)
    return textio.parse_spvn(tok, line_no)


def parse_script(text: str) -> ProcedureScript:
    """Parse one corpus file; see the package README for the format."""
    tablet: str | None = None
    givens: list[Given] = []
    configs: list[Configuration] = []
    steps: list[Step] = []
    answers: list[Answer] = []
    defined: set[str] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        try:
            toks = shlex.split(raw, comments=True)
        except ValueError as e:
            raise _syntax(line_no, f"bad quoting: {e}") from None
        if not toks:
            continue
        kw, rest = toks[0], toks[1:]

        if kw == "tablet":
            if len(rest) != 1:
                raise _syntax(line_no, "tablet takes one quoted id")
            tablet = rest[0]

        elif kw == "given":
            if len(rest) < 5:
                raise _syntax(line_no, 'given needs: <table> <name> "<measurement>" expect <number>')
            system, name, meas_text = rest[0], rest[1], rest[2]
            expect, attested = _parse_expect_tail(rest[3:], line_no, anchored_ok=False)
            if expect is None:
                raise _syntax(line_no, "given needs an expect value")
            m = textio.parse_measurement(meas_text, system, line_no)
            givens.append(
                Given(name, expect, attested, system=system, measurement=m, line=line_no)
            )
            defined.add(name)

        elif kw == "given-spvn":
            if len(rest) != 2:
                raise _syntax(line_no, "given-spvn needs: <name> <number>")
            name, num = rest
            givens.append(
                Given(name, textio.parse_spvn(num, line_no), line=line_no)
            )
            defined.add(name)

        elif kw == "config":
            if not rest or not rest[0].endswith(":"):
                raise _syntax(line_no, "config needs: <name>: given=e<int>, ...")
            cname = rest[0][:-1]
            exps: dict[str, int] = {}
            for item in rest[1:]:
                item = item.rstrip(",")
                if not item:
                    continue
                gname, _, etext = item.partition("=")
                if not gname or not etext.startswith("e"):
                    raise _syntax(line_no, f"bad anchor {item!r}", item)
                if gname not in defined:
                    raise UnknownName(
                        f"line {line_no}: configuration anchors unknown given {gname!r}"
                    )
                try:
                    exps[gname] = int(etext[1:])
                except ValueError:
                    raise _syntax(line_no, f"bad exponent {etext!r}", item) from None
            configs.append(Configuration(cname, exps))

        elif kw == "step":
            if not rest:
                raise _syntax(line_no, "empty step")
            op = rest[0]
            if op not in STEP_OPS:
                raise UnknownOp(f"line {line_no}: unknown operation {op!r}")
            arity = _ARITY[op]
            args = tuple(rest[1 : 1 + arity])
            if len(args) != arity:
                raise _syntax(line_no, f"{op} takes {arity} operand name(s)")
            for a in args:
                if a not in defined:
                    raise UnknownName(f"line {line_no}: undefined name {a!r}")
            tail = list(rest[1 + arity :])
            new_name = None
            if len(tail) >= 2 and tail[-2] == "as":
                new_name = tail[-1]
                tail = tail[:-2]
            expect, attested = _parse_expect_tail(tail, line_no, anchored_ok=True)
            steps.append(Step(op, args, expect, attested, new_name, line=line_no))
            if new_name:
                defined.add(new_name)

        elif kw == "answer":
            if not rest:
                raise _syntax(line_no, "answer needs a name")
            name = rest[0]
            if name not in defined:
                raise UnknownName(f"line {line_no}: undefined name {name!r}")
            if len(rest) == 1:
                answers.append(Answer(name, line=line_no))
            else:
                if len(rest) < 4 or rest[2] != "window":
                    raise _syntax(
                        line_no,
                        'answer needs: <name> <table> window "<m>".."<m>" expect "<m>"',
                    )
                system = rest[1]
                lo_text, sep, hi_text = rest[3].partition("..")
                if not sep:
                    raise _syntax(line_no, 'window needs "<m>".."<m>"', rest[3])
                window = metrology.Window(
                    textio.parse_measurement(lo_text, system, line_no),
                    textio.parse_measurement(hi_text, system, line_no),
                )
                expect_m = None
                if len(rest) >= 6 and rest[4] == "expect":
                    expect_m = textio.parse_measurement(rest[5], system, line_no)
                answers.append(
                    Answer(name, system=system, window=window, expect=expect_m, line=line_no)
                )

        else:
            raise _syntax(line_no, f"unknown directive {kw!r}", kw)

    if tablet is None:
        raise _syntax(1, "missing tablet directive")
    return ProcedureScript(
        tablet=tablet,
        givens=tuple(givens),
        configurations=tuple(configs),
        steps=tuple(steps),
        answers=tuple(answers),
    )


def _parse_expect_tail(tail, line_no, anchored_ok):
    expect = attested = None
    i = 0
    while i < len(tail):
        if tail[i] == "expect" and i + 1 < len(tail):
            expect = _parse_number_token(tail[i + 1], line_no)
            i += 2
        elif tail[i] == "attested" and i + 1 < len(tail):
            attested = _parse_number_token(tail[i + 1], line_no)
            i += 2
        else:
            raise _syntax(line_no, f"unexpected token {tail[i]!r}", tail[i])
    if not anchored_ok:
        for v in (expect, attested):
            if isinstance(v, AnchoredNumber):
                raise _syntax(line_no, "givens expect plain digit sequences")
    return expect, attested


# --- execution -------------------------------------------------------------------


def _digits_of(v) -> FloatingNumber:
    return v.digits if isinstance(v, AnchoredNumber) else v


def _matches(computed, expected) -> bool:
    if expected is None:
        return True
    if isinstance(expected, AnchoredNumber):
        return isinstance(computed, AnchoredNumber) and computed == expected
    return _digits_of(computed) == expected


def _apply_step(op: str, values: list, anchored: bool):
    """Returns (result, factorization-or-None)."""
    if op == "mul":
        return (
            abacus.mul_anchored(*values) if anchored else spvn.mul(*values)
        ), None
    if op == "square":
        a = values[0]
        return (
            abacus.mul_anchored(a, a) if anchored else spvn.square(a)
        ), None
    if op == "half":
        if anchored:
            return abacus.half(values[0]), None
        return spvn.mul(values[0], _HALF_FLOATING), None
    if op == "recip":
        if anchored:
            a = values[0]
            r, fact = recip.reciprocal(a.digits)
            return abacus.recip_anchored(a), fact
        r, fact = recip.reciprocal(values[0])
        return r, fact
    if op == "divrecip":
        a, b = values
        if anchored:
            return abacus.mul_anchored(a, abacus.recip_anchored(b)), None
        rb, _ = recip.reciprocal(b)
        return spvn.mul(a, rb), None
    if op == "sqrt":
        if anchored:
            return abacus.sqrt_anchored(values[0]), None
        return recip.sqrt(values[0]), None
    if op == "add":
        return abacus.add(*values), None
    if op == "sub":
        return abacus.sub(*values), None
    raise UnknownOp(f"unknown operation {op!r}")


def run(script: ProcedureScript, config: str | None = None) -> Trace:
    """Execute a script, recording every expected/computed pair.

    With a configuration every value is anchored and additive steps are
    allowed; without one the run stays floating, and any add/sub step
    raises :class:`MissingConfig`.
    """
    conf = script.configuration(config) if config is not None else None
    scope: dict[str, object] = {}
    records: list[TraceRecord] = []

    for g in script.givens:
        if g.measurement is not None:
            computed = metrology.to_number(g.measurement)
            op = f"read table {g.system}: {g.measurement}"
        else:
            computed = g.expect  # direct abstract number
            op = "given directly"
        value: object = computed
        if conf is not None:
            value = abacus.anchor(computed, conf.exponent_for(g.name))
        scope[g.name] = value
        matched = _matches(computed, g.expect)
        records.append(
            TraceRecord(
                kind="given",
                name=g.name,
                operation=op,
                computed=value,
                expected=g.expect,
                matched=matched,
                attested=g.attested,
                scribal_note=(
                    g.attested is not None and matched and g.attested != g.expect
                ),
            )
        )

    for s in script.steps:
        if s.op in _ANCHORED_ONLY and conf is None:
            raise MissingConfig(
                f"{script.tablet}: step {s.op} at line {s.line} needs a configuration"
            )
        values = [scope[a] for a in s.args]
        try:
            result, fact = _apply_step(s.op, values, anchored=conf is not None)
        except SexagesimalError as e:
            raise type(e)(
                f"{script.tablet}: step {s.op} at line {s.line}: {e}"
            ) from e
        if s.name:
            scope[s.name] = result
        matched = _matches(result, s.expect)
        records.append(
            TraceRecord(
                kind="step",
                name=s.name or s.op,
                operation=f"{s.op} {' '.join(s.args)}",
                computed=result,
                expected=s.expect,
                matched=matched,
                attested=s.attested,
                scribal_note=(
                    s.attested is not None and matched and s.attested != s.expect
                ),
                factorization=fact,
            )
        )

    for a in script.answers:
        value = scope[a.name]
        digits = _digits_of(value)
        if a.window is None:
            records.append(
                TraceRecord(
                    kind="answer",
                    name=a.name,
                    operation="final",
                    computed=value,
                    expected=None,
                    matched=True,
                )
            )
            continue
        reading = metrology.from_number(digits, a.system, a.window)
        records.append(
            TraceRecord(
                kind="answer",
                name=a.name,
                operation=f"read table {a.system} within {a.window}",
                computed=reading,
                expected=a.expect,
                matched=a.expect is None or reading == a.expect,
            )
        )

    return Trace(
        tablet=script.tablet, configuration=config, records=tuple(records)
    )


# --- corpus -----------------------------------------------------------------------


@dataclass(frozen=True)
class TabletReport:
    path: Path
    tablet: str
    traces: tuple[Trace, ...]
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(t.passed for t in self.traces)


@dataclass(frozen=True)
class CorpusSummary:
    reports: tuple[TabletReport, ...]
    warnings: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def run_file(path: Path, config: str | None = None) -> Trace:
    script = parse_script(Path(path).read_text(encoding="utf-8"))
    return run(script, config)


def verify_corpus(directory: Path) -> CorpusSummary:
    """Run every ``*.tab`` script under every configuration it declares.

    A tablet passes when every expected value matches; attested scribal
    errors are notes, not failures.  Reports come back sorted by tablet
    id so aggregation order never depends on the filesystem.
    """
    directory = Path(directory)
    paths = sorted(directory.glob("*.tab"))
    warnings = ()
    if not paths:
        warnings = (f"no corpus files found in {directory}",)
    reports = []
    for path in paths:
        try:
            script = parse_script(path.read_text(encoding="utf-8"))
            names = [c.name for c in script.configurations] or [None]
            traces = tuple(run(script, c) for c in names)
            reports.append(TabletReport(path, script.tablet, traces))
        except SexagesimalError as e:
            reports.append(TabletReport(path, path.stem, (), error=str(e)))
    reports.sort(key=lambda r: r.tablet)
    return CorpusSummary(tuple(reports), warnings)


def shipped_corpus_dir() -> Path:
    """Directory of the corpus files installed with the package."""
    return Path(__file__).resolve().parent / "corpus"
