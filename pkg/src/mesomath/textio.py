"""Parsing and formatting: numbers, anchored literals, measurements.

One grammar shared by the CLI, the REPL and corpus files.  Digits are
separated by ':' on output; '.' is accepted on input as well, since both
separators circulate.  Unit names are accepted in their UTF-8 spellings
and in ASCII aliases (kush, shu-si, she, ...).

Every parser either returns a value or raises exactly one error carrying
a :class:`~mesomath.errors.ParseDiagnostic`; nothing here crashes on
arbitrary text.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BadFraction,
    DigitOutOfRange,
    EmptyInput,
    MalformedSeparator,
    MeasurementSyntax,
    ParseDiagnostic,
    UnitOrderViolation,
    UnknownUnit,
)
from .spvn import FloatingNumber
from . import metrology
from .abacus import AnchoredNumber


def _diag(col: int, message: str, token: str = "", line: int = 1) -> ParseDiagnostic:
    return ParseDiagnostic(line=line, column=col, message=message, token=token)


def _ascii_digits(s: str) -> bool:
    # str.isdigit admits superscripts and other Unicode digits that
    # int() rejects or that have no place in this grammar
    return s.isascii() and s.isdigit()


def parse_spvn(text: str, line: int = 1) -> FloatingNumber:
    """Parse a digit sequence like "44:26:40" (or "44.26.40")."""
    s = text.strip()
    if not s:
        raise EmptyInput("empty number", _diag(1, "empty number", text, line))
    parts = s.replace(".", ":").split(":")
    digits = []
    col = 1
    for part in parts:
        if not _ascii_digits(part):
            raise MalformedSeparator(
                f"malformed digit sequence {text!r}",
                _diag(col, "expected a base-60 digit", part, line),
            )
        d = int(part)
        if d > 59:
            raise DigitOutOfRange(
                f"digit {d} outside 0..59",
                _diag(col, "digit outside 0..59", part, line),
            )
        digits.append(d)
        col += len(part) + 1
    return FloatingNumber(digits)


def format_spvn(n: FloatingNumber) -> str:
    """Colon-separated decimal digits, no padding: 1:3, never 1:03."""
    return str(n)


def parse_anchored(text: str, line: int = 1) -> AnchoredNumber:
    """Parse "<digits>e<exponent>", e.g. "6:30e-1"."""
    s = text.strip()
    head, sep, tail = s.rpartition("e")
    if not sep or not head:
        raise MalformedSeparator(
            f"anchored literal needs digits and exponent: {text!r}",
            _diag(1, "expected <digits>e<exponent>", s, line),
        )
    try:
        exponent = int(tail)
    except ValueError:
        raise MalformedSeparator(
            f"bad exponent in {text!r}",
            _diag(len(head) + 2, "exponent must be an integer", tail, line),
        ) from None
    return AnchoredNumber(parse_spvn(head, line), exponent)


def format_anchored(a: AnchoredNumber) -> str:
    return f"{a.digits}e{a.exponent}"


_FRACTION_GLYPHS = {
    "½": Fraction(1, 2),
    "⅓": Fraction(1, 3),
    "⅔": Fraction(2, 3),
    "¼": Fraction(1, 4),
    "⅙": Fraction(1, 6),
    "⅚": Fraction(5, 6),
}


def _parse_fraction_token(tok: str, system, col: int, line: int) -> Fraction | None:
    if tok in _FRACTION_GLYPHS:
        f = _FRACTION_GLYPHS[tok]
    elif "/" in tok:
        num, _, den = tok.partition("/")
        if not (_ascii_digits(num) and _ascii_digits(den) and int(den) > 0):
            raise BadFraction(
                f"bad fraction {tok!r}",
                _diag(col, "fraction must look like 1/3", tok, line),
            )
        f = Fraction(int(num), int(den))
    else:
        return None
    if f not in system.allowed_fractions:
        raise BadFraction(
            f"fraction {tok} is not used in system {system.kind}",
            _diag(col, "fraction not in the allowed set", tok, line),
        )
    return f


def parse_measurement(text: str, system_kind: str, line: int = 1) -> metrology.MeasurementValue:
    """Parse "1/2 kush 3 shu-si" and friends for the given unit system.

    Grammar: one or more groups of [count] [fraction] unit, units in
    strictly descending order, counts positive.
    """
    system = metrology.get_system(system_kind)
    toks = text.split()
    if not toks:
        raise EmptyInput(
            "empty measurement", _diag(1, "empty measurement", text, line)
        )
    terms: list[metrology.Term] = []
    whole: int | None = None
    frac: Fraction | None = None
    col = 1
    for tok in toks:
        if _ascii_digits(tok):
            if whole is not None or frac is not None:
                raise MeasurementSyntax(
                    f"expected a unit before {tok!r}",
                    _diag(col, "two counts in a row", tok, line),
                )
            whole = int(tok)
        else:
            f = _parse_fraction_token(tok, system, col, line)
            if f is not None:
                if frac is not None:
                    raise MeasurementSyntax(
                        f"two fractions in a row at {tok!r}",
                        _diag(col, "two fractions in a row", tok, line),
                    )
                frac = f
            else:
                unit = system.unit_named(tok)
                if unit is None:
                    raise UnknownUnit(
                        f"unknown unit {tok!r} in system {system.kind}",
                        _diag(col, "unknown unit", tok, line),
                    )
                if whole is None and frac is None:
                    raise MeasurementSyntax(
                        f"unit {tok!r} has no count",
                        _diag(col, "missing count before unit", tok, line),
                    )
                terms.append(
                    metrology.Term(unit.name, whole or 0, frac or Fraction(0))
                )
                whole = None
                frac = None
        col += len(tok) + 1
    if whole is not None or frac is not None:
        raise MeasurementSyntax(
            f"dangling count at end of {text!r}",
            _diag(col, "count without a unit", toks[-1], line),
        )
    try:
        return metrology.MeasurementValue(system.kind, tuple(terms))
    except UnitOrderViolation as e:
        raise UnitOrderViolation(
            str(e), _diag(1, str(e), text, line)
        ) from None


def format_measurement(m: metrology.MeasurementValue) -> str:
    """Canonical text: ASCII fractions, UTF-8 unit names."""
    return str(m)
