"""Exception hierarchy shared by every module.

Two broad families matter to callers: parse errors (bad text reached a
parser) and arithmetic errors (a well-formed request has no answer, such
as the reciprocal of an irregular number).  The CLI maps the families to
distinct exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ParseDiagnostic:
    """Position and context for a rejected piece of input text."""

    line: int
    column: int
    message: str
    token: str = ""

    def __str__(self) -> str:
        where = f"line {self.line}, column {self.column}"
        if self.token:
            return f"{where}: {self.message} ({self.token!r})"
        return f"{where}: {self.message}"


class SexagesimalError(Exception):
    """Base class for all library errors.

    ``diagnostic`` is populated when the error was raised while parsing
    text, so callers always receive at most one diagnostic per input.
    """

    def __init__(self, message: str, diagnostic: ParseDiagnostic | None = None):
        super().__init__(message)
        self.diagnostic = diagnostic


# --- digit-sequence and integer bridge errors ------------------------------

class AllZero(SexagesimalError):
    """A digit sequence with no nonzero digit; there is no zero numeral."""


class NonPositive(SexagesimalError):
    """The integer bridge only covers positive values."""


class DigitOutOfRange(SexagesimalError):
    """A digit outside 0..59, at construction or parse time."""


# --- reciprocal / root extraction ------------------------------------------

class Irregular(SexagesimalError):
    """Number has a prime factor other than 2, 3, 5: "without reciprocal"."""


class NoProgress(SexagesimalError):
    """No table factor divides the current quotient (variant tables only)."""


class NotASquare(SexagesimalError):
    """No power-of-sixty representative is a perfect square."""


class NotACube(SexagesimalError):
    """No power-of-sixty representative is a perfect cube."""


# --- metrology ---------------------------------------------------------------

class InexactFraction(SexagesimalError):
    """A fraction whose correspondence is not exact in base sixty."""


class NoReading(SexagesimalError):
    """No measurement inside the hint window corresponds to the number."""


class AmbiguousReading(SexagesimalError):
    """More than one measurement inside the hint window corresponds."""


# --- anchored arithmetic -----------------------------------------------------

class ZeroResult(SexagesimalError):
    """Subtraction came out to zero, which has no numeral."""


class NegativeResult(SexagesimalError):
    """Subtrahend exceeded the minuend."""


class MissingConfig(SexagesimalError):
    """Additive steps present but no configuration selected."""


# --- text and script parsing -------------------------------------------------

class EmptyInput(SexagesimalError):
    pass


class MalformedSeparator(SexagesimalError):
    pass


class UnknownUnit(SexagesimalError):
    pass


class UnitOrderViolation(SexagesimalError):
    pass


class BadFraction(SexagesimalError):
    pass


class MeasurementSyntax(SexagesimalError):
    pass


class ScriptSyntax(SexagesimalError):
    pass


class UnknownName(SexagesimalError):
    pass


class UnknownOp(SexagesimalError):
    pass


#: Errors produced by text handling; the CLI exits 2 on these.
PARSE_ERRORS = (
    EmptyInput,
    DigitOutOfRange,
    MalformedSeparator,
    UnknownUnit,
    UnitOrderViolation,
    BadFraction,
    MeasurementSyntax,
    ScriptSyntax,
    UnknownName,
    UnknownOp,
)
