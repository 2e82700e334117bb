"""Anchored sexagesimal arithmetic: the column model.

Addition and subtraction have no floating meaning; they need every
operand pinned to columns.  An :class:`AnchoredNumber` is a digit
sequence plus the power of sixty carried by its rightmost digit, so its
worth is V * 60**exponent exactly.  Multiplication of anchored values
reuses the floating product for the digits - the anchor never changes
what the digits are, only where they sit.

A :class:`Configuration` names an assignment of anchors to a procedure's
given numbers; attested procedures come out digit-identical under every
coherent choice, which is the point of working this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping

from .errors import NegativeResult, NotASquare, ZeroResult
from .spvn import BASE, FloatingNumber, from_integer, to_integer
from . import recip as _recip


@dataclass(frozen=True)
class AnchoredNumber:
    """digits * 60**exponent, exponent anchoring the rightmost digit.

    The anchor sits on the right because normalization strips trailing
    zeros: sums can grow new digits on the left without disturbing it.
    """

    digits: FloatingNumber
    exponent: int

    def value(self) -> Fraction:
        return Fraction(to_integer(self.digits)) * Fraction(BASE) ** self.exponent

    def __str__(self) -> str:
        return f"{self.digits}e{self.exponent}"


def anchor(n: FloatingNumber, exponent: int) -> AnchoredNumber:
    return AnchoredNumber(n, exponent)


def _from_scaled_integer(v: int, exponent: int) -> AnchoredNumber:
    # Renormalize so the digit sequence keeps a nonzero last digit.
    while v % BASE == 0:
        v //= BASE
        exponent += 1
    return AnchoredNumber(from_integer(v), exponent)


def add(a: AnchoredNumber, b: AnchoredNumber) -> AnchoredNumber:
    e = min(a.exponent, b.exponent)
    v = to_integer(a.digits) * BASE ** (a.exponent - e) + to_integer(
        b.digits
    ) * BASE ** (b.exponent - e)
    return _from_scaled_integer(v, e)


def sub(a: AnchoredNumber, b: AnchoredNumber) -> AnchoredNumber:
    e = min(a.exponent, b.exponent)
    v = to_integer(a.digits) * BASE ** (a.exponent - e) - to_integer(
        b.digits
    ) * BASE ** (b.exponent - e)
    if v == 0:
        raise ZeroResult(f"{a} - {b} is zero, which has no numeral")
    if v < 0:
        raise NegativeResult(f"{a} - {b} is negative")
    return _from_scaled_integer(v, e)


def mul_anchored(a: AnchoredNumber, b: AnchoredNumber) -> AnchoredNumber:
    """Digits are the floating product; the anchor follows by bookkeeping."""
    raw = to_integer(a.digits) * to_integer(b.digits)
    return _from_scaled_integer(raw, a.exponent + b.exponent)


HALF = AnchoredNumber(FloatingNumber((30,)), -1)


def half(a: AnchoredNumber) -> AnchoredNumber:
    """Halving is multiplication by 30, the reciprocal of 2."""
    return mul_anchored(a, HALF)


def recip_anchored(a: AnchoredNumber) -> AnchoredNumber:
    """Reciprocal with the unique anchor making a * result = 1e0."""
    r, _ = _recip.reciprocal(a.digits)
    prod = to_integer(a.digits) * to_integer(r)
    k = 0
    while prod > 1:
        prod //= BASE
        k += 1
    return AnchoredNumber(r, -a.exponent - k)


def sqrt_anchored(a: AnchoredNumber) -> AnchoredNumber:
    """Square root exact at the anchored value, not just on digits.

    9e1 (five hundred forty) has no root even though 9 does: the parity
    of the whole exponent has to cooperate.
    """
    v = to_integer(a.digits)
    e = a.exponent
    if e % 2 == 0:
        scaled, f = v, e // 2
    else:
        scaled, f = v * BASE, (e - 1) // 2
    r = isqrt(scaled)
    if r * r != scaled:
        raise NotASquare(f"{a} is not a perfect square at its anchor")
    return _from_scaled_integer(r, f)


@dataclass(frozen=True)
class Configuration:
    """A named anchor assignment for a procedure's given numbers."""

    name: str
    exponents: Mapping[str, int]

    def exponent_for(self, given_name: str) -> int:
        try:
            return self.exponents[given_name]
        except KeyError:
            raise KeyError(
                f"configuration {self.name!r} does not anchor {given_name!r}"
            ) from None


def column_diagram(rows: list[tuple[str, AnchoredNumber]]) -> str:
    """Render values in aligned columns with the units column marked U.

    Purely a display aid for traces; the rightmost column shown is the
    lowest exponent any row reaches.
    """
    if not rows:
        return ""
    lo = min(r.exponent for _, r in rows)
    hi = max(r.exponent + len(r.digits.digits) - 1 for _, r in rows)
    label_w = max(len(name) for name, _ in rows)
    width = 2 + max(
        len(str(d)) for _, r in rows for d in r.digits.digits
    )
    header = " " * (label_w + 2) + "".join(
        ("U" if e == 0 else "").rjust(width) for e in range(hi, lo - 1, -1)
    )
    lines = [header.rstrip()]
    for name, r in rows:
        cells = {r.exponent + i: d for i, d in enumerate(reversed(r.digits.digits))}
        line = name.ljust(label_w + 2) + "".join(
            (str(cells[e]) if e in cells else "").rjust(width)
            for e in range(hi, lo - 1, -1)
        )
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"
