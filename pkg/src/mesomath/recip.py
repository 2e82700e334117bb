"""Regularity, trailing-part factorization, reciprocals, and exact roots.

The reciprocal of a regular number is found the way the school exercises
show it: peel off a factor that is visible in (or at least divides) the
tail of the number, divide it out, and repeat until the quotient is a
number whose reciprocal is known by heart; the answer is the product of
the memorized reciprocals of the peeled factors.

The memorized table is a list of reciprocal *pairs* and is read in both
directions: 6:40 is a usable factor because the table says the
reciprocal of 9 is 6:40, even though 6:40 heads no row of its own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple

from .errors import Irregular, NoProgress, NotACube, NotASquare
from .spvn import (
    ONE,
    BASE,
    FloatingNumber,
    SimplerOrdering,
    compare_simpler,
    from_integer,
    mul,
    to_integer,
)


class ElementaryTable:
    """An immutable list of reciprocal pairs, consultable both ways.

    Every number appearing on either side counts as "known": it can
    terminate a factorization and can serve as a peeled factor.
    """

    __slots__ = ("_pairs", "_recip_of")

    def __init__(self, pairs):
        pairs = tuple((e, r) for e, r in pairs)
        recip_of: dict[FloatingNumber, FloatingNumber] = {}
        for entry, rec in pairs:
            if mul(entry, rec) != ONE:
                raise ValueError(f"{entry} and {rec} are not a reciprocal pair")
            recip_of.setdefault(entry, rec)
            recip_of.setdefault(rec, entry)
        self._pairs = pairs
        self._recip_of = recip_of

    @property
    def pairs(self) -> tuple[tuple[FloatingNumber, FloatingNumber], ...]:
        return self._pairs

    @property
    def entries(self) -> tuple[FloatingNumber, ...]:
        return tuple(e for e, _ in self._pairs)

    def known_values(self) -> tuple[FloatingNumber, ...]:
        """Every number on either side, ascending by representative."""
        return tuple(sorted(self._recip_of, key=to_integer))

    def __contains__(self, n: FloatingNumber) -> bool:
        return n in self._recip_of

    def __len__(self) -> int:
        return len(self._pairs)

    def reciprocal_of(self, n: FloatingNumber) -> FloatingNumber:
        try:
            return self._recip_of[n]
        except KeyError:
            raise KeyError(f"{n} is not in the table") from None


def _standard_table() -> ElementaryTable:
    from .tables import gen_reciprocal_table

    return gen_reciprocal_table()


class FactorStrategy(enum.Enum):
    """How to choose the next trailing part among the exact divisors."""

    WEDGE_SUFFIX_LONGEST = "wedge"
    ANY_DIVISOR_LARGEST = "largest"


class TrailingCandidate(NamedTuple):
    factor: FloatingNumber
    wedge_suffix: bool


@dataclass(frozen=True)
class Factorization:
    """Record of one extraction: peeled factors, their product, the answer.

    ``factors`` multiply (as floating numbers) back to ``source``; every
    factor but the last was chosen as a trailing part of the then-current
    quotient, and the last is the table lookup that ended the run.
    """

    source: FloatingNumber
    factors: tuple[FloatingNumber, ...]
    reciprocal: FloatingNumber

    def quotients(self) -> tuple[FloatingNumber, ...]:
        """The left-hand column: the number, then each successive quotient."""
        out = [self.source]
        cur = to_integer(self.source)
        for f in self.factors[:-1]:
            cur //= to_integer(f)
            out.append(from_integer(cur))
        return tuple(out)

    def product(self) -> FloatingNumber:
        acc = ONE
        for f in self.factors:
            acc = mul(acc, f)
        return acc


def regular_exponents(v: int) -> tuple[int, int, int] | None:
    """(a, b, c) with v = 2**a * 3**b * 5**c, or None if v is irregular."""
    out = []
    for p in (2, 3, 5):
        k = 0
        while v % p == 0:
            v //= p
            k += 1
        out.append(k)
    if v != 1:
        return None
    return tuple(out)


def is_regular(n: FloatingNumber) -> bool:
    """True when the only prime factors are 2, 3 and 5.

    Exactly these numbers have finite reciprocals in base 60; the others
    were labelled "igi nu", without reciprocal.
    """
    return regular_exponents(to_integer(n)) is not None


def is_wedge_suffix(t: FloatingNumber, n: FloatingNumber) -> bool:
    """Can ``t`` be read in the final wedge groups of ``n``?

    All digits of ``t`` but the first must equal the final digits of
    ``n``, and ``t``'s leading digit must be at most the digit of ``n``
    in that position: 6:40 is visible at the end of 4:26:40 because the
    6 can be read inside the 26.
    """
    td, nd = t.digits, n.digits
    if len(td) > len(nd):
        return False
    k = len(td)
    return td[1:] == nd[len(nd) - k + 1 :] and td[0] <= nd[len(nd) - k]


def trailing_candidates(
    n: FloatingNumber, table: ElementaryTable | None = None
) -> tuple[TrailingCandidate, ...]:
    """Table values that divide ``n`` exactly, flagged as wedge-suffixes.

    Division is exact division of canonical representatives; the trivial
    factor 1 is excluded since it makes no progress.  Candidates come
    back largest first.
    """
    if table is None:
        table = _standard_table()
    v = to_integer(n)
    out = [
        TrailingCandidate(t, is_wedge_suffix(t, n))
        for t in table.known_values()
        if to_integer(t) > 1 and v % to_integer(t) == 0
    ]
    out.sort(key=lambda c: to_integer(c.factor), reverse=True)
    return tuple(out)


def _pick_factor(
    n: FloatingNumber, table: ElementaryTable, strategy: FactorStrategy
) -> FloatingNumber | None:
    cands = trailing_candidates(n, table)
    if not cands:
        return None
    if strategy is FactorStrategy.WEDGE_SUFFIX_LONGEST:
        for c in cands:  # already sorted largest first
            if c.wedge_suffix:
                return c.factor
    return cands[0].factor


def reciprocal(
    n: FloatingNumber,
    strategy: FactorStrategy = FactorStrategy.WEDGE_SUFFIX_LONGEST,
    table: ElementaryTable | None = None,
) -> tuple[FloatingNumber, Factorization]:
    """Reciprocal of a regular number, with the factorization that found it.

    Peels trailing parts until the quotient is in the table, then
    multiplies the memorized reciprocals of everything peeled.  The
    default strategy takes the largest factor readable as a wedge
    suffix, falling back to the largest exact divisor; this reproduces
    the school choices (6:40 out of 4:26:40, then 40; and the 6:40,
    40, 16, 16, 16 run of the long exercises).
    """
    if table is None:
        table = _standard_table()
    if not is_regular(n):
        raise Irregular(f"{n} is without reciprocal")
    factors: list[FloatingNumber] = []
    cur = n
    while cur not in table:
        f = _pick_factor(cur, table, strategy)
        if f is None:
            raise NoProgress(f"no table factor divides {cur}")
        factors.append(f)
        cur = from_integer(to_integer(cur) // to_integer(f))
    factors.append(cur)
    out = ONE
    for f in factors:
        out = mul(out, table.reciprocal_of(f))
    return out, Factorization(source=n, factors=tuple(factors), reciprocal=out)


def reciprocal_loop(
    n: FloatingNumber,
    strategy: FactorStrategy = FactorStrategy.WEDGE_SUFFIX_LONGEST,
    table: ElementaryTable | None = None,
) -> tuple[Factorization, Factorization]:
    """Invert, then invert the result: the loop must come back to ``n``.

    Returns both factorizations; ``back.reciprocal`` equals ``n``.
    """
    r, forward = reciprocal(n, strategy, table)
    back_value, back = reciprocal(r, strategy, table)
    assert back_value == n, f"loop failed: {n} -> {r} -> {back_value}"
    return forward, back


def factor_reciprocals(
    fact: Factorization, table: ElementaryTable | None = None
) -> tuple[FloatingNumber, ...]:
    """The right-hand column: the memorized reciprocal of each factor."""
    if table is None:
        table = _standard_table()
    return tuple(table.reciprocal_of(f) for f in fact.factors)


def running_products(
    fact: Factorization, table: ElementaryTable | None = None
) -> tuple[FloatingNumber, ...]:
    """Cumulative products of the reciprocal column, bottom up.

    The exercises multiply from the last factor's reciprocal upward and
    write each partial product; the final one is the answer.
    """
    recs = factor_reciprocals(fact, table)
    if len(recs) < 2:
        return recs
    out = []
    acc = recs[-1]
    for r in reversed(recs[:-1]):
        acc = mul(acc, r)
        out.append(acc)
    return tuple(out)


def divisible(a: FloatingNumber, b: FloatingNumber) -> bool:
    """Divisibility in the productive sense.

    Formally any number divides any other here (2 divided by 5 "gives
    24"); ``a`` counts as divisible by regular ``b`` only when
    multiplying by the reciprocal of ``b`` yields something simpler.
    """
    if not is_regular(b):
        raise Irregular(f"{b} is without reciprocal")
    r, _ = reciprocal(b)
    return compare_simpler(mul(a, r), a) is SimplerOrdering.SIMPLER


def sqrt(n: FloatingNumber) -> FloatingNumber:
    """Exact floating square root.

    A root exists when some representative V * 60**p is a perfect
    square; only one parity of p can work, so checking V and V * 60
    suffices.  For regular V = 2**a 3**b 5**c that is the condition
    "a even and b, c of equal parity".
    """
    v = to_integer(n)
    for scaled in (v, v * BASE):
        r = isqrt(scaled)
        if r * r == scaled:
            return from_integer(r)
    raise NotASquare(f"{n} has no exact square root")


def _icbrt(v: int) -> int:
    # Newton iteration seeded from the bit length; exact for any size.
    r = 1 << -(-v.bit_length() // 3)
    while True:
        nr = (2 * r + v // (r * r)) // 3
        if nr >= r:
            break
        r = nr
    while r**3 > v:
        r -= 1
    while (r + 1) ** 3 <= v:
        r += 1
    return r


def cbrt(n: FloatingNumber) -> FloatingNumber:
    """Exact floating cube root, by the same representative analysis."""
    v = to_integer(n)
    for scaled in (v, v * BASE, v * BASE * BASE):
        r = _icbrt(scaled)
        if r**3 == scaled:
            return from_integer(r)
    raise NotACube(f"{n} has no exact cube root")
