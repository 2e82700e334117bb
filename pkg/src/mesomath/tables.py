"""Generators for the elementary numerical curriculum.

The standard reciprocal table, multiplication tables, squares and root
tables, and the ordered list a student worked through.  Everything is a
pure generator over the spvn core, so outputs are deterministic and the
text/CSV emitters are diff-stable.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .recip import ElementaryTable
from .spvn import FloatingNumber, mul, square

# The standard table: reciprocals of the regular one-place numbers plus
# the frequent two-place entries 1:4 and 1:21.  The "1" row follows 54,
# standing for sixty on the tablets; floating, it is just 1.
_RECIPROCAL_ROWS = (
    ((2,), (30,)),
    ((3,), (20,)),
    ((4,), (15,)),
    ((5,), (12,)),
    ((6,), (10,)),
    ((8,), (7, 30)),
    ((9,), (6, 40)),
    ((10,), (6,)),
    ((12,), (5,)),
    ((15,), (4,)),
    ((16,), (3, 45)),
    ((18,), (3, 20)),
    ((20,), (3,)),
    ((24,), (2, 30)),
    ((25,), (2, 24)),
    ((27,), (2, 13, 20)),
    ((30,), (2,)),
    ((32,), (1, 52, 30)),
    ((36,), (1, 40)),
    ((40,), (1, 30)),
    ((45,), (1, 20)),
    ((48,), (1, 15)),
    ((50,), (1, 12)),
    ((54,), (1, 6, 40)),
    ((1,), (1,)),
    ((1, 4), (56, 15)),
    ((1, 21), (44, 26, 40)),
)

#: Multipliers of every multiplication table: 1..20, then 30, 40, 50.
#: Surviving copies show the table through 20; the three tens rows are
#: the standard continuation of the format (reconstruction).
MULTIPLIERS = tuple(range(1, 21)) + (30, 40, 50)

# Head numbers of the multiplication series, in curriculum order,
# strictly descending when read as leading-digit magnitudes.
_HEAD_STRINGS = (
    "50", "45", "44:26:40", "40", "36", "30", "25", "24", "22:30", "20",
    "18", "16:40", "16", "15", "12:30", "12", "10", "9", "8:20", "8",
    "7:30", "7:12", "7", "6:40", "6", "5", "4:30", "4", "3:45", "3:20",
    "3", "2:30", "2:24", "2", "1:40", "1:30", "1:20", "1:15",
)


@lru_cache(maxsize=None)
def gen_reciprocal_table() -> ElementaryTable:
    """The 27 standard reciprocal pairs, in tablet order."""
    return ElementaryTable(
        (FloatingNumber(e), FloatingNumber(r)) for e, r in _RECIPROCAL_ROWS
    )


@dataclass(frozen=True)
class MultiplicationTable:
    head: FloatingNumber
    rows: tuple[tuple[int, FloatingNumber], ...]

    def product(self, multiplier: int) -> FloatingNumber:
        for m, p in self.rows:
            if m == multiplier:
                return p
        raise KeyError(multiplier)


def gen_multiplication_table(head: FloatingNumber) -> MultiplicationTable:
    """Products of the head by 1..20, 30, 40, 50, all normalized.

    Normalization is what the originals show: times 20, the table by 9
    reads simply "3", the same sign as three.
    """
    rows = tuple((m, mul(head, _fn_of_int(m))) for m in MULTIPLIERS)
    return MultiplicationTable(head=head, rows=rows)


def _fn_of_int(m: int) -> FloatingNumber:
    ds = []
    v = m
    while v:
        ds.append(v % 60)
        v //= 60
    return FloatingNumber(reversed(ds))


def gen_squares_table() -> tuple[tuple[int, FloatingNumber], ...]:
    """n and its square for n = 1..59."""
    return tuple((n, square(_fn_of_int(n))) for n in range(1, 60))


def gen_square_roots_table() -> tuple[tuple[FloatingNumber, int], ...]:
    """The squares table inverted: exact roots only."""
    return tuple((square(_fn_of_int(n)), n) for n in range(1, 60))


def gen_cube_roots_table() -> tuple[tuple[FloatingNumber, int], ...]:
    """Cubes of 1..59 inverted to their roots."""
    out = []
    for n in range(1, 60):
        f = _fn_of_int(n)
        out.append((mul(mul(f, f), f), n))
    return tuple(out)


class CurriculumEntry(NamedTuple):
    kind: str  # "reciprocal" | "multiplication" | "squares" | "square-roots" | "cube-roots"
    head: FloatingNumber | None = None

    def __str__(self) -> str:
        if self.kind == "multiplication":
            return f"multiplication table by {self.head}"
        return f"{self.kind} table"


def multiplication_heads() -> tuple[FloatingNumber, ...]:
    from .textio import parse_spvn

    return tuple(parse_spvn(s) for s in _HEAD_STRINGS)


def curriculum() -> tuple[CurriculumEntry, ...]:
    """The ordered series: reciprocal table, 38 multiplication tables by
    descending head, then squares, square roots, cube roots."""
    items = [CurriculumEntry("reciprocal")]
    items.extend(CurriculumEntry("multiplication", h) for h in multiplication_heads())
    items.extend(
        CurriculumEntry(kind) for kind in ("squares", "square-roots", "cube-roots")
    )
    return tuple(items)


def leading_magnitude_key(n: FloatingNumber) -> tuple[int, ...]:
    """Sort key ordering numbers by their leading-digit magnitude.

    7:12 sorts below 7:30 and above 7; this is the order of the
    multiplication series, not the canonical-integer order.  Plain
    left-to-right digit comparison gives exactly that order for
    normalized sequences.
    """
    return n.digits


# --- plain-text and CSV emitters -------------------------------------------

def format_two_columns(rows: list[tuple[str, str]]) -> str:
    if not rows:
        return ""
    width = max(len(a) for a, _ in rows)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows) + "\n"


def _csv_text(header: tuple[str, ...], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def format_reciprocal_table(table: ElementaryTable, fmt: str = "text") -> str:
    if fmt == "csv":
        return _csv_text(("entry", "reciprocal"), ((str(e), str(r)) for e, r in table.pairs))
    return format_two_columns([(str(e), str(r)) for e, r in table.pairs])


def format_multiplication_table(t: MultiplicationTable, fmt: str = "text") -> str:
    if fmt == "csv":
        return _csv_text(
            ("head", "multiplier", "product"),
            ((str(t.head), m, str(p)) for m, p in t.rows),
        )
    return format_two_columns([(str(m), str(p)) for m, p in t.rows])


def format_squares_table(fmt: str = "text") -> str:
    rows = gen_squares_table()
    if fmt == "csv":
        return _csv_text(("n", "square"), ((n, str(s)) for n, s in rows))
    return format_two_columns([(str(n), str(s)) for n, s in rows])
