"""Exact floating base-60 arithmetic the way the scribal schools did it.

The package models the two number worlds of Old Babylonian computation:
floating digit sequences on which only multiplication, reciprocals and
roots act (:mod:`mesomath.spvn`, :mod:`mesomath.recip`), and measurement
values tied to units, bridged by the metrological tables
(:mod:`mesomath.metrology`).  Addition needs an anchor and lives in
:mod:`mesomath.abacus`; attested tablet computations replay through
:mod:`mesomath.procedures`.
"""

from .spvn import (
    FloatingNumber,
    SimplerOrdering,
    compare_simpler,
    from_integer,
    mul,
    normalize,
    square,
    to_integer,
)
from .recip import (
    ElementaryTable,
    Factorization,
    FactorStrategy,
    cbrt,
    divisible,
    is_regular,
    reciprocal,
    reciprocal_loop,
    sqrt,
    trailing_candidates,
)
from .tables import (
    curriculum,
    gen_multiplication_table,
    gen_reciprocal_table,
    gen_square_roots_table,
    gen_squares_table,
)
from .metrology import (
    AnchorHint,
    MeasurementValue,
    Window,
    enumerate_readings,
    from_number,
    gen_metrological_table,
    to_number,
    volume_from_surface,
)
from .abacus import AnchoredNumber, Configuration, anchor
from .procedures import disk_area, parse_script, run, verify_corpus
from .textio import (
    format_measurement,
    format_spvn,
    parse_measurement,
    parse_spvn,
)

__version__ = "0.1.0"
