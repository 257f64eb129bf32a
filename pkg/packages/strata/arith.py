"""
Checked fixed-width integer arithmetic.

The width is process-global configuration: the CLI sets it once from
STRATCHI_INT_BITS or --int-bits before any computation, and each fuzz worker
process sets it on start. Library code only reads it. Threads in one process
share a single width.
"""

import logging
from typing import Iterable

logger = logging.getLogger(__name__)

_int_bits = 64
_bound = 2 ** (_int_bits - 1) - 1


def set_int_bits(bits: int) -> None:
    """Set the process-wide signed width used by checked(); at least 64 bits."""
    global _int_bits, _bound
    if bits < 64:
        raise ValueError(f"Integer width must be at least 64 bits, got {bits}")
    _int_bits = bits
    _bound = 2 ** (bits - 1) - 1
    logger.debug(f"Checked arithmetic width set to {bits} bits")


def checked(value: int) -> int:
    """Return value unchanged, or raise OverflowError if it leaves the signed range."""
    if value > _bound or value < -_bound - 1:
        raise OverflowError(
            f"Integer {value} exceeds the {_int_bits}-bit checked range"
        )
    return value


def checked_sum(values: Iterable[int]) -> int:
    total = 0
    for value in values:
        total = checked(total + value)
    return total


def checked_mul(a: int, b: int) -> int:
    return checked(a * b)
