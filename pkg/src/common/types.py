"""Weight arithmetic shared across the toolkit.

Weights are non-negative integers in the signed 64-bit range. Python integers never wrap,
so every accumulation goes through the helpers below, which raise instead of silently
leaving the representable range.
"""

from collections.abc import Iterable

from src.common.exceptions import WeightOverflowError

Weight = int

MAX_WEIGHT: Weight = 2**63 - 1


def check_weight(value: int) -> Weight:
    """Validate a single weight value.

    Args:
        value: Candidate weight

    Returns:
        The value unchanged

    Raises:
        ValueError: If the value is negative
        WeightOverflowError: If the value does not fit in 64 bits
    """
    if value < 0:
        raise ValueError(f"Weight must be non-negative, got {value}")
    if value > MAX_WEIGHT:
        raise WeightOverflowError(f"Weight {value} exceeds the 64-bit range")
    return value


def checked_add(a: Weight, b: Weight) -> Weight:
    """Add two weights, raising on overflow."""
    total = a + b
    if total > MAX_WEIGHT:
        raise WeightOverflowError(f"Weight sum {a} + {b} exceeds the 64-bit range")
    return total


def checked_mul(a: Weight, factor: int) -> Weight:
    """Multiply a weight by a non-negative factor, raising on overflow."""
    product = a * factor
    if product > MAX_WEIGHT:
        raise WeightOverflowError(f"Weight product {a} * {factor} exceeds the 64-bit range")
    return product


def checked_sum(values: Iterable[Weight]) -> Weight:
    """Sum weights, raising as soon as the running total overflows."""
    total = 0
    for value in values:
        total = checked_add(total, value)
    return total
