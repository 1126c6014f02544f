"""
Input validation utilities for zdg-spectra

Provides validation functions for ring parameters and command-line inputs.
"""

import logging
import math
from fractions import Fraction
from typing import Any, Iterable, Union

logger = logging.getLogger(__name__)


class ValidationError(Exception):
    """Custom exception for validation errors"""
    pass


def is_prime(value: int) -> bool:
    """
    Trial-division primality test

    Args:
        value: Integer to test

    Returns:
        True if value is prime
    """
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    for divisor in range(3, math.isqrt(value) + 1, 2):
        if value % divisor == 0:
            return False
    return True


def validate_prime(p: Any) -> int:
    """
    Validate the modulus of the coefficient field

    Args:
        p: Candidate modulus

    Returns:
        The validated modulus

    Raises:
        ValidationError: If p is not an integer prime
    """
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError(f"p must be an integer, got {p!r}")

    if p < 2:
        raise ValidationError(f"p must be at least 2, got {p}")

    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p}")

    return p


def validate_exponent(c: Any) -> int:
    """
    Validate the truncation exponent c of Z_p[x]/<x^c>

    Args:
        c: Candidate exponent

    Returns:
        The validated exponent

    Raises:
        ValidationError: If c is not an integer >= 2
    """
    if isinstance(c, bool) or not isinstance(c, int):
        raise ValidationError(f"c must be an integer, got {c!r}")

    if c < 2:
        raise ValidationError(f"c must be at least 2, got {c}")

    return c


def parse_alpha(value: Union[str, int, Fraction, None]) -> Fraction:
    """
    Parse α as an exact rational in [0, 1]

    Accepts "num/den", integers and decimal strings. Decimal strings are read
    as the exact decimal fraction they spell, which is logged because binary
    floats would not survive that conversion.

    Args:
        value: α as given by the user

    Returns:
        α as a Fraction

    Raises:
        ValidationError: If α cannot be parsed or lies outside [0, 1]
    """
    if value is None:
        raise ValidationError("alpha is required")

    if isinstance(value, float):
        raise ValidationError("alpha must be given as an exact value, not a float")

    try:
        alpha = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ValidationError(f"Invalid alpha: {value!r}")

    if isinstance(value, str) and '.' in value:
        logger.warning(f"alpha {value!r} given as a decimal; using the exact fraction {alpha}")

    if alpha < 0 or alpha > 1:
        raise ValidationError(f"alpha must lie in [0, 1], got {alpha}")

    return alpha


def validate_tolerance(tol: Any) -> float:
    """
    Validate a numeric comparison tolerance

    Args:
        tol: Candidate tolerance

    Returns:
        The tolerance as a float

    Raises:
        ValidationError: If tol is not a positive finite number
    """
    try:
        value = float(tol)
    except (TypeError, ValueError):
        raise ValidationError(f"Invalid tolerance: {tol!r}")

    if not math.isfinite(value) or value <= 0:
        raise ValidationError(f"tolerance must be positive, got {tol}")

    return value


def validate_choice(value: str, choices: Iterable[str], name: str) -> str:
    """
    Validate that a value is one of a fixed set of choices

    Args:
        value: The value to check
        choices: Allowed values
        name: Option name used in the error message

    Returns:
        The validated value

    Raises:
        ValidationError: If value is not allowed
    """
    allowed = list(choices)
    if value not in allowed:
        raise ValidationError(f"Unknown {name} {value!r}; expected one of {', '.join(allowed)}")
    return value
