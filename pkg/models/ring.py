"""
Truncated polynomial ring arithmetic for zdg-spectra

Exact arithmetic in R = Z_p[x]/<x^c> and enumeration of its nonzero
zero-divisors. This module is the independent oracle for graph adjacency.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from config import Config
from utils.validation import validate_prime, validate_exponent

logger = logging.getLogger(__name__)


class RingError(Exception):
    """Custom exception for ring arithmetic errors"""
    pass


class InvalidElementError(RingError):
    """Raised when a coefficient vector does not belong to the ring"""
    pass


class DomainError(RingError):
    """Raised when an operation is applied outside its domain"""
    pass


class EnumerationBudgetError(RingError):
    """Raised when an enumeration would exceed the configured budget"""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


@dataclass(frozen=True)
class RingParams:
    """The pair (p, c) defining Z_p[x]/<x^c>"""
    p: int
    c: int

    def __post_init__(self):
        validate_prime(self.p)
        validate_exponent(self.c)

    @property
    def order(self) -> int:
        """Number of vertices of the zero-divisor graph, p^(c-1) - 1"""
        return self.p ** (self.c - 1) - 1

    @property
    def special_level(self) -> int:
        """s = floor(c/2), the level whose Laplacian eigenvalue loses one copy"""
        return self.c // 2

    @property
    def is_even(self) -> bool:
        return self.c % 2 == 0

    @property
    def b(self) -> int:
        """b with c = 2b (even) or c = 2b + 1 (odd)"""
        return self.c // 2

    @property
    def levels(self) -> range:
        return range(1, self.c)

    def to_dict(self) -> dict:
        return {'p': self.p, 'c': self.c, 'order': self.order, 'special_level': self.special_level}


@dataclass(frozen=True)
class RingElement:
    """Element of R stored as its coefficient vector (index k holds x^k)"""
    coeffs: Tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_element(self)


def _check_element(a: RingElement, params: RingParams) -> None:
    if len(a.coeffs) != params.c:
        raise InvalidElementError(
            f"Element has {len(a.coeffs)} coefficients, expected {params.c}"
        )
    for coefficient in a.coeffs:
        if not 0 <= coefficient < params.p:
            raise InvalidElementError(
                f"Coefficient {coefficient} outside [0, {params.p - 1}]"
            )


def make_element(coeffs: Sequence[int], params: RingParams) -> RingElement:
    """
    Build a validated ring element

    Args:
        coeffs: Coefficients of 1, x, ..., x^(c-1)
        params: Ring parameters

    Returns:
        The element

    Raises:
        InvalidElementError: If the vector has the wrong length or range
    """
    element = RingElement(tuple(int(a) for a in coeffs))
    _check_element(element, params)
    return element


def zero_element(params: RingParams) -> RingElement:
    return RingElement((0,) * params.c)


def one_element(params: RingParams) -> RingElement:
    return RingElement((1,) + (0,) * (params.c - 1))


def monomial(k: int, params: RingParams, coefficient: int = 1) -> RingElement:
    """Return coefficient * x^k"""
    if not 0 <= k < params.c:
        raise InvalidElementError(f"x^{k} is not a basis monomial for c={params.c}")
    coeffs = [0] * params.c
    coeffs[k] = coefficient % params.p
    return RingElement(tuple(coeffs))


def multiply(a: RingElement, b: RingElement, params: RingParams) -> RingElement:
    """
    Multiply two elements, dropping every term of degree >= c

    Args:
        a: First factor
        b: Second factor
        params: Ring parameters

    Returns:
        The product reduced mod p

    Raises:
        InvalidElementError: If either factor does not match params
    """
    _check_element(a, params)
    _check_element(b, params)

    c, p = params.c, params.p
    product = [0] * c
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(c - i):
            bj = b.coeffs[j]
            if bj:
                product[i + j] += ai * bj

    return RingElement(tuple(value % p for value in product))


def is_unit(a: RingElement) -> bool:
    """An element is a unit iff its constant coefficient is nonzero"""
    return a.coeffs[0] != 0


def mindeg(a: RingElement) -> int:
    """
    Lowest degree with a nonzero coefficient of a nonzero non-unit

    Args:
        a: A nonzero zero-divisor

    Returns:
        The level index k in 1..c-1

    Raises:
        DomainError: If a is zero or a unit
    """
    if is_unit(a):
        raise DomainError(f"mindeg is undefined for the unit {format_element(a)}")

    for k, coefficient in enumerate(a.coeffs):
        if coefficient:
            return k

    raise DomainError("mindeg is undefined for the zero element")


def _check_budget(params: RingParams) -> None:
    size = params.p ** (params.c - 1)
    if size > Config.ENUMERATION_BUDGET:
        raise EnumerationBudgetError(
            f"p^(c-1) = {size} exceeds the enumeration budget of {Config.ENUMERATION_BUDGET}",
            Config.ENUMERATION_BUDGET,
        )


def enumerate_level(level: int, params: RingParams) -> List[RingElement]:
    """Elements with mindeg == level in lexicographic order of (a_1, ..., a_{c-1})"""
    p, c = params.p, params.c
    prefix = (0,) * level
    tails = itertools.product(range(1, p), *[range(p)] * (c - 1 - level))
    return [RingElement(prefix + tail) for tail in tails]


def enumerate_zero_divisors(params: RingParams) -> List[RingElement]:
    """
    List the nonzero zero-divisors grouped by ascending mindeg

    Args:
        params: Ring parameters

    Returns:
        Exactly p^(c-1) - 1 elements in the canonical vertex order

    Raises:
        EnumerationBudgetError: If p^(c-1) exceeds Config.ENUMERATION_BUDGET
    """
    _check_budget(params)

    elements: List[RingElement] = []
    for level in params.levels:
        elements.extend(enumerate_level(level, params))

    logger.debug(f"Enumerated {len(elements)} zero-divisors for p={params.p}, c={params.c}")
    return elements


def zero_product_matrix(elements: Sequence[RingElement], params: RingParams) -> np.ndarray:
    """
    Boolean matrix Z with Z[u, v] true iff elements[u] * elements[v] == 0

    The truncated convolution is evaluated for all pairs at once, one block of
    rows at a time.

    Args:
        elements: Ring elements
        params: Ring parameters

    Returns:
        n x n boolean array
    """
    n = len(elements)
    c, p = params.c, params.p
    coeffs = np.array([e.coeffs for e in elements], dtype=np.int64).reshape(n, c)
    result = np.empty((n, n), dtype=bool)

    for start in range(0, n, Config.PRODUCT_CHUNK_ROWS):
        block = coeffs[start:start + Config.PRODUCT_CHUNK_ROWS]
        zero = np.ones((block.shape[0], n), dtype=bool)
        for k in range(c):
            term = np.zeros((block.shape[0], n), dtype=np.int64)
            for i in range(k + 1):
                term += np.outer(block[:, i], coeffs[:, k - i])
            zero &= (term % p) == 0
        result[start:start + block.shape[0]] = zero

    return result


def format_element(a: RingElement) -> str:
    """Render an element as a polynomial, e.g. '2x + x^3'"""
    terms = []
    for k, coefficient in enumerate(a.coeffs):
        if coefficient == 0:
            continue
        if k == 0:
            monomial_text = ''
        elif k == 1:
            monomial_text = 'x'
        else:
            monomial_text = f'x^{k}'
        if not monomial_text:
            terms.append(str(coefficient))
        elif coefficient == 1:
            terms.append(monomial_text)
        else:
            terms.append(f'{coefficient}{monomial_text}')
    return ' + '.join(terms) if terms else '0'


def format_coefficients(a: RingElement) -> str:
    """Render the coefficient vector without spaces, e.g. '[0,1,0,1]'"""
    return '[' + ','.join(str(value) for value in a.coeffs) + ']'
