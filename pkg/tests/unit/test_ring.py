"""
Unit tests for truncated polynomial ring arithmetic
"""

import itertools
import unittest
import sys
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from config import Config
from models.ring import (
    DomainError, EnumerationBudgetError, InvalidElementError, RingElement,
    RingParams, enumerate_level, enumerate_zero_divisors, format_coefficients,
    format_element, is_unit, make_element, mindeg, monomial, multiply,
    one_element, zero_element, zero_product_matrix
)
from utils.validation import ValidationError


class TestRingParams(unittest.TestCase):
    """Test RingParams derived quantities"""

    def test_order_and_special_level(self):
        cases = {(2, 6): (31, 3), (2, 5): (15, 2), (3, 2): (2, 1), (5, 3): (24, 1)}
        for (p, c), (order, s) in cases.items():
            with self.subTest(p=p, c=c):
                params = RingParams(p, c)
                self.assertEqual(params.order, order)
                self.assertEqual(params.special_level, s)

    def test_parity(self):
        self.assertTrue(RingParams(2, 6).is_even)
        self.assertFalse(RingParams(2, 5).is_even)
        self.assertEqual(RingParams(2, 5).b, 2)

    def test_invalid_parameters(self):
        with self.assertRaises(ValidationError):
            RingParams(4, 3)
        with self.assertRaises(ValidationError):
            RingParams(2, 1)

    def test_hashable(self):
        self.assertEqual(len({RingParams(2, 5), RingParams(2, 5), RingParams(3, 4)}), 2)


class TestElements(unittest.TestCase):
    """Test element construction"""

    def setUp(self):
        self.params = RingParams(3, 4)

    def test_make_element_validates(self):
        self.assertEqual(make_element([0, 1, 2, 0], self.params).coeffs, (0, 1, 2, 0))
        with self.assertRaises(InvalidElementError):
            make_element([0, 1, 2], self.params)
        with self.assertRaises(InvalidElementError):
            make_element([0, 3, 0, 0], self.params)

    def test_constructors(self):
        self.assertTrue(zero_element(self.params).is_zero())
        self.assertEqual(one_element(self.params).coeffs, (1, 0, 0, 0))
        self.assertEqual(monomial(2, self.params).coeffs, (0, 0, 1, 0))
        with self.assertRaises(InvalidElementError):
            monomial(4, self.params)

    def test_format(self):
        element = make_element([0, 1, 0, 2], self.params)
        self.assertEqual(format_element(element), 'x + 2x^3')
        self.assertEqual(format_coefficients(element), '[0,1,0,2]')
        self.assertEqual(str(zero_element(self.params)), '0')


class TestMultiply(unittest.TestCase):
    """Test truncated multiplication"""

    def test_truncation(self):
        params = RingParams(2, 6)
        self.assertTrue(multiply(monomial(3, params), monomial(3, params), params).is_zero())
        self.assertEqual(multiply(monomial(2, params), monomial(3, params), params).coeffs, (0, 0, 0, 0, 0, 1))

    def test_coefficients_reduced_mod_p(self):
        params = RingParams(3, 3)
        a = make_element([0, 2, 0], params)
        b = make_element([2, 0, 0], params)
        self.assertEqual(multiply(a, b, params).coeffs, (0, 1, 0))

    def test_length_mismatch(self):
        params = RingParams(2, 4)
        with self.assertRaises(InvalidElementError):
            multiply(RingElement((0, 1, 0)), monomial(1, params), params)

    def test_commutative(self):
        params = RingParams(3, 3)
        elements = [RingElement(coeffs) for coeffs in itertools.product(range(3), repeat=3)]
        for a, b in itertools.combinations(elements, 2):
            self.assertEqual(multiply(a, b, params), multiply(b, a, params))

    def test_associative(self):
        for p, c in [(3, 3), (2, 5)]:
            with self.subTest(p=p, c=c):
                params = RingParams(p, c)
                elements = [RingElement(coeffs) for coeffs in itertools.product(range(p), repeat=c)]
                # every third element keeps the triple count small
                sample = elements[::3]
                for a, b, d in itertools.product(sample, repeat=3):
                    self.assertEqual(multiply(multiply(a, b, params), d, params),
                                     multiply(a, multiply(b, d, params), params))

    def test_zero_absorbing_and_one_neutral(self):
        params = RingParams(3, 3)
        zero, one = zero_element(params), one_element(params)
        for coeffs in itertools.product(range(3), repeat=3):
            a = RingElement(coeffs)
            self.assertEqual(multiply(a, zero, params), zero)
            self.assertEqual(multiply(zero, a, params), zero)
            self.assertEqual(multiply(a, one, params), a)


class TestMindeg(unittest.TestCase):
    """Test mindeg and units"""

    def test_mindeg(self):
        params = RingParams(2, 5)
        self.assertEqual(mindeg(make_element([0, 0, 1, 1, 0], params)), 2)
        self.assertEqual(mindeg(monomial(4, params)), 4)

    def test_units_and_zero_rejected(self):
        params = RingParams(2, 5)
        self.assertTrue(is_unit(one_element(params)))
        with self.assertRaises(DomainError):
            mindeg(one_element(params))
        with self.assertRaises(DomainError):
            mindeg(zero_element(params))


class TestEnumeration(unittest.TestCase):
    """Test zero-divisor enumeration"""

    def test_counts(self):
        for p, c in [(2, 2), (3, 2), (2, 5), (3, 4), (5, 3)]:
            with self.subTest(p=p, c=c):
                params = RingParams(p, c)
                elements = enumerate_zero_divisors(params)
                self.assertEqual(len(elements), params.order)
                self.assertEqual(len(set(elements)), params.order)

    def test_level_sizes(self):
        params = RingParams(2, 6)
        sizes = [len(enumerate_level(i, params)) for i in params.levels]
        self.assertEqual(sizes, [16, 8, 4, 2, 1])

    def test_canonical_order(self):
        params = RingParams(2, 3)
        coeffs = [e.coeffs for e in enumerate_zero_divisors(params)]
        self.assertEqual(coeffs, [(0, 1, 0), (0, 1, 1), (0, 0, 1)])

    def test_levels_ascending(self):
        params = RingParams(3, 4)
        levels = [mindeg(e) for e in enumerate_zero_divisors(params)]
        self.assertEqual(levels, sorted(levels))

    def test_budget(self):
        with patch.object(Config, 'ENUMERATION_BUDGET', 100):
            with self.assertRaises(EnumerationBudgetError) as cm:
                enumerate_zero_divisors(RingParams(2, 9))
        self.assertEqual(cm.exception.bound, 100)


class TestZeroProductMatrix(unittest.TestCase):
    """Test the bulk zero-product matrix against pairwise multiplication"""

    def test_agrees_with_multiply(self):
        for p, c in [(2, 4), (3, 3), (2, 5)]:
            with self.subTest(p=p, c=c):
                params = RingParams(p, c)
                elements = enumerate_zero_divisors(params)
                zero = zero_product_matrix(elements, params)
                for u, a in enumerate(elements):
                    for v, b in enumerate(elements):
                        self.assertEqual(bool(zero[u, v]), multiply(a, b, params).is_zero())

    def test_chunking_does_not_change_result(self):
        params = RingParams(3, 4)
        elements = enumerate_zero_divisors(params)
        full = zero_product_matrix(elements, params)
        with patch.object(Config, 'PRODUCT_CHUNK_ROWS', 5):
            chunked = zero_product_matrix(elements, params)
        self.assertTrue((full == chunked).all())


if __name__ == '__main__':
    unittest.main()
