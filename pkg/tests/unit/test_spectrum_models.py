"""
Unit tests for spectrum data models
"""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from models.spectrum_models import (
    AffineEigenvalue, EigenvalueKind, MatrixKind, Spectrum, SpectrumComparison,
    SpectrumEntry, SpectrumError, format_number
)


class TestAffineEigenvalue(unittest.TestCase):
    """Test α-dependent eigenvalues"""

    def test_evaluation_and_label(self):
        eigenvalue = AffineEigenvalue(slope=7, intercept=-1, multiplicity=3)
        self.assertEqual(eigenvalue.at(Fraction(1, 2)), Fraction(5, 2))
        self.assertEqual(eigenvalue.label(), '7*alpha-1')
        self.assertEqual(AffineEigenvalue(3, 0, 1).label(), '3*alpha')
        self.assertEqual(AffineEigenvalue(1, -1, 1).label(), 'alpha-1')
        self.assertEqual(AffineEigenvalue(1, 0, 1).label(), 'alpha')
        self.assertEqual(AffineEigenvalue(0, 2, 1).label(), '2')

    def test_multiplicity_must_be_positive(self):
        with self.assertRaises(SpectrumError):
            AffineEigenvalue(slope=1, intercept=0, multiplicity=0)


class TestFormatNumber(unittest.TestCase):
    """Test number rendering"""

    def test_exact(self):
        self.assertEqual(format_number(Fraction(3)), '3')
        self.assertEqual(format_number(Fraction(-7, 8)), '-7/8')

    def test_float(self):
        self.assertEqual(format_number(2.5, 12), '2.5')
        self.assertEqual(format_number(1e-13), '0')
        self.assertEqual(format_number(-3e-11), '0')
        self.assertEqual(format_number(1 / 3, 6), '0.333333')


class TestSpectrumBuild(unittest.TestCase):
    """Test normalization of spectra"""

    def test_merge_sort_and_drop(self):
        spectrum = Spectrum.build(MatrixKind.LAPLACIAN, [
            SpectrumEntry.exact(1, 2),
            SpectrumEntry.exact(3, 0),
            SpectrumEntry.exact(0, 1),
            SpectrumEntry.exact(1, 3),
            SpectrumEntry.exact(7, 1),
        ], dimension=7)
        self.assertEqual([(e.value, e.multiplicity) for e in spectrum.entries], [(7, 1), (1, 5), (0, 1)])
        self.assertTrue(spectrum.is_integral())
        self.assertEqual(spectrum.exact_sum(), 12)

    def test_total_mismatch(self):
        with self.assertRaises(SpectrumError):
            Spectrum.build(MatrixKind.LAPLACIAN, [SpectrumEntry.exact(0, 1)], dimension=2)

    def test_negative_multiplicity(self):
        with self.assertRaises(SpectrumError):
            Spectrum.build(MatrixKind.LAPLACIAN, [SpectrumEntry.exact(0, -1)], dimension=0)

    def test_affine_sorted_at_alpha(self):
        entries = [
            SpectrumEntry.affine(AffineEigenvalue(1, 0, 2)),
            SpectrumEntry.affine(AffineEigenvalue(7, -1, 1)),
            SpectrumEntry.numeric(0.25),
        ]
        at_zero = Spectrum.build(MatrixKind.A_ALPHA, entries, 4, alpha=Fraction(0))
        self.assertEqual(at_zero.expanded(), [0.25, 0.0, 0.0, -1.0])
        at_one = Spectrum.build(MatrixKind.A_ALPHA, entries, 4, alpha=Fraction(1))
        self.assertEqual(at_one.expanded(), [6.0, 1.0, 1.0, 0.25])
        self.assertIsNone(at_one.exact_sum())

    def test_tie_prefers_larger_multiplicity(self):
        spectrum = Spectrum.build(MatrixKind.A_ALPHA, [
            SpectrumEntry.affine(AffineEigenvalue(2, 0, 1)),
            SpectrumEntry.affine(AffineEigenvalue(1, 0, 3)),
        ], 4, alpha=Fraction(0))
        self.assertEqual([e.multiplicity for e in spectrum.entries], [3, 1])

    def test_symbolic_last(self):
        spectrum = Spectrum.build(MatrixKind.A_ALPHA, [
            SpectrumEntry('roots of B(1/2)', 2, EigenvalueKind.SYMBOLIC),
            SpectrumEntry.affine(AffineEigenvalue(1, 0, 1)),
        ], 3, alpha=Fraction(1, 2))
        self.assertEqual(spectrum.entries[-1].kind, EigenvalueKind.SYMBOLIC)
        self.assertTrue(spectrum.is_symbolic)
        with self.assertRaises(SpectrumError):
            spectrum.expanded()

    def test_queries(self):
        spectrum = Spectrum.build(MatrixKind.LAPLACIAN, [
            SpectrumEntry.exact(0, 1), SpectrumEntry.exact(Fraction(1, 2), 2),
        ], 3)
        self.assertFalse(spectrum.is_integral())
        self.assertEqual(spectrum.multiplicity_of(Fraction(1, 2)), 2)
        self.assertEqual(spectrum.multiplicity_of(5), 0)
        self.assertEqual(spectrum.as_dict(), {Fraction(1, 2): 2, Fraction(0): 1})

    def test_to_dict(self):
        spectrum = Spectrum.build(MatrixKind.A_ALPHA, [
            SpectrumEntry.affine(AffineEigenvalue(7, -1, 1)),
        ], 1, alpha=Fraction(1, 2))
        data = spectrum.to_dict()
        self.assertEqual(data['matrix'], 'a-alpha')
        self.assertEqual(data['alpha'], '1/2')
        self.assertEqual(data['entries'], [
            {'eigenvalue': '7*alpha-1', 'multiplicity': 1, 'kind': 'affine', 'value': '5/2'}
        ])


class TestSpectrumComparison(unittest.TestCase):
    """Test pass/fail of comparisons"""

    def test_passed(self):
        self.assertTrue(SpectrumComparison(1e-12, 1e-8, True).passed)
        self.assertFalse(SpectrumComparison(1e-6, 1e-8, True).passed)
        self.assertFalse(SpectrumComparison(0.0, 1e-8, False).passed)
        self.assertEqual(SpectrumComparison(0.0, 1e-8, True).to_dict()['passed'], True)


if __name__ == '__main__':
    unittest.main()
