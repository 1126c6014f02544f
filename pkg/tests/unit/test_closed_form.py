"""
Unit tests for closed-form spectra
"""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from models.closed_form import (
    ClosedFormError, a_alpha_spectrum, adjacency_spectrum, build_quotient,
    charpoly_vanishes_at, distance_laplacian_spectrum, eigenvector_residual,
    fixed_eigenvalue, fixed_eigenvector_basis, graph_energy, integer_scaled,
    laplacian_charpoly, laplacian_eigenvector, laplacian_spectrum,
    lift_to_graph, quotient_laplacian_eigenvalues, signless_laplacian_spectrum,
    spectral_radius
)
from models.numeric import integer_matrix
from models.ring import RingParams
from models.spectrum_models import EigenvalueKind, MatrixKind
from models.structure import build_graph_by_rule, level_partition
from tests.test_config import TestConfig


class TestQuotient(unittest.TestCase):
    """Test the quotient matrices of the level partition"""

    def test_known_quotients(self):
        self.assertEqual(build_quotient(level_partition(RingParams(2, 5))).q, TestConfig.QUOTIENT_2_5)
        self.assertEqual(build_quotient(level_partition(RingParams(2, 6))).q, TestConfig.QUOTIENT_2_6)

    def test_dstar_and_row_sums(self):
        qm = build_quotient(level_partition(RingParams(2, 5)))
        self.assertEqual([qm.dstar[i][i] for i in range(4)], [1, 3, 6, 14])
        for drow, qrow in zip(qm.dstar, qm.q):
            self.assertEqual(sum(drow), sum(qrow))
        for row in qm.lbar:
            self.assertEqual(sum(row), 0)

    def test_b_of_alpha_endpoints(self):
        qm = build_quotient(level_partition(RingParams(3, 4)))
        self.assertEqual(qm.b_of_alpha(0), qm.q)
        self.assertEqual(qm.b_of_alpha(1), qm.dstar)
        half = qm.b_of_alpha(TestConfig.HALF)
        self.assertEqual(tuple(tuple(2 * x for x in row) for row in half), qm.signless)


class TestFixedSpectra(unittest.TestCase):
    """Test spectra with closed-form values"""

    def test_laplacian(self):
        for (p, c), expected in TestConfig.LAPLACIAN.items():
            with self.subTest(p=p, c=c):
                spectrum = laplacian_spectrum(level_partition(RingParams(p, c)))
                self.assertTrue(spectrum.is_integral())
                self.assertEqual(spectrum.as_dict(), {Fraction(k): v for k, v in expected.items()})

    def test_distance_laplacian(self):
        for (p, c), expected in TestConfig.DISTANCE_LAPLACIAN.items():
            with self.subTest(p=p, c=c):
                spectrum = distance_laplacian_spectrum(level_partition(RingParams(p, c)))
                self.assertEqual(spectrum.as_dict(), {Fraction(k): v for k, v in expected.items()})

    def test_adjacency_fixed_part(self):
        spectrum = adjacency_spectrum(level_partition(RingParams(2, 6)))
        self.assertEqual(spectrum.multiplicity_of(0), 22)
        self.assertEqual(spectrum.multiplicity_of(-1), 4)
        numeric = [e for e in spectrum.entries if e.kind == EigenvalueKind.NUMERIC]
        self.assertEqual(sum(e.multiplicity for e in numeric), 5)

    def test_signless_k2(self):
        spectrum = signless_laplacian_spectrum(level_partition(RingParams(3, 2)))
        self.assertTrue(np.allclose(spectrum.expanded(), [2.0, 0.0]))

    def test_fixed_eigenvalue(self):
        lp = level_partition(RingParams(2, 5))
        self.assertEqual(fixed_eigenvalue(lp, 3, TestConfig.HALF), Fraction(5, 2))
        self.assertEqual(fixed_eigenvalue(lp, 1, 1), 1)


class TestAAlphaSpectrum(unittest.TestCase):
    """Test the A_α family"""

    def test_alpha_one_is_degrees(self):
        lp = level_partition(RingParams(2, 5))
        spectrum = a_alpha_spectrum(lp, Fraction(1))
        expected = sorted(
            [float(info.degree) for info in lp.levels for _ in range(info.size)], reverse=True
        )
        self.assertTrue(np.allclose(spectrum.expanded(), expected))

    def test_alpha_zero_matches_adjacency(self):
        lp = level_partition(RingParams(3, 4))
        self.assertTrue(np.allclose(a_alpha_spectrum(lp, 0).expanded(), adjacency_spectrum(lp).expanded()))

    def test_exact_mode(self):
        spectrum = a_alpha_spectrum(level_partition(RingParams(2, 5)), TestConfig.HALF, exact=True)
        symbolic = spectrum.entries[-1]
        self.assertEqual(symbolic.kind, EigenvalueKind.SYMBOLIC)
        self.assertEqual(symbolic.value, 'roots of B(1/2)')
        self.assertEqual(symbolic.multiplicity, 4)

    def test_alpha_out_of_range(self):
        with self.assertRaises(ClosedFormError):
            a_alpha_spectrum(level_partition(RingParams(2, 5)), Fraction(3, 2))


class TestLaplacianEigenvectors(unittest.TestCase):
    """Test explicit eigenvectors of L̄"""

    def test_small_k(self):
        vector = laplacian_eigenvector(level_partition(RingParams(2, 6)), 1)
        self.assertEqual(vector.scalar, Fraction(7, 8))
        self.assertEqual(vector.coords, (Fraction(-7, 8), 1, 1, 1, 0))
        self.assertEqual(vector.eigenvalue, 1)

    def test_large_k(self):
        self.assertEqual(laplacian_eigenvector(level_partition(RingParams(2, 6)), 5).scalar, Fraction(1, 30))
        vector = laplacian_eigenvector(level_partition(RingParams(2, 5)), 4)
        self.assertEqual(vector.scalar, Fraction(1, 14))
        self.assertEqual(vector.coords, (Fraction(-1, 14),) * 3 + (Fraction(1),))

    def test_residuals_vanish(self):
        for p, c in [(2, 5), (2, 6), (3, 4), (3, 5), (5, 4)]:
            params = RingParams(p, c)
            lp = level_partition(params)
            qm = build_quotient(lp)
            for k in params.levels:
                if k == params.special_level:
                    continue
                with self.subTest(p=p, c=c, k=k):
                    residual = eigenvector_residual(qm, laplacian_eigenvector(lp, k))
                    self.assertTrue(all(x == 0 for x in residual))

    def test_special_level_rejected(self):
        lp = level_partition(RingParams(2, 5))
        with self.assertRaises(ClosedFormError):
            laplacian_eigenvector(lp, 2)
        with self.assertRaises(ClosedFormError):
            laplacian_eigenvector(lp, 5)


class TestCharpoly(unittest.TestCase):
    """Test the exact characteristic polynomial of L̄"""

    def test_known_charpoly(self):
        lp = level_partition(RingParams(2, 5))
        coeffs = laplacian_charpoly(build_quotient(lp))
        self.assertEqual(coeffs, [1, -23, 127, -105, 0])
        for value in quotient_laplacian_eigenvalues(lp):
            self.assertTrue(charpoly_vanishes_at(coeffs, value))
        self.assertFalse(charpoly_vanishes_at(coeffs, 3))

    def test_roots_for_other_instances(self):
        for p, c in [(3, 4), (2, 7), (5, 3)]:
            with self.subTest(p=p, c=c):
                lp = level_partition(RingParams(p, c))
                coeffs = laplacian_charpoly(build_quotient(lp))
                self.assertEqual(len(coeffs), c)
                for value in quotient_laplacian_eigenvalues(lp):
                    self.assertTrue(charpoly_vanishes_at(coeffs, value))


class TestDerivedQuantities(unittest.TestCase):
    """Test energy and spectral radius"""

    def test_energy_of_k2(self):
        energy = graph_energy(adjacency_spectrum(level_partition(RingParams(3, 2))))
        self.assertAlmostEqual(float(energy.value), 2.0)
        self.assertFalse(energy.flagged)

    def test_energy_of_other_matrix_is_flagged(self):
        spectrum = laplacian_spectrum(level_partition(RingParams(2, 5)))
        with self.assertLogs('models.closed_form', level='WARNING'):
            energy = graph_energy(spectrum)
        self.assertTrue(energy.flagged)
        self.assertEqual(energy.value, Fraction(46))

    def test_symbolic_rejected(self):
        spectrum = a_alpha_spectrum(level_partition(RingParams(2, 5)), 0, exact=True)
        with self.assertRaises(ClosedFormError):
            graph_energy(spectrum)
        with self.assertRaises(ClosedFormError):
            spectral_radius(spectrum)

    def test_spectral_radius(self):
        self.assertEqual(spectral_radius(laplacian_spectrum(level_partition(RingParams(2, 5)))), 15)


class TestGraphEigenvectors(unittest.TestCase):
    """Test eigenvectors on the full graph"""

    def test_fixed_basis_sizes(self):
        lp6 = level_partition(RingParams(2, 6))
        self.assertEqual(len(fixed_eigenvector_basis(lp6, 1)), 15)
        self.assertEqual(len(fixed_eigenvector_basis(lp6, 4)), 1)
        self.assertEqual(fixed_eigenvector_basis(level_partition(RingParams(2, 5)), 4), [])

    def test_fixed_basis_are_laplacian_eigenvectors(self):
        params = RingParams(2, 5)
        lp = level_partition(params)
        g = build_graph_by_rule(params)
        laplacian = integer_matrix(g, MatrixKind.LAPLACIAN)
        for i in params.levels:
            for vector in fixed_eigenvector_basis(lp, i, g):
                self.assertTrue(np.array_equal(laplacian @ vector, (2 ** i - 1) * vector))

    def test_lifted_vector(self):
        params = RingParams(2, 5)
        g = build_graph_by_rule(params)
        lifted = lift_to_graph(laplacian_eigenvector(level_partition(params), 1).coords, g)
        scaled = integer_scaled(lifted)
        self.assertEqual(sorted(set(scaled.tolist())), [-3, 0, 4])
        laplacian = integer_matrix(g, MatrixKind.LAPLACIAN)
        self.assertTrue(np.array_equal(laplacian @ scaled, scaled))

    def test_lift_length_checked(self):
        g = build_graph_by_rule(RingParams(2, 5))
        with self.assertRaises(ClosedFormError):
            lift_to_graph([1, 2], g)


if __name__ == '__main__':
    unittest.main()
