"""
Unit tests for run configuration parsing
"""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from config import Config
from models.run_config import (
    GRAPH_FORMATS, REPORT_FORMATS, ExitCode, Method, OutputFormat, RunConfig
)
from models.spectrum_models import MatrixKind
from utils.validation import ValidationError


class TestRunConfig(unittest.TestCase):
    """Test RunConfig.from_args"""

    def test_defaults(self):
        cfg = RunConfig.from_args(2, 5)
        self.assertEqual(cfg.matrix, MatrixKind.LAPLACIAN)
        self.assertEqual(cfg.method, Method.CLOSED)
        self.assertEqual(cfg.output_format, OutputFormat.JSON)
        self.assertEqual(cfg.tolerance, Config.DEFAULT_TOLERANCE)
        self.assertIsNone(cfg.alpha)

    def test_a_alpha_requires_alpha(self):
        with self.assertRaises(ValidationError):
            RunConfig.from_args(2, 5, matrix='a-alpha')
        cfg = RunConfig.from_args(2, 5, alpha='1/3', matrix='a-alpha')
        self.assertEqual(cfg.alpha, Fraction(1, 3))
        self.assertEqual(cfg.to_dict()['alpha'], '1/3')

    def test_exact_only_with_closed_a_alpha(self):
        self.assertTrue(RunConfig.from_args(2, 5, alpha='1/2', matrix='a-alpha', exact=True).exact)
        with self.assertRaises(ValidationError):
            RunConfig.from_args(2, 5, matrix='laplacian', exact=True)
        with self.assertRaises(ValidationError):
            RunConfig.from_args(2, 5, alpha='1/2', matrix='a-alpha', method='both', exact=True)

    def test_invalid_values(self):
        cases = [
            {'p': 4, 'c': 3},
            {'p': 2, 'c': 1},
            {'p': 2, 'c': 5, 'matrix': 'distance'},
            {'p': 2, 'c': 5, 'method': 'lanczos'},
            {'p': 2, 'c': 5, 'output_format': 'xml'},
            {'p': 2, 'c': 5, 'tol': '-1'},
        ]
        for kwargs in cases:
            with self.subTest(**kwargs):
                with self.assertRaises(ValidationError):
                    RunConfig.from_args(**kwargs)

    def test_tolerance_below_machine_precision(self):
        with self.assertRaises(ValidationError) as cm:
            RunConfig.from_args(2, 5, tol='1e-20')
        self.assertIn('machine precision', str(cm.exception))
        self.assertEqual(RunConfig.from_args(2, 5, tol='1e-10').tolerance, 1e-10)

    def test_require_format(self):
        cfg = RunConfig.from_args(2, 5, output_format='json')
        cfg.require_format(*REPORT_FORMATS)
        with self.assertRaises(ValidationError) as cm:
            cfg.require_format(*GRAPH_FORMATS)
        self.assertIn('edgelist', str(cm.exception))

    def test_exit_codes(self):
        self.assertEqual([int(code) for code in ExitCode], [0, 1, 2, 3])


if __name__ == '__main__':
    unittest.main()
