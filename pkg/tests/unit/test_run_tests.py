"""
Unit tests for the test runner's exit status
"""

import io
import unittest
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import run_tests


def _suite_of(*outcomes):
    def make(passed):
        def body():
            if not passed:
                raise AssertionError("expected failure")
        return unittest.FunctionTestCase(body)
    return unittest.TestSuite(make(passed) for passed in outcomes)


class TestRunnerExitStatus(unittest.TestCase):
    """Test that main() reports failures through its return value"""

    def _main(self, argv):
        with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
            return run_tests.main(argv)

    def test_specific_test_failure_exits_nonzero(self):
        with patch.object(unittest.TestLoader, 'loadTestsFromName', return_value=_suite_of(True, False)):
            self.assertEqual(self._main(['--test', 'tests.unit.test_ring', '-q']), 1)

    def test_specific_test_success_exits_zero(self):
        with patch.object(unittest.TestLoader, 'loadTestsFromName', return_value=_suite_of(True)):
            self.assertEqual(self._main(['--test', 'tests.unit.test_ring', '-q']), 0)

    def test_unknown_test_name_exits_nonzero(self):
        self.assertEqual(self._main(['--test', 'tests.unit.no_such_module', '-q']), 1)

    def test_unit_suite_failure_exits_nonzero(self):
        with patch.object(run_tests, 'discover_suite', return_value=_suite_of(False)):
            self.assertEqual(self._main(['--unit', '-q']), 1)

    def test_empty_unit_suite_is_failure(self):
        with patch.object(run_tests, 'discover_suite', return_value=unittest.TestSuite()):
            self.assertEqual(self._main(['--unit', '-q']), 1)
            self.assertEqual(self._main(['--integration', '-q']), 0)


if __name__ == '__main__':
    unittest.main()
