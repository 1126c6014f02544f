"""
Verify command: run the invariant suite for one (p, c)
"""

import logging

from models.run_config import CommandResult, ExitCode, OutputFormat, REPORT_FORMATS, RunConfig
from models.verification import verify
from utils.formatters import json_envelope, verification_csv, verification_text

logger = logging.getLogger(__name__)


def cmd_verify(cfg: RunConfig) -> CommandResult:
    """
    Exit 0 when every check passes, 1 naming the failing checks otherwise,
    3 when the graph exceeds the dense budget and only exact checks ran.
    """
    cfg.require_format(*REPORT_FORMATS)
    report = verify(cfg.params, cfg.tolerance)

    if not report.passed:
        exit_code = ExitCode.VERIFICATION_FAILED
    elif report.budget_limited:
        exit_code = ExitCode.BUDGET_EXCEEDED
    else:
        exit_code = ExitCode.SUCCESS

    logger.info(f"Verification for p={cfg.params.p}, c={cfg.params.c}: "
                f"{len(report.checks)} checks, failures: {report.failures or 'none'}")

    if cfg.output_format == OutputFormat.CSV:
        return CommandResult(verification_csv(report), exit_code)
    if cfg.output_format == OutputFormat.TEXT:
        return CommandResult(verification_text(report), exit_code)

    summary = {
        'passed': report.passed,
        'budget_limited': report.budget_limited,
        'failures': report.failures,
    }
    checks = [check.to_dict() for check in report.checks]
    return CommandResult(json_envelope(cfg.to_dict(), None, 'report', summary, checks=checks), exit_code)
