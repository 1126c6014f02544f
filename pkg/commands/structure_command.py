"""
Structure command: order, size, level table and structural invariants
"""

import logging

from config import Config
from models.run_config import CommandResult, ExitCode, OutputFormat, REPORT_FORMATS, RunConfig
from models.structure import (
    build_graph_by_rule, closed_form_structure, level_partition, structure_report
)
from utils.formatters import json_envelope, structure_csv, structure_text

logger = logging.getLogger(__name__)


def cmd_structure(cfg: RunConfig) -> CommandResult:
    """
    Report the structure of Γ(R)

    Brute-force values are included when the graph fits the dense budget;
    beyond it the closed-form values are reported with every brute-force
    field marked as skipped.
    """
    cfg.require_format(*REPORT_FORMATS)
    lp = level_partition(cfg.params)

    if lp.order <= Config.DENSE_BUDGET:
        report = structure_report(build_graph_by_rule(cfg.params), lp)
    else:
        report = closed_form_structure(lp)
        reason = f"n = {lp.order} exceeds {Config.DENSE_BUDGET}"
        for name in ('clique_number', 'independence_number', 'domination_number', 'diameter', 'girth'):
            report.skipped[name] = reason

    logger.info(f"Structure for p={cfg.params.p}, c={cfg.params.c}: n = {report.order}, m = {report.size}")
    exit_code = ExitCode.SUCCESS if report.all_agree else ExitCode.VERIFICATION_FAILED

    if cfg.output_format == OutputFormat.CSV:
        return CommandResult(structure_csv(report), exit_code)
    if cfg.output_format == OutputFormat.TEXT:
        return CommandResult(structure_text(report), exit_code)

    checks = [
        {'name': name, 'status': 'pass' if ok else 'fail'}
        for name, ok in report.agreement.items()
    ]
    document = json_envelope(cfg.to_dict(), None, 'report', report.to_dict(), checks=checks)
    return CommandResult(document, exit_code)
