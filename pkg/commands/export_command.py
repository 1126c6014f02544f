"""
Export command: the explicit graph as an edge list or DOT
"""

import logging

from models.run_config import CommandResult, GRAPH_FORMATS, OutputFormat, RunConfig
from models.structure import build_graph_by_rule
from utils.formatters import dot, edge_list

logger = logging.getLogger(__name__)


def cmd_export(cfg: RunConfig) -> CommandResult:
    """
    Export Γ(R)

    Raises:
        ValidationError: If the format is not edgelist or dot
        EnumerationBudgetError: If the ring is too large to enumerate
    """
    cfg.require_format(*GRAPH_FORMATS)
    g = build_graph_by_rule(cfg.params)
    logger.info(f"Exporting p={cfg.params.p}, c={cfg.params.c} as {cfg.output_format.value}: "
                f"{g.n} vertices, {g.m} edges")

    if cfg.output_format == OutputFormat.DOT:
        return CommandResult(dot(g))
    return CommandResult(edge_list(g))
