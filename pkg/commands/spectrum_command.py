"""
Spectrum command: closed-form and dense spectra of one graph matrix
"""

import logging
from typing import Any, Dict, List, Optional

from config import Config
from models.closed_form import (
    a_alpha_spectrum, adjacency_spectrum, distance_laplacian_spectrum,
    graph_energy, laplacian_spectrum, signless_laplacian_spectrum
)
from models.numeric import (
    assemble_matrix, cluster_eigenvalues, compare_spectra, symmetric_eigensolve
)
from models.run_config import (
    CommandResult, ExitCode, Method, OutputFormat, REPORT_FORMATS, RunConfig
)
from models.spectrum_models import (
    EigenResult, MatrixKind, Spectrum, SpectrumEntry, format_number
)
from models.structure import LevelPartition, build_graph_by_rule, level_partition
from utils.formatters import json_envelope, spectrum_csv, spectrum_text

logger = logging.getLogger(__name__)


def closed_spectrum(lp: LevelPartition, cfg: RunConfig) -> Spectrum:
    """Closed-form spectrum of the configured matrix"""
    if cfg.matrix == MatrixKind.A_ALPHA:
        return a_alpha_spectrum(lp, cfg.alpha, exact=cfg.exact)
    if cfg.matrix == MatrixKind.ADJACENCY:
        return adjacency_spectrum(lp)
    if cfg.matrix == MatrixKind.SIGNLESS:
        return signless_laplacian_spectrum(lp)
    if cfg.matrix == MatrixKind.DISTANCE_LAPLACIAN:
        return distance_laplacian_spectrum(lp)
    return laplacian_spectrum(lp)


def dense_eigenvalues(cfg: RunConfig) -> EigenResult:
    """
    Dense eigensolve of the configured matrix of the explicit graph

    Raises:
        DenseBudgetError: If n exceeds the dense budget
    """
    g = build_graph_by_rule(cfg.params)
    alpha = cfg.alpha if cfg.matrix == MatrixKind.A_ALPHA else None
    return symmetric_eigensolve(assemble_matrix(g, cfg.matrix, alpha), cfg.tolerance)


def dense_spectrum(cfg: RunConfig, result: EigenResult) -> Spectrum:
    """Eigenvalues of a dense solve grouped into clusters"""
    gap = Config.CLUSTER_GAP * max(1.0, result.norm)
    entries = [
        SpectrumEntry.numeric(value, multiplicity)
        for value, multiplicity in cluster_eigenvalues(result.eigenvalues, gap)
    ]
    alpha = cfg.alpha if cfg.matrix == MatrixKind.A_ALPHA else None
    return Spectrum.build(cfg.matrix, entries, result.dimension, alpha=alpha,
                          residual_bound=result.residual_bound)


def _render(cfg: RunConfig, spectrum: Spectrum, checks: List[Dict[str, Any]],
            residual: Optional[float], trailer: List[str]) -> str:
    if cfg.output_format == OutputFormat.CSV:
        return spectrum_csv(spectrum)
    if cfg.output_format == OutputFormat.TEXT:
        text = spectrum_text(spectrum)
        return text + "".join(f"{line}\n" for line in trailer)
    return json_envelope(cfg.to_dict(), cfg.method.value, 'spectrum', spectrum.to_dict(Config.OUTPUT_DIGITS),
                         residual_bound=residual, checks=checks)


def cmd_spectrum(cfg: RunConfig) -> CommandResult:
    """
    Compute the configured spectrum

    With --method dense or both and n beyond the dense budget, the
    closed-form spectrum is still emitted and the exit status is 3.
    """
    cfg.require_format(*REPORT_FORMATS)
    lp = level_partition(cfg.params)
    checks: List[Dict[str, Any]] = []
    trailer: List[str] = []
    exit_code = ExitCode.SUCCESS

    closed = closed_spectrum(lp, cfg)
    spectrum = closed
    residual = closed.residual_bound

    if cfg.method != Method.CLOSED:
        if lp.order > Config.DENSE_BUDGET:
            logger.error(f"n = {lp.order} exceeds the dense budget of {Config.DENSE_BUDGET}; "
                         f"emitting the closed-form spectrum only")
            checks.append({'name': 'dense_budget', 'status': 'skipped',
                           'detail': f"n = {lp.order} exceeds {Config.DENSE_BUDGET}"})
            exit_code = ExitCode.BUDGET_EXCEEDED
        else:
            result = dense_eigenvalues(cfg)
            if cfg.method == Method.DENSE:
                spectrum = dense_spectrum(cfg, result)
                residual = result.residual_bound
            else:
                comparison = compare_spectra(closed, result, cfg.tolerance)
                residual = max(residual or 0.0, result.residual_bound)
                checks.append({'name': 'closed_vs_dense',
                               'status': 'pass' if comparison.passed else 'fail',
                               **comparison.to_dict()})
                trailer.append(f"closed vs dense: {'pass' if comparison.passed else 'FAIL'}, "
                               f"max deviation {comparison.max_deviation:.3e}")
                if not comparison.passed:
                    exit_code = ExitCode.VERIFICATION_FAILED

    if cfg.matrix == MatrixKind.ADJACENCY:
        energy = graph_energy(spectrum)
        value = format_number(energy.value, Config.OUTPUT_DIGITS)
        checks.append({'name': 'energy', 'status': 'info', 'value': value})
        trailer.append(f"energy: {value}")

    logger.info(f"{cfg.matrix.value} spectrum for p={cfg.params.p}, c={cfg.params.c} "
                f"({cfg.method.value}): {len(spectrum.entries)} distinct entries")
    return CommandResult(_render(cfg, spectrum, checks, residual, trailer), exit_code)
