"""
Output formatters for zdg-spectra

Renders spectra, structure reports, verification reports and graphs as the
text formats the CLI emits. Every renderer is deterministic.
"""

import csv
import io
from typing import Any, Dict, List, Optional

from networkx.drawing.nx_pydot import to_pydot

from config import Config
from models.spectrum_models import EigenvalueKind, Spectrum, format_number
from models.structure import GraphInstance, StructureReport, format_girth
from models.verification import VerificationReport
from utils.json_helpers import safe_json_dumps

SPECTRUM_CSV_HEADER = ['eigenvalue', 'multiplicity', 'kind']


def json_envelope(params: Dict[str, Any], method: Optional[str], body_key: str, body: Any,
                  residual_bound: Optional[float] = None, checks: Any = None) -> str:
    """
    Serialize a command result with the fixed top-level layout

    Args:
        params: Ring parameters (and alpha) as a dict
        method: closed, dense, both or None
        body_key: 'spectrum' or 'report'
        body: The command result
        residual_bound: Largest eigensolver residual involved, if any
        checks: Comparison or verification details, if any
    """
    document = {
        'params': params,
        'method': method,
        body_key: body,
        'residual_bound': None if residual_bound is None else f"{residual_bound:.3e}",
        'checks': checks if checks is not None else [],
    }
    return safe_json_dumps(document, indent=2) + "\n"


def _csv(rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def spectrum_csv(spectrum: Spectrum, digits: int = Config.OUTPUT_DIGITS) -> str:
    rows: List[List[Any]] = [SPECTRUM_CSV_HEADER]
    for entry in spectrum.entries:
        rows.append([entry.label(digits), entry.multiplicity, entry.kind.value])
    return _csv(rows)


def spectrum_text(spectrum: Spectrum, digits: int = Config.OUTPUT_DIGITS) -> str:
    """One 'eigenvalue ^[multiplicity] (kind)' line per entry"""
    title = f"{spectrum.matrix.value} spectrum, n = {spectrum.dimension}"
    if spectrum.alpha is not None:
        title += f", alpha = {spectrum.alpha}"
    lines = [title]
    for entry in spectrum.entries:
        label = entry.label(digits)
        if entry.kind == EigenvalueKind.AFFINE and spectrum.alpha is not None:
            label += f" = {format_number(entry.evaluate(spectrum.alpha), digits)}"
        lines.append(f"  {label} ^[{entry.multiplicity}] ({entry.kind.value})")
    if spectrum.residual_bound is not None:
        lines.append(f"residual bound: {spectrum.residual_bound:.3e}")
    return "\n".join(lines) + "\n"


def structure_csv(report: StructureReport) -> str:
    rows: List[List[Any]] = [['level', 'size', 'degree', 'kind']]
    rows.extend([level.index, level.size, level.degree, level.kind.value] for level in report.levels)
    return _csv(rows)


def structure_text(report: StructureReport) -> str:
    lines = [
        f"order: {report.order}",
        f"size: {report.size}",
        "levels:",
    ]
    for level in report.levels:
        lines.append(f"  V_{level.index}: n = {level.size}, d = {level.degree}, {level.kind.value}")

    fields = [
        ('clique_number', report.clique_number),
        ('independence_number', report.independence_number),
        ('domination_number', report.domination_number),
        ('diameter', report.diameter),
        ('girth', format_girth(report.girth)),
        ('universal_vertex_count', report.universal_vertex_count),
    ]
    for name, value in fields:
        line = f"{name}: {value}"
        if name in report.brute_force:
            measured = report.brute_force[name]
            if name == 'girth':
                measured = format_girth(measured)
            line += f" (brute force {measured}, {'agrees' if report.agreement.get(name) else 'DISAGREES'})"
        elif name in report.skipped:
            line += f" (brute force skipped: {report.skipped[name]})"
        lines.append(line)

    if report.generic_disagreements:
        lines.append(f"differs from the generic statements: {', '.join(report.generic_disagreements)}")
    return "\n".join(lines) + "\n"


def verification_csv(report: VerificationReport) -> str:
    rows: List[List[Any]] = [['check', 'status', 'detail']]
    for check in report.checks:
        status = check.to_dict()['status']
        rows.append([check.name, status, check.detail])
    return _csv(rows)


def verification_text(report: VerificationReport) -> str:
    lines = []
    for check in report.checks:
        status = check.to_dict()['status'].upper()
        lines.append(f"[{status}] {check.name}: {check.detail}")
    summary = "all checks passed" if report.passed else f"FAILED: {', '.join(report.failures)}"
    if report.budget_limited:
        summary += " (graph checks skipped: dense budget exceeded)"
    lines.append(summary)
    return "\n".join(lines) + "\n"


def edge_list(g: GraphInstance) -> str:
    """
    Vertex comment lines followed by sorted 'u v' lines with u < v

    Example:
        # vertex 0 level 1 label [0,1]
        0 1
    """
    lines = [
        f"# vertex {v} level {g.levels[v]} label {g.graph.nodes[v]['label']}"
        for v in range(g.n)
    ]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def edge_lines(text: str) -> List[str]:
    """The non-comment lines of an edge list"""
    return [line for line in text.splitlines() if line and not line.startswith('#')]


def dot(g: GraphInstance) -> str:
    """Graphviz DOT rendering with level and label attributes"""
    graph = to_pydot(g.graph)
    graph.set_name(f"zdg_p{g.params.p}_c{g.params.c}")
    return graph.to_string()
