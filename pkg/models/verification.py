"""
Verification suite for zdg-spectra

Checks every closed-form claim for one (p, c): exact identities on the quotient
matrices, then brute-force construction and dense eigensolving on the explicit
graph when it fits the dense budget. Independent checks run on a thread pool;
the report always lists them in the same order.
"""

import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from config import Config, SAMPLE_ALPHAS
from models.closed_form import (
    ClosedFormError, QuotientMatrices, a_alpha_spectrum, adjacency_spectrum, build_quotient,
    charpoly_vanishes_at, distance_laplacian_spectrum, eigenvector_residual,
    fixed_eigenvalue, fixed_eigenvector_basis, integer_scaled, laplacian_charpoly,
    laplacian_eigenvector, laplacian_spectrum, lift_to_graph,
    quotient_laplacian_eigenvalues, signless_laplacian_spectrum
)
from models.numeric import (
    EigenSolveError, NumericError, assemble_matrix, compare_spectra,
    eigensolver_sanity, integer_matrix, is_positive_semidefinite,
    symmetric_eigensolve
)
from models.ring import RingParams, mindeg
from models.spectrum_models import EigenResult, MatrixKind, Spectrum, SpectrumError
from models.structure import (
    GraphInstance, LevelKind, LevelPartition, StructureError, build_graph_by_ring,
    build_graph_by_rule, closed_form_clique_number, closed_form_diameter,
    level_partition, independent_levels_size, structure_report, witness_sets
)

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Outcome of one named check"""
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'name': self.name,
            'status': 'skipped' if self.skipped else ('pass' if self.passed else 'fail'),
            'detail': self.detail,
        }
        if self.data:
            result['data'] = dict(self.data)
        return result


@dataclass
class VerificationReport:
    """All check results for one (p, c)"""
    params: RingParams
    checks: List[CheckResult]
    budget_limited: bool = False

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if not check.skipped)

    @property
    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.skipped and not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'budget_limited': self.budget_limited,
            'failures': self.failures,
            'checks': [check.to_dict() for check in self.checks],
        }


CheckFunction = Callable[['VerificationSuite'], CheckResult]


class VerificationSuite:
    """
    Runs the invariant checks for one ring

    Dense eigensolves are shared between checks through a small per-suite
    cache guarded by a lock.
    """

    def __init__(self, params: RingParams, tol: Optional[float] = None):
        self.params = params
        self.tol = Config.DEFAULT_TOLERANCE if tol is None else tol
        self.lp: LevelPartition = level_partition(params)
        self.qm: QuotientMatrices = build_quotient(self.lp)
        self.graph: Optional[GraphInstance] = None
        self._dense: Dict[Tuple[MatrixKind, Optional[Fraction]], EigenResult] = {}
        self._dense_lock = threading.Lock()

    @property
    def within_dense_budget(self) -> bool:
        return self.lp.order <= Config.DENSE_BUDGET

    def run(self) -> VerificationReport:
        """
        Run every check that fits the budgets

        Returns:
            The report; budget_limited is set when graph checks were skipped
        """
        checks: List[Tuple[str, CheckFunction]] = list(EXACT_CHECKS)
        budget_limited = not self.within_dense_budget

        if budget_limited:
            logger.warning(f"n = {self.lp.order} exceeds the dense budget of {Config.DENSE_BUDGET}; "
                           f"running exact checks only")
        else:
            self.graph = build_graph_by_rule(self.params)
            checks.extend(GRAPH_CHECKS)

        logger.info(f"Running {len(checks)} checks for p={self.params.p}, c={self.params.c}")
        with ThreadPoolExecutor(max_workers=Config.VERIFY_WORKERS, thread_name_prefix="verify") as executor:
            futures = [executor.submit(self._run_check, name, check) for name, check in checks]
            results = [future.result() for future in futures]

        report = VerificationReport(params=self.params, checks=results, budget_limited=budget_limited)
        for name in report.failures:
            logger.error(f"Check failed: {name}")
        return report

    def _run_check(self, name: str, check: CheckFunction) -> CheckResult:
        try:
            result = check(self)
        except (NumericError, ClosedFormError, SpectrumError, StructureError,
                ArithmeticError, ValueError) as e:
            logger.error(f"Check {name} raised: {e}")
            return CheckResult(name=name, passed=False, detail=str(e))
        result.name = name
        logger.debug(f"{name}: {'pass' if result.passed else 'fail'} {result.detail}")
        return result

    def dense(self, kind: MatrixKind, alpha: Optional[Fraction] = None) -> EigenResult:
        """Dense eigensolve of one matrix of the explicit graph, computed once"""
        key = (kind, alpha)
        with self._dense_lock:
            if key in self._dense:
                return self._dense[key]
        result = symmetric_eigensolve(assemble_matrix(self.graph, kind, alpha), self.tol)
        with self._dense_lock:
            self._dense.setdefault(key, result)
        return result


def _ok(passed: bool, detail: str = "", **data: Any) -> CheckResult:
    return CheckResult(name="", passed=bool(passed), detail=detail, data=data)


# Exact checks on the quotient matrices

def check_quotient_row_sums(suite: VerificationSuite) -> CheckResult:
    q_sums = [sum(row) for row in suite.qm.q]
    lbar_sums = [sum(row) for row in suite.qm.lbar]
    passed = q_sums == list(suite.lp.degrees) and all(value == 0 for value in lbar_sums)
    return _ok(passed, f"Q row sums {q_sums}, degrees {list(suite.lp.degrees)}")


def check_multiplicity_accounting(suite: VerificationSuite) -> CheckResult:
    lp = suite.lp
    spectra: List[Spectrum] = [
        laplacian_spectrum(lp), distance_laplacian_spectrum(lp),
        adjacency_spectrum(lp), signless_laplacian_spectrum(lp),
    ]
    spectra.extend(a_alpha_spectrum(lp, alpha) for alpha in SAMPLE_ALPHAS)
    spectra.append(a_alpha_spectrum(lp, Fraction(1, 2), exact=True))
    totals = [spectrum.total_multiplicity for spectrum in spectra]
    return _ok(all(total == lp.order for total in totals), f"totals {sorted(set(totals))}, n = {lp.order}")


def check_trace_identities(suite: VerificationSuite) -> CheckResult:
    lp, qm = suite.lp, suite.qm
    n, m = lp.order, lp.edge_count
    trace_q = sum(qm.q[i][i] for i in range(qm.dimension))
    clique_offset = sum(info.size - 1 for info in lp.levels if info.kind == LevelKind.CLIQUE)
    fixed_adjacency = sum(-(info.size - 1) for info in lp.levels if info.kind == LevelKind.CLIQUE)
    fixed_signless = sum(
        (lp.params.p ** info.index - (3 if info.kind == LevelKind.CLIQUE else 1)) * (info.size - 1)
        for info in lp.levels
    )
    trace_signless = sum(qm.signless[i][i] for i in range(qm.dimension))

    identities = {
        'trace_q': trace_q == clique_offset,
        'adjacency_sum': fixed_adjacency + trace_q == 0,
        'signless_sum': fixed_signless + trace_signless == 2 * m,
        'laplacian_sum': laplacian_spectrum(lp).exact_sum() == 2 * m,
        'distance_laplacian_sum': distance_laplacian_spectrum(lp).exact_sum() == 2 * n * (n - 1) - 2 * m,
    }
    failed = [name for name, ok in identities.items() if not ok]
    return _ok(not failed, f"failed: {', '.join(failed)}" if failed else "all trace identities hold")


def check_interpolation(suite: VerificationSuite) -> CheckResult:
    qm = suite.qm
    for alpha, beta in itertools.combinations(SAMPLE_ALPHAS, 2):
        b_alpha, b_beta = qm.b_of_alpha(alpha), qm.b_of_alpha(beta)
        slope = tuple(
            tuple((x - y) / (alpha - beta) for x, y in zip(row_a, row_b))
            for row_a, row_b in zip(b_alpha, b_beta)
        )
        if slope != qm.lbar:
            return _ok(False, f"(B({alpha}) - B({beta}))/({alpha} - {beta}) differs from D* - Q")
    return _ok(True, f"{len(SAMPLE_ALPHAS)} sample values")


def check_half_doubling(suite: VerificationSuite) -> CheckResult:
    qm, lp = suite.qm, suite.lp
    half = Fraction(1, 2)
    doubled = tuple(tuple(2 * x for x in row) for row in qm.b_of_alpha(half))
    fixed_ok = all(
        2 * fixed_eigenvalue(lp, info.index, half)
        == lp.params.p ** info.index - (3 if info.kind == LevelKind.CLIQUE else 1)
        for info in lp.levels
    )
    return _ok(doubled == qm.signless and fixed_ok, "2 A_1/2 matches the signless Laplacian")


def check_charpoly(suite: VerificationSuite) -> CheckResult:
    coeffs = laplacian_charpoly(suite.qm)
    claimed = quotient_laplacian_eigenvalues(suite.lp)
    missing = [value for value in claimed if not charpoly_vanishes_at(coeffs, value)]
    return _ok(not missing and len(claimed) == suite.qm.dimension,
               f"det(xI - L̄) = {coeffs}" + (f", nonzero at {missing}" if missing else ""))


def check_eigenvector_residuals(suite: VerificationSuite) -> CheckResult:
    params = suite.params
    bad = []
    for k in params.levels:
        if k == params.special_level:
            continue
        vector = laplacian_eigenvector(suite.lp, k)
        if any(value != 0 for value in eigenvector_residual(suite.qm, vector)):
            bad.append(k)
    return _ok(not bad, f"nonzero residual for k = {bad}" if bad else "exact residuals are zero")


# Checks on the explicit graph

def check_oracle_equivalence(suite: VerificationSuite) -> CheckResult:
    if suite.lp.order > Config.ORACLE_BUDGET:
        return CheckResult(name="", passed=True, skipped=True,
                           detail=f"n = {suite.lp.order} exceeds {Config.ORACLE_BUDGET}")
    ring = build_graph_by_ring(suite.params)
    rule = suite.graph
    same_labels = ring.labels == rule.labels
    same_edges = ring.edge_set() == rule.edge_set()
    return _ok(same_labels and same_edges, f"{ring.m} ring edges, {rule.m} rule edges")


def check_level_labels(suite: VerificationSuite) -> CheckResult:
    g = suite.graph
    wrong = sum(1 for label, level in zip(g.labels, g.levels) if mindeg(label) != level)
    return _ok(wrong == 0, f"{wrong} vertices with level != mindeg")


def check_degrees(suite: VerificationSuite) -> CheckResult:
    g, lp = suite.graph, suite.lp
    wrong = sum(1 for v in range(g.n) if g.degree(v) != lp.level(g.levels[v]).degree)
    return _ok(wrong == 0, f"{wrong} vertices with unexpected degree")


def check_handshake(suite: VerificationSuite) -> CheckResult:
    g, lp = suite.graph, suite.lp
    degree_sum = sum(degree for _, degree in g.graph.degree())
    return _ok(degree_sum == 2 * g.m and g.m == lp.edge_count,
               f"m = {g.m}, closed form {lp.edge_count}")


def check_equitability(suite: VerificationSuite) -> CheckResult:
    g, qm = suite.graph, suite.qm
    adjacency = integer_matrix(g, MatrixKind.ADJACENCY)
    levels = np.array(g.levels, dtype=np.int64) - 1
    membership = np.zeros((g.n, qm.dimension), dtype=np.int64)
    membership[np.arange(g.n), levels] = 1
    counts = adjacency @ membership
    expected = np.array(qm.q, dtype=np.int64).reshape(qm.dimension, qm.dimension)[levels]
    mismatches = int(np.count_nonzero(np.any(counts != expected, axis=1)))
    return _ok(mismatches == 0, f"{mismatches} vertices with neighbour counts off the quotient")


def _spectrum_check(suite: VerificationSuite, closed: Spectrum, kind: MatrixKind,
                    alpha: Optional[Fraction] = None) -> CheckResult:
    try:
        result = suite.dense(kind, alpha)
    except EigenSolveError as e:
        return _ok(False, str(e), best_residual=e.best_residual)
    comparison = compare_spectra(closed, result, suite.tol)
    data = comparison.to_dict()
    data.pop('passed')
    return _ok(comparison.passed, f"max deviation {comparison.max_deviation:.3e}", **data)


def check_laplacian_spectrum(suite: VerificationSuite) -> CheckResult:
    return _spectrum_check(suite, laplacian_spectrum(suite.lp), MatrixKind.LAPLACIAN)


def check_signless_spectrum(suite: VerificationSuite) -> CheckResult:
    return _spectrum_check(suite, signless_laplacian_spectrum(suite.lp), MatrixKind.SIGNLESS)


def check_adjacency_spectrum(suite: VerificationSuite) -> CheckResult:
    return _spectrum_check(suite, adjacency_spectrum(suite.lp), MatrixKind.ADJACENCY)


def check_distance_laplacian_spectrum(suite: VerificationSuite) -> CheckResult:
    return _spectrum_check(suite, distance_laplacian_spectrum(suite.lp), MatrixKind.DISTANCE_LAPLACIAN)


def check_a_alpha_spectra(suite: VerificationSuite) -> CheckResult:
    worst = 0.0
    for alpha in SAMPLE_ALPHAS:
        result = _spectrum_check(suite, a_alpha_spectrum(suite.lp, alpha), MatrixKind.A_ALPHA, alpha)
        if not result.passed:
            return _ok(False, f"alpha = {alpha}: {result.detail}")
        worst = max(worst, float(result.data['max_deviation']))
    return _ok(True, f"{len(SAMPLE_ALPHAS)} values of alpha, max deviation {worst:.3e}")


def check_fixed_eigenvectors(suite: VerificationSuite) -> CheckResult:
    g, lp = suite.graph, suite.lp
    adjacency = integer_matrix(g, MatrixKind.ADJACENCY).astype(float)
    degrees = adjacency.sum(axis=1)
    worst = 0.0
    for info in lp.levels:
        basis = fixed_eigenvector_basis(lp, info.index, g)
        if len(basis) != info.size - 1:
            return _ok(False, f"level {info.index}: {len(basis)} basis vectors, expected {info.size - 1}")
        if not basis:
            continue
        x = np.column_stack(basis)
        ax = adjacency @ x
        dx = degrees[:, None] * x
        for alpha in SAMPLE_ALPHAS:
            a = float(alpha)
            image = a * dx + (1.0 - a) * ax
            expected = float(fixed_eigenvalue(lp, info.index, alpha)) * x
            worst = max(worst, float(np.abs(image - expected).max()))
    scale = max(1.0, float(max(lp.degrees)))
    return _ok(worst <= suite.tol * scale, f"max residual {worst:.3e}")


def check_lifted_eigenvectors(suite: VerificationSuite) -> CheckResult:
    g, params = suite.graph, suite.params
    laplacian = integer_matrix(g, MatrixKind.LAPLACIAN)
    bad = []
    for k in params.levels:
        if k == params.special_level:
            continue
        vector = laplacian_eigenvector(suite.lp, k)
        x = integer_scaled(lift_to_graph(vector.coords, g))
        if not np.array_equal(laplacian @ x, vector.eigenvalue * x):
            bad.append(k)
    return _ok(not bad, f"lifted vectors fail for k = {bad}" if bad else "L x = λ x exactly")


def check_shared_eigenspaces(suite: VerificationSuite) -> CheckResult:
    g, lp = suite.graph, suite.lp
    laplacian = integer_matrix(g, MatrixKind.LAPLACIAN)
    distance_laplacian = integer_matrix(g, MatrixKind.DISTANCE_LAPLACIAN)
    n = g.n
    bad = []
    for info in lp.levels:
        members = g.level_members(info.index)
        if len(members) < 2:
            continue
        # columns of e_{v_1} - e_{v_j} images
        l_image = laplacian[:, members[:1]] - laplacian[:, members[1:]]
        d_image = distance_laplacian[:, members[:1]] - distance_laplacian[:, members[1:]]
        x = np.zeros((n, len(members) - 1), dtype=np.int64)
        x[members[0], :] = 1
        x[members[1:], np.arange(len(members) - 1)] = -1
        mu = lp.params.p ** info.index - 1
        if not (np.array_equal(l_image, mu * x) and np.array_equal(d_image, (2 * n - mu) * x)):
            bad.append(info.index)
    return _ok(not bad, f"levels {bad} are not shared eigenspaces" if bad else "L and distance Laplacian agree")


def check_distance_entries(suite: VerificationSuite) -> CheckResult:
    distances = integer_matrix(suite.graph, MatrixKind.DISTANCE)
    largest = int(distances.max()) if distances.size else 0
    expected = closed_form_diameter(suite.params)
    return _ok(largest == expected and not np.any(np.diag(distances)),
               f"largest distance {largest}, closed form {expected}")


def check_distance_laplacian_rows(suite: VerificationSuite) -> CheckResult:
    matrix = integer_matrix(suite.graph, MatrixKind.DISTANCE_LAPLACIAN)
    return _ok(not np.any(matrix.sum(axis=1)), "row sums of Tr - D are zero")


def check_structure(suite: VerificationSuite) -> CheckResult:
    report = structure_report(suite.graph, suite.lp)
    failed = [key for key, ok in report.agreement.items() if not ok]
    return _ok(not failed, f"disagreeing fields: {failed}" if failed else
               f"{len(report.agreement)} fields agree", not_computed=sorted(report.skipped))


def check_witness_sets(suite: VerificationSuite) -> CheckResult:
    witness = witness_sets(suite.graph, suite.lp)
    sizes_ok = (len(witness.clique) == closed_form_clique_number(suite.params)
                and len(witness.independent) == independent_levels_size(suite.params))
    return _ok(witness.clique_ok and witness.independent_ok and sizes_ok,
               f"|C| = {len(witness.clique)}, |L| = {len(witness.independent)}")


def check_eigensolver_sanity(suite: VerificationSuite) -> CheckResult:
    for kind in (MatrixKind.LAPLACIAN, MatrixKind.ADJACENCY):
        matrix = assemble_matrix(suite.graph, kind)
        sanity = eigensolver_sanity(matrix, suite.dense(kind), suite.tol)
        if not sanity['passed']:
            return _ok(False, f"{kind.value}: trace deviation {sanity['trace_deviation']:.3e}, "
                              f"Frobenius deviation {sanity['frobenius_deviation']:.3e}")
    return _ok(True, "trace and Frobenius identities hold")


def check_positive_semidefinite(suite: VerificationSuite) -> CheckResult:
    failing = [
        kind.value for kind in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS)
        if not is_positive_semidefinite(suite.dense(kind), suite.tol)
    ]
    return _ok(not failing, f"not PSD: {failing}" if failing else "L and Q(G) are PSD")


EXACT_CHECKS: List[Tuple[str, CheckFunction]] = [
    ('quotient_row_sums', check_quotient_row_sums),
    ('multiplicity_accounting', check_multiplicity_accounting),
    ('trace_identities', check_trace_identities),
    ('alpha_interpolation', check_interpolation),
    ('half_alpha_doubling', check_half_doubling),
    ('laplacian_charpoly', check_charpoly),
    ('eigenvector_residuals', check_eigenvector_residuals),
]

GRAPH_CHECKS: List[Tuple[str, CheckFunction]] = [
    ('oracle_equivalence', check_oracle_equivalence),
    ('level_labels', check_level_labels),
    ('degrees', check_degrees),
    ('handshake', check_handshake),
    ('equitability', check_equitability),
    ('laplacian_spectrum', check_laplacian_spectrum),
    ('signless_spectrum', check_signless_spectrum),
    ('adjacency_spectrum', check_adjacency_spectrum),
    ('distance_laplacian_spectrum', check_distance_laplacian_spectrum),
    ('a_alpha_spectra', check_a_alpha_spectra),
    ('fixed_eigenvectors', check_fixed_eigenvectors),
    ('lifted_eigenvectors', check_lifted_eigenvectors),
    ('shared_eigenspaces', check_shared_eigenspaces),
    ('distance_entries', check_distance_entries),
    ('distance_laplacian_rows', check_distance_laplacian_rows),
    ('structure', check_structure),
    ('witness_sets', check_witness_sets),
    ('eigensolver_sanity', check_eigensolver_sanity),
    ('positive_semidefinite', check_positive_semidefinite),
]


def verify(params: RingParams, tol: Optional[float] = None) -> VerificationReport:
    """Run the full verification suite for (p, c)"""
    return VerificationSuite(params, tol).run()
