"""
Dense numeric oracle for zdg-spectra

Assembles the graph matrices of an explicit graph and eigensolves them densely.
The closed forms are validated against these results.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import scipy.linalg
from scipy.sparse.csgraph import connected_components, shortest_path

from config import Config
from models.spectrum_models import (
    EigenResult, MatrixKind, Spectrum, SpectrumComparison
)
from models.structure import GraphInstance

if TYPE_CHECKING:
    from models.closed_form import QuotientMatrices

logger = logging.getLogger(__name__)


class NumericError(Exception):
    """Custom exception for numeric oracle errors"""
    pass


class EigenSolveError(NumericError):
    """Raised when an eigensolve misses its residual bound"""

    def __init__(self, message: str, best_residual: float):
        super().__init__(message)
        self.best_residual = best_residual


class DisconnectedGraphError(NumericError):
    """Raised when distances are requested on a disconnected graph"""

    def __init__(self, message: str, components: int):
        super().__init__(message)
        self.components = components


class DenseBudgetError(NumericError):
    """Raised when a matrix is larger than the dense budget"""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class SpectrumComparisonError(NumericError):
    """Raised when two spectra do not even have the same size"""
    pass


INTEGER_KINDS = (
    MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS,
    MatrixKind.DISTANCE, MatrixKind.DISTANCE_LAPLACIAN,
)


@dataclass
class DenseSymmetricMatrix:
    """Symmetric float matrix tagged with what it represents"""
    kind: MatrixKind
    entries: np.ndarray
    alpha: Optional[Fraction] = None

    def __post_init__(self):
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise NumericError(f"{self.kind.value} matrix must be square, got {self.entries.shape}")
        if not np.array_equal(self.entries, self.entries.T):
            raise NumericError(f"{self.kind.value} matrix is not symmetric")

    @property
    def dimension(self) -> int:
        return int(self.entries.shape[0])

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries, 'fro'))


def check_dense_budget(n: int) -> None:
    if n > Config.DENSE_BUDGET:
        raise DenseBudgetError(
            f"n = {n} exceeds the dense budget of {Config.DENSE_BUDGET} (set ZDG_DENSE_BUDGET to raise it)",
            Config.DENSE_BUDGET,
        )


def distance_matrix(g: GraphInstance) -> np.ndarray:
    """
    All-pairs BFS distances as an integer matrix

    Raises:
        DisconnectedGraphError: If the graph has more than one component
    """
    adjacency = nx.to_scipy_sparse_array(g.graph, nodelist=range(g.n), format='csr')
    components, _ = connected_components(adjacency, directed=False)
    if components > 1:
        raise DisconnectedGraphError(
            f"Graph for p={g.params.p}, c={g.params.c} has {components} components; "
            f"distances are undefined",
            components,
        )
    distances = shortest_path(adjacency, directed=False, unweighted=True)
    return distances.astype(np.int64)


def integer_matrix(g: GraphInstance, kind: MatrixKind) -> np.ndarray:
    """
    Exact integer form of an integer-valued graph matrix

    Args:
        g: Explicit graph
        kind: One of the integer kinds

    Returns:
        n x n int64 array
    """
    check_dense_budget(g.n)

    if kind in (MatrixKind.DISTANCE, MatrixKind.DISTANCE_LAPLACIAN):
        distances = distance_matrix(g)
        if kind == MatrixKind.DISTANCE:
            return distances
        transmissions = distances.sum(axis=1)
        return np.diag(transmissions) - distances

    adjacency = nx.to_numpy_array(g.graph, nodelist=range(g.n), dtype=np.int64)
    degrees = np.diag(adjacency.sum(axis=1))

    if kind == MatrixKind.ADJACENCY:
        return adjacency
    if kind == MatrixKind.LAPLACIAN:
        return degrees - adjacency
    if kind == MatrixKind.SIGNLESS:
        return degrees + adjacency

    raise NumericError(f"{kind.value} is not an integer matrix kind")


def assemble_matrix(g: GraphInstance, kind: MatrixKind,
                    alpha: Optional[Fraction] = None) -> DenseSymmetricMatrix:
    """
    Assemble one of the graph matrices of g

    Args:
        g: Explicit graph
        kind: Matrix to build
        alpha: Required for, and only for, MatrixKind.A_ALPHA

    Returns:
        The dense symmetric matrix

    Raises:
        NumericError: If alpha is missing or superfluous
        DisconnectedGraphError: For distance kinds on a disconnected graph
        DenseBudgetError: If n exceeds the dense budget
    """
    if (kind == MatrixKind.A_ALPHA) != (alpha is not None):
        raise NumericError("alpha must be supplied exactly when kind is a-alpha")

    if kind == MatrixKind.A_ALPHA:
        adjacency = integer_matrix(g, MatrixKind.ADJACENCY).astype(float)
        degrees = np.diag(adjacency.sum(axis=1))
        a = float(alpha)
        return DenseSymmetricMatrix(kind, a * degrees + (1.0 - a) * adjacency, Fraction(alpha))

    if kind == MatrixKind.QUOTIENT:
        raise NumericError("Quotient matrices are built with symmetrize_quotient")

    return DenseSymmetricMatrix(kind, integer_matrix(g, kind).astype(float))


def symmetrize_quotient(matrix: np.ndarray, alpha: Optional[Fraction] = None) -> DenseSymmetricMatrix:
    """
    Symmetric matrix similar to a quotient matrix of an equitable partition

    A quotient M with M_ij = c * n_j on joined levels is similar to S with
    S_ij = c * sqrt(n_i n_j) through N^(1/2), N = diag(n_i). S is formed as
    sign(M_ij) sqrt(M_ij M_ji), which is exactly symmetric.
    """
    matrix = np.asarray(matrix, dtype=float)
    product = matrix * matrix.T
    if np.any(product < 0):
        raise NumericError("Quotient has off-diagonal entries of opposite sign")
    symmetric = np.sign(matrix + matrix.T) * np.sqrt(product)
    np.fill_diagonal(symmetric, np.diag(matrix))
    return DenseSymmetricMatrix(MatrixKind.QUOTIENT, symmetric, alpha)


def quotient_matrix(qm: 'QuotientMatrices', kind: MatrixKind,
                    alpha: Optional[Fraction] = None) -> DenseSymmetricMatrix:
    """
    Symmetrised quotient of one graph matrix

    Args:
        qm: Quotient matrices of the level partition
        kind: adjacency (Q), laplacian (L̄), signless (D* + Q) or a-alpha (B(α))
        alpha: Required for, and only for, MatrixKind.A_ALPHA

    Returns:
        N^(1/2) M N^(-1/2) for the selected quotient M
    """
    if (kind == MatrixKind.A_ALPHA) != (alpha is not None):
        raise NumericError("alpha must be supplied exactly when kind is a-alpha")

    if kind == MatrixKind.ADJACENCY:
        matrix = qm.q
    elif kind == MatrixKind.LAPLACIAN:
        matrix = qm.lbar
    elif kind == MatrixKind.SIGNLESS:
        matrix = qm.signless
    elif kind == MatrixKind.A_ALPHA:
        matrix = qm.b_of_alpha(alpha)
    else:
        raise NumericError(f"No quotient matrix for {kind.value}")

    size = len(matrix)
    entries = np.array([[float(x) for x in row] for row in matrix], dtype=float).reshape(size, size)
    return symmetrize_quotient(entries, None if alpha is None else Fraction(alpha))


def symmetric_eigensolve(M: DenseSymmetricMatrix, tol: Optional[float] = None) -> EigenResult:
    """
    All eigenvalues of a symmetric matrix with a residual certificate

    Uses the LAPACK driver behind scipy.linalg.eigh, so the iteration count is
    reported as 0. The residual bound is max_i ||M v_i - λ_i v_i|| / max(1, ||M||).

    Args:
        M: Symmetric matrix
        tol: Residual tolerance (default Config.DEFAULT_TOLERANCE)

    Returns:
        Eigenvalues in descending order with the residual bound

    Raises:
        DenseBudgetError: If M is larger than the dense budget
        EigenSolveError: If the solver fails or misses the bound
    """
    tol = Config.DEFAULT_TOLERANCE if tol is None else tol
    n = M.dimension
    check_dense_budget(n)

    if tol < np.finfo(float).eps * max(n, 1):
        raise NumericError(f"Tolerance {tol} is below machine precision for n = {n}")

    try:
        values, vectors = scipy.linalg.eigh(M.entries)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigenSolveError(f"Eigensolver failed on {M.kind.value} matrix: {e}", float('inf'))

    norm = float(np.max(np.abs(values))) if n else 0.0
    if n:
        residuals = np.linalg.norm(M.entries @ vectors - vectors * values, axis=0)
        bound = float(residuals.max()) / max(1.0, norm)
    else:
        bound = 0.0

    if bound > tol:
        raise EigenSolveError(
            f"Residual bound {bound:.3e} exceeds tolerance {tol:.3e} for {M.kind.value} matrix",
            bound,
        )

    logger.debug(f"Eigensolved {M.kind.value} matrix of size {n}, residual {bound:.2e}")
    return EigenResult(eigenvalues=values[::-1].copy(), residual_bound=bound, iterations=0, norm=norm)


def eigensolver_sanity(M: DenseSymmetricMatrix, result: EigenResult, tol: float) -> Dict[str, Any]:
    """
    Trace and Frobenius identities of an eigensolve

    Returns:
        Deviations, their bounds and an overall 'passed' flag
    """
    n = M.dimension
    scale = max(1.0, result.norm)
    trace_deviation = abs(float(result.eigenvalues.sum()) - M.trace)
    frobenius_deviation = abs(float((result.eigenvalues ** 2).sum()) - M.frobenius_norm ** 2)
    trace_bound = tol * n * scale
    frobenius_bound = tol * n * scale ** 2
    return {
        'trace_deviation': trace_deviation,
        'trace_bound': trace_bound,
        'frobenius_deviation': frobenius_deviation,
        'frobenius_bound': frobenius_bound,
        'passed': trace_deviation <= trace_bound and frobenius_deviation <= frobenius_bound,
    }


def is_positive_semidefinite(result: EigenResult, tol: float) -> bool:
    if result.dimension == 0:
        return True
    return float(result.eigenvalues.min()) >= -tol * max(1.0, result.norm)


def cluster_eigenvalues(values: Sequence[float], gap: float) -> List[Tuple[float, int]]:
    """
    Group descending eigenvalues whose neighbours are within gap

    Returns:
        (mean value, multiplicity) per cluster
    """
    clusters: List[List[float]] = []
    for value in values:
        if clusters and clusters[-1][-1] - value <= gap:
            clusters[-1].append(value)
        else:
            clusters.append([value])
    return [(float(np.mean(cluster)), len(cluster)) for cluster in clusters]


def compare_spectra(closed: Spectrum, numeric: EigenResult, tol: Optional[float] = None) -> SpectrumComparison:
    """
    Match a closed-form spectrum against a dense eigensolve

    Both sides are sorted and paired in order; multiplicities are compared
    cluster by cluster with the gap Config.CLUSTER_GAP * max(1, ||M||).

    Args:
        closed: Closed-form spectrum (not symbolic)
        numeric: Dense eigensolver result
        tol: Allowed maximum absolute deviation

    Returns:
        The comparison report

    Raises:
        SpectrumComparisonError: If the total multiplicities differ
    """
    tol = Config.DEFAULT_TOLERANCE if tol is None else tol

    if closed.total_multiplicity != numeric.dimension:
        raise SpectrumComparisonError(
            f"Closed-form {closed.matrix.value} spectrum has {closed.total_multiplicity} eigenvalues, "
            f"dense solve has {numeric.dimension}"
        )

    closed_values = np.array(closed.expanded(), dtype=float)
    numeric_values = np.sort(numeric.eigenvalues)[::-1]
    deviation = float(np.max(np.abs(closed_values - numeric_values))) if closed_values.size else 0.0

    gap = Config.CLUSTER_GAP * max(1.0, numeric.norm)
    closed_clusters = cluster_eigenvalues(closed_values, gap)
    numeric_clusters = cluster_eigenvalues(numeric_values, gap)
    agreement = (
        len(closed_clusters) == len(numeric_clusters)
        and all(a[1] == b[1] for a, b in zip(closed_clusters, numeric_clusters))
    )

    comparison = SpectrumComparison(
        max_deviation=deviation,
        tolerance=tol,
        multiplicity_agreement=agreement,
        closed_clusters=closed_clusters,
        numeric_clusters=numeric_clusters,
    )
    if not comparison.passed:
        logger.warning(f"{closed.matrix.value} spectrum mismatch: deviation {deviation:.3e}, "
                       f"multiplicities agree: {agreement}")
    return comparison
