"""
Closed-form spectra for zdg-spectra

Builds the (c-1) x (c-1) quotient matrices of the level partition and
assembles every spectrum of Γ(Z_p[x]/<x^c>) from them. Fixed parts are exact;
the quotient tail of the A_α family is solved numerically.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from config import Config
from models.numeric import quotient_matrix, symmetric_eigensolve
from models.spectrum_models import (
    AffineEigenvalue, EigenvalueKind, MatrixKind, Spectrum, SpectrumEntry
)
from models.structure import (
    GraphInstance, LevelKind, LevelPartition, adjacent_levels,
    build_graph_by_rule, closed_form_diameter
)

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


class ClosedFormError(Exception):
    """Custom exception for closed-form spectrum errors"""
    pass


@dataclass(frozen=True)
class QuotientMatrices:
    """D*, Q and the matrices derived from them"""
    partition: LevelPartition
    dstar: IntMatrix
    q: IntMatrix

    @property
    def dimension(self) -> int:
        return len(self.q)

    @property
    def lbar(self) -> IntMatrix:
        """L̄ = D* - Q"""
        return tuple(
            tuple(d - x for d, x in zip(drow, qrow))
            for drow, qrow in zip(self.dstar, self.q)
        )

    @property
    def signless(self) -> IntMatrix:
        """D* + Q"""
        return tuple(
            tuple(d + x for d, x in zip(drow, qrow))
            for drow, qrow in zip(self.dstar, self.q)
        )

    def b_of_alpha(self, alpha: Union[int, Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
        """B(α) = αD* + (1 - α)Q in exact arithmetic"""
        a = Fraction(alpha)
        return tuple(
            tuple(a * d + (1 - a) * x for d, x in zip(drow, qrow))
            for drow, qrow in zip(self.dstar, self.q)
        )

    def to_dict(self) -> dict:
        return {
            'dstar': [list(row) for row in self.dstar],
            'q': [list(row) for row in self.q],
            'lbar': [list(row) for row in self.lbar],
        }


@dataclass(frozen=True)
class LaplacianEigenvector:
    """Eigenvector of L̄ for the eigenvalue p^k - 1"""
    k: int
    eigenvalue: int
    coords: Tuple[Fraction, ...]
    scalar: Fraction


@dataclass(frozen=True)
class GraphEnergy:
    value: Union[Fraction, float]
    flagged: bool


def build_quotient(lp: LevelPartition) -> QuotientMatrices:
    """
    Quotient matrices of the level partition

    Q_ii is n_i - 1 on clique levels and 0 on independent ones; off the
    diagonal Q_ij = n_j whenever levels i and j are joined.

    Args:
        lp: Level partition

    Returns:
        D* and Q
    """
    params = lp.params
    size = params.c - 1
    q = []
    for i in params.levels:
        row = []
        for j in params.levels:
            if i == j:
                info = lp.level(i)
                row.append(info.size - 1 if info.kind == LevelKind.CLIQUE else 0)
            elif adjacent_levels(i, j, params):
                row.append(lp.level(j).size)
            else:
                row.append(0)
        q.append(tuple(row))

    dstar = tuple(
        tuple(lp.level(i + 1).degree if i == j else 0 for j in range(size))
        for i in range(size)
    )
    return QuotientMatrices(partition=lp, dstar=dstar, q=tuple(q))


def _fixed_eigenvalue_parts(lp: LevelPartition) -> List[Tuple[int, int, int]]:
    """(slope, intercept, multiplicity) of the level-supported eigenvalues"""
    parts = []
    for info in lp.levels:
        multiplicity = info.size - 1
        if multiplicity < 1:
            continue
        intercept = -1 if info.kind == LevelKind.CLIQUE else 0
        parts.append((lp.params.p ** info.index - 1, intercept, multiplicity))
    return parts


def a_alpha_fixed_part(lp: LevelPartition) -> List[AffineEigenvalue]:
    """α(p^i - 1) - [2i >= c] with multiplicity n_i - 1, zero multiplicities omitted"""
    return [
        AffineEigenvalue(slope=slope, intercept=intercept, multiplicity=multiplicity)
        for slope, intercept, multiplicity in _fixed_eigenvalue_parts(lp)
    ]


def fixed_eigenvalue(lp: LevelPartition, i: int, alpha: Union[int, Fraction]) -> Fraction:
    """λ_i(α) = α(p^i - 1) - [2i >= c]"""
    info = lp.level(i)
    intercept = -1 if info.kind == LevelKind.CLIQUE else 0
    return Fraction(alpha) * (lp.params.p ** i - 1) + intercept


def _quotient_tail(qm: QuotientMatrices, kind: MatrixKind,
                   alpha: Optional[Fraction] = None) -> Tuple[List[SpectrumEntry], float]:
    symmetric = quotient_matrix(qm, kind, alpha)
    result = symmetric_eigensolve(symmetric, Config.DEFAULT_TOLERANCE)
    entries = [SpectrumEntry.numeric(value) for value in result.eigenvalues]
    return entries, result.residual_bound


def a_alpha_spectrum(lp: LevelPartition, alpha: Union[int, Fraction], exact: bool = False) -> Spectrum:
    """
    Spectrum of A_α = αD + (1 - α)A

    Args:
        lp: Level partition
        alpha: α in [0, 1]
        exact: Leave the c - 1 quotient eigenvalues as the symbolic entry
            "roots of B(alpha)" instead of solving for them

    Returns:
        Affine fixed part plus the eigenvalues of B(α)

    Raises:
        ClosedFormError: If α lies outside [0, 1]
    """
    alpha = Fraction(alpha)
    if alpha < 0 or alpha > 1:
        raise ClosedFormError(f"alpha must lie in [0, 1], got {alpha}")

    entries = [SpectrumEntry.affine(eigenvalue) for eigenvalue in a_alpha_fixed_part(lp)]
    residual: Optional[float] = None

    if exact:
        entries.append(SpectrumEntry(f"roots of B({alpha})", lp.params.c - 1, EigenvalueKind.SYMBOLIC))
    else:
        tail, residual = _quotient_tail(build_quotient(lp), MatrixKind.A_ALPHA, alpha)
        entries.extend(tail)

    return Spectrum.build(MatrixKind.A_ALPHA, entries, lp.order, alpha=alpha, residual_bound=residual)


def adjacency_spectrum(lp: LevelPartition) -> Spectrum:
    """0 on independent levels, -1 on clique levels, plus σ(Q)"""
    entries = [
        SpectrumEntry.exact(intercept, multiplicity)
        for _, intercept, multiplicity in _fixed_eigenvalue_parts(lp)
    ]
    tail, residual = _quotient_tail(build_quotient(lp), MatrixKind.ADJACENCY)
    return Spectrum.build(MatrixKind.ADJACENCY, entries + tail, lp.order, residual_bound=residual)


def signless_laplacian_spectrum(lp: LevelPartition) -> Spectrum:
    """p^i - 1 on independent levels, p^i - 3 on clique levels, plus σ(D* + Q)"""
    entries = [
        SpectrumEntry.exact(slope + 2 * intercept, multiplicity)
        for slope, intercept, multiplicity in _fixed_eigenvalue_parts(lp)
    ]
    tail, residual = _quotient_tail(build_quotient(lp), MatrixKind.SIGNLESS)
    return Spectrum.build(MatrixKind.SIGNLESS, entries + tail, lp.order, residual_bound=residual)


def laplacian_spectrum(lp: LevelPartition) -> Spectrum:
    """
    Exact Laplacian spectrum

    {0} together with p^i - 1 of multiplicity n_i for i != s and p^s - 1 of
    multiplicity n_s - 1, where s = floor(c/2).
    """
    params = lp.params
    s = params.special_level
    entries = [SpectrumEntry.exact(0, 1)]
    for info in lp.levels:
        multiplicity = info.size - 1 if info.index == s else info.size
        entries.append(SpectrumEntry.exact(params.p ** info.index - 1, multiplicity))
    return Spectrum.build(MatrixKind.LAPLACIAN, entries, lp.order)


def laplacian_eigenvector(lp: LevelPartition, k: int) -> LaplacianEigenvector:
    """
    Explicit eigenvector of L̄ for p^k - 1

    For k < s the vector carries -Γ_k at level k and 1 on levels k+1..c-1-k,
    Γ_k = (1 - p^(2k-c+1)) / (p - 1). For k > s it carries -δ_k on levels
    c-k..k-1 and 1 at level k, δ_k = (p - 1) / (p^(2k-c+1) - p).

    Raises:
        ClosedFormError: If k = s or k is not a level
    """
    params = lp.params
    p, c, s = params.p, params.c, params.special_level
    if not 1 <= k <= c - 1:
        raise ClosedFormError(f"Level {k} outside 1..{c - 1}")
    if k == s:
        raise ClosedFormError(f"Level {k} is the special level s; p^s - 1 has no quotient eigenvector")

    coords = [Fraction(0)] * (c - 1)
    exponent = 2 * k - c + 1
    if k < s:
        scalar = (1 - Fraction(p) ** exponent) / (p - 1)
        coords[k - 1] = -scalar
        for j in range(k + 1, c - k):
            coords[j - 1] = Fraction(1)
    else:
        scalar = Fraction(p - 1, p ** exponent - p)
        for j in range(c - k, k):
            coords[j - 1] = -scalar
        coords[k - 1] = Fraction(1)

    return LaplacianEigenvector(k=k, eigenvalue=p ** k - 1, coords=tuple(coords), scalar=scalar)


def eigenvector_residual(qm: QuotientMatrices, vector: LaplacianEigenvector) -> Tuple[Fraction, ...]:
    """L̄v - λv in exact arithmetic"""
    return tuple(
        sum((entry * x for entry, x in zip(row, vector.coords)), Fraction(0)) - vector.eigenvalue * vi
        for row, vi in zip(qm.lbar, vector.coords)
    )


def laplacian_charpoly(qm: QuotientMatrices) -> List[int]:
    """
    Coefficients of det(xI - L̄), highest degree first

    Uses division-free integer arithmetic, so the result is exact.
    """
    size = qm.dimension
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in qm.lbar], (size, size), ZZ)
    return [int(coefficient) for coefficient in matrix.charpoly()]


def charpoly_value(coeffs: Sequence[int], value: Union[int, Fraction]) -> Fraction:
    """Horner evaluation"""
    result = Fraction(0)
    for coefficient in coeffs:
        result = result * value + coefficient
    return result


def charpoly_vanishes_at(coeffs: Sequence[int], value: Union[int, Fraction]) -> bool:
    return charpoly_value(coeffs, value) == 0


def quotient_laplacian_eigenvalues(lp: LevelPartition) -> List[int]:
    """0 together with p^k - 1 for every level k != s"""
    params = lp.params
    return [0] + [params.p ** k - 1 for k in params.levels if k != params.special_level]


def distance_laplacian_spectrum(lp: LevelPartition) -> Spectrum:
    """
    Distance Laplacian spectrum of a graph of diameter at most 2

    0 together with 2n - λ for each nonzero Laplacian eigenvalue λ, keeping
    multiplicities.

    Raises:
        ClosedFormError: If the diameter exceeds 2
    """
    diameter = closed_form_diameter(lp.params)
    if diameter > 2:
        raise ClosedFormError(f"Distance Laplacian transform needs diameter <= 2, got {diameter}")

    n = lp.order
    entries = [SpectrumEntry.exact(0, 1)]
    for entry in laplacian_spectrum(lp).entries:
        if entry.value == 0:
            entries.append(SpectrumEntry.exact(2 * n, entry.multiplicity - 1))
        else:
            entries.append(SpectrumEntry.exact(2 * n - entry.value, entry.multiplicity))
    return Spectrum.build(MatrixKind.DISTANCE_LAPLACIAN, entries, n)


def graph_energy(spec: Spectrum) -> GraphEnergy:
    """
    Σ multiplicity * |λ|

    Exact when every entry is exact. Spectra of other matrices are accepted
    and flagged.

    Raises:
        ClosedFormError: If the spectrum has symbolic entries
    """
    if spec.is_symbolic:
        raise ClosedFormError("Energy of a symbolic spectrum is undefined")

    flagged = spec.matrix != MatrixKind.ADJACENCY
    if flagged:
        logger.warning(f"Energy requested for a {spec.matrix.value} spectrum; "
                       f"energy is defined for adjacency eigenvalues")

    if all(entry.kind == EigenvalueKind.EXACT for entry in spec.entries):
        value: Union[Fraction, float] = sum(
            (abs(entry.value) * entry.multiplicity for entry in spec.entries), Fraction(0)
        )
    else:
        value = math.fsum(abs(float(entry.evaluate(spec.alpha))) * entry.multiplicity
                          for entry in spec.entries)
    return GraphEnergy(value=value, flagged=flagged)


def spectral_radius(spec: Spectrum) -> Union[Fraction, float]:
    """Largest eigenvalue"""
    if spec.is_symbolic:
        raise ClosedFormError("Spectral radius of a symbolic spectrum is undefined")
    if not spec.entries:
        raise ClosedFormError("Empty spectrum")
    return spec.entries[0].evaluate(spec.alpha)


def fixed_eigenvector_basis(lp: LevelPartition, i: int,
                            g: Optional[GraphInstance] = None) -> List[np.ndarray]:
    """
    Difference basis e_{v_1} - e_{v_j} of the sum-zero vectors on level i

    Args:
        lp: Level partition
        i: Level index
        g: Explicit graph; built from the level rule when omitted

    Returns:
        n_i - 1 vectors of length n (empty when n_i = 1)
    """
    info = lp.level(i)
    if info.size < 2:
        return []

    g = g if g is not None else build_graph_by_rule(lp.params)
    members = g.level_members(i)
    basis = []
    for v in members[1:]:
        vector = np.zeros(g.n)
        vector[members[0]] = 1.0
        vector[v] = -1.0
        basis.append(vector)
    return basis


def lift_to_graph(coords: Sequence[Union[int, Fraction]], g: GraphInstance) -> List[Fraction]:
    """Full-length vector taking the value coords[i - 1] on every vertex of level i"""
    if len(coords) != g.params.c - 1:
        raise ClosedFormError(f"Expected {g.params.c - 1} level coordinates, got {len(coords)}")
    return [Fraction(coords[level - 1]) for level in g.levels]


def integer_scaled(vector: Sequence[Fraction]) -> np.ndarray:
    """Multiply a rational vector by the lcm of its denominators"""
    scale = 1
    for x in vector:
        scale = math.lcm(scale, x.denominator)
    return np.array([int(x * scale) for x in vector], dtype=np.int64)
