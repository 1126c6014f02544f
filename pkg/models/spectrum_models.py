"""
Spectrum data models for zdg-spectra

Defines data structures for eigenvalues, spectra, eigensolver results and
spectrum comparisons.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

# Numeric eigenvalues closer than this to zero are printed as 0
ZERO_SNAP = 1e-10


class SpectrumError(Exception):
    """Custom exception for malformed spectra"""
    pass


class MatrixKind(Enum):
    """Which graph matrix a spectrum or dense matrix describes"""
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"
    A_ALPHA = "a-alpha"
    DISTANCE = "distance"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    QUOTIENT = "quotient"


class EigenvalueKind(Enum):
    """How an eigenvalue is represented"""
    EXACT = "exact"
    AFFINE = "affine"
    NUMERIC = "numeric"
    SYMBOLIC = "symbolic"


_KIND_ORDER = {
    EigenvalueKind.EXACT: 0,
    EigenvalueKind.AFFINE: 1,
    EigenvalueKind.NUMERIC: 2,
    EigenvalueKind.SYMBOLIC: 3,
}


@dataclass(frozen=True)
class AffineEigenvalue:
    """Eigenvalue slope * α + intercept with its multiplicity"""
    slope: int
    intercept: int
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise SpectrumError(f"Multiplicity must be positive, got {self.multiplicity}")

    def at(self, alpha: Fraction) -> Fraction:
        return self.slope * Fraction(alpha) + self.intercept

    def label(self) -> str:
        if self.slope == 0:
            return str(self.intercept)
        term = 'alpha' if self.slope == 1 else f"{self.slope}*alpha"
        if self.intercept == 0:
            return term
        sign = '-' if self.intercept < 0 else '+'
        return f"{term}{sign}{abs(self.intercept)}"


@dataclass(frozen=True)
class SpectrumEntry:
    """One (eigenvalue, multiplicity) pair"""
    value: Union[Fraction, float, AffineEigenvalue, str]
    multiplicity: int
    kind: EigenvalueKind

    @classmethod
    def exact(cls, value: Union[int, Fraction], multiplicity: int) -> 'SpectrumEntry':
        return cls(Fraction(value), multiplicity, EigenvalueKind.EXACT)

    @classmethod
    def numeric(cls, value: float, multiplicity: int = 1) -> 'SpectrumEntry':
        return cls(float(value), multiplicity, EigenvalueKind.NUMERIC)

    @classmethod
    def affine(cls, eigenvalue: AffineEigenvalue) -> 'SpectrumEntry':
        return cls(eigenvalue, eigenvalue.multiplicity, EigenvalueKind.AFFINE)

    def evaluate(self, alpha: Optional[Fraction] = None) -> Optional[Union[Fraction, float]]:
        """Numeric value of the entry, None for symbolic entries"""
        if self.kind == EigenvalueKind.AFFINE:
            if alpha is None:
                raise SpectrumError("Affine eigenvalue needs alpha to be evaluated")
            return self.value.at(alpha)
        if self.kind == EigenvalueKind.SYMBOLIC:
            return None
        return self.value

    def label(self, digits: int = 12) -> str:
        if self.kind == EigenvalueKind.AFFINE:
            return self.value.label()
        if self.kind == EigenvalueKind.SYMBOLIC:
            return str(self.value)
        return format_number(self.value, digits)


def format_number(value: Union[int, Fraction, float, np.floating], digits: int = 12) -> str:
    """Exact values as integer/rational strings, floats with fixed significant digits"""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if abs(value) < ZERO_SNAP:
        return "0"
    return f"{value:.{digits}g}"


@dataclass
class Spectrum:
    """Multiset of eigenvalues of one graph matrix"""
    matrix: MatrixKind
    entries: List[SpectrumEntry]
    dimension: int
    alpha: Optional[Fraction] = None
    residual_bound: Optional[float] = None

    @classmethod
    def build(cls, matrix: MatrixKind, entries: List[SpectrumEntry], dimension: int,
              alpha: Optional[Fraction] = None, residual_bound: Optional[float] = None) -> 'Spectrum':
        """
        Normalize and sort a list of entries

        Zero multiplicities are dropped, repeated exact values are merged and
        entries are ordered by descending value at alpha (ties: larger
        multiplicity first); symbolic entries come last.

        Raises:
            SpectrumError: If the multiplicities do not add up to dimension
        """
        merged: Dict[Fraction, int] = {}
        others: List[SpectrumEntry] = []
        for entry in entries:
            if entry.multiplicity == 0:
                continue
            if entry.multiplicity < 0:
                raise SpectrumError(f"Negative multiplicity {entry.multiplicity}")
            if entry.kind == EigenvalueKind.EXACT:
                merged[entry.value] = merged.get(entry.value, 0) + entry.multiplicity
            else:
                others.append(entry)

        normalized = [SpectrumEntry.exact(value, count) for value, count in merged.items()] + others
        spectrum = cls(matrix=matrix, entries=normalized, dimension=dimension,
                       alpha=alpha, residual_bound=residual_bound)
        spectrum.entries.sort(key=spectrum._sort_key)

        if spectrum.total_multiplicity != dimension:
            raise SpectrumError(
                f"{matrix.value} spectrum has total multiplicity {spectrum.total_multiplicity}, "
                f"expected {dimension}"
            )
        return spectrum

    def _sort_key(self, entry: SpectrumEntry) -> Tuple:
        value = entry.evaluate(self.alpha)
        if value is None:
            return (1, 0, -entry.multiplicity, _KIND_ORDER[entry.kind], entry.label())
        return (0, -value, -entry.multiplicity, _KIND_ORDER[entry.kind], entry.label())

    @property
    def total_multiplicity(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    @property
    def is_symbolic(self) -> bool:
        return any(entry.kind == EigenvalueKind.SYMBOLIC for entry in self.entries)

    def is_integral(self) -> bool:
        """True when every entry is an exact integer"""
        return all(
            entry.kind == EigenvalueKind.EXACT and entry.value.denominator == 1
            for entry in self.entries
        )

    def multiplicity_of(self, value: Union[int, Fraction]) -> int:
        """Multiplicity of an exact value (0 when absent)"""
        target = Fraction(value)
        return sum(
            entry.multiplicity for entry in self.entries
            if entry.kind == EigenvalueKind.EXACT and entry.value == target
        )

    def as_dict(self) -> Dict[Fraction, int]:
        """Exact entries as {value: multiplicity}"""
        return {
            entry.value: entry.multiplicity
            for entry in self.entries if entry.kind == EigenvalueKind.EXACT
        }

    def expanded(self) -> List[float]:
        """All eigenvalues as floats, with repetition, in descending order"""
        if self.is_symbolic:
            raise SpectrumError("A symbolic spectrum cannot be expanded numerically")
        values: List[float] = []
        for entry in self.entries:
            values.extend([float(entry.evaluate(self.alpha))] * entry.multiplicity)
        return sorted(values, reverse=True)

    def exact_sum(self) -> Optional[Fraction]:
        """Sum with multiplicity when no entry is numeric or symbolic"""
        total = Fraction(0)
        for entry in self.entries:
            if entry.kind in (EigenvalueKind.NUMERIC, EigenvalueKind.SYMBOLIC):
                return None
            total += entry.evaluate(self.alpha) * entry.multiplicity
        return total

    def to_dict(self, digits: int = 12) -> Dict[str, Any]:
        rows = []
        for entry in self.entries:
            row: Dict[str, Any] = {
                'eigenvalue': entry.label(digits),
                'multiplicity': entry.multiplicity,
                'kind': entry.kind.value,
            }
            if entry.kind == EigenvalueKind.AFFINE and self.alpha is not None:
                row['value'] = format_number(entry.evaluate(self.alpha), digits)
            rows.append(row)
        return {
            'matrix': self.matrix.value,
            'alpha': None if self.alpha is None else format_number(self.alpha),
            'dimension': self.dimension,
            'total_multiplicity': self.total_multiplicity,
            'integral': self.is_integral(),
            'entries': rows,
        }


@dataclass
class EigenResult:
    """Output of the dense symmetric eigensolver"""
    eigenvalues: np.ndarray  # descending
    residual_bound: float
    iterations: int
    norm: float

    @property
    def dimension(self) -> int:
        return int(self.eigenvalues.shape[0])


@dataclass
class SpectrumComparison:
    """Closed-form spectrum matched against a dense eigensolve"""
    max_deviation: float
    tolerance: float
    multiplicity_agreement: bool
    closed_clusters: List[Tuple[float, int]] = field(default_factory=list)
    numeric_clusters: List[Tuple[float, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance and self.multiplicity_agreement

    def to_dict(self, digits: int = 12) -> Dict[str, Any]:
        return {
            'max_deviation': f"{self.max_deviation:.3e}",
            'tolerance': f"{self.tolerance:.3e}",
            'multiplicity_agreement': self.multiplicity_agreement,
            'clusters': len(self.numeric_clusters),
            'passed': self.passed,
        }
