"""
Run configuration models for zdg-spectra

Parsed and validated command-line options shared by every command.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from config import Config
from models.ring import RingParams
from models.spectrum_models import MatrixKind
from utils.validation import (
    ValidationError, parse_alpha, validate_choice, validate_tolerance
)


class ExitCode(IntEnum):
    """Process exit statuses"""
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    BUDGET_EXCEEDED = 3


class Method(Enum):
    """How a spectrum is obtained"""
    CLOSED = "closed"
    DENSE = "dense"
    BOTH = "both"


class OutputFormat(Enum):
    """Output format enumeration"""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"
    EDGELIST = "edgelist"
    DOT = "dot"


# Matrices the spectrum command accepts
SPECTRUM_MATRICES = (
    MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS,
    MatrixKind.A_ALPHA, MatrixKind.DISTANCE_LAPLACIAN,
)

REPORT_FORMATS = (OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT)
GRAPH_FORMATS = (OutputFormat.EDGELIST, OutputFormat.DOT)


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command invocation"""
    params: RingParams
    alpha: Optional[Fraction] = None
    matrix: MatrixKind = MatrixKind.LAPLACIAN
    method: Method = Method.CLOSED
    tolerance: float = Config.DEFAULT_TOLERANCE
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None
    exact: bool = False

    @classmethod
    def from_args(cls, p: Any, c: Any, alpha: Optional[str] = None, matrix: str = 'laplacian',
                  method: str = 'closed', tol: Any = None, output_format: str = 'json',
                  out: Optional[str] = None, exact: bool = False) -> 'RunConfig':
        """
        Build a RunConfig from raw option values

        Raises:
            ValidationError: If any value is invalid
        """
        params = RingParams(p, c)

        kind = MatrixKind(validate_choice(matrix, [k.value for k in SPECTRUM_MATRICES], 'matrix'))
        if kind == MatrixKind.A_ALPHA:
            parsed_alpha: Optional[Fraction] = parse_alpha(alpha)
        elif alpha is not None:
            parsed_alpha = parse_alpha(alpha)
        else:
            parsed_alpha = None

        parsed_method = Method(validate_choice(method, [m.value for m in Method], 'method'))
        if exact and (kind != MatrixKind.A_ALPHA or parsed_method != Method.CLOSED):
            raise ValidationError("--exact applies only to --matrix a-alpha with --method closed")

        tolerance = Config.DEFAULT_TOLERANCE if tol is None else validate_tolerance(tol)
        floor = np.finfo(float).eps * max(params.order, 1)
        if tolerance < floor:
            raise ValidationError(f"tolerance {tolerance:g} is below machine precision for n = {params.order} "
                                  f"(minimum {floor:.3e})")

        return cls(
            params=params,
            alpha=parsed_alpha,
            matrix=kind,
            method=parsed_method,
            exact=exact,
            tolerance=tolerance,
            output_format=OutputFormat(validate_choice(output_format, [f.value for f in OutputFormat], 'format')),
            output_path=out,
        )

    def require_format(self, *allowed: OutputFormat) -> None:
        if self.output_format not in allowed:
            names = ', '.join(f.value for f in allowed)
            raise ValidationError(f"Format {self.output_format.value} is not available here; use one of {names}")

    def to_dict(self) -> Dict[str, Any]:
        data = self.params.to_dict()
        if self.alpha is not None:
            data['alpha'] = f"{self.alpha.numerator}/{self.alpha.denominator}"
        return data


@dataclass
class CommandResult:
    """Rendered output of a command and the status to exit with"""
    output: str
    exit_code: ExitCode = ExitCode.SUCCESS
