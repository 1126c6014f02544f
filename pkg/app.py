#!/usr/bin/env python3
"""
zdg-spectra - Zero-Divisor Graph Spectra

Command-line tool that builds the zero-divisor graph of Z_p[x]/<x^c>, computes
its spectra from closed-form formulas and verifies them against brute-force
construction and dense eigensolving.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from config import Config
from commands.export_command import cmd_export
from commands.spectrum_command import cmd_spectrum
from commands.structure_command import cmd_structure
from commands.verify_command import cmd_verify
from models.closed_form import ClosedFormError
from models.numeric import DenseBudgetError, NumericError
from models.ring import EnumerationBudgetError, RingError
from models.run_config import CommandResult, ExitCode, RunConfig
from models.spectrum_models import SpectrumError
from models.structure import StructureError
from utils.validation import ValidationError

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    'structure': cmd_structure,
    'spectrum': cmd_spectrum,
    'verify': cmd_verify,
    'export': cmd_export,
}


def configure_logging() -> None:
    """Log to standard error so standard output stays deterministic"""
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s',
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='zdg-spectra',
        description='Spectra of the zero-divisor graph of Z_p[x]/<x^c>',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_command(name: str, help_text: str, default_format: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('--p', type=int, required=True, help='prime modulus of the coefficients')
        sub.add_argument('--c', type=int, required=True, help='truncation exponent, c >= 2')
        sub.add_argument('--format', dest='output_format', default=default_format,
                         help='output format (default: %(default)s)')
        sub.add_argument('--out', default=None, help='write to this file instead of standard output')
        return sub

    add_command('structure', 'structural invariants and level table', 'json')

    spectrum = add_command('spectrum', 'spectrum of one graph matrix', 'json')
    spectrum.add_argument('--matrix', default='laplacian',
                          help='adjacency, laplacian, signless, a-alpha or distance-laplacian')
    spectrum.add_argument('--alpha', default=None, help='alpha as num/den, required for a-alpha')
    spectrum.add_argument('--method', default='closed', help='closed, dense or both')
    spectrum.add_argument('--tol', default=None, help='comparison tolerance')
    spectrum.add_argument('--exact', action='store_true',
                          help='leave the quotient eigenvalues of A_alpha unevaluated')

    verify = add_command('verify', 'run every closed-form check', 'text')
    verify.add_argument('--tol', default=None, help='comparison tolerance')

    add_command('export', 'write the explicit graph', 'edgelist')
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_args(
        p=args.p,
        c=args.c,
        alpha=getattr(args, 'alpha', None),
        matrix=getattr(args, 'matrix', 'laplacian'),
        method=getattr(args, 'method', 'closed'),
        tol=getattr(args, 'tol', None),
        output_format=args.output_format,
        out=args.out,
        exact=getattr(args, 'exact', False),
    )


def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {len(text)} characters to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and return its exit status

    Returns:
        0 success, 1 verification failure, 2 usage error, 3 budget exceeded
    """
    configure_logging()

    try:
        Config.validate()
    except ValueError as e:
        logger.error(str(e))
        return ExitCode.USAGE_ERROR

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.SUCCESS if e.code == 0 else ExitCode.USAGE_ERROR

    try:
        cfg = run_config_from_args(args)
        logger.info(f"Running {args.command} for p={cfg.params.p}, c={cfg.params.c}")
        result = COMMANDS[args.command](cfg)
    except ValidationError as e:
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.USAGE_ERROR
    except (EnumerationBudgetError, DenseBudgetError) as e:
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.BUDGET_EXCEEDED
    except (RingError, StructureError, ClosedFormError, NumericError, SpectrumError) as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.VERIFICATION_FAILED

    try:
        write_output(result.output, cfg.output_path)
    except OSError as e:
        sys.stderr.write(f"error: cannot write {cfg.output_path}: {e}\n")
        return ExitCode.USAGE_ERROR

    return int(result.exit_code)


if __name__ == '__main__':
    sys.exit(main())
