"""
Command-Line Interface Package
Provides run_cli, the argparse front end that wires the solver, the zero
estimates, the exact-zero oracle, quadrature and the comparison tables.
"""
from .cli import build_parser, run_cli
__all__ = ['build_parser', 'run_cli']
