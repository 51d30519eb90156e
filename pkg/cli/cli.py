"""
Command-line front end for the Hermite zero estimates.

Subcommands:
- solve:   invert theta + sin(theta) = M
- zeros:   estimated, exact or eigenvalue zeros of H_n as CSV/JSON
- compare: estimate-vs-exact tables over a range of degrees
- quad:    Gauss-Hermite integration of a built-in integrand
- spin:    radius and q-basis boundaries of the spin-S disk

Every value on stdout is a shortest round-trip decimal, so identical
arguments always produce identical bytes. Exit codes: 0 success, 2 bad
arguments, 1 numerical failure.

Run: python -m cli.cli <subcommand> [options]
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence

from comparison.comparison import Parity, format_float, rows_to_csv, rows_to_json, sweep
from core.asymptotic import ZeroMethod, approx_estimates, approx_zero_set, parse_spin, rank_to_index, spin_domain
from core.errors import ConvergenceError
from core.hermite_oracle import exact_zero_set, jacobi_zero_set
from core.segment_solver import SolverConfig, solve_segment
from logger.audit_logger import log_event, print_audit_log
from persistence import write_text_atomic
from quadrature.gauss_hermite import Integrand, IntegrandKind, NodeSource, build_rule, evaluate

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

NODE_CHOICES = {
    'exact': NodeSource.EXACT,
    'asymptotic': NodeSource.ASYMPTOTIC,
    'jacobi': NodeSource.JACOBI,
}


# ---------------- Argument types ----------------

def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return value


def _area_value(text: str) -> float:
    value = _finite_float(text)
    if not 0.0 <= value <= math.pi:
        raise argparse.ArgumentTypeError(f"M must lie in [0, pi], got {text}")
    return value


def _positive_float(text: str) -> float:
    value = _finite_float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value
    parse.__name__ = f"int>={minimum}"
    return parse


def _spin_value(text: str):
    try:
        return parse_spin(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# ---------------- Parser ----------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--abs-tol', type=_positive_float, default=SolverConfig.abs_tol,
                        help='residual tolerance of the segment solver (default: %(default)s)')
    common.add_argument('--max-iter', type=_int_at_least(1), default=SolverConfig.max_iter,
                        help='iteration limit of every iterative routine (default: %(default)s)')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-v info, -vv debug)')
    common.add_argument('--audit', action='store_true', help='print the audit trail to stderr after the run')

    p = argparse.ArgumentParser(prog='hermite-zeros',
                                description='Circle-segment estimates of Hermite polynomial zeros')
    sub = p.add_subparsers(dest='command', required=True)

    p_solve = sub.add_parser('solve', parents=[common], help='Solve theta + sin(theta) = M')
    p_solve.add_argument('--m', type=_area_value, required=True, help='area value M in [0, pi]')

    p_zeros = sub.add_parser('zeros', parents=[common], help='Print the zero set of H_n')
    p_zeros.add_argument('--n', type=_int_at_least(0), required=True, help='polynomial degree (>= 0)')
    p_zeros.add_argument('--method', choices=[m.value for m in ZeroMethod], default=ZeroMethod.ASYMPTOTIC.value,
                         help='asymptotic estimates, exact (Newton) zeros, or Jacobi eigenvalues')
    p_zeros.add_argument('--format', choices=['csv', 'json'], default='csv', help='output format')
    p_zeros.add_argument('--out', help='write to this file instead of stdout')

    p_cmp = sub.add_parser('compare', parents=[common], help='Compare estimated and exact zeros over a range of n')
    p_cmp.add_argument('--n-min', type=_int_at_least(1), required=True, help='smallest degree (>= 1)')
    p_cmp.add_argument('--n-max', type=_int_at_least(1), required=True, help='largest degree (>= n-min)')
    p_cmp.add_argument('--parity', choices=[par.value for par in Parity], default=Parity.BOTH.value,
                       help='restrict to even or odd degrees')
    p_cmp.add_argument('--format', choices=['csv', 'json'], default='csv', help='output format')
    p_cmp.add_argument('--out', help='write to this file instead of stdout')
    p_cmp.add_argument('--summary', action='store_true',
                       help="append per-degree min/max/mean abs_err as '#' lines (csv only)")

    p_quad = sub.add_parser('quad', parents=[common], help='Integrate a built-in integrand against exp(-x^2)')
    p_quad.add_argument('--n', type=_int_at_least(1), required=True, help='node count (>= 1)')
    p_quad.add_argument('--nodes', choices=list(NODE_CHOICES), default='exact', help='node source')
    p_quad.add_argument('--integrand', choices=[k.value for k in IntegrandKind], required=True,
                        help='monomial x^k, cos(a x) or exp(b x)')
    p_quad.add_argument('--param', type=_finite_float, required=True,
                        help='k for monomial (nonnegative integer), a for cos, b for exp')

    p_spin = sub.add_parser('spin', parents=[common], help='Disk radius and q-basis boundaries for spin S')
    p_spin.add_argument('--s', type=_spin_value, required=True, help='spin, a positive half-integer such as 3/2')
    p_spin.add_argument('--format', choices=['text', 'json'], default='text', help='output format')

    return p


# ---------------- Renderers ----------------

def render_solve(M: float, config: SolverConfig) -> str:
    sol = solve_segment(M, config)
    return (
        f"M={format_float(sol.M)}\n"
        f"theta={format_float(sol.theta)}\n"
        f"residual={format_float(sol.residual)}\n"
        f"iterations={sol.iterations}\n"
    )


def zero_rows(n: int, method: ZeroMethod, config: SolverConfig) -> List[Dict[str, Any]]:
    """One row per zero in ascending order; mirrored zeros share j."""
    if method is ZeroMethod.ASYMPTOTIC:
        by_j = {e.j: e for e in approx_estimates(n, config)}
        rows = []
        for rank, x in enumerate(approx_zero_set(n, config).values):
            e = by_j[rank_to_index(n, rank)]
            rows.append({'n': n, 'j': e.j, 'M': e.M, 'theta': e.theta, 'x': x})
        return rows
    zeros = exact_zero_set(n, config) if method is ZeroMethod.EXACT else jacobi_zero_set(n)
    return [{'n': n, 'j': rank_to_index(n, rank), 'x': x} for rank, x in enumerate(zeros.values)]


def render_zeros(n: int, method: ZeroMethod, fmt: str, config: SolverConfig) -> str:
    rows = zero_rows(n, method, config)
    if fmt == 'json':
        return json.dumps(rows, indent=2) + "\n"
    fields = ['n', 'j', 'M', 'theta', 'x'] if method is ZeroMethod.ASYMPTOTIC else ['n', 'j', 'x']
    lines = [",".join(fields)]
    for row in rows:
        lines.append(",".join(str(row[f]) if isinstance(row[f], int) else format_float(row[f]) for f in fields))
    return "\n".join(lines) + "\n"


def render_quad(n: int, source: NodeSource, integrand: Integrand, config: SolverConfig) -> str:
    result = evaluate(build_rule(n, source, config), integrand)
    lines = [f"# rule n={n} source={source.value}", "node,weight"]
    lines += [f"{format_float(x)},{format_float(w)}" for x, w in zip(result.rule.nodes, result.rule.weights)]
    lines += [
        f"integrand={integrand.describe()}",
        f"result={format_float(result.value)}",
        f"reference={format_float(result.reference)}",
        f"abs_err={format_float(result.abs_err)}",
        f"rel_err={'' if result.rel_err is None else format_float(result.rel_err)}",
    ]
    return "\n".join(lines) + "\n"


def render_spin(S, fmt: str, config: SolverConfig) -> str:
    domain = spin_domain(S, config)
    if fmt == 'json':
        return json.dumps(domain.to_dict(), indent=2) + "\n"
    return (
        f"S={domain.S}\n"
        f"n={domain.n}\n"
        f"radius={format_float(domain.radius)}\n"
        f"boundaries={','.join(format_float(b) for b in domain.boundaries)}\n"
        f"cell_areas={','.join(format_float(a) for a in domain.cell_areas())}\n"
    )


# ---------------- Command-line wiring ----------------

def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        path = write_text_atomic(out_path, text)
        logger.info("wrote %s", path)
    else:
        sys.stdout.write(text)


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return int(exc.code or 0)

    _configure_logging(args.verbose)
    config = SolverConfig(abs_tol=args.abs_tol, max_iter=args.max_iter)
    command = args.command
    details: Dict[str, Any] = {}

    try:
        if command == 'solve':
            details = {'M': args.m}
            _emit(render_solve(args.m, config), None)

        elif command == 'zeros':
            details = {'n': args.n, 'method': args.method}
            _emit(render_zeros(args.n, ZeroMethod(args.method), args.format, config), args.out)

        elif command == 'compare':
            if args.n_min > args.n_max:
                parser.error(f"--n-min ({args.n_min}) must not exceed --n-max ({args.n_max})")
            if args.summary and args.format != 'csv':
                parser.error("--summary is only available with --format csv")
            details = {'n_min': args.n_min, 'n_max': args.n_max, 'parity': args.parity}
            rows = sweep(args.n_min, args.n_max, Parity(args.parity), config)
            details['rows'] = len(rows)
            text = rows_to_json(rows) if args.format == 'json' else rows_to_csv(rows, summary=args.summary)
            _emit(text, args.out)

        elif command == 'quad':
            kind = IntegrandKind(args.integrand)
            if kind is IntegrandKind.MONOMIAL and (args.param < 0 or int(args.param) != args.param):
                parser.error(f"--param must be a nonnegative integer for monomial, got {args.param!r}")
            details = {'n': args.n, 'nodes': args.nodes, 'integrand': args.integrand, 'param': args.param}
            _emit(render_quad(args.n, NODE_CHOICES[args.nodes], Integrand(kind, args.param), config), None)

        elif command == 'spin':
            details = {'S': str(args.s)}
            _emit(render_spin(args.s, args.format, config), None)

        else:
            parser.print_help()
            return 2

        code = 0
        log_event(command, 'run', 'ok', details)

    except SystemExit as exc:
        # parser.error() on cross-argument checks
        code = int(exc.code or 0)
        log_event(command, 'run', 'input_error', details)
    except (ValueError, IndexError) as ve:
        code = 2
        log_event(command, 'run', 'input_error', {**details, 'error': str(ve)})
        print('Input error:', ve, file=sys.stderr)
    except ConvergenceError as ce:
        code = 1
        log_event(command, 'run', 'numerical_failure', {**details, 'n': ce.n, 'j': ce.j})
        print('Numerical failure:', ce, file=sys.stderr)
    except RuntimeError as re:
        code = 1
        log_event(command, 'run', 'numerical_failure', {**details, 'error': str(re)})
        print('Numerical failure:', re, file=sys.stderr)
    except Exception as e:
        code = 1
        logger.exception("unexpected error in %s", command)
        log_event(command, 'run', 'unexpected_error', {**details, 'error': type(e).__name__})
        print(f'Unexpected error ({type(e).__name__}):', e, file=sys.stderr)

    if args.audit:
        print_audit_log(sys.stderr)
    return code


if __name__ == '__main__':
    sys.exit(run_cli(sys.argv[1:]))
