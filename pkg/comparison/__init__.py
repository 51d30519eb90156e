"""
Comparison Package

Tables pairing circle-segment estimates with exact zeros, with CSV/JSON output.
"""

from .comparison import ComparisonRow, Parity, compare, sweep, rows_to_csv, rows_to_json

__all__ = ['ComparisonRow', 'Parity', 'compare', 'sweep', 'rows_to_csv', 'rows_to_json']
