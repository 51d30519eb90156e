"""
Audit Logging Package

Keeps an in-memory trail of command-line runs (subcommand, outcome, key
parameters) that can be printed with ``--audit``.
"""

from .audit_logger import log_event, print_audit_log, get_events, clear_events

__all__ = ['log_event', 'print_audit_log', 'get_events', 'clear_events']
