"""
Audit trail for command-line runs.

Events are kept in memory and can be printed after a run (``--audit``).
Each event includes a timestamp, the component that produced it, an action
and an outcome. Only the command-line layer records events; the numerical
packages stay free of shared state.
"""

from __future__ import annotations

import sys
import threading
import time
from typing import Any, Dict, List, Optional, TextIO

_lock = threading.Lock()
_events: List[Dict[str, Any]] = []


def log_event(component: str, action: str, outcome: str, details: Optional[Dict[str, Any]] = None) -> None:
    """Record an event.

    Args:
        component: package or subcommand producing the event, e.g. 'compare'
        action: short action name e.g. 'sweep'
        outcome: status such as 'ok', 'input_error' or 'numerical_failure'
        details: optional dictionary with extra context
    """
    event = {
        'timestamp': time.time(),
        'component': component,
        'action': action,
        'outcome': outcome,
        'details': details or {},
    }
    with _lock:
        _events.append(event)


def get_events() -> List[Dict[str, Any]]:
    """Return a copy of recorded events."""
    with _lock:
        return list(_events)


def clear_events() -> None:
    """Clear in-memory audit events."""
    with _lock:
        _events.clear()


def print_audit_log(stream: Optional[TextIO] = None) -> None:
    """Print events in a readable audit trail format (stderr by default)."""
    stream = sys.stderr if stream is None else stream
    events = get_events()
    if not events:
        print("(no audit events recorded)", file=stream)
        return

    print("== Audit Log ==", file=stream)
    for ev in events:
        print(
            f"[{ev['timestamp']:.3f}] component={ev['component']} action={ev['action']} "
            f"outcome={ev['outcome']} details={ev['details']}",
            file=stream,
        )
    print("== End Audit Log ==", file=stream)
