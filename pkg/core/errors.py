"""
Exceptions shared by the numerical packages.

Domain violations use the built-in ``ValueError`` / ``IndexError``; only the
failure of an iterative routine gets its own type so the command-line front
end can tell "bad input" apart from "the numerics did not converge".
"""

from __future__ import annotations

from typing import Optional


class ConvergenceError(RuntimeError):
    """An iterative routine did not meet its termination criterion, or its
    result is not representable in binary64 (underflowed Gauss weights).

    Attributes:
        n: polynomial degree being processed, if any
        j: center-out (or rank) index of the offending root, if any
    """

    def __init__(self, message: str, n: Optional[int] = None, j: Optional[int] = None):
        where = []
        if n is not None:
            where.append(f"n={n}")
        if j is not None:
            where.append(f"j={j}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.n = n
        self.j = j
