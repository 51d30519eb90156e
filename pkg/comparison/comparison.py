"""
Side-by-side tables of circle-segment estimates against exact zeros of H_n.

Rows cover the nonnegative zeros only (center-out index j >= 0). Estimates
and exact zeros are paired by rank after sorting, never by proximity.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from core.asymptotic import approx_zero_set, index_range
from core.hermite_oracle import exact_zero_set
from core.segment_solver import SolverConfig

CSV_FIELDS = ("n", "j", "x_approx", "x_exact", "abs_err", "rel_err")


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"
    BOTH = "both"

    def accepts(self, n: int) -> bool:
        if self is Parity.BOTH:
            return True
        return (n % 2 == 0) == (self is Parity.EVEN)


def format_float(value: float) -> str:
    """Shortest round-trip decimal for a binary64 value, locale independent."""
    return repr(float(value))


@dataclass(frozen=True)
class ComparisonRow:
    """One (n, j) pairing of an estimated and an exact zero.

    Attributes:
        rel_err: abs_err / |x_exact|, or None when x_exact is 0
    """

    n: int
    j: int
    x_approx: float
    x_exact: float
    abs_err: float
    rel_err: Optional[float]

    def __post_init__(self):
        if not self.abs_err >= 0.0:
            raise ValueError(f"abs_err must be nonnegative, got {self.abs_err!r}")
        if (self.x_approx == 0.0) != (self.x_exact == 0.0) or self.x_approx * self.x_exact < 0.0:
            raise ValueError(f"paired zeros differ in sign (n={self.n}, j={self.j})")

    @classmethod
    def pair(cls, n: int, j: int, x_approx: float, x_exact: float) -> "ComparisonRow":
        abs_err = abs(x_approx - x_exact)
        rel_err = abs_err / abs(x_exact) if x_exact != 0.0 else None
        return cls(n=n, j=j, x_approx=x_approx, x_exact=x_exact, abs_err=abs_err, rel_err=rel_err)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "j": self.j,
            "x_approx": self.x_approx,
            "x_exact": self.x_exact,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
        }

    def to_csv_fields(self) -> List[str]:
        return [
            str(self.n),
            str(self.j),
            format_float(self.x_approx),
            format_float(self.x_exact),
            format_float(self.abs_err),
            "" if self.rel_err is None else format_float(self.rel_err),
        ]


def compare(n: int, config: SolverConfig = SolverConfig()) -> List[ComparisonRow]:
    """Pair estimated and exact nonnegative zeros of H_n, ordered by j."""
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    approx = approx_zero_set(n, config).nonnegative()
    exact = exact_zero_set(n, config).nonnegative()
    return [ComparisonRow.pair(n, j, a, e) for j, a, e in zip(index_range(n), approx, exact)]


def sweep(n_min: int, n_max: int, parity: Parity = Parity.BOTH,
          config: SolverConfig = SolverConfig()) -> List[ComparisonRow]:
    """compare(n) for every n in [n_min, n_max] of the requested parity, ordered by (n, j)."""
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}")
    parity = Parity(parity)
    rows: List[ComparisonRow] = []
    for n in range(n_min, n_max + 1):
        if parity.accepts(n):
            rows.extend(compare(n, config))
    return rows


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    count: int
    min_abs_err: float
    max_abs_err: float
    mean_abs_err: float


def summarize(rows: Iterable[ComparisonRow]) -> List[DegreeSummary]:
    """Min, max and mean abs_err per degree, ordered by n."""
    by_degree: Dict[int, List[float]] = {}
    for row in rows:
        by_degree.setdefault(row.n, []).append(row.abs_err)
    summaries = []
    for n in sorted(by_degree):
        errs = np.asarray(by_degree[n])
        summaries.append(DegreeSummary(
            n=n,
            count=len(errs),
            min_abs_err=float(errs.min()),
            max_abs_err=float(errs.max()),
            mean_abs_err=math.fsum(errs) / len(errs),
        ))
    return summaries


def rows_to_csv(rows: Sequence[ComparisonRow], summary: bool = False) -> str:
    """CSV table with header; optional '#'-prefixed per-degree summary footer."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.to_csv_fields())
    if summary:
        buf.write(summary_footer(rows))
    return buf.getvalue()


def summary_footer(rows: Sequence[ComparisonRow]) -> str:
    lines = ["# summary n,count,min_abs_err,max_abs_err,mean_abs_err"]
    for s in summarize(rows):
        lines.append("# " + ",".join([
            str(s.n),
            str(s.count),
            format_float(s.min_abs_err),
            format_float(s.max_abs_err),
            format_float(s.mean_abs_err),
        ]))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[ComparisonRow]) -> str:
    """JSON array of row objects; rel_err is null when absent."""
    return json.dumps([row.to_dict() for row in rows], indent=2) + "\n"
