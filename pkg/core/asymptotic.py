"""
Circle-segment estimates of the zeros of the Hermite polynomials H_n.

A disk of radius r = sqrt(2n + 1) is cut into n + 1 vertical strips of equal
area. The strip boundaries approximate the zeros of H_n. Counting from the
center outward, the band reaching the j-th positive boundary holds
2j - 1 strips for even n and 2j strips for odd n, so

    (2j - 1) pi / (n + 1) = theta + sin(theta)    (n even, j = 1 .. n/2)
    2j pi / (n + 1)       = theta + sin(theta)    (n odd,  j = 0 .. (n-1)/2)

with x_j = r sin(theta / 2). The odd-degree central zero is j = 0.

The same disk is the position-space domain of a spin S in the
Holstein-Primakoff picture with n = 2S, which is what ``spin_domain`` exposes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

from core.segment_solver import SolverConfig, solve_segment

# Tolerance for the mirror-symmetry check of a zero set.
SYMMETRY_TOL = 1e-12


class ZeroMethod(str, Enum):
    """How a zero set was produced."""

    ASYMPTOTIC = "asymptotic"
    EXACT = "exact"
    JACOBI = "jacobi"


def disk_radius(n: int) -> float:
    """Radius sqrt(2n + 1) of the disk partitioned for degree n."""
    return math.sqrt(2 * n + 1)


def index_range(n: int) -> range:
    """Valid center-out indices j for degree n (empty for n = 0)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if n % 2 == 0:
        return range(1, n // 2 + 1)
    return range(0, (n - 1) // 2 + 1)


def rank_to_index(n: int, rank: int) -> int:
    """Center-out index j of the zero at 0-based ascending position ``rank``.

    Mirrored zeros share the same j.
    """
    if not 0 <= rank < n:
        raise IndexError(f"rank {rank} out of range for n={n}")
    if n % 2 == 1:
        return abs(rank - (n - 1) // 2)
    half = n // 2
    return rank - half + 1 if rank >= half else half - rank


@dataclass(frozen=True)
class ZeroEstimate:
    """One approximate positive zero x_j of H_n and the quantities behind it.

    Attributes:
        n: polynomial degree
        j: center-out index (0 only for the central zero of odd n)
        M: band area over r^2, in [0, pi)
        theta: segment angle solving theta + sin(theta) = M
        x: approximate zero, r sin(theta/2)
    """

    n: int
    j: int
    M: float
    theta: float
    x: float

    def __post_init__(self):
        if self.j not in index_range(self.n):
            raise IndexError(f"j={self.j} is not a valid index for n={self.n}")
        r = disk_radius(self.n)
        if not (0.0 <= self.x < r):
            raise ValueError(f"x={self.x!r} outside [0, {r!r})")

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "j": self.j, "M": self.M, "theta": self.theta, "x": self.x}


@dataclass(frozen=True)
class ZeroSet:
    """All n zeros of H_n, sorted ascending, from one method."""

    n: int
    method: ZeroMethod
    values: Tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "method", ZeroMethod(self.method))
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} zeros, got {len(self.values)}")
        r = disk_radius(self.n)
        for a, b in zip(self.values, self.values[1:]):
            if not a < b:
                raise ValueError(f"zeros must be strictly increasing ({a!r} >= {b!r})")
        for a, b in zip(self.values, reversed(self.values)):
            if abs(a + b) > SYMMETRY_TOL:
                raise ValueError(f"zero set is not symmetric about 0 ({a!r} vs {b!r})")
        if any(abs(v) >= r for v in self.values):
            raise ValueError(f"zeros must lie inside (-{r!r}, {r!r})")

    def nonnegative(self) -> Tuple[float, ...]:
        """Zeros with center-out index j >= 0, i.e. the upper half (and 0 for odd n)."""
        return self.values[self.n // 2:]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "method": self.method.value, "values": list(self.values)}


def area_fraction(n: int, j: int) -> float:
    """Band area over r^2 reaching the j-th positive zero of H_n.

    Raises:
        ValueError: n < 1
        IndexError: j outside the valid range for the parity of n
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    if j not in index_range(n):
        raise IndexError(f"j={j} is not a valid index for n={n} (valid: {list(index_range(n))})")
    if n % 2 == 0:
        return (2 * j - 1) * math.pi / (n + 1)
    return 2 * j * math.pi / (n + 1)


def approx_positive_zero(n: int, j: int, config: SolverConfig = SolverConfig()) -> ZeroEstimate:
    """Estimate the j-th positive zero of H_n from the equal-area construction."""
    M = area_fraction(n, j)
    theta = solve_segment(M, config).theta
    x = disk_radius(n) * math.sin(0.5 * theta)
    return ZeroEstimate(n=n, j=j, M=M, theta=theta, x=x)


def approx_estimates(n: int, config: SolverConfig = SolverConfig()) -> List[ZeroEstimate]:
    """Estimates for every valid j of degree n, in center-out order."""
    return [approx_positive_zero(n, j, config) for j in index_range(n)]


def approx_zero_set(n: int, config: SolverConfig = SolverConfig()) -> ZeroSet:
    """All n approximate zeros of H_n; negatives are mirrors of the positives."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    positives = [e.x for e in approx_estimates(n, config)]
    if n % 2 == 1:
        # j = 0 gives M = 0, theta = 0, x = 0
        positives = positives[1:]
        values = [-x for x in reversed(positives)] + [0.0] + positives
    else:
        values = [-x for x in reversed(positives)] + positives
    return ZeroSet(n=n, method=ZeroMethod.ASYMPTOTIC, values=tuple(values))


SpinValue = Union[int, float, str, Fraction]


def parse_spin(S: SpinValue) -> Fraction:
    """Read a spin given as 3/2, "3/2", 1.5 or "1.5"; 2S must be a positive integer."""
    try:
        spin = Fraction(S)
    except (TypeError, ValueError, OverflowError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot read spin {S!r}") from exc
    two_s = 2 * spin
    if two_s.denominator != 1 or two_s <= 0:
        raise ValueError(f"spin must be a positive half-integer, got {S!r}")
    return spin


@dataclass(frozen=True)
class SpinDomain:
    """Position-space disk of a spin S and its q-basis cell boundaries.

    Attributes:
        S: spin, a positive half-integer
        n: 2S
        radius: sqrt(4S + 1)
        boundaries: the n interior cell boundaries, ascending
    """

    S: Fraction
    n: int
    radius: float
    boundaries: Tuple[float, ...]

    def __post_init__(self):
        if 2 * self.S != self.n:
            raise ValueError(f"n must equal 2S (S={self.S}, n={self.n})")
        if self.radius != disk_radius(self.n):
            raise ValueError(f"radius must be sqrt(4S + 1), got {self.radius!r}")
        if len(self.boundaries) != self.n:
            raise ValueError(f"expected {self.n} boundaries, got {len(self.boundaries)}")

    def cell_areas(self) -> List[float]:
        """Closed-form areas of the n + 1 strips between consecutive boundaries."""
        r = self.radius
        r2 = r * r

        def left_area(x: float) -> float:
            # Area of the disk left of the vertical line at x.
            x = min(max(x, -r), r)
            return 0.5 * math.pi * r2 + x * math.sqrt(max(r2 - x * x, 0.0)) + r2 * math.asin(x / r)

        edges = [-r, *self.boundaries, r]
        return [left_area(b) - left_area(a) for a, b in zip(edges, edges[1:])]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "S": str(self.S),
            "n": self.n,
            "radius": self.radius,
            "boundaries": list(self.boundaries),
            "cell_areas": self.cell_areas(),
        }


def spin_domain(S: SpinValue, config: SolverConfig = SolverConfig()) -> SpinDomain:
    """Equal-area q-basis partition of the Holstein-Primakoff disk of spin S."""
    spin = parse_spin(S)
    n = int(2 * spin)
    return SpinDomain(
        S=spin,
        n=n,
        radius=disk_radius(n),
        boundaries=approx_zero_set(n, config).values,
    )
