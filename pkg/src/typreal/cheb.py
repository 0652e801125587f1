"""Chebyshev polynomials of the first and second kind on (-1, 1).

Everything is evaluated through the angle form x = cos(theta):

    T_k(x) = cos(k theta),    U_k(x) = sin((k+1) theta) / sin(theta).

The power-basis recurrence is only used by the tests as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegreeError, DomainError

# sin(theta) must stay away from zero
THETA_GUARD = 1e-12


@dataclass(frozen=True)
class ChebPoint:
    """A point x in (-1, 1) together with its angle theta = arccos(x)."""

    x: float
    theta: float

    @classmethod
    def from_x(cls, x: float) -> "ChebPoint":
        x = float(x)
        if not -1.0 < x < 1.0:
            raise DomainError(f"|x| must be < 1, got {x!r}")
        theta = math.acos(x)
        if not THETA_GUARD <= theta <= math.pi - THETA_GUARD:
            raise DomainError(f"x={x!r} too close to +-1")
        return cls(x, theta)

    @classmethod
    def from_theta(cls, theta: float) -> "ChebPoint":
        theta = float(theta)
        if not THETA_GUARD <= theta <= math.pi - THETA_GUARD:
            raise DomainError(f"theta={theta!r} outside [{THETA_GUARD}, pi - {THETA_GUARD}]")
        return cls(math.cos(theta), theta)


def as_point(p: ChebPoint | float) -> ChebPoint:
    if isinstance(p, ChebPoint):
        return p
    return ChebPoint.from_x(p)


def u_eval(k: int, p: ChebPoint | float) -> float:
    """U_k(x) for k >= -1, with U_{-1} = 0 and U_0 = 1."""
    if k < -1:
        raise DegreeError(f"degree must be >= -1, got {k}")
    p = as_point(p)
    if k == -1:
        return 0.0
    if k == 0:
        return 1.0
    return math.sin((k + 1) * p.theta) / math.sin(p.theta)


def t_eval(k: int, p: ChebPoint | float) -> float:
    """T_k(x) = cos(k theta) for k >= 0."""
    if k < 0:
        raise DegreeError(f"degree must be >= 0, got {k}")
    p = as_point(p)
    if k == 0:
        return 1.0
    if k == 1:
        return p.x
    return math.cos(k * p.theta)


def u_deriv_eval(k: int, p: ChebPoint | float) -> float:
    """Derivative U'_k(x) = ((k+2) U_{k-1}(x) - k U_{k+1}(x)) / (2 (1 - x^2))."""
    if k < 0:
        raise DegreeError(f"degree must be >= 0, got {k}")
    p = as_point(p)
    if k == 0:
        return 0.0
    if k == 1:
        return 2.0
    s = math.sin(p.theta)
    num = (k + 2) * u_eval(k - 1, p) - k * u_eval(k + 1, p)
    return num / (2.0 * s * s)


def pair_sum_closed(k: int, n: int, p: ChebPoint | float) -> float:
    """Closed form of 2 * sum_{j=1}^{n-k} U_j(x) U_{j+k-1}(x).

    Equals ((n-k) T_{k-1}(x) - T_{n+2}(x) U_{n-k-1}(x)) / (1 - x^2).
    """
    if not 1 <= k <= n:
        raise IndexError(f"need 1 <= k <= n, got k={k}, n={n}")
    p = as_point(p)
    s = math.sin(p.theta)
    num = (n - k) * t_eval(k - 1, p) - t_eval(n + 2, p) * u_eval(n - k - 1, p)
    return num / (s * s)


def pair_sum_direct(k: int, n: int, p: ChebPoint | float) -> float:
    """Brute-force 2 * sum_{j=1}^{n-k} U_j(x) U_{j+k-1}(x)."""
    if not 1 <= k <= n:
        raise IndexError(f"need 1 <= k <= n, got k={k}, n={n}")
    p = as_point(p)
    return 2.0 * math.fsum(u_eval(j, p) * u_eval(j + k - 1, p) for j in range(1, n - k + 1))
