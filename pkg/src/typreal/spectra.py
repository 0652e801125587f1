"""Positive roots of U_{N+1} and U'_{N+1}, and the pencil spectrum built from them.

Zeros of U_{N+1} are known in closed form; zeros of U'_{N+1} interlace
with them, so each one is bracketed by two consecutive zeros of U_{N+1}
and found by plain bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .cheb import ChebPoint, u_deriv_eval
from .errors import BracketError, DegreeError, ParityError

MAX_BISECT_ITER = 200
BRACKET_WIDTH = 1e-15

MU = "mu"
NU = "nu"


@dataclass(frozen=True)
class Spectrum:
    """Characteristic numbers of the pencil (I + A) - lambda (I - B).

    ``mu`` and ``nu`` are the positive roots in decreasing order;
    ``lambdas`` is ascending and ``kinds[i]`` says which root family
    ``lambdas[i]`` came from; ``roots[i]`` is that root.
    """

    n: int
    mu: tuple[float, ...]
    nu: tuple[float, ...]
    lambdas: tuple[float, ...]
    kinds: tuple[str, ...]
    roots: tuple[float, ...]

    @property
    def top(self) -> float:
        return self.lambdas[-1]

    @property
    def top_kind(self) -> str:
        return self.kinds[-1]


def _check_degree(n: int, lo: int = 1) -> None:
    if not isinstance(n, int) or n < lo:
        raise DegreeError(f"degree must be an integer >= {lo}, got {n!r}")


def mu_roots(n: int) -> list[float]:
    """Positive zeros cos(j pi / (n+2)) of U_{n+1}, j = 1..floor((n+1)/2)."""
    _check_degree(n)
    return [math.cos(j * math.pi / (n + 2)) for j in range(1, (n + 1) // 2 + 1)]


def bisect(f: Callable[[float], float], lo: float, hi: float, width: float = BRACKET_WIDTH) -> float:
    """Bisection on [lo, hi]; the endpoint values must have opposite signs."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f={flo!r}, {fhi!r}")
    for _ in range(MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo <= width or mid in (lo, hi):
            return mid
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise BracketError(f"bisection did not converge in {MAX_BISECT_ITER} iterations")


def _du(n: int) -> Callable[[float], float]:
    return lambda x: u_deriv_eval(n + 1, ChebPoint.from_x(x))


def least_nu_bracket(n: int) -> tuple[float, float]:
    """Interval known to contain the least positive zero of U'_{n+1}, n even."""
    return (
        math.cos((n + 1) * math.pi / (2 * (n + 2))),
        math.cos(n * math.pi / (2 * (n + 1))),
    )


def nu_least(n: int) -> float:
    """Least positive zero of U'_{n+1} for even n >= 2."""
    _check_degree(n, 2)
    if n % 2:
        raise ParityError(f"nu_least needs even n, got {n}")
    lo, hi = least_nu_bracket(n)
    return bisect(_du(n), lo, hi)


def nu_roots(n: int) -> list[float]:
    """All positive zeros of U'_{n+1}, decreasing."""
    _check_degree(n, 2)
    mu = mu_roots(n)
    f = _du(n)
    roots = [bisect(f, mu[j + 1], mu[j]) for j in range(len(mu) - 1)]
    if n % 2 == 0:
        roots.append(nu_least(n))
    return roots


def characteristic_numbers(n: int) -> Spectrum:
    """Merge 1/(4 mu^2) and 1/(4 nu^2) into the ascending spectrum."""
    _check_degree(n)
    mu = mu_roots(n)
    nu = nu_roots(n) if n >= 2 else []
    tagged = [(r, MU) for r in mu] + [(r, NU) for r in nu]
    # larger root -> smaller lambda
    tagged.sort(key=lambda rk: -rk[0])
    return Spectrum(
        n=n,
        mu=tuple(mu),
        nu=tuple(nu),
        lambdas=tuple(1.0 / (4.0 * r * r) for r, _ in tagged),
        kinds=tuple(k for _, k in tagged),
        roots=tuple(r for r, _ in tagged),
    )


def theta_residual(n: int, theta: float) -> float:
    """(n+3) cos((n+1) theta) + (n+1) cos((n+3) theta), n even."""
    if n % 2:
        raise ParityError(f"theta_residual needs even n, got {n}")
    return (n + 3) * math.cos((n + 1) * theta) + (n + 1) * math.cos((n + 3) * theta)
