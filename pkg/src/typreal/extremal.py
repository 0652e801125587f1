"""Extremal typically real polynomials F(z) = sum_k alpha_k z^k of degree N.

The coefficients come from the top principal vector z of the pencil:

    alpha_k = (c_{k-1} - c_{k+1}) / (c_0 - c_2),   c_m = sum_j z_j z_{j+m},

and the maximal value is sum_k alpha_k = F(1) = 1 / (4 r^2), where r is
mu = sin(pi / (2(N+2))) for odd N and the least positive zero of U'_{N+1}
for even N.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cheb import ChebPoint, u_deriv_eval, u_eval
from .errors import DegreeError, DomainError, NumericalError, ParityError
from .pencil import PrincipalVector, principal_vector
from .spectra import nu_least

NORMALIZATION_TOL = 1e-10


@dataclass(frozen=True)
class ExtremalPolynomial:
    n: int
    coeffs: tuple[float, ...]
    j_value: float
    root: float
    parity: str

    @property
    def root_kind(self) -> str:
        return "mu" if self.parity == "odd" else "nu"


@dataclass(frozen=True)
class CurveSample:
    t: float
    re: float
    im: float


def _lagged(z: np.ndarray, m: int) -> float:
    if m >= len(z):
        return 0.0
    return float(np.dot(z[: len(z) - m], z[m:]))


def coeffs_from_vector(z) -> list[float]:
    """Coefficient formula applied to an (unnormalized) principal vector."""
    z = np.asarray(z, dtype=float)
    n = len(z)
    lag = [_lagged(z, m) for m in range(n + 2)]
    denom = lag[0] - lag[2]
    if not denom > 0.0:
        raise NumericalError(f"non-positive quadratic form {denom!r}")
    return [(lag[k - 1] - lag[k + 1]) / denom for k in range(1, n + 1)]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"degree must be an integer >= 1, got {n!r}")


def upper_bound(n: int) -> float:
    """(1/4) csc^2(pi / (2(n+2)))."""
    _check_n(n)
    return 0.25 / math.sin(math.pi / (2 * (n + 2))) ** 2


def j_value(n: int) -> float:
    _check_n(n)
    if n % 2:
        return upper_bound(n)
    nu = nu_least(n)
    return 1.0 / (4.0 * nu * nu)


def compute_extremal(n: int, vector: PrincipalVector | None = None) -> ExtremalPolynomial:
    _check_n(n)
    pv = vector if vector is not None else principal_vector(n)
    coeffs = coeffs_from_vector(pv.z)
    if abs(coeffs[0] - 1.0) > NORMALIZATION_TOL:
        raise NumericalError(f"alpha_1 = {coeffs[0]!r}, expected 1")
    coeffs[0] = 1.0
    return ExtremalPolynomial(
        n=n,
        coeffs=tuple(coeffs),
        j_value=j_value(n),
        root=pv.root,
        parity="odd" if n % 2 else "even",
    )


def coeffs_eq14(n: int) -> list[float]:
    """Closed-form coefficients for odd n.

    alpha_k = (-1)^{k-1} U'_{n-k+1}(mu) U_{k-1}(mu) / U'_n(mu),  mu = sin(pi/(2(n+2))).
    """
    _check_n(n)
    if n % 2 == 0:
        raise ParityError(f"closed form needs odd n, got {n}")
    p = ChebPoint.from_x(math.sin(math.pi / (2 * (n + 2))))
    d = u_deriv_eval(n, p)
    return [
        (-1) ** (k - 1) * u_deriv_eval(n - k + 1, p) * u_eval(k - 1, p) / d
        for k in range(1, n + 1)
    ]


def mirror(p: ExtremalPolynomial) -> ExtremalPolynomial:
    """-F(-z): flips the sign of every even-degree coefficient."""
    coeffs = tuple(c if k % 2 else -c for k, c in enumerate(p.coeffs, start=1))
    return ExtremalPolynomial(p.n, coeffs, p.j_value, p.root, p.parity)


def eval_poly(coeffs: Sequence[float], z: complex) -> complex:
    """Horner evaluation of sum_{j=1}^N coeffs[j-1] z^j."""
    if len(coeffs) == 0:
        raise ValueError("empty coefficient list")
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc * z


def brandt_eval(n: int, z: complex) -> complex:
    """Rational closed form of the odd-degree extremal polynomial, for |z| <= 0.95."""
    _check_n(n)
    if n % 2 == 0:
        raise ParityError(f"closed form needs odd n, got {n}")
    z = complex(z)
    if abs(z) > 0.95 or abs(1 + z) < 0.05:
        raise DomainError(f"z={z!r} outside |z| <= 0.95, |1+z| >= 0.05")
    k = z / (z * z + 1 - 2 * z * math.cos(math.pi / (n + 2)))
    c = 4 * math.cos(math.pi / (2 * (n + 2))) ** 2 / (n + 2)
    return k - c * (1 + z ** (n + 2)) * (1 - z) / (1 + z) * k * k


def curve_samples(coeffs: Sequence[float], m: int) -> list[CurveSample]:
    """Image of the upper unit semicircle at t_k = k pi / (m-1)."""
    if m < 2:
        raise ValueError(f"need at least 2 samples, got {m}")
    out = []
    for k in range(m):
        if k == 0:
            t, z = 0.0, 1 + 0j
        elif k == m - 1:
            t, z = math.pi, -1 + 0j
        else:
            t = k * math.pi / (m - 1)
            z = cmath.exp(1j * t)
        w = eval_poly(coeffs, z)
        out.append(CurveSample(t, w.real, w.imag))
    return out
