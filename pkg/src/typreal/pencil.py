"""The matrix pencil (I + A) - lambda (I - B) and its principal vectors.

A has 1/2 on the first off-diagonals, B has 1/2 on the second ones.  The
principal vectors for the top characteristic number are known in closed
form in terms of U_k evaluated at the corresponding root.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from .cheb import ChebPoint, u_deriv_eval, u_eval
from .errors import DegreeError, ParityError
from .spectra import nu_least


@dataclass(frozen=True)
class PencilMatrices:
    n: int
    a: np.ndarray
    b: np.ndarray

    @property
    def lhs(self) -> np.ndarray:
        """I + A"""
        return np.eye(self.n) + self.a

    @property
    def rhs(self) -> np.ndarray:
        """I - B"""
        return np.eye(self.n) - self.b


@dataclass(frozen=True)
class PrincipalVector:
    """Closed-form principal vector; ``s`` is 0 for the mu branch, 1 for nu."""

    n: int
    s: int
    root: float
    z: np.ndarray

    @property
    def lam(self) -> float:
        return 1.0 / (4.0 * self.root * self.root)


def _banded(n: int, offset: int) -> np.ndarray:
    m = np.zeros((n, n))
    if offset < n:
        idx = np.arange(n - offset)
        m[idx, idx + offset] = 0.5
        m[idx + offset, idx] = 0.5
    m.flags.writeable = False
    return m


def build_pencil(n: int) -> PencilMatrices:
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"pencil size must be >= 1, got {n!r}")
    return PencilMatrices(n, _banded(n, 1), _banded(n, 2))


def det_pencil(x: float, n: int) -> float:
    """det(4x^2 (I+A) - (I-B)) by dense LU with partial pivoting."""
    m = build_pencil(n)
    mat = 4.0 * x * x * m.lhs - m.rhs
    with warnings.catch_warnings():
        # a singular matrix just has determinant zero
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(mat, check_finite=True)
    swaps = np.count_nonzero(piv != np.arange(n))
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diag(lu)))


def det_identity(x: float, n: int) -> float:
    """Right-hand side U_{n+1}(x) U'_{n+1}(x) / (2^{n+2} x) of the determinant identity."""
    p = ChebPoint.from_x(x)
    return u_eval(n + 1, p) * u_deriv_eval(n + 1, p) / (2.0 ** (n + 2) * x)


def z_product_form(n: int, x: float) -> np.ndarray:
    """z_k = (-1)^{k-1} U_{k-1}(x) U_k(x), k = 1..n."""
    p = ChebPoint.from_x(x)
    u = [u_eval(k, p) for k in range(n + 1)]
    return np.array([(-1) ** (k - 1) * u[k - 1] * u[k] for k in range(1, n + 1)])


def z_three_term(n: int, x: float) -> np.ndarray:
    """Principal vector family for the nu branch, as a function of x.

    z_k = (-1)^{k-1} (U_{k-1}U_k - U_{n-k}U_{n-k+1} + (n+1-2k)/(n+1) U_n U_{n+1}).
    """
    p = ChebPoint.from_x(x)
    u = [u_eval(k, p) for k in range(n + 2)]
    tail = u[n] * u[n + 1] / (n + 1)
    z = np.empty(n)
    for k in range(1, n + 1):
        v = u[k - 1] * u[k] - u[n - k] * u[n - k + 1] + (n + 1 - 2 * k) * tail
        z[k - 1] = v if k % 2 else -v
    return z


def z_vector_mu(n: int) -> PrincipalVector:
    """Top principal vector for odd n, at mu = sin(pi / (2(n+2)))."""
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    if n % 2 == 0:
        raise ParityError(f"z_vector_mu needs odd n, got {n}")
    mu = math.sin(math.pi / (2 * (n + 2)))
    return PrincipalVector(n, 0, mu, z_product_form(n, mu))


def z_vector_nu(n: int) -> PrincipalVector:
    """Top principal vector for even n, at the least positive zero of U'_{n+1}."""
    if n < 2:
        raise DegreeError(f"degree must be >= 2, got {n}")
    if n % 2:
        raise ParityError(f"z_vector_nu needs even n, got {n}")
    nu = nu_least(n)
    return PrincipalVector(n, 1, nu, z_three_term(n, nu))


def principal_vector(n: int) -> PrincipalVector:
    return z_vector_mu(n) if n % 2 else z_vector_nu(n)


def pencil_residual(m: PencilMatrices, lam: float, z) -> float:
    """||(I+A) z - lam (I-B) z||_inf / ||z||_inf."""
    z = np.asarray(z, dtype=float)
    if z.shape != (m.n,):
        raise ValueError(f"expected vector of length {m.n}, got shape {z.shape}")
    zmax = np.max(np.abs(z))
    if zmax == 0.0:
        raise ValueError("zero vector")
    r = m.lhs @ z - lam * (m.rhs @ z)
    return float(np.max(np.abs(r)) / zmax)
