"""Nonnegativity certificates for sine polynomials sum_k alpha_k sin(kt) on [0, pi].

For a real vector z with autocorrelation b_m = sum_j z_j z_{j+m},

    (b_0 - b_2) * sum_k alpha_k sin(kt) = sin(t) * |sum_j z_j e^{i(j-1)t}|^2

whenever alpha_k = (b_{k-1} - b_{k+1}) / (b_0 - b_2).  The right side is
visibly nonnegative on [0, pi], so a small residual of this identity is a
certificate.  Arbitrary coefficient lists can only be sampled on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NumericalError

ALPHA1_TOL = 1e-10
DEFAULT_GRID = 100_001
# rows of the (grid x degree) sine table evaluated at once
_CHUNK_ELEMS = 4_000_000


@dataclass(frozen=True)
class AutocorrCertificate:
    n: int
    b: tuple[float, ...]
    factor: tuple[float, ...]
    scale: float

    def alpha(self) -> list[float]:
        return autocorr_to_alpha(self.b)


def autocorr(z: Sequence[float]) -> list[float]:
    """b_k = sum_{j} z_j z_{j+k}, k = 0..N-1."""
    z = np.asarray(z, dtype=float)
    n = len(z)
    if n == 0:
        raise ValueError("empty vector")
    return [float(np.dot(z[: n - k], z[k:])) for k in range(n)]


def alpha_to_autocorr(alpha: Sequence[float]) -> list[float]:
    """Back-substitute b from alpha_k = b_{k-1} - b_{k+1} (b_N = b_{N+1} = 0)."""
    n = len(alpha)
    if n == 0:
        raise ValueError("empty coefficient list")
    if abs(alpha[0] - 1.0) > ALPHA1_TOL:
        raise ValueError(f"alpha_1 must be 1, got {alpha[0]!r}")
    b = [0.0] * (n + 2)
    for j in range(n - 1, -1, -1):
        b[j] = alpha[j] + b[j + 2]
    return b[:n]


def autocorr_to_alpha(b: Sequence[float]) -> list[float]:
    """alpha_k = (b_{k-1} - b_{k+1}) / (b_0 - b_2)."""
    n = len(b)
    if n == 0:
        raise ValueError("empty autocorrelation")
    ext = list(b) + [0.0, 0.0]
    scale = ext[0] - ext[2]
    if not scale > 0.0:
        raise NumericalError(f"degenerate scale b_0 - b_2 = {scale!r}")
    return [(ext[k - 1] - ext[k + 1]) / scale for k in range(1, n + 1)]


def make_certificate(z: Sequence[float]) -> AutocorrCertificate:
    b = autocorr(z)
    scale = b[0] - (b[2] if len(b) > 2 else 0.0)
    if not scale > 0.0:
        raise NumericalError(f"degenerate scale b_0 - b_2 = {scale!r}")
    return AutocorrCertificate(len(b), tuple(b), tuple(float(v) for v in z), scale)


def _grid(m: int) -> np.ndarray:
    if m < 2:
        raise ValueError(f"grid needs at least 2 points, got {m}")
    return np.linspace(0.0, np.pi, m)


def sine_poly(alpha: Sequence[float], t: np.ndarray) -> np.ndarray:
    """sum_k alpha_k sin(k t) = sin(t) * sum_k alpha_k U_{k-1}(cos t), by Clenshaw."""
    t = np.asarray(t, dtype=float)
    x2 = 2.0 * np.cos(t)
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    for c in reversed(alpha):
        b1, b2 = c + x2 * b1 - b2, b1
    return np.sin(t) * b1


def sine_poly_direct(alpha: Sequence[float], t: np.ndarray) -> np.ndarray:
    """Same sum from an explicit sin(k t) table, in fixed-size chunks."""
    alpha = np.asarray(alpha, dtype=float)
    t = np.asarray(t, dtype=float)
    k = np.arange(1, len(alpha) + 1)
    rows = max(1, _CHUNK_ELEMS // len(alpha))
    out = np.empty(len(t))
    for s in range(0, len(t), rows):
        out[s : s + rows] = np.sin(np.outer(t[s : s + rows], k)) @ alpha
    return out


def sos_residual(alpha: Sequence[float], z: Sequence[float], m: int) -> float:
    """Max over an m-grid on [0, pi] of the gap in the sum-of-squares identity."""
    if len(alpha) != len(z):
        raise ValueError(f"length mismatch: {len(alpha)} coefficients vs {len(z)} factor entries")
    t = _grid(m)
    b = autocorr(z)
    scale = b[0] - (b[2] if len(b) > 2 else 0.0)
    lhs = scale * sine_poly(alpha, t)
    factor = np.polynomial.polynomial.polyval(np.exp(1j * t), np.asarray(z, dtype=float))
    rhs = np.sin(t) * np.abs(factor) ** 2
    return float(np.max(np.abs(lhs - rhs)))


def grid_min(alpha: Sequence[float], m: int = DEFAULT_GRID) -> float:
    """Minimum of sum_k alpha_k sin(kt) over the uniform m-grid on [0, pi]."""
    return float(np.min(sine_poly(alpha, _grid(m))))


def interior_min(alpha: Sequence[float], m: int = DEFAULT_GRID) -> float:
    """Smallest value at interior grid points (endpoints always give 0)."""
    return float(np.min(sine_poly(alpha, _grid(m))[1:-1]))
