"""Extremal typically real polynomials maximizing |F| on the unit disk."""

from .certify import (
    AutocorrCertificate,
    alpha_to_autocorr,
    autocorr,
    autocorr_to_alpha,
    grid_min,
    make_certificate,
    sos_residual,
)
from .cheb import ChebPoint, pair_sum_closed, t_eval, u_deriv_eval, u_eval
from .errors import BracketError, DegreeError, DomainError, NumericalError, ParityError
from .extremal import (
    CurveSample,
    ExtremalPolynomial,
    brandt_eval,
    coeffs_eq14,
    compute_extremal,
    curve_samples,
    eval_poly,
    j_value,
    mirror,
    upper_bound,
)
from .pencil import (
    PencilMatrices,
    PrincipalVector,
    build_pencil,
    det_pencil,
    pencil_residual,
    principal_vector,
    z_vector_mu,
    z_vector_nu,
)
from .spectra import Spectrum, characteristic_numbers, mu_roots, nu_least, nu_roots, theta_residual

__version__ = "0.1.0"
