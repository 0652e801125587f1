import math

import numpy as np
import pytest

from typreal.cheb import u_deriv_eval, u_eval
from typreal.errors import BracketError, DegreeError, ParityError
from typreal.spectra import (
    MU,
    NU,
    bisect,
    characteristic_numbers,
    least_nu_bracket,
    mu_roots,
    nu_least,
    nu_roots,
    theta_residual,
)


def test_mu_roots_small():
    assert mu_roots(1) == [pytest.approx(0.5, abs=1e-15)]
    assert mu_roots(7)[-1] == pytest.approx(math.sin(math.pi / 18), abs=1e-15)
    assert mu_roots(7)[-1] == pytest.approx(0.17364, abs=1e-5)
    r = mu_roots(3)
    assert r == pytest.approx([0.809016994, 0.309016994], abs=1e-9)
    for x in r:
        assert abs(u_eval(4, x)) < 1e-12


def test_mu_roots_exact_construction():
    for n in (1, 2, 9, 40):
        assert mu_roots(n) == [math.cos(j * math.pi / (n + 2)) for j in range(1, (n + 1) // 2 + 1)]


def test_mu_roots_degree():
    with pytest.raises(DegreeError):
        mu_roots(0)


def test_nu_least_values():
    assert nu_least(6) == pytest.approx(0.19818, abs=1e-5)
    # U'_3 = 24x^2 - 4
    assert nu_least(2) == pytest.approx(1 / math.sqrt(6), abs=1e-12)
    nu = nu_least(4)
    assert math.cos(5 * math.pi / 12) < nu < math.cos(2 * math.pi / 5)
    assert abs(u_deriv_eval(5, nu)) <= 1e-10


def test_nu_least_parity():
    with pytest.raises(ParityError):
        nu_least(7)


def test_nu_roots_small():
    assert nu_roots(2) == [pytest.approx(0.4082482905, abs=1e-10)]
    (r,) = nu_roots(3)
    assert math.cos(2 * math.pi / 5) < r < math.cos(math.pi / 5)
    r6 = nu_roots(6)
    assert len(r6) == 3
    assert min(r6) == pytest.approx(0.19818, abs=1e-5)


def test_bisect_rejects_bad_bracket():
    with pytest.raises(BracketError):
        bisect(lambda x: x * x + 1, -1.0, 1.0)


def test_characteristic_numbers_small():
    assert characteristic_numbers(1).lambdas == (pytest.approx(1.0, abs=1e-15),)
    s7 = characteristic_numbers(7)
    assert s7.top == pytest.approx(8.29085, abs=1e-5)
    assert s7.top_kind == MU
    s6 = characteristic_numbers(6)
    assert s6.top == pytest.approx(6.36485, abs=1e-5)
    assert s6.top_kind == NU


def test_theta_residual():
    assert abs(theta_residual(6, math.asin(0.19818))) < 2e-3
    assert abs(theta_residual(2, math.asin(1 / math.sqrt(6)))) < 1e-10
    assert theta_residual(4, 0.0) == 12.0
    with pytest.raises(ParityError):
        theta_residual(3, 0.1)


@pytest.mark.parametrize("n", range(1, 201))
def test_interlacing_and_ordering(n):
    s = characteristic_numbers(n)
    assert len(s.mu) == (n + 1) // 2
    assert len(s.nu) == n - (n + 1) // 2
    assert len(s.lambdas) == n
    assert all(a < b for a, b in zip(s.lambdas, s.lambdas[1:]))
    assert s.kinds == tuple(MU if i % 2 == 0 else NU for i in range(n))
    assert s.top_kind == (MU if n % 2 else NU)
    for lam, r in zip(s.lambdas, s.roots):
        assert lam == 1.0 / (4 * r * r)


@pytest.mark.parametrize("n", range(1, 201))
def test_root_residuals(n):
    for r in mu_roots(n):
        assert abs(u_eval(n + 1, r)) <= 1e-10
    if n < 2:
        return
    for r in nu_roots(n):
        # magnitude of the two terms that cancel in U'_{n+1}
        scale = ((n + 3) * abs(u_eval(n, r)) + (n + 1) * abs(u_eval(n + 2, r))) / (2 * (1 - r * r))
        assert abs(u_deriv_eval(n + 1, r)) <= 1e-10 * max(1.0, scale)
    if n % 2 == 0:
        assert abs(u_deriv_eval(n + 1, nu_least(n))) <= 1e-10


def _least_theta_root(n):
    # independent route: scan with step pi/1e5, then bisect the first sign change
    step = math.pi / 1e5
    th = np.arange(0, int(1e5 // 2) + 1) * step
    vals = (n + 3) * np.cos((n + 1) * th) + (n + 1) * np.cos((n + 3) * th)
    i = int(np.argmax(np.sign(vals[1:]) != np.sign(vals[:-1])))
    lo, hi = th[i], th[i + 1]
    flo = theta_residual(n, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if (theta_residual(n, mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.mark.parametrize("n", range(2, 201, 2))
def test_even_bracket_and_theta_equivalence(n):
    nu = nu_least(n)
    lo, hi = least_nu_bracket(n)
    assert math.cos((n + 1) * math.pi / (2 * (n + 2))) == lo
    assert lo < nu < hi
    assert nu == pytest.approx(math.sin(_least_theta_root(n)), abs=1e-10)
    assert min(nu_roots(n)) == nu
