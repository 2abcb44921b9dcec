"""Theta functions, the K3 elliptic genus, the Appell-Lerch sum, and the
integer mock-modular coefficients.  Theta oracles are classical identities;
the mu function is pinned by its quasi-periodicity in both arguments."""

import cmath
import math

import pytest

from qcft.errors import (NotInUpperHalfPlane, RoundingUnstable, ThetaZeroDivision,
                         ZDependenceDetected)
from qcft.mock import (DEFAULT_Z_LIST, JacobiPoint, appell_lerch_mu, elliptic_genus_k3,
                       extract_mock_coefficients, jacobi_theta, mock_remainder)

TAU = 0.13 + 0.78j


def theta(i, z, tau=TAU):
    return jacobi_theta(i, JacobiPoint(z, tau))


# -- theta identities -----------------------------------------------------------------

def test_theta1_odd_theta2_even():
    z = 0.23 + 0.11j
    assert abs(theta(1, z) + theta(1, -z)) < 1e-13
    assert abs(theta(2, z) - theta(2, -z)) < 1e-13
    assert abs(theta(1, 0.0)) < 1e-13


def test_theta_periodicity():
    z = 0.31 - 0.05j
    assert abs(theta(1, z + 1) + theta(1, z)) < 1e-12   # antiperiodic
    assert abs(theta(3, z + 1) - theta(3, z)) < 1e-12
    q_eighth = cmath.exp(1j * math.pi * TAU / 4)
    # theta_1(z + tau/2) = i q^{-1/8} e^{-pi i z} theta_4(z)
    lhs = theta(1, z + TAU / 2)
    rhs = 1j / q_eighth * cmath.exp(-1j * math.pi * z) * theta(4, z)
    assert abs(lhs - rhs) < 1e-12


def test_jacobi_quartic_identity():
    # theta_3(0)^4 = theta_2(0)^4 + theta_4(0)^4
    t2, t3, t4 = (theta(i, 0.0) for i in (2, 3, 4))
    assert abs(t3 ** 4 - t2 ** 4 - t4 ** 4) < 1e-13 * abs(t3) ** 4


def test_theta1_derivative_eta_cubed():
    # theta_1'(0, tau) = 2 pi eta(tau)^3
    from qcft.special import eta_eval
    eps = 1e-5
    deriv = (theta(1, eps) - theta(1, -eps)) / (2 * eps)
    assert abs(deriv - 2 * math.pi * eta_eval(TAU) ** 3) < 1e-7 * abs(deriv)


def test_theta_cutoff_doubling():
    z = 0.29 + 0.08j
    for i in (1, 2, 3, 4):
        a = jacobi_theta(i, JacobiPoint(z, TAU, cutoff=12))
        b = jacobi_theta(i, JacobiPoint(z, TAU, cutoff=48))
        assert abs(a - b) < 1e-14 * max(abs(a), 1.0)


def test_theta_index_validation():
    with pytest.raises(ValueError):
        theta(5, 0.1)
    with pytest.raises(NotInUpperHalfPlane):
        JacobiPoint(0.1, 0.3 - 0.4j)


# -- elliptic genus -------------------------------------------------------------------

def test_elliptic_genus_euler_characteristic():
    for tau in (0.2 + 0.9j, 1j, -0.37 + 0.55j):
        val = elliptic_genus_k3(JacobiPoint(0.0, tau))
        assert abs(val - 24) < 1e-10


def test_elliptic_genus_even_in_z():
    z = 0.21 + 0.06j
    a = elliptic_genus_k3(JacobiPoint(z, TAU))
    b = elliptic_genus_k3(JacobiPoint(-z, TAU))
    assert abs(a - b) < 1e-12 * abs(a)


# -- Appell-Lerch sum ------------------------------------------------------------------

def mu(u, v, tau=TAU):
    return appell_lerch_mu(JacobiPoint(u, tau), z2=v)


def test_mu_symmetric_in_arguments():
    u, v = 0.23 + 0.05j, 0.41 - 0.03j
    assert abs(mu(u, v) - mu(v, u)) < 1e-12


def test_mu_elliptic_shift_u_by_one():
    u, v = 0.19 + 0.04j, 0.37 + 0.02j
    assert abs(mu(u + 1, v) + mu(u, v)) < 1e-12


def test_mu_quasi_periodicity_in_tau_direction():
    # mu(u + tau, v) picks up an exponential plus an inhomogeneous term:
    # mu(u, v) + e^{-2 pi i (u - v) - pi i tau} mu(u + tau, v)
    #   = e^{-pi i (u - v) - pi i tau / 4}
    u, v = 0.23 + 0.05j, 0.41 - 0.03j
    lhs = mu(u, v) + cmath.exp(-2j * math.pi * (u - v) - 1j * math.pi * TAU) \
        * mu(u + TAU, v)
    rhs = cmath.exp(-1j * math.pi * (u - v) - 1j * math.pi * TAU / 4)
    assert abs(lhs - rhs) < 1e-11


def test_mu_diagonal_default():
    z = 0.27 + 0.06j
    assert abs(appell_lerch_mu(JacobiPoint(z, TAU)) - mu(z, z)) < 1e-14


def test_mu_pole_growth_near_zero():
    assert abs(mu(0.01, 0.01)) > abs(mu(0.1, 0.1)) > abs(mu(0.3, 0.3))


def test_mu_rejects_theta_zero():
    with pytest.raises(ThetaZeroDivision):
        mu(0.25, 0.0)   # theta_1(0) = 0


def test_mu_cutoff_doubling():
    u, v = 0.22 + 0.03j, 0.38 - 0.02j
    a = appell_lerch_mu(JacobiPoint(u, TAU, cutoff=16), z2=v)
    b = appell_lerch_mu(JacobiPoint(u, TAU, cutoff=64), z2=v)
    assert abs(a - b) < 1e-13 * abs(a)


# -- remainder and extraction ------------------------------------------------------------

def test_remainder_z_independent_at_24():
    tau = 0.07 + 0.41j
    vals = [mock_remainder(z, tau) for z in DEFAULT_Z_LIST]
    spread = max(abs(a - b) for a in vals for b in vals)
    assert spread < 1e-9 * max(abs(v) for v in vals)


def test_remainder_z_dependent_otherwise():
    tau = 0.07 + 0.41j
    vals = [mock_remainder(z, tau, kappa=23) for z in DEFAULT_Z_LIST]
    spread = max(abs(a - b) for a in vals for b in vals)
    assert spread > 1e-3


def test_extraction_reference_values():
    got = extract_mock_coefficients()
    assert got.values == (-1, 45, 231, 770, 2277)
    assert got.scale == 2
    assert got.max_z_deviation < 1e-6


def test_extraction_stable_across_settings():
    for y0 in (0.2, 0.4):
        for grid in (64, 128):
            got = extract_mock_coefficients(y0=y0, grid=grid, n_terms=4)
            assert got.values == (-1, 45, 231, 770)


def test_extraction_detects_wrong_kappa():
    with pytest.raises(ZDependenceDetected):
        extract_mock_coefficients(kappa=23)


def test_extraction_argument_validation():
    with pytest.raises(ValueError):
        extract_mock_coefficients(y0=0.05)
    with pytest.raises(ValueError):
        extract_mock_coefficients(grid=100)
    with pytest.raises(ValueError):
        extract_mock_coefficients(z_list=(0.2, 0.2, 0.2))


def test_extraction_record():
    rec = extract_mock_coefficients(n_terms=3).to_record()
    assert rec["scale"] == "2/1"
    assert rec["values"] == [-1, 45, 231]
