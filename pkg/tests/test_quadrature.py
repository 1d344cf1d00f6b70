import math

import numpy as np
import pytest
from scipy.integrate import quad

from sinebasis import BasisWindow, QuadratureConfig, catalog, integrate, potential_matrix_element
from sinebasis.basis import basis_function, symmetric_window
from sinebasis.errors import DomainError, IntegrationError
from sinebasis.potentials import Potential, RadialProblem, effective_radial
from sinebasis.quadrature import (
    DEFAULT_CONFIG,
    panel_breakpoints,
    polynomial_cos_moments,
    potential_matrix,
    quadrature_cos_moments,
)


def test_integrate_examples():
    v, err = integrate(lambda x: np.ones_like(x), 0, 1)
    assert v == pytest.approx(1, abs=1e-15) and err < 1e-14
    v, err = integrate(lambda x: np.sin(math.pi * x) ** 2, 0, 1)
    assert v == pytest.approx(0.5, abs=1e-15) and err <= 1e-12


def test_integrate_inverse_square_graded():
    # antiderivative -1/x
    exact = 1 / 0.01 - 1 / 5.2
    v, err = integrate(lambda x: x ** -2, 0.01, 5.2, singular_left=True)
    assert v == pytest.approx(exact, rel=1e-12)
    assert err < 1e-8


def test_integrate_scalar_callable():
    v, _ = integrate(lambda x: math.exp(x), 0, 1)
    assert v == pytest.approx(math.e - 1, rel=1e-14)


def test_integrate_nonfinite_names_abscissa():
    with pytest.raises(IntegrationError) as info:
        integrate(lambda x: np.where(x > 0.5, np.inf, 1.0), 0, 1)
    assert info.value.abscissa > 0.5
    assert repr(info.value.abscissa) in str(info.value)


def test_quadrature_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(nodes_per_panel=1)
    with pytest.raises(DomainError):
        QuadratureConfig(panels=0)
    with pytest.raises(DomainError):
        QuadratureConfig(geometric_grading=0)
    with pytest.raises(DomainError):
        QuadratureConfig(target_rel_tol=0)


def test_graded_breakpoints():
    edges = panel_breakpoints(0.0, 255.0, DEFAULT_CONFIG, singular_left=True)
    np.testing.assert_allclose(np.diff(edges), 2.0 ** np.arange(8), rtol=1e-12)
    edges = panel_breakpoints(0.0, 1.0, DEFAULT_CONFIG, singular_left=True, min_panels=40)
    assert np.diff(edges).max() <= 1 / 40 + 1e-15
    assert edges[0] == 0 and edges[-1] == 1


def test_constant_potential_elements():
    one = Potential(lambda x: np.ones_like(np.asarray(x, float)), name="one")
    w = BasisWindow(-1.1, 2.3, 6)
    assert potential_matrix_element(one, 2, 5, w) == pytest.approx(0, abs=1e-14)
    assert potential_matrix_element(one, 3, 3, w) == pytest.approx(1, abs=1e-14)
    const = Potential(lambda x: np.ones_like(np.asarray(x, float)), name="one", polynomial=(1.0,))
    assert potential_matrix_element(const, 2, 5, w) == pytest.approx(0, abs=1e-15)
    assert potential_matrix_element(const, 3, 3, w) == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("L", [1.0, 3.0, 6.86])
def test_harmonic_ground_element(L):
    w = symmetric_window(L, 1)
    oracle, _ = quad(lambda x: x * x * basis_function(1, w, x) ** 2, -L, L, epsabs=1e-14, epsrel=1e-13)
    closed = L * L * (1 / 3 - 2 / math.pi ** 2)
    assert oracle == pytest.approx(closed, rel=1e-12)
    assert potential_matrix_element(catalog("harmonic"), 1, 1, w) == pytest.approx(closed, rel=1e-13)


def test_closed_form_matches_quadrature_path():
    w = BasisWindow(-4.0, 4.0, 10)
    for k in (2, 4):
        coeffs = tuple(1.0 if p == k else 0.0 for p in range(k + 1))
        mono = Potential(lambda x, k=k: np.asarray(x, float) ** k, polynomial=coeffs)
        numeric = Potential(lambda x, k=k: np.asarray(x, float) ** k)
        for i in range(1, 11):
            for j in range(i, 11):
                c = potential_matrix_element(mono, i, j, w)
                q = potential_matrix_element(numeric, i, j, w)
                assert c == pytest.approx(q, rel=1e-12, abs=1e-12 * 4.0 ** k)


def test_closed_form_moments_off_centre():
    m = np.arange(0, 60)
    coeffs = (0.5, -1.0, 2.0, 3.0, -0.7)
    exact = polynomial_cos_moments(coeffs, 0.3, 2.1, m)
    numeric = quadrature_cos_moments(lambda x: np.polynomial.polynomial.polyval(x, coeffs), 0.3, 2.1, m,
                                     DEFAULT_CONFIG)
    np.testing.assert_allclose(exact, numeric, rtol=1e-12, atol=1e-13)


def _catalog_cases():
    w_line = symmetric_window(3.0, 20)
    yield catalog("harmonic"), w_line
    yield catalog("quartic_anharmonic"), w_line
    yield catalog("sine_squared_confined", [5]), symmetric_window(math.pi / 2, 20)
    yield effective_radial(RadialProblem(3, 0, catalog("hydrogenic", [1]))), BasisWindow(0, 20, 20)
    yield effective_radial(RadialProblem(3, 2, catalog("hydrogenic", [1]))), BasisWindow(0, 20, 20)
    yield effective_radial(RadialProblem(4, 0, catalog("harmonic"))), BasisWindow(0, 5, 20)
    yield effective_radial(RadialProblem(3, 0, catalog("singular_ABC", [1, 1, 1]))), BasisWindow(0.01, 5.2, 20)


@pytest.mark.parametrize("V,w", list(_catalog_cases()), ids=lambda v: getattr(v, "potential_id", ""))
def test_node_doubling_stability(V, w):
    P, err = potential_matrix(V, w, estimate_error=True)
    scale = np.abs(P).max()
    tol = DEFAULT_CONFIG.target_rel_tol
    big = np.abs(P) >= 1e-3 * scale
    assert np.all(err[big] < tol * np.abs(P[big]))
    # elements that vanish analytically carry roundoff only; hold them to tol relative to the matrix
    assert np.all(err[~big] < tol * scale)


@pytest.mark.parametrize("V,w", list(_catalog_cases()), ids=lambda v: getattr(v, "potential_id", ""))
def test_single_elements_agree_with_batch(V, w):
    P, _ = potential_matrix(V, w)
    for i, j in [(1, 1), (1, 2), (3, 7), (7, 3), (20, 20), (19, 20), (2, 18)]:
        e = potential_matrix_element(V, i, j, w)
        assert e == pytest.approx(P[i - 1, j - 1], rel=1e-11, abs=1e-12 * np.abs(P).max())
        assert e == potential_matrix_element(V, j, i, w)


def test_parity_zeros_are_exact():
    P, _ = potential_matrix(catalog("sine_squared_confined", [1]), symmetric_window(math.pi / 2, 12))
    n = np.arange(12)
    assert np.all(P[(n[:, None] + n[None, :]) % 2 == 1] == 0.0)


def test_window_preconditions():
    sing = effective_radial(RadialProblem(3, 0, catalog("singular_ABC", [1, 1, 1])))
    with pytest.raises(DomainError):
        potential_matrix_element(sing, 1, 1, BasisWindow(0, 5, 3))
    with pytest.raises(DomainError):
        potential_matrix_element(catalog("hydrogenic", [1]), 1, 1, BasisWindow(-1, 5, 3))
    with pytest.raises(DomainError):
        potential_matrix_element(catalog("sine_squared_confined", [1]), 1, 1, symmetric_window(2.0, 3))
    with pytest.raises(DomainError):
        potential_matrix_element(catalog("delta"), 1, 1, symmetric_window(1.0, 3))
    with pytest.raises(IndexError):
        potential_matrix_element(catalog("harmonic"), 0, 1, symmetric_window(1.0, 3))


def test_radial_element_at_origin_against_adaptive_quadrature():
    # sin sin / r^2 is bounded at r = 0, so a = 0 is admissible for order-2 potentials
    U = effective_radial(RadialProblem(4, 0, catalog("harmonic")))
    w = BasisWindow(0.0, 4.25, 6)
    for i, j in [(1, 1), (2, 5), (6, 6)]:
        oracle, _ = quad(lambda r: U(r) * basis_function(i, w, r) * basis_function(j, w, r), 0, 4.25,
                         epsabs=1e-13, epsrel=1e-13, limit=200)
        assert potential_matrix_element(U, i, j, w) == pytest.approx(oracle, rel=1e-11, abs=1e-12)
