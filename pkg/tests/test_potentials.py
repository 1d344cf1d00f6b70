import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.special import eval_genlaguerre

from sinebasis import (
    RadialProblem,
    catalog,
    confined_hydrogen_cases,
    effective_radial,
    hydrogen_exact_energy,
    oscillator_exact_energy,
    singular_ground_state,
)
from sinebasis.errors import ConstraintViolation, DomainError, UnsupportedCaseError
from sinebasis.potentials import centrifugal_coefficient


R = np.linspace(0.05, 6.0, 1000)


def test_effective_radial_examples():
    V = catalog("harmonic")
    U = effective_radial(RadialProblem(3, 0, V))
    np.testing.assert_array_equal(U(R), V(R))
    U1 = effective_radial(RadialProblem(3, 1, V))
    np.testing.assert_allclose(U1(R), R ** 2 + 2 / R ** 2, rtol=1e-15)
    assert U1.singularity_order == 2 and U1.domain_left == 0.0


def test_effective_radial_keeps_stronger_singularity():
    U = effective_radial(RadialProblem(3, 0, catalog("singular_ABC", [1, 1, 1])))
    assert U.singularity_order == 6


def test_d2_l0_rejected():
    with pytest.raises(UnsupportedCaseError, match="effective potential representation"):
        effective_radial(RadialProblem(2, 0, catalog("harmonic")))


def test_centrifugal_coefficient_d2_l0_value():
    # the rejected case would carry -1/(4 r^2)
    assert centrifugal_coefficient(2, 0) == -0.25


@given(st.integers(4, 12), st.integers(0, 6))
def test_centrifugal_swap_invariance(d, ell):
    assert centrifugal_coefficient(d, ell) == centrifugal_coefficient(d - 2, ell + 1)


def test_d5_matches_d3_shifted_ell():
    V = catalog("harmonic")
    for ell in range(4):
        a = effective_radial(RadialProblem(5, ell, V))
        b = effective_radial(RadialProblem(3, ell + 1, V))
        np.testing.assert_array_equal(a(R), b(R))


def test_catalog_examples():
    x = np.linspace(-3, 3, 13)
    np.testing.assert_array_equal(catalog("harmonic")(x), x ** 2)
    r = np.linspace(0.1, 4, 17)
    np.testing.assert_allclose(catalog("singular_ABC", [1, 1, 1])(r), r ** 2 + r ** -4 + r ** -6, rtol=1e-14)
    s = catalog("sine_squared_confined", [1])
    assert s.confinement_box == (-math.pi / 2, math.pi / 2)
    np.testing.assert_allclose(s(x[3:10] / 2), np.sin(x[3:10] / 2) ** 2)
    h = catalog("hydrogenic", [1])
    assert h.singularity_order == 1 and h.domain_left == 0
    np.testing.assert_allclose(catalog("quartic_anharmonic")(x), x ** 2 + x ** 4)
    assert catalog("zero")(1.7) == 0


def test_catalog_errors():
    with pytest.raises(DomainError, match="unknown"):
        catalog("morse")
    with pytest.raises(DomainError, match="parameter"):
        catalog("singular_ABC", [1, 1])
    with pytest.raises(DomainError):
        catalog("harmonic", [2.0])


@pytest.mark.parametrize("n,ell,d,E", [(1, 0, 3, 3), (10, 3, 5, 47), (1, 0, 4, 4)])
def test_oscillator_exact(n, ell, d, E):
    assert oscillator_exact_energy(n, ell, d) == E


@pytest.mark.parametrize("n,ell,E", [(1, 0, -0.25), (2, 1, -1 / 36), (4, 2, -1 / 144)])
def test_hydrogen_exact(n, ell, E):
    assert hydrogen_exact_energy(n, ell, 1.0) == pytest.approx(E, rel=1e-15)


def test_singular_ground_state_examples():
    assert singular_ground_state(1, 1) == 5
    assert singular_ground_state(9, 9) == 7


def test_singular_ground_state_b_zero():
    # (2 sqrt C)^2 = C (1 + 8 sqrt C)  =>  4 = 1 + 8 sqrt C  =>  C = 9/64
    C = (3 / 8) ** 2
    assert C == 9 / 64
    assert (2 * math.sqrt(C)) ** 2 == C * (1 + 8 * math.sqrt(C))
    assert singular_ground_state(0.0, C) == 4


def test_singular_ground_state_violation():
    with pytest.raises(ConstraintViolation) as info:
        singular_ground_state(1 + 1e-3, 1)
    assert info.value.residual > 1e-12
    with pytest.raises(ConstraintViolation):
        singular_ground_state(9 - 1e-3, 9)
    with pytest.raises(DomainError):
        singular_ground_state(1, 0)


@given(st.floats(0.01, 100))
def test_constraint_manifold_accepts_exact_points(C):
    # B from the constraint: 2 sqrt C + B = sqrt(C (1 + 8 sqrt C))
    s = math.sqrt(C)
    B = math.sqrt(C * (1 + 8 * s)) - 2 * s
    assert singular_ground_state(B, C) == pytest.approx(4 + B / s, rel=1e-12)


def test_confined_hydrogen_cases_table():
    rows = confined_hydrogen_cases()
    assert len(rows) == 12
    assert rows[0] == (0, 1, 4.0, -1 / 16)
    assert (3, 1, 40.0, -1 / 100) in rows
    r = [c for c in rows if (c.ell, c.n) == (1, 2)][0]
    assert r.b == pytest.approx(4 * (5 + math.sqrt(5)), rel=1e-15) and r.E == -1 / 64
    assert [c.b for c in rows if c.ell == 3 and c.E == -1 / 144] == [36.0, 72.0]


def test_confined_hydrogen_radii_are_nodes():
    # unconfined radial function r^(l+1) e^(-r/(2 nu)) L^(2l+1)_{nu-l-1}(r/nu) vanishes at b
    for c in confined_hydrogen_cases():
        nu = round(1 / math.sqrt(-4 * c.E))
        nodes = nu - c.ell - 1
        assert nodes in (1, 2)
        assert eval_genlaguerre(nodes, 2 * c.ell + 1, c.b / nu) == pytest.approx(0, abs=1e-10)
