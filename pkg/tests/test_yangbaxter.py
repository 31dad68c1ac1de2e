import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidphase import braid, linalg, yangbaxter
from braidphase.yangbaxter import (
    RParams,
    SingularParameterError,
    SpectralParam,
    r_from_spectral,
    r_matrix,
    rational_r,
    theta_from_spectral,
    ybe_residual,
)

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


class TestRParams:
    def test_normalized_folds_into_period(self):
        p = RParams(7.0, -1.0).normalized()
        assert 0 <= p.theta < 2 * np.pi
        assert 0 <= p.phi < 2 * np.pi

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            RParams(np.inf, 0.0)


class TestSpectralParam:
    def test_accepts_unit_circle(self):
        SpectralParam(np.exp(0.3j))

    def test_rejects_off_circle(self):
        with pytest.raises(ValueError):
            SpectralParam(1.5 + 0j)

    def test_branch(self):
        assert theta_from_spectral(SpectralParam(1.0 + 0j)) == pytest.approx(np.pi / 2)
        assert theta_from_spectral(SpectralParam(np.exp(1j * np.pi / 4))) == pytest.approx(
            np.pi / 4)


class TestRMatrix:
    def test_identity_at_half_pi(self):
        for phi in (0.0, 1.2):
            r = r_matrix(yangbaxter.THREE_QUBIT, RParams(np.pi / 2, phi))
            assert linalg.frobenius_distance(r, np.eye(8)) < 1e-15

    def test_pure_generator_at_zero(self):
        r = r_matrix(yangbaxter.THREE_QUBIT, RParams(0.0, 0.0))
        assert linalg.frobenius_distance(r, braid.build_braidset(0.0).mcal) < 1e-15

    @pytest.mark.parametrize("system,dim", [("two_qubit", 4), ("three_qubit", 8)])
    def test_unitarity_grid(self, system, dim):
        eye = np.eye(dim)
        worst = 0.0
        for theta in np.linspace(0, 2 * np.pi, 11, endpoint=False):
            for phi in np.linspace(0, 2 * np.pi, 11, endpoint=False):
                r = r_matrix(system, RParams(theta, phi))
                worst = max(worst, linalg.frobenius_distance(linalg.dagger(r) @ r, eye))
        assert worst <= 1e-12

    @given(angles, angles, angles)
    def test_composition_identity(self, theta, theta2, phi):
        # products stay in span{I, mcal}: R(t) R(t') =
        # (sin t sin t' - cos t cos t') I + sin(t + t') mcal
        mcal = braid.build_braidset(phi).mcal
        lhs = (r_matrix("three_qubit", RParams(theta, phi))
               @ r_matrix("three_qubit", RParams(theta2, phi)))
        rhs = ((np.sin(theta) * np.sin(theta2) - np.cos(theta) * np.cos(theta2))
               * np.eye(8)
               + (np.sin(theta) * np.cos(theta2) + np.cos(theta) * np.sin(theta2))
               * mcal)
        assert linalg.frobenius_distance(lhs, rhs) <= 1e-12

    def test_determinant_modulus(self):
        for system in yangbaxter.SYSTEMS:
            for theta, phi in ((0.3, 0.7), (2.2, 4.1)):
                r = r_matrix(system, RParams(theta, phi))
                assert abs(linalg.abs_det(r) - 1.0) <= 1e-10

    def test_unknown_system_rejected(self):
        with pytest.raises(ValueError):
            r_matrix("four_qubit", RParams(0.1, 0.1))


class TestRFromSpectral:
    def test_identity_point(self):
        r = r_from_spectral("three_qubit", SpectralParam(1.0 + 0j), 0.4)
        assert linalg.frobenius_distance(r, np.eye(8)) < 1e-15

    def test_matches_angle_route(self):
        x = SpectralParam(np.exp(1j * np.pi / 4))
        r1 = r_from_spectral("three_qubit", x, 0.9)
        r2 = r_matrix("three_qubit", RParams(np.pi / 4, 0.9))
        assert linalg.frobenius_distance(r1, r2) <= 1e-12

    def test_agreement_on_random_parameters(self):
        rng = np.random.default_rng(17)
        count = 0
        while count < 50:
            a = rng.uniform(-np.pi, np.pi)
            if abs(np.cos(a)) < 1e-3:
                continue
            count += 1
            x = SpectralParam(np.exp(1j * a))
            r1 = r_from_spectral("two_qubit", x, 1.3)
            r2 = r_matrix("two_qubit", RParams(np.pi / 2 - a, 1.3))
            assert linalg.frobenius_distance(r1, r2) <= 1e-12

    def test_singular_parameter_rejected(self):
        with pytest.raises(SingularParameterError):
            r_from_spectral("three_qubit", SpectralParam(1j), 0.0)


class TestYbeResidual:
    def test_identity_point_trivial(self):
        one = SpectralParam(1.0 + 0j)
        assert ybe_residual("two_qubit", one, one, 0.3) < 1e-15

    def test_two_qubit_rational_closes(self):
        x = SpectralParam(np.exp(1j * np.pi / 6))
        y = SpectralParam(np.exp(1j * np.pi / 8))
        assert ybe_residual("two_qubit", x, y, 0.7) <= 1e-10

    def test_two_qubit_rational_closes_for_random_parameters(self):
        rng = np.random.default_rng(3)
        checked = 0
        while checked < 20:
            a, b = rng.uniform(-np.pi, np.pi, 2)
            if min(abs(np.cos(a)), abs(np.cos(b)), abs(np.cos(a + b))) < 1e-3:
                continue
            checked += 1
            res = ybe_residual("two_qubit", SpectralParam(np.exp(1j * a)),
                               SpectralParam(np.exp(1j * b)), 1.9)
            assert res <= 1e-10

    def test_three_qubit_residual_is_reported_not_asserted(self):
        # the overlapping-triple lifts break the closure; record, don't gate
        x = SpectralParam(np.exp(1j * np.pi / 6))
        y = SpectralParam(np.exp(1j * np.pi / 8))
        res = ybe_residual("three_qubit", x, y, 0.7)
        assert np.isfinite(res) and res >= 0.0
        lifted = linalg.kron(braid.build_braidset(0.7).mcal, np.eye(2))
        shifted = linalg.kron(np.eye(2), braid.build_braidset(0.7).mcal)
        sandwich = linalg.frobenius_distance(lifted @ shifted @ lifted, shifted)
        assert sandwich > 1.0  # the algebra deficit behind the nonzero residual

    def test_unitary_family_violates_multiplicative_form(self):
        x = SpectralParam(np.exp(1j * np.pi / 6))
        y = SpectralParam(np.exp(1j * np.pi / 8))
        assert ybe_residual("two_qubit", x, y, 0.7, family="unitary") > 1.0

    def test_singular_composite_rejected(self):
        # arg(x) + arg(y) = pi/2 makes x*y singular for the theta map
        x = SpectralParam(np.exp(1j * np.pi / 4))
        with pytest.raises(SingularParameterError):
            ybe_residual("two_qubit", x, x, 0.0)

    def test_rational_r_rejects_zero(self):
        with pytest.raises(ValueError):
            rational_r("two_qubit", 0.0, 0.0)

    def test_unknown_family_rejected(self):
        one = SpectralParam(1.0 + 0j)
        with pytest.raises(ValueError):
            ybe_residual("two_qubit", one, one, 0.0, family="other")
