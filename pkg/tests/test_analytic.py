import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutquant.analytic import (
    DeltaParameter,
    LambInputs,
    ddim_level,
    delta_parameter,
    hydrogen_delta,
    hydrogen_level,
    lamb_relative_deviation,
    lamb_shift,
    omega_bar,
    oscillator_level,
    oscillator_levels,
    principal_number_substitution,
    relative_spacing_shift,
    residuals_vs_numeric,
    rydberg_relative_correction,
)
from cutquant.units import OscillatorParams, PhysicalConstants

CONSTANTS = PhysicalConstants()

deltas = st.floats(min_value=0.0, max_value=2.0)


def params_for(a: float) -> OscillatorParams:
    return OscillatorParams(mass=1.0, omega=1.0, cutting_length=a)


class TestDeltaParameter:
    def test_from_oscillator_inputs(self):
        assert delta_parameter(1.0, 1.0, 1.0, 2.0).value == pytest.approx(0.25)
        assert delta_parameter(1.0, 1.0, 1.0, 10.0).value == pytest.approx(0.01)

    def test_no_cutting_limit(self):
        assert delta_parameter(1.0, 1.0, 1.0, math.inf).value == 0.0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            DeltaParameter(-0.1)
        with pytest.raises(ValueError):
            DeltaParameter(math.nan)
        with pytest.raises(ValueError):
            delta_parameter(1.0, 1.0, -1.0, 2.0)


class TestOmegaBar:
    def test_values(self):
        assert omega_bar(1.0, DeltaParameter(0.25)) == pytest.approx(1.0307764064044151, rel=1e-12)
        assert omega_bar(1.0, DeltaParameter(0.0)) == 1.0
        assert omega_bar(2.0, DeltaParameter(0.25)) == pytest.approx(2.0615528128088303, rel=1e-12)

    @settings(max_examples=100)
    @given(d=deltas)
    def test_monotone_in_delta(self, d):
        assert omega_bar(1.0, DeltaParameter(d + 0.01)) > omega_bar(1.0, DeltaParameter(d))


class TestOscillatorLevel:
    def test_cut_levels(self):
        assert oscillator_level(0, params_for(2.0)) == pytest.approx(0.3903882032022076, rel=1e-12)
        assert oscillator_level(1, params_for(2.0)) == pytest.approx(1.4211646096066226, rel=1e-12)

    def test_uncut_ladder(self):
        assert oscillator_level(1, OscillatorParams()) == 1.5
        assert oscillator_level(0, OscillatorParams(omega=3.0)) == 1.5

    @settings(max_examples=100)
    @given(n=st.integers(min_value=0, max_value=40), a=st.floats(min_value=0.5, max_value=100.0))
    def test_spacing_is_exactly_corrected_frequency(self, n, a):
        params = params_for(a)
        spacing = oscillator_level(n + 1, params) - oscillator_level(n, params)
        wbar = omega_bar(1.0, delta_parameter(1.0, 1.0, 1.0, a))
        assert spacing == pytest.approx(wbar, rel=1e-12)

    @settings(max_examples=150)
    @given(n=st.integers(min_value=0, max_value=60),
           d=st.floats(min_value=1e-3, max_value=0.1))
    def test_expansion_remainder_bound(self, n, d):
        # exact level vs the small-correction expansion; the remainder is
        # bounded by 1.1 (n+1/2) omega delta^4/8.  delta below ~1e-3 would
        # push the remainder under double rounding noise of the subtraction.
        a = 1.0 / math.sqrt(d)
        params = params_for(a)
        exact = oscillator_level(n, params)
        expanded = (n + 0.5) - 1.0 / (2.0 * a * a) + (n + 0.5) / (2.0 * a ** 4)
        assert abs(exact - expanded) <= 1.1 * (n + 0.5) * d ** 4 / 8.0

    def test_levels_array(self):
        np.testing.assert_allclose(
            oscillator_levels(3, OscillatorParams()), [0.5, 1.5, 2.5], rtol=1e-15
        )

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            oscillator_level(-1, OscillatorParams())


class TestSpacingShift:
    def test_small_delta(self):
        d = DeltaParameter(0.01)
        leading = relative_spacing_shift(d)
        assert leading == pytest.approx(5.0e-5)
        exact = math.sqrt(1.0 + 0.01 ** 2) - 1.0
        assert abs(exact - leading) <= 0.01 ** 4 / 8.0

    def test_zero(self):
        assert relative_spacing_shift(DeltaParameter(0.0)) == 0.0

    def test_quarter(self):
        d = DeltaParameter(0.25)
        assert relative_spacing_shift(d) == pytest.approx(0.03125)
        exact = math.sqrt(1.0625) - 1.0
        assert abs(relative_spacing_shift(d) - exact) == pytest.approx(4.88e-4, rel=0.05)


class TestDdimLevel:
    @settings(max_examples=60)
    @given(n=st.integers(min_value=0, max_value=20), a=st.floats(min_value=0.5, max_value=50.0))
    def test_one_dimension_reduces_to_line_spectrum(self, n, a):
        params = params_for(a)
        assert ddim_level(n, 1, params) == pytest.approx(oscillator_level(n, params), rel=1e-14)

    def test_three_dimensional_ground(self):
        params = params_for(2.0)
        value = ddim_level(0, 3, params)
        assert value == pytest.approx(1.1711646096066226, rel=1e-12)
        assert value == pytest.approx(3.0 * oscillator_level(0, params), rel=1e-12)

    def test_two_dimensional_uncut(self):
        assert ddim_level(1, 2, OscillatorParams()) == 2.0


class TestHydrogen:
    def test_substitution_examples(self):
        assert principal_number_substitution(1, DeltaParameter(0.0)) == 1.0
        assert principal_number_substitution(2, DeltaParameter(0.25)) == pytest.approx(
            2.0615528128088303, rel=1e-12
        )
        assert principal_number_substitution(3, DeltaParameter(1.0)) == pytest.approx(
            3.0 * math.sqrt(2.0), rel=1e-12
        )

    def test_levels(self):
        assert hydrogen_level(1, DeltaParameter(0.0)) == pytest.approx(-13.60569172, abs=1e-12)
        assert hydrogen_level(2, DeltaParameter(0.0)) == pytest.approx(-3.40142293, abs=1e-12)
        assert hydrogen_level(1, DeltaParameter(1.0)) == pytest.approx(-6.80284586, abs=1e-12)

    def test_delta_from_macroscopic_length(self):
        delta = hydrogen_delta(1.0)
        assert delta.value == pytest.approx(2.80028297329e-17, rel=1e-11)
        assert f"{delta.value:.6g}" == "2.80028e-17"
        assert hydrogen_delta(CONSTANTS.bohr_radius_cm).value == pytest.approx(1.0, rel=1e-14)
        assert hydrogen_delta(3e5).value == pytest.approx(3.1114255258777777e-28, rel=1e-11)

    @settings(max_examples=100)
    @given(n=st.integers(min_value=1, max_value=20), d=deltas)
    def test_level_consistent_with_substitution_rule(self, n, d):
        delta = DeltaParameter(d)
        via_substitution = -CONSTANTS.rydberg_infinity_ev / principal_number_substitution(n, delta) ** 2
        assert hydrogen_level(n, delta) == pytest.approx(via_substitution, rel=1e-12)

    @settings(max_examples=100)
    @given(d=st.floats(min_value=0.0, max_value=1.0))
    def test_level_rises_toward_zero_with_delta(self, d):
        low = hydrogen_level(1, DeltaParameter(d))
        high = hydrogen_level(1, DeltaParameter(d + 0.1))
        assert high > low

    def test_rydberg_correction(self):
        assert rydberg_relative_correction(DeltaParameter(0.0)) == 0.0
        assert rydberg_relative_correction(DeltaParameter(1e-3)) == pytest.approx(-1e-6)


class TestLambShift:
    def base_inputs(self, delta=0.0, n=1, z=1):
        return LambInputs(n=n, z=z, delta=DeltaParameter(delta))

    def test_zero_delta_is_uncorrected(self):
        inputs = self.base_inputs()
        expected = (
            (4.0 / (3.0 * math.pi))
            * CONSTANTS.fine_structure_alpha ** 3
            * math.log(inputs.bethe_log_argument)
            * CONSTANTS.hartree_energy_ev
        )
        assert lamb_shift(inputs) == pytest.approx(expected, rel=1e-14)

    def test_z_fourth_power_scaling(self):
        assert lamb_shift(self.base_inputs(z=2)) == pytest.approx(
            16.0 * lamb_shift(self.base_inputs(z=1)), rel=1e-14
        )

    def test_small_delta_relative_deviation(self):
        deviation = lamb_relative_deviation(DeltaParameter(1e-4))
        assert deviation == pytest.approx(-1.5e-8, abs=1e-12)

    def test_deviation_survives_tiny_delta(self):
        # at delta^2 far below machine epsilon the naive factor rounds to 1
        delta = hydrogen_delta(1.0)
        deviation = lamb_relative_deviation(delta)
        assert deviation == pytest.approx(-1.5 * delta.value ** 2, rel=1e-10)
        assert deviation != 0.0

    @settings(max_examples=100)
    @given(n=st.integers(min_value=1, max_value=10), d=deltas)
    def test_correction_factor_matches_substitution_rule(self, n, d):
        delta = DeltaParameter(d)
        factor = lamb_shift(self.base_inputs(delta=d, n=n)) / lamb_shift(self.base_inputs(n=n))
        expected = principal_number_substitution(n, delta) ** -3 * n ** 3
        assert factor == pytest.approx(expected, rel=1e-12)

    @settings(max_examples=60)
    @given(d=st.floats(min_value=0.0, max_value=1.0))
    def test_shift_decreases_with_delta(self, d):
        assert lamb_shift(self.base_inputs(delta=d + 0.1)) < lamb_shift(self.base_inputs(delta=d))

    def test_rejects_log_argument_at_or_below_one(self):
        with pytest.raises(ValueError, match="bethe"):
            LambInputs(n=1, bethe_log_argument=1.0)
        with pytest.raises(ValueError, match="bethe"):
            LambInputs(n=1, bethe_log_argument=0.5)


class TestResiduals:
    def test_identical_inputs(self):
        np.testing.assert_array_equal(residuals_vs_numeric([1.0, 2.0], [1.0, 2.0]), [0.0, 0.0])

    def test_relative_scale(self):
        got = residuals_vs_numeric([0.5], [0.5000005])
        assert got[0] == pytest.approx(1e-6, rel=1e-6)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            residuals_vs_numeric([1.0, 2.0], [1.0])

    def test_accepts_result_objects(self):
        class FakeResult:
            eigenvalues = np.array([1.0, 2.0])

        np.testing.assert_allclose(
            residuals_vs_numeric([1.0, 2.0], FakeResult()), [0.0, 0.0]
        )

    def test_zero_reference_guard(self):
        got = residuals_vs_numeric([0.0], [1e-200])
        assert np.isfinite(got[0])
