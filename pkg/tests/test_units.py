import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutquant.units import OscillatorParams, PhysicalConstants, UnitMode, UnitSystem


def test_default_constants_match_printed_values():
    constants = PhysicalConstants()
    assert constants.rydberg_infinity_ev == 13.60569172
    assert constants.bohr_radius_cm == 0.529177e-8
    assert constants.hartree_energy_ev == 2.0 * 13.60569172


def test_constants_all_positive():
    constants = PhysicalConstants()
    for value in vars(constants).values():
        assert value > 0.0 and math.isfinite(value)


@pytest.mark.parametrize("field, value", [
    ("rydberg_infinity_ev", -1.0),
    ("bohr_radius_cm", 0.0),
    ("hbar_erg_s", math.inf),
])
def test_constants_reject_bad_values(field, value):
    with pytest.raises(ValueError):
        PhysicalConstants(**{field: value})


def test_dimensionless_system_is_identity():
    units = UnitSystem.dimensionless()
    assert units.mode is UnitMode.DIMENSIONLESS
    assert units.length_scale == 1.0
    assert units.energy_scale == 1.0
    assert units.length_to_internal(3.5) == 3.5
    assert units.energy_from_internal(0.25) == 0.25


def test_cgs_scales():
    units = UnitSystem.cgs(mass_g=9.109e-28, omega_rad_s=1e15)
    assert units.mode is UnitMode.CGS
    assert units.length_scale == pytest.approx(
        math.sqrt(units.hbar / (9.109e-28 * 1e15)), rel=1e-15
    )
    assert units.energy_scale == pytest.approx(units.hbar * 1e15, rel=1e-15)


@settings(max_examples=200)
@given(
    x=st.floats(min_value=1e-30, max_value=1e30),
    mass=st.floats(min_value=1e-30, max_value=1e5),
    omega=st.floats(min_value=1e-5, max_value=1e20),
)
def test_round_trip_conversions(x, mass, omega):
    units = UnitSystem.cgs(mass_g=mass, omega_rad_s=omega)
    assert units.length_from_internal(units.length_to_internal(x)) == pytest.approx(x, rel=1e-12)
    assert units.energy_from_internal(units.energy_to_internal(x)) == pytest.approx(x, rel=1e-12)
    assert units.length_to_internal(units.length_from_internal(x)) == pytest.approx(x, rel=1e-12)


def test_oscillator_params_validation():
    params = OscillatorParams(mass=1.0, omega=2.0, cutting_length=3.0)
    assert params.has_cutting
    assert not OscillatorParams().has_cutting  # default: no cutting
    with pytest.raises(ValueError):
        OscillatorParams(mass=0.0)
    with pytest.raises(ValueError):
        OscillatorParams(omega=-1.0)
    with pytest.raises(ValueError):
        OscillatorParams(cutting_length=0.0)
    with pytest.raises(ValueError):
        OscillatorParams(cutting_length=-2.0)
