"""Closed-form spectra of the cut quantization and hydrogen corrections.

Everything here is exact arithmetic on the model formulas: the corrected
frequency wbar = omega*sqrt(1+delta^2), the shifted oscillator ladder
E_n = (n+1/2) hbar wbar - hbar^2/(2 m a^2), its isotropic D-dimensional
extension, and the hydrogen-side rules obtained by replacing the
principal quantum number n by n*sqrt(1+delta^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import OscillatorParams, PhysicalConstants

__all__ = [
    "DeltaParameter",
    "LambInputs",
    "delta_parameter",
    "omega_bar",
    "oscillator_level",
    "oscillator_levels",
    "relative_spacing_shift",
    "ddim_level",
    "principal_number_substitution",
    "hydrogen_level",
    "hydrogen_delta",
    "rydberg_relative_correction",
    "lamb_shift",
    "lamb_relative_deviation",
    "residuals_vs_numeric",
]

#: Guard against division by zero in relative residuals.
RESIDUAL_FLOOR = 1e-300


@dataclass(frozen=True)
class DeltaParameter:
    """Dimensionless deviation of the cut quantization from the standard one.

    Built either from oscillator parameters, delta = hbar/(omega m a^2),
    or from a length ratio, delta = (micro/macro)^2, so formulas can
    never be fed a raw length by mistake.
    """

    value: float

    def __post_init__(self) -> None:
        if not (self.value >= 0.0 and math.isfinite(self.value)):
            raise ValueError(f"delta must be non-negative and finite, got {self.value!r}")


@dataclass(frozen=True)
class LambInputs:
    """Inputs of the lowest-order Lamb-shift expression.

    ``bethe_log_argument`` is the ratio (electron rest energy)/(mean
    excitation energy) inside the logarithm; it is kept as a free input.
    """

    n: int
    z: int = 1
    alpha: float = PhysicalConstants().fine_structure_alpha
    bethe_log_argument: float = PhysicalConstants().electron_rest_energy_ev / PhysicalConstants().rydberg_infinity_ev
    hartree_energy: float = PhysicalConstants().hartree_energy_ev
    delta: DeltaParameter = DeltaParameter(0.0)

    def __post_init__(self) -> None:
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.z, (int, np.integer)) and self.z >= 1):
            raise ValueError(f"Z must be a positive integer, got {self.z!r}")
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be positive and finite, got {self.alpha!r}")
        if not (math.isfinite(self.bethe_log_argument) and self.bethe_log_argument > 1.0):
            raise ValueError(
                f"bethe_log_argument must exceed 1, got {self.bethe_log_argument!r}"
            )
        if not (math.isfinite(self.hartree_energy) and self.hartree_energy > 0.0):
            raise ValueError(
                f"hartree_energy must be positive and finite, got {self.hartree_energy!r}"
            )


def delta_parameter(hbar: float, mass: float, omega: float, a: float) -> DeltaParameter:
    """delta = hbar / (omega m a^2); zero in the no-cutting limit a = inf."""
    for name, value in (("hbar", hbar), ("mass", mass), ("omega", omega), ("a", a)):
        if not value > 0.0:
            raise ValueError(f"{name} must be positive, got {value!r}")
    return DeltaParameter(hbar / (omega * mass * a * a))


def omega_bar(omega: float, delta: DeltaParameter) -> float:
    """Corrected circular frequency omega * sqrt(1 + delta^2)."""
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    d = delta.value
    return omega * math.sqrt(1.0 + d * d)


def oscillator_level(n: int, params: OscillatorParams, hbar: float = 1.0) -> float:
    """E_n = (n + 1/2) hbar wbar - hbar^2/(2 m a^2); exact for every a."""
    if not (isinstance(n, (int, np.integer)) and n >= 0):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not params.has_cutting:
        return (n + 0.5) * hbar * params.omega
    a = params.cutting_length
    delta = delta_parameter(hbar, params.mass, params.omega, a)
    wbar = omega_bar(params.omega, delta)
    return (n + 0.5) * hbar * wbar - hbar * hbar / (2.0 * params.mass * a * a)


def oscillator_levels(count: int, params: OscillatorParams, hbar: float = 1.0) -> np.ndarray:
    """The lowest ``count`` levels as an array."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count!r}")
    return np.array([oscillator_level(n, params, hbar) for n in range(count)])


def relative_spacing_shift(delta: DeltaParameter) -> float:
    """Leading-order relative growth of the level spacing, delta^2/2.

    The exact value is sqrt(1+delta^2) - 1; the leading form is accurate
    to delta^4/8.
    """
    d = delta.value
    return 0.5 * d * d


def ddim_level(
    quanta_total: int, dims: int, params: OscillatorParams, hbar: float = 1.0
) -> float:
    """Isotropic D-dimensional level (N + D/2) hbar wbar - D hbar^2/(2 m a^2)."""
    if not (isinstance(quanta_total, (int, np.integer)) and quanta_total >= 0):
        raise ValueError(f"quanta_total must be a non-negative integer, got {quanta_total!r}")
    if not (isinstance(dims, (int, np.integer)) and dims >= 1):
        raise ValueError(f"dims must be a positive integer, got {dims!r}")
    if not params.has_cutting:
        return (quanta_total + 0.5 * dims) * hbar * params.omega
    a = params.cutting_length
    delta = delta_parameter(hbar, params.mass, params.omega, a)
    wbar = omega_bar(params.omega, delta)
    shift = dims * hbar * hbar / (2.0 * params.mass * a * a)
    return (quanta_total + 0.5 * dims) * hbar * wbar - shift


def principal_number_substitution(n: int, delta: DeltaParameter) -> float:
    """Effective principal quantum number n * sqrt(1 + delta^2)."""
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    d = delta.value
    return n * math.sqrt(1.0 + d * d)


def hydrogen_level(
    n: int, delta: DeltaParameter, constants: PhysicalConstants = PhysicalConstants()
) -> float:
    """Hydrogen level -R_inf / (n^2 (1 + delta^2)) in eV."""
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    d = delta.value
    return -constants.rydberg_infinity_ev / (n * n * (1.0 + d * d))


def hydrogen_delta(
    a_cm: float, constants: PhysicalConstants = PhysicalConstants()
) -> DeltaParameter:
    """delta = (a_B / a)^2 for a macroscopic length a in cm."""
    if not a_cm > 0.0:
        raise ValueError(f"a must be positive, got {a_cm!r}")
    ratio = constants.bohr_radius_cm / a_cm
    return DeltaParameter(ratio * ratio)


def rydberg_relative_correction(delta: DeltaParameter) -> float:
    """Leading-order relative decrease of the Rydberg constant, -delta^2."""
    d = delta.value
    return -(d * d)


def lamb_shift(inputs: LambInputs) -> float:
    """Lamb shift with the cut-quantization factor (1 + delta^2)^(-3/2).

    (4/3pi) alpha^3 Z^4 / n^3 * log(bethe_log_argument) * hartree_energy
    times the correction factor; units follow ``hartree_energy``.
    """
    d = inputs.delta.value
    base = (
        (4.0 / (3.0 * math.pi))
        * inputs.alpha ** 3
        * inputs.z ** 4
        / inputs.n ** 3
        * math.log(inputs.bethe_log_argument)
        * inputs.hartree_energy
    )
    return base * (1.0 + d * d) ** -1.5


def lamb_relative_deviation(delta: DeltaParameter) -> float:
    """Relative change of the Lamb shift, (1+delta^2)^(-3/2) - 1.

    Evaluated as expm1(-1.5 log1p(delta^2)) so the -3/2 delta^2 leading
    behavior survives even when delta^2 is far below machine epsilon.
    """
    d = delta.value
    return math.expm1(-1.5 * math.log1p(d * d))


def residuals_vs_numeric(analytic, numeric) -> np.ndarray:
    """Per-level relative residual |numeric - analytic| / max(|analytic|, floor)."""
    numeric_values = np.asarray(getattr(numeric, "eigenvalues", numeric), dtype=float)
    analytic_values = np.asarray(analytic, dtype=float)
    if numeric_values.shape != analytic_values.shape:
        raise ValueError(
            f"length mismatch: analytic has shape {analytic_values.shape}, "
            f"numeric has shape {numeric_values.shape}"
        )
    scale = np.maximum(np.abs(analytic_values), RESIDUAL_FLOOR)
    return np.abs(numeric_values - analytic_values) / scale
