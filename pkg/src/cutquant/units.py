"""Physical constants, unit systems, and oscillator parameters.

Internal computations run in dimensionless oscillator units (hbar = m =
omega = 1); :class:`UnitSystem` converts CGS inputs to those units at the
API boundary and converts results back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

#: Reduced Planck constant in erg*s (CODATA 2018).
HBAR_ERG_S = 1.054571817e-27


@dataclass(frozen=True)
class PhysicalConstants:
    """Reference constants used by the hydrogen and star estimates.

    Lengths are in cm, energies in eV unless the name says otherwise.
    """

    hbar_erg_s: float = HBAR_ERG_S
    rydberg_infinity_ev: float = 13.60569172
    bohr_radius_cm: float = 0.529177e-8
    electron_rest_energy_ev: float = 510998.95
    fine_structure_alpha: float = 7.2973525693e-3

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"constant {name} must be positive and finite, got {value!r}")

    @property
    def hartree_energy_ev(self) -> float:
        """Atomic energy unit e^2/a_0 = 2 R_inf."""
        return 2.0 * self.rydberg_infinity_ev


class UnitMode(Enum):
    DIMENSIONLESS = "dimensionless"
    CGS = "cgs"


@dataclass(frozen=True)
class UnitSystem:
    """Conversion between lab (CGS) quantities and oscillator units.

    The natural scales are sqrt(hbar / (m omega)) for length and
    hbar*omega for energy.  In dimensionless mode both scales are 1 and
    every conversion is the identity.
    """

    mode: UnitMode = UnitMode.DIMENSIONLESS
    mass: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        for name in ("mass", "omega", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")

    @classmethod
    def dimensionless(cls) -> "UnitSystem":
        return cls()

    @classmethod
    def cgs(cls, mass_g: float, omega_rad_s: float, hbar: float = HBAR_ERG_S) -> "UnitSystem":
        return cls(mode=UnitMode.CGS, mass=mass_g, omega=omega_rad_s, hbar=hbar)

    @property
    def length_scale(self) -> float:
        return math.sqrt(self.hbar / (self.mass * self.omega))

    @property
    def energy_scale(self) -> float:
        return self.hbar * self.omega

    def length_to_internal(self, x: float) -> float:
        return x / self.length_scale

    def length_from_internal(self, x: float) -> float:
        return x * self.length_scale

    def energy_to_internal(self, e: float) -> float:
        return e / self.energy_scale

    def energy_from_internal(self, e: float) -> float:
        return e * self.energy_scale


@dataclass(frozen=True)
class OscillatorParams:
    """Mass, frequency, and cutting length of a modified oscillator.

    ``cutting_length = math.inf`` means no cutting: the quantum wall
    vanishes and the spectrum is the standard equispaced ladder.
    """

    mass: float = 1.0
    omega: float = 1.0
    cutting_length: float = math.inf

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValueError(f"mass must be positive and finite, got {self.mass!r}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be positive and finite, got {self.omega!r}")
        if not self.cutting_length > 0.0:
            raise ValueError(f"cutting_length must be positive, got {self.cutting_length!r}")

    @property
    def has_cutting(self) -> bool:
        return math.isfinite(self.cutting_length)
