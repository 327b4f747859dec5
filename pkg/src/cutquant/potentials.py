"""Potentials and the effective potential of a cut quantization.

The modified Hamiltonian is the standard kinetic term plus
V_eff(x) = V(x) + (hbar^2 / 2m) * lap(f)/f.  For a Gaussian cutting
function the added piece is a quadratic "quantum wall"
(hbar^2 / 2 m a^2)(x^2/a^2 - 1) that confines the wave function within
scale a regardless of V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cutting import CuttingFunction, GaussianCutting, IdentityCutting

__all__ = [
    "Potential",
    "HarmonicPotential",
    "FreeBoxPotential",
    "TabulatedPotential",
    "QuantumWall",
    "EffectivePotential",
    "quantum_wall",
    "effective_potential",
]


class Potential:
    """Base class for evaluable potentials; callables of x."""

    def __call__(self, x):
        raise NotImplementedError


@dataclass(frozen=True)
class HarmonicPotential(Potential):
    """V(x) = (m/2) omega^2 x^2."""

    mass: float = 1.0
    omega: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValueError(f"mass must be positive and finite, got {self.mass!r}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be positive and finite, got {self.omega!r}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        result = 0.5 * self.mass * self.omega * self.omega * x * x
        return float(result) if x.ndim == 0 else result


@dataclass(frozen=True)
class FreeBoxPotential(Potential):
    """V = 0; confinement comes only from the Dirichlet walls of an explicit grid."""

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        result = np.zeros_like(x)
        return float(result) if x.ndim == 0 else result


@dataclass(frozen=True)
class TabulatedPotential(Potential):
    """Potential sampled on a strictly increasing abscissa table, linearly interpolated."""

    abscissae: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        xs = np.array(np.atleast_1d(self.abscissae), dtype=float)
        vs = np.array(np.atleast_1d(self.values), dtype=float)
        if xs.ndim != 1 or vs.ndim != 1 or xs.size != vs.size:
            raise ValueError("abscissae and values must be 1-d arrays of equal length")
        if xs.size < 2:
            raise ValueError("tabulated potential needs at least 2 points")
        if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(vs)):
            raise ValueError("tabulated potential entries must be finite")
        if not np.all(np.diff(xs) > 0.0):
            raise ValueError("abscissae must be strictly increasing")
        xs.setflags(write=False)
        vs.setflags(write=False)
        object.__setattr__(self, "abscissae", xs)
        object.__setattr__(self, "values", vs)

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        xs = self.abscissae
        if np.any(x_arr < xs[0]) or np.any(x_arr > xs[-1]):
            raise ValueError(
                f"evaluation outside tabulated range [{xs[0]!r}, {xs[-1]!r}]"
            )
        result = np.interp(x_arr, xs, self.values)
        return float(result) if x_arr.ndim == 0 else result


@dataclass(frozen=True)
class QuantumWall(Potential):
    """The wall (hbar^2 / 2 m a^2)(x^2/a^2 - 1) raised by a Gaussian cutting function."""

    a: float
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError(f"cutting length a must be positive and finite, got {self.a!r}")
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValueError(f"mass must be positive and finite, got {self.mass!r}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        a2 = self.a * self.a
        scale = self.hbar * self.hbar / (2.0 * self.mass * a2)
        result = scale * ((x * x) / a2 - 1.0)
        return float(result) if x.ndim == 0 else result


@dataclass(frozen=True)
class EffectivePotential(Potential):
    """V(x) plus the cutting term (hbar^2/2m) lap(f)/f."""

    potential: Potential
    cutting: CuttingFunction
    mass: float = 1.0
    hbar: float = 1.0

    def __call__(self, x):
        kinetic_scale = self.hbar * self.hbar / (2.0 * self.mass)
        return self.potential(x) + kinetic_scale * self.cutting.laplacian_ratio(x, dims=1)


def quantum_wall(a: float, mass: float = 1.0, hbar: float = 1.0) -> QuantumWall:
    """Quadratic quantum wall of a Gaussian cutting with length a."""
    return QuantumWall(a=a, mass=mass, hbar=hbar)


def effective_potential(
    potential: Potential,
    cutting: CuttingFunction,
    mass: float = 1.0,
    hbar: float = 1.0,
) -> Potential:
    """Effective potential of the cut quantization of (potential, cutting).

    Identity cutting returns ``potential`` itself, so the unmodified
    problem stays bit-identical to one built without any cutting.
    For Gaussian cutting and a harmonic V with the same mass, the result
    equals (m/2) wbar^2 x^2 - hbar^2/(2 m a^2) pointwise, where wbar is
    the corrected frequency.
    """
    if not (math.isfinite(mass) and mass > 0.0):
        raise ValueError(f"mass must be positive and finite, got {mass!r}")
    if isinstance(cutting, IdentityCutting):
        return potential
    return EffectivePotential(potential=potential, cutting=cutting, mass=mass, hbar=hbar)


def wall_for_cutting(cutting: CuttingFunction, mass: float = 1.0, hbar: float = 1.0) -> Potential:
    """The standalone wall generated by a cutting function (zero for identity)."""
    if isinstance(cutting, IdentityCutting):
        return FreeBoxPotential()
    if isinstance(cutting, GaussianCutting):
        return QuantumWall(a=cutting.a, mass=mass, hbar=hbar)
    return EffectivePotential(potential=FreeBoxPotential(), cutting=cutting, mass=mass, hbar=hbar)
