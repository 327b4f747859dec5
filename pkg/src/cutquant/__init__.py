"""Bound-state spectra of cut quantizations.

A classical Hamiltonian can be quantized after inserting a positive
"cutting" profile f(x) into the kinetic term; the quantum side picks up
the extra potential (hbar^2/2m) lap(f)/f.  This package computes the
resulting spectra numerically (finite-difference grid plus a
Sturm-bisection tridiagonal eigensolver) and analytically (closed forms
for the Gaussian-cut oscillator), propagates the correction to hydrogen
observables, and evaluates coherence-amplification estimates for
macroscopic many-body systems.
"""

__version__ = "0.1.0"

from .analytic import (
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
from .coherence import (
    EstimateReport,
    StarParameters,
    SweepEntry,
    amplification,
    delta_from_lengths,
    estimate_report,
    report_for_star,
    sweep,
)
from .cutting import (
    CuttingFunction,
    GaussianCutting,
    IdentityCutting,
    TabulatedCutting,
    cutting_for_length,
    laplacian_ratio,
)
from .potentials import (
    EffectivePotential,
    FreeBoxPotential,
    HarmonicPotential,
    Potential,
    QuantumWall,
    TabulatedPotential,
    effective_potential,
    quantum_wall,
)
from .solver import (
    Grid1D,
    SpectralProblem,
    SpectrumResult,
    UnconfinedPotentialError,
    auto_domain,
    ddim_levels_by_separability,
    discretize,
    oscillator_problem,
    solve_converged,
    solve_with_reference,
)
from .tridiag import TridiagonalSymmetric, eigenvector_inverse_iteration, lowest_eigenvalues
from .units import OscillatorParams, PhysicalConstants, UnitMode, UnitSystem
