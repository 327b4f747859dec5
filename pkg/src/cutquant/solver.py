"""Grid diagonalization of the 1D cut-quantization Hamiltonian.

The effective potential is sampled on a uniform grid with Dirichlet
boundaries, the second derivative is the three-point central stencil
(so the matrix stays symmetric tridiagonal), and eigenvalues at spacings
h and h/2 are combined by Richardson extrapolation, refining until the
per-level error estimate satisfies the requested relative tolerance.
Isotropic D-dimensional spectra are assembled from 1D levels by
separability, never from a D-dimensional grid.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np

from .analytic import delta_parameter, omega_bar, oscillator_levels, residuals_vs_numeric
from .cutting import CuttingFunction, GaussianCutting, IdentityCutting, cutting_for_length
from .potentials import (
    FreeBoxPotential,
    HarmonicPotential,
    Potential,
    effective_potential,
)
from .tridiag import TridiagonalSymmetric, eigenvector_inverse_iteration, lowest_eigenvalues
from .units import OscillatorParams

__all__ = [
    "Grid1D",
    "SpectralProblem",
    "SpectrumResult",
    "UnconfinedPotentialError",
    "oscillator_problem",
    "auto_domain",
    "discretize",
    "solve_converged",
    "solve_with_reference",
    "ddim_levels_by_separability",
]

DEFAULT_N_POINTS = 2001
DEFAULT_MARGIN = 6.0
DEFAULT_REL_TOL = 1e-8
DEFAULT_MAX_REFINEMENTS = 6

#: Sums closer than this (relatively) are merged into one degenerate level.
LEVEL_MERGE_REL_TOL = 1e-9

_TINY = 1e-300


class UnconfinedPotentialError(ValueError):
    """The effective potential cannot confine the requested levels."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid on [x_min, x_max] with n_points nodes."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("grid endpoints must be finite")
        if not self.x_min < self.x_max:
            raise ValueError(f"need x_min < x_max, got [{self.x_min!r}, {self.x_max!r}]")
        if not (isinstance(self.n_points, (int, np.integer)) and self.n_points >= 3):
            raise ValueError(f"n_points must be an integer >= 3, got {self.n_points!r}")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def interior_nodes(self) -> np.ndarray:
        return self.nodes()[1:-1]

    def refined(self) -> "Grid1D":
        """Same domain with the spacing halved."""
        return Grid1D(self.x_min, self.x_max, 2 * self.n_points - 1)


@dataclass(frozen=True)
class SpectralProblem:
    """A 1D bound-state problem: potential, cutting function, parameters.

    ``grid=None`` requests an automatic symmetric domain (harmonic
    potentials only); explicit grids impose Dirichlet walls wherever
    they end.  ``params`` supplies the kinetic mass and, for harmonic
    problems, the frequency and cutting length used by the analytic
    reference and the automatic domain.
    """

    potential: Potential
    cutting: CuttingFunction
    params: OscillatorParams = OscillatorParams()
    levels: int = 5
    grid: Grid1D | None = None
    hbar: float = 1.0
    margin: float = DEFAULT_MARGIN
    n_points: int = DEFAULT_N_POINTS

    def __post_init__(self) -> None:
        if not (isinstance(self.levels, (int, np.integer)) and self.levels >= 1):
            raise ValueError(f"levels must be a positive integer, got {self.levels!r}")
        if not (math.isfinite(self.hbar) and self.hbar > 0.0):
            raise ValueError(f"hbar must be positive and finite, got {self.hbar!r}")
        if not (math.isfinite(self.margin) and self.margin > 0.0):
            raise ValueError(f"margin must be positive and finite, got {self.margin!r}")
        if not (isinstance(self.n_points, (int, np.integer)) and self.n_points >= 3):
            raise ValueError(f"n_points must be an integer >= 3, got {self.n_points!r}")
        if isinstance(self.potential, HarmonicPotential):
            if self.potential.mass != self.params.mass or self.potential.omega != self.params.omega:
                raise ValueError(
                    "harmonic potential (mass, omega) must match params; build with oscillator_problem()"
                )
        if isinstance(self.cutting, GaussianCutting) and self.cutting.a != self.params.cutting_length:
            raise ValueError("gaussian cutting length must match params.cutting_length")
        if isinstance(self.cutting, IdentityCutting) and self.params.has_cutting:
            raise ValueError("identity cutting requires params.cutting_length = inf")


def oscillator_problem(
    params: OscillatorParams = OscillatorParams(),
    levels: int = 5,
    grid: Grid1D | None = None,
    hbar: float = 1.0,
    margin: float = DEFAULT_MARGIN,
    n_points: int = DEFAULT_N_POINTS,
) -> SpectralProblem:
    """Harmonic potential plus the cutting implied by params.cutting_length."""
    return SpectralProblem(
        potential=HarmonicPotential(mass=params.mass, omega=params.omega),
        cutting=cutting_for_length(params.cutting_length),
        params=params,
        levels=levels,
        grid=grid,
        hbar=hbar,
        margin=margin,
        n_points=n_points,
    )


@dataclass(frozen=True)
class SpectrumResult:
    """Converged (or best-effort) eigenvalues with convergence metadata."""

    eigenvalues: np.ndarray
    grid_used: Grid1D
    refinement_levels: int
    convergence_estimate: np.ndarray
    converged: bool
    analytic_reference: np.ndarray | None = None
    residuals: np.ndarray | None = None
    eigenvectors: np.ndarray | None = None

    def __post_init__(self) -> None:
        ev = np.asarray(self.eigenvalues, dtype=float)
        est = np.asarray(self.convergence_estimate, dtype=float)
        if np.any(np.diff(ev) <= 0.0):
            raise ValueError("eigenvalues must be strictly ascending")
        if np.any(est < 0.0):
            raise ValueError("convergence estimates must be non-negative")
        object.__setattr__(self, "eigenvalues", ev)
        object.__setattr__(self, "convergence_estimate", est)

    def with_reference(self, analytic_reference: np.ndarray, residuals: np.ndarray) -> "SpectrumResult":
        return replace(
            self,
            analytic_reference=np.asarray(analytic_reference, dtype=float),
            residuals=np.asarray(residuals, dtype=float),
        )

    def to_json_dict(self) -> dict:
        out: dict = {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "grid": {
                "x_min": self.grid_used.x_min,
                "x_max": self.grid_used.x_max,
                "n_points": int(self.grid_used.n_points),
                "spacing": self.grid_used.spacing,
            },
            "converged": bool(self.converged),
            "refinement_levels": int(self.refinement_levels),
            "convergence_estimate": [float(v) for v in self.convergence_estimate],
            "analytic_reference": None
            if self.analytic_reference is None
            else [float(v) for v in self.analytic_reference],
            "residuals": None if self.residuals is None else [float(v) for v in self.residuals],
        }
        return out


def _harmonic_frequency(problem: SpectralProblem) -> float:
    """Corrected frequency seen by the effective potential of the problem."""
    params = problem.params
    if not params.has_cutting:
        return params.omega
    delta = delta_parameter(problem.hbar, params.mass, params.omega, params.cutting_length)
    return omega_bar(params.omega, delta)


def auto_domain(problem: SpectralProblem) -> Grid1D:
    """Symmetric domain wide enough for the requested number of levels.

    The half-width is margin * sqrt(2k+1) characteristic lengths of the
    corrected frequency, i.e. margin times the classical turning point
    of level k, which keeps the Dirichlet truncation error far below the
    discretization error.  Only harmonic potentials with identity or
    Gaussian cutting can be auto-domained; anything else needs an
    explicit grid.
    """
    if isinstance(problem.potential, FreeBoxPotential):
        raise UnconfinedPotentialError(
            "free box potential is unconfined: provide an explicit grid with Dirichlet walls"
        )
    if not isinstance(problem.potential, HarmonicPotential):
        raise ValueError(
            "automatic domain selection supports harmonic potentials only: provide an explicit grid"
        )
    if not isinstance(problem.cutting, (IdentityCutting, GaussianCutting)):
        raise ValueError(
            "automatic domain selection supports identity or gaussian cutting only: "
            "provide an explicit grid"
        )

    params = problem.params
    wbar = _harmonic_frequency(problem)
    char_length = math.sqrt(problem.hbar / (params.mass * wbar))
    k = problem.levels
    half_width = problem.margin * math.sqrt(2.0 * k + 1.0) * char_length
    grid = Grid1D(-half_width, half_width, problem.n_points)

    level_estimate = (k + 0.5) * problem.hbar * wbar
    if params.has_cutting:
        a = params.cutting_length
        level_estimate -= problem.hbar * problem.hbar / (2.0 * params.mass * a * a)
    v_eff = effective_potential(problem.potential, problem.cutting, params.mass, problem.hbar)
    if v_eff(grid.x_min) < level_estimate or v_eff(grid.x_max) < level_estimate:
        raise UnconfinedPotentialError(
            "effective potential at the proposed boundary lies below the estimated "
            f"level {k}: unconfined"
        )
    return grid


def discretize(
    v_eff, grid: Grid1D, mass: float = 1.0, hbar: float = 1.0
) -> TridiagonalSymmetric:
    """Dirichlet finite-difference Hamiltonian on the interior nodes.

    diagonal[i] = hbar^2/(m h^2) + V_eff(x_i), off-diagonal entries
    -hbar^2/(2 m h^2); the matrix order is n_points - 2.
    """
    if not (math.isfinite(mass) and mass > 0.0):
        raise ValueError(f"mass must be positive and finite, got {mass!r}")
    h = grid.spacing
    x = grid.interior_nodes()
    v = np.asarray(v_eff(x), dtype=float)
    if v.shape != x.shape:
        v = np.broadcast_to(v, x.shape).astype(float)
    if not np.all(np.isfinite(v)):
        raise ValueError("effective potential is not finite on all interior nodes")
    kinetic = hbar * hbar / (mass * h * h)
    diagonal = kinetic + v
    off = np.full(x.size - 1, -0.5 * kinetic)
    return TridiagonalSymmetric(diagonal, off)


def _solve_on_grid(problem: SpectralProblem, grid: Grid1D, v_eff) -> np.ndarray:
    matrix = discretize(v_eff, grid, mass=problem.params.mass, hbar=problem.hbar)
    if problem.levels > matrix.order:
        raise ValueError(
            f"levels={problem.levels} requires a grid with at least {problem.levels + 2} points"
        )
    return lowest_eigenvalues(matrix, problem.levels)


def solve_converged(
    problem: SpectralProblem,
    rel_tol: float = DEFAULT_REL_TOL,
    max_refinements: int = DEFAULT_MAX_REFINEMENTS,
    with_eigenvectors: bool = False,
) -> SpectrumResult:
    """Grid-refined, Richardson-extrapolated lowest eigenvalues.

    Each refinement halves the spacing; the extrapolation assumes the
    leading error is O(h^2), so the error estimate of level i is
    |E_i(h/2) - E_i(h)|/3.  Refinement stops when every estimate is
    below rel_tol relative to its level, or when the refinement cap is
    hit, in which case the result is flagged as non-converged.
    """
    if not rel_tol > 0.0:
        raise ValueError(f"rel_tol must be positive, got {rel_tol!r}")
    if max_refinements < 1:
        raise ValueError(f"max_refinements must be >= 1, got {max_refinements!r}")

    grid = problem.grid if problem.grid is not None else auto_domain(problem)
    v_eff = effective_potential(
        problem.potential, problem.cutting, problem.params.mass, problem.hbar
    )

    coarse = _solve_on_grid(problem, grid, v_eff)
    converged = False
    refinements = 0
    fine_grid = grid
    fine = coarse
    extrapolated = coarse
    estimate = np.full_like(coarse, np.inf)
    for refinements in range(1, max_refinements + 1):
        fine_grid = grid.refined()
        fine = _solve_on_grid(problem, fine_grid, v_eff)
        estimate = np.abs(fine - coarse) / 3.0
        extrapolated = fine + (fine - coarse) / 3.0
        relative = estimate / np.maximum(np.abs(extrapolated), _TINY)
        if np.max(relative) <= rel_tol:
            converged = True
            break
        grid, coarse = fine_grid, fine

    eigenvectors = None
    if with_eigenvectors:
        matrix = discretize(v_eff, fine_grid, mass=problem.params.mass, hbar=problem.hbar)
        eigenvectors = np.column_stack(
            [eigenvector_inverse_iteration(matrix, ev) for ev in fine]
        )

    return SpectrumResult(
        eigenvalues=extrapolated,
        grid_used=fine_grid,
        refinement_levels=refinements,
        convergence_estimate=estimate,
        converged=converged,
        eigenvectors=eigenvectors,
    )


def solve_with_reference(
    problem: SpectralProblem,
    rel_tol: float = DEFAULT_REL_TOL,
    max_refinements: int = DEFAULT_MAX_REFINEMENTS,
) -> SpectrumResult:
    """solve_converged plus the closed-form oscillator reference and residuals."""
    if not isinstance(problem.potential, HarmonicPotential):
        raise ValueError("analytic reference requires a harmonic potential")
    if not isinstance(problem.cutting, (IdentityCutting, GaussianCutting)):
        raise ValueError("analytic reference requires identity or gaussian cutting")
    result = solve_converged(problem, rel_tol=rel_tol, max_refinements=max_refinements)
    reference = oscillator_levels(problem.levels, problem.params, problem.hbar)
    residuals = residuals_vs_numeric(reference, result)
    return result.with_reference(reference, residuals)


def ddim_levels_by_separability(
    levels_1d,
    dims: int,
    count: int,
    ground_shift_removed: bool = False,
) -> list[tuple[float, int]]:
    """Lowest distinct D-dimensional levels built by summing 1D levels.

    Returns ``count`` pairs (energy, degeneracy), energies ascending.
    The degeneracy counts ordered index tuples; sums within a relative
    1e-9 of each other merge into a single level so equal spacings
    collapse to their exact multiplicities.  ``ground_shift_removed``
    only documents the input convention (whether the per-level constant
    shift of the cutting was already subtracted from levels_1d); the
    summation is the same either way.

    The tail of the returned list is guaranteed complete: an error is
    raised if truncating the 1D input could have hidden a lower sum.
    """
    del ground_shift_removed  # input-convention marker only
    levels = np.asarray(levels_1d, dtype=float)
    if levels.ndim != 1 or levels.size == 0:
        raise ValueError("levels_1d must be a non-empty 1-d sequence")
    if np.any(np.diff(levels) < 0.0):
        raise ValueError("levels_1d must be ascending")
    if not (isinstance(dims, (int, np.integer)) and dims >= 1):
        raise ValueError(f"dims must be a positive integer, got {dims!r}")
    if not (isinstance(count, (int, np.integer)) and count >= 1):
        raise ValueError(f"count must be a positive integer, got {count!r}")

    if dims == 1:
        if count > levels.size:
            raise ValueError(f"count={count} exceeds the {levels.size} 1D levels given")
        return [(float(v), 1) for v in levels[:count]]

    n_combos = math.comb(levels.size + dims - 1, dims)
    if n_combos > 2_000_000:
        raise ValueError(
            f"{levels.size} levels in {dims} dimensions give {n_combos} index multisets; "
            "reduce the level count or dimensions"
        )

    dims_factorial = math.factorial(dims)
    sums: list[tuple[float, int]] = []
    for combo in itertools.combinations_with_replacement(range(levels.size), dims):
        multiplicity = dims_factorial
        for repeats in Counter(combo).values():
            multiplicity //= math.factorial(repeats)
        sums.append((float(levels[list(combo)].sum()), multiplicity))
    sums.sort(key=lambda pair: pair[0])

    merged: list[list[float | int]] = []
    for value, multiplicity in sums:
        if merged and abs(value - merged[-1][0]) <= LEVEL_MERGE_REL_TOL * max(abs(merged[-1][0]), _TINY):
            group = merged[-1]
            total = group[1] + multiplicity
            group[0] = (group[0] * group[1] + value * multiplicity) / total
            group[1] = total
        else:
            merged.append([value, multiplicity])

    # Sums using 1D levels beyond the given list would all exceed this bound,
    # so only levels strictly below it are provably complete.
    completeness_bound = (dims - 1) * float(levels[0]) + float(levels[-1])
    slack = LEVEL_MERGE_REL_TOL * max(abs(completeness_bound), _TINY)
    complete = [
        (float(value), int(multiplicity))
        for value, multiplicity in merged
        if value < completeness_bound - slack
    ]
    if len(complete) < count:
        raise ValueError(
            f"only {len(complete)} distinct levels are provably complete with "
            f"{levels.size} 1D levels; supply more 1D levels for count={count}"
        )
    return complete[:count]
