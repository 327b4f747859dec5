"""Cutting functions and their Laplacian ratios.

A cutting function is a strictly positive classical profile f(x) whose
quantization side effect is the extra potential term
(hbar^2 / 2m) * lap(f)/f.  This module evaluates f and lap(f)/f for the
three supported variants: identity (no cutting), Gaussian with length
scale ``a``, and a tabulated profile differentiated numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CuttingFunction",
    "IdentityCutting",
    "GaussianCutting",
    "TabulatedCutting",
    "cutting_for_length",
    "laplacian_ratio",
]


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float, copy=True)
    out.setflags(write=False)
    return out


def _maybe_scalar(result: np.ndarray, scalar: bool) -> float | np.ndarray:
    return float(result) if scalar else result


class CuttingFunction:
    """Base class; concrete variants implement value() and laplacian_ratio()."""

    def value(self, x):
        raise NotImplementedError

    def laplacian_ratio(self, x, dims: int = 1):
        raise NotImplementedError

    def __call__(self, x):
        return self.value(x)


@dataclass(frozen=True)
class IdentityCutting(CuttingFunction):
    """f = 1 everywhere; lap(f)/f = 0, the quantization is unmodified."""

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return _maybe_scalar(np.ones_like(x), x.ndim == 0)

    def laplacian_ratio(self, x, dims: int = 1):
        _check_dims(dims)
        x = np.asarray(x, dtype=float)
        return _maybe_scalar(np.zeros_like(x), x.ndim == 0)


@dataclass(frozen=True)
class GaussianCutting(CuttingFunction):
    """f(x) = exp(-x^2 / 2 a^2) with cutting length a > 0.

    For the isotropic profile in ``dims`` dimensions evaluated at radius
    (or coordinate magnitude) r, lap(f)/f = r^2/a^4 - dims/a^2.
    """

    a: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError(f"cutting length a must be positive and finite, got {self.a!r}")

    def value(self, x):
        x = np.asarray(x, dtype=float)
        result = np.exp(-(x * x) / (2.0 * self.a * self.a))
        return _maybe_scalar(result, x.ndim == 0)

    def laplacian_ratio(self, x, dims: int = 1):
        _check_dims(dims)
        x = np.asarray(x, dtype=float)
        a2 = self.a * self.a
        result = (x * x) / (a2 * a2) - dims / a2
        return _maybe_scalar(result, x.ndim == 0)


@dataclass(frozen=True)
class TabulatedCutting(CuttingFunction):
    """Positive profile given on a strictly increasing abscissa table.

    f(x) is linear interpolation of the table.  lap(f)/f uses the
    three-point central second difference on the nodes nearest x; the
    stencil never becomes one-sided, so x must stay at least one node
    away from each table end.  One-dimensional only.
    """

    abscissae: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        xs = _freeze(np.atleast_1d(self.abscissae))
        vs = _freeze(np.atleast_1d(self.values))
        if xs.ndim != 1 or vs.ndim != 1 or xs.size != vs.size:
            raise ValueError("abscissae and values must be 1-d arrays of equal length")
        if xs.size < 3:
            raise ValueError("tabulated cutting function needs at least 3 points")
        if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(vs)):
            raise ValueError("tabulated cutting function entries must be finite")
        if not np.all(np.diff(xs) > 0.0):
            raise ValueError("abscissae must be strictly increasing")
        if not np.all(vs > 0.0):
            raise ValueError("tabulated cutting function values must be strictly positive")
        object.__setattr__(self, "abscissae", xs)
        object.__setattr__(self, "values", vs)

    def value(self, x):
        x_arr = np.asarray(x, dtype=float)
        xs = self.abscissae
        if np.any(x_arr < xs[0]) or np.any(x_arr > xs[-1]):
            raise ValueError(
                f"evaluation outside tabulated range [{xs[0]!r}, {xs[-1]!r}]"
            )
        result = np.interp(x_arr, xs, self.values)
        return _maybe_scalar(result, x_arr.ndim == 0)

    def laplacian_ratio(self, x, dims: int = 1):
        _check_dims(dims)
        if dims != 1:
            raise ValueError("tabulated cutting functions support dims=1 only")
        x_arr = np.asarray(x, dtype=float)
        xs, vs = self.abscissae, self.values
        if np.any(x_arr < xs[1]) or np.any(x_arr > xs[-2]):
            raise ValueError(
                "central second difference needs a full interior stencil: "
                f"x must lie in [{xs[1]!r}, {xs[-2]!r}]"
            )
        # Center the stencil on the node nearest x (ties go right).
        idx = np.clip(np.searchsorted(xs, x_arr), 1, xs.size - 2)
        left_closer = np.abs(x_arr - xs[idx - 1]) < np.abs(xs[idx] - x_arr)
        center = np.where(left_closer, idx - 1, idx)
        center = np.clip(center, 1, xs.size - 2)
        hl = xs[center] - xs[center - 1]
        hr = xs[center + 1] - xs[center]
        second = 2.0 * (
            vs[center - 1] * hr - vs[center] * (hl + hr) + vs[center + 1] * hl
        ) / (hl * hr * (hl + hr))
        denom = np.interp(x_arr, xs, vs)
        return _maybe_scalar(second / denom, x_arr.ndim == 0)


def cutting_for_length(a: float) -> CuttingFunction:
    """Gaussian cutting with length a, or identity when a is infinite."""
    if a == math.inf:
        return IdentityCutting()
    return GaussianCutting(a=a)


def laplacian_ratio(f: CuttingFunction, x, dims: int = 1):
    """lap(f)/f at x for an isotropic profile in ``dims`` dimensions."""
    return f.laplacian_ratio(x, dims=dims)


def _check_dims(dims: int) -> None:
    if not (isinstance(dims, (int, np.integer)) and dims >= 1):
        raise ValueError(f"dims must be a positive integer, got {dims!r}")
