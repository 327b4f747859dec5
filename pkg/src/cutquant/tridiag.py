"""Self-contained symmetric tridiagonal eigensolver.

Eigenvalues are located by Sturm-sequence bisection: for a shift x, the
number of sign agreements in the sequence of leading-principal-minor
pivots equals the number of eigenvalues below x, so each of the k lowest
eigenvalues can be bracketed independently inside the Gershgorin
interval.  Zero pivots are replaced by a tiny negative value (the usual
LAPACK-style safeguard), which keeps the count exact in floating point.

Eigenvectors, when needed for diagnostics, come from inverse iteration
with a partially pivoted tridiagonal LU factorization.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TridiagonalSymmetric",
    "lowest_eigenvalues",
    "eigenvalue_count_below",
    "eigenvector_inverse_iteration",
]

#: Guaranteed bracket width relative to the Gershgorin radius.  Bisection
#: actually continues down to a few ulps of the eigenvalue itself, which
#: is always far tighter than this bound.
BRACKET_TOLERANCE = 1e-12

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class TridiagonalSymmetric:
    """Symmetric tridiagonal matrix stored as diagonal and off-diagonal."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self) -> None:
        d = np.array(np.atleast_1d(self.diagonal), dtype=float)
        e = np.array(np.atleast_1d(self.off_diagonal), dtype=float) if np.size(self.off_diagonal) else np.zeros(0)
        if d.ndim != 1 or e.ndim != 1:
            raise ValueError("diagonal and off_diagonal must be 1-d arrays")
        if d.size < 1:
            raise ValueError("matrix must have at least one row")
        if e.size != d.size - 1:
            raise ValueError(
                f"off_diagonal must have length {d.size - 1}, got {e.size}"
            )
        if not np.all(np.isfinite(d)) or not np.all(np.isfinite(e)):
            raise ValueError("matrix entries must be finite")
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "diagonal", d)
        object.__setattr__(self, "off_diagonal", e)

    @property
    def order(self) -> int:
        return self.diagonal.size

    def gershgorin_interval(self) -> tuple[float, float]:
        """Inclusive [lo, hi] interval containing every eigenvalue."""
        d, e = self.diagonal, self.off_diagonal
        radius = np.zeros_like(d)
        if e.size:
            radius[:-1] += np.abs(e)
            radius[1:] += np.abs(e)
        return float(np.min(d - radius)), float(np.max(d + radius))

    def leading_principal_submatrix(self, order: int) -> "TridiagonalSymmetric":
        if not 1 <= order <= self.order:
            raise ValueError(f"submatrix order must be in [1, {self.order}], got {order}")
        return TridiagonalSymmetric(self.diagonal[:order], self.off_diagonal[: order - 1])

    def to_dense(self) -> np.ndarray:
        dense = np.diag(self.diagonal)
        if self.off_diagonal.size:
            dense += np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)
        return dense


def _pivmin(e2) -> float:
    top = max(e2) if len(e2) else 1.0
    return sys.float_info.min * max(1.0, top)


def _count_below(d, e2, x: float, pivmin: float) -> int:
    # Number of eigenvalues of (d, e) strictly below x, up to the pivot
    # safeguard: pivots in [-pivmin, pivmin] are treated as -pivmin.
    t = d[0] - x
    if abs(t) < pivmin:
        t = -pivmin
    count = 1 if t < 0.0 else 0
    for i in range(1, len(d)):
        t = d[i] - x - e2[i - 1] / t
        if abs(t) < pivmin:
            t = -pivmin
        if t < 0.0:
            count += 1
    return count


# The kernel is a tight scalar loop; numba, when installed, compiles the
# exact same statements, so both paths produce bit-identical counts.
try:  # pragma: no cover - exercised implicitly
    from numba import njit as _njit

    _count_kernel = _njit(cache=True, nogil=True)(_count_below)
    _JITTED = True
except ImportError:  # pragma: no cover
    _count_kernel = _count_below
    _JITTED = False


def _kernel_data(matrix: TridiagonalSymmetric):
    d = matrix.diagonal
    e2 = matrix.off_diagonal * matrix.off_diagonal
    if _JITTED:
        return np.ascontiguousarray(d), np.ascontiguousarray(e2)
    return d.tolist(), e2.tolist()


def eigenvalue_count_below(matrix: TridiagonalSymmetric, x: float) -> int:
    """How many eigenvalues of ``matrix`` lie below the shift x."""
    d, e2 = _kernel_data(matrix)
    return int(_count_kernel(d, e2, float(x), _pivmin(e2)))


def lowest_eigenvalues(matrix: TridiagonalSymmetric, k: int) -> np.ndarray:
    """The k smallest eigenvalues in ascending order.

    Each eigenvalue is bisected inside the Gershgorin interval until the
    bracket is a few ulps wide (always under ``BRACKET_TOLERANCE`` times
    the Gershgorin radius).  Clustered and coincident eigenvalues are
    handled naturally because the Sturm count jumps by the cluster size.
    """
    n = matrix.order
    if not (isinstance(k, (int, np.integer)) and 1 <= k):
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k > n:
        raise ValueError(f"k={k} exceeds matrix order {n}")

    d, e2 = _kernel_data(matrix)
    pivmin = _pivmin(e2)

    lo, hi = matrix.gershgorin_interval()
    radius = max(abs(lo), abs(hi))
    if radius == 0.0:
        return np.zeros(k)
    pad = BRACKET_TOLERANCE * radius + pivmin
    lo -= pad
    hi += pad

    out = []
    lower = lo
    for target in range(1, k + 1):
        a, b = lower, hi
        for _ in range(120):
            if b - a <= 2.0 * _EPS * max(abs(a), abs(b)):
                break
            mid = 0.5 * (a + b)
            if not a < mid < b:
                break
            if _count_kernel(d, e2, mid, pivmin) >= target:
                b = mid
            else:
                a = mid
        out.append(0.5 * (a + b))
        lower = a  # the next eigenvalue cannot lie below this bound
    return np.sort(np.asarray(out))


def _solve_shifted(diag: np.ndarray, off: np.ndarray, shift: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (T - shift I) x = rhs by LU with partial pivoting.

    Row swaps introduce a second superdiagonal, so three upper bands are
    kept.  Singular pivots are nudged by a tiny amount, which is exactly
    what inverse iteration wants near an eigenvalue.
    """
    n = diag.size
    a = diag.astype(float) - shift  # main diagonal
    b = np.append(off.astype(float), 0.0)  # first superdiagonal
    c = np.zeros(n)  # second superdiagonal
    low = np.append(off.astype(float), 0.0)  # subdiagonal (symmetric)
    x = rhs.astype(float).copy()

    tiny = sys.float_info.min / sys.float_info.epsilon
    for i in range(n - 1):
        if abs(low[i]) > abs(a[i]):
            # Swap row i with row i+1.
            a[i], low[i] = low[i], a[i]
            b[i], a[i + 1] = a[i + 1], b[i]
            if i + 1 < n - 1:
                c[i], b[i + 1] = b[i + 1], c[i]
            x[i], x[i + 1] = x[i + 1], x[i]
        if a[i] == 0.0:
            a[i] = tiny
        m = low[i] / a[i]
        a[i + 1] -= m * b[i]
        if i + 1 < n - 1:
            b[i + 1] -= m * c[i]
        x[i + 1] -= m * x[i]
    if a[n - 1] == 0.0:
        a[n - 1] = tiny

    x[n - 1] /= a[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - b[n - 2] * x[n - 1]) / a[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - b[i] * x[i + 1] - c[i] * x[i + 2]) / a[i]
    return x


def eigenvector_inverse_iteration(
    matrix: TridiagonalSymmetric,
    eigenvalue: float,
    iterations: int = 4,
    seed: int = 20240901,
) -> np.ndarray:
    """Unit eigenvector for an already-converged eigenvalue estimate."""
    n = matrix.order
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    # Detach the shift from the exact eigenvalue so the solve stays finite.
    scale = max(abs(matrix.diagonal).max(), abs(matrix.off_diagonal).max() if n > 1 else 0.0, 1.0)
    shift = eigenvalue + 1e-12 * scale
    for _ in range(iterations):
        v = _solve_shifted(matrix.diagonal, matrix.off_diagonal, shift, v)
        norm = np.linalg.norm(v)
        if not np.isfinite(norm) or norm == 0.0:
            raise ArithmeticError("inverse iteration failed to produce a finite vector")
        v /= norm
    if v[np.argmax(np.abs(v))] < 0.0:
        v = -v
    return v
