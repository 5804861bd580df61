"""Finite-difference eigensolver for the one-dimensional chi equation.

-chi'' + V(r) chi = E chi is discretized with second-order central
differences and Dirichlet boundaries on a uniform RadialGrid; the lowest
eigenpairs of the resulting symmetric tridiagonal matrix come from LAPACK's
bisection + inverse-iteration path (scipy eigh_tridiagonal, select by index),
which is deterministic for fixed inputs.  A Sturm-sequence counter is exposed
so callers can verify bracketing postconditions independently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import NonFiniteSampleError, ParameterError
from .potentials import RadialGrid

__all__ = [
    "DiscretizedHamiltonian",
    "EigenResult",
    "build_hamiltonian",
    "lowest_eigenpairs",
    "eigenfunction_overlap",
    "sturm_count",
]


@dataclass(frozen=True)
class DiscretizedHamiltonian:
    """Symmetric tridiagonal matrix over the interior nodes of a grid."""

    grid: RadialGrid
    diagonal: np.ndarray
    off_diagonal: float

    @property
    def interior_nodes(self) -> np.ndarray:
        return self.grid.nodes[1:-1]


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues with grid-normalized eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    grid: RadialGrid

    @property
    def interior_nodes(self) -> np.ndarray:
        return self.grid.nodes[1:-1]


def build_hamiltonian(v_solver, grid: RadialGrid) -> DiscretizedHamiltonian:
    """Assemble -d2/dr2 + V with Dirichlet ends (chi = 0 at r_min, r_max)."""
    h = grid.h
    ri = grid.nodes[1:-1]
    v = np.asarray(v_solver(ri), dtype=float)
    if not np.all(np.isfinite(v)):
        bad = ri[~np.isfinite(v)][0]
        raise NonFiniteSampleError(f"potential not finite at r={bad}")
    diagonal = 2.0 / h**2 + v
    return DiscretizedHamiltonian(grid=grid, diagonal=diagonal, off_diagonal=-1.0 / h**2)


def sturm_count(H: DiscretizedHamiltonian, x: float) -> int:
    """Number of eigenvalues of H strictly below x (Sturm sequence count)."""
    e2 = H.off_diagonal**2
    count = 0
    q = H.diagonal[0] - x
    if q < 0:
        count += 1
    for d in H.diagonal[1:]:
        q = d - x - e2 / (q if q != 0.0 else 1e-300)
        if q < 0:
            count += 1
    return count


def lowest_eigenpairs(H: DiscretizedHamiltonian, k: int) -> EigenResult:
    """k lowest eigenpairs; eigenvectors unit-normalized with trapezoidal
    weights in the grid inner product."""
    if not 1 <= k <= 12:
        raise ParameterError("k must be in 1..12")
    n = len(H.diagonal)
    off = np.full(n - 1, H.off_diagonal)
    vals, vecs = eigh_tridiagonal(H.diagonal, off, select="i", select_range=(0, k - 1))
    h = H.grid.h
    for j in range(k):
        norm = np.sqrt(np.trapezoid(vecs[:, j] ** 2, dx=h))
        vecs[:, j] /= norm
        # deterministic sign: positive lobe first
        i0 = np.argmax(np.abs(vecs[:, j]) > 1e-3 * np.max(np.abs(vecs[:, j])))
        if vecs[i0, j] < 0:
            vecs[:, j] = -vecs[:, j]
    return EigenResult(eigenvalues=vals, eigenvectors=vecs, grid=H.grid)


def eigenfunction_overlap(result: EigenResult, analytic_chi, index: int) -> float:
    """|<chi_numeric, chi_analytic>| with both unit-normalized on the grid."""
    if index >= result.eigenvectors.shape[1]:
        raise ParameterError("index exceeds the number of computed eigenpairs")
    ri = result.interior_nodes
    h = result.grid.h
    chi = np.asarray(analytic_chi(ri), dtype=float)
    chi = chi / np.sqrt(np.trapezoid(chi**2, dx=h))
    return abs(float(np.trapezoid(chi * result.eigenvectors[:, index], dx=h)))
