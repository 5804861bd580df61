"""Finite-difference eigensolver against exactly solvable references."""

import numpy as np
import pytest

from xeop.errors import NonFiniteSampleError, ParameterError
from xeop.eigensolve import (
    build_hamiltonian,
    eigenfunction_overlap,
    lowest_eigenpairs,
    sturm_count,
)
from xeop.potentials import (
    OscillatorModel,
    RadialGrid,
    oscillator_chi,
    oscillator_solver_potential,
)


def box_hamiltonian(n_points):
    # particle in a box of width 1: E_n = (n pi)^2, n = 1, 2, ...
    grid = RadialGrid(1.0, 2.0, n_points)
    return build_hamiltonian(lambda r: np.zeros_like(r), grid)


def test_box_spectrum():
    H = box_hamiltonian(2001)
    res = lowest_eigenpairs(H, 3)
    exact = np.array([1.0, 4.0, 9.0]) * np.pi**2
    assert np.max(np.abs(res.eigenvalues - exact) / exact) < 1e-3


def test_second_order_convergence():
    """Ground-state error of the box shrinks like h^2."""
    errs, hs = [], []
    for n_points in (201, 401, 801):
        H = box_hamiltonian(n_points)
        res = lowest_eigenpairs(H, 1)
        errs.append(abs(res.eigenvalues[0] - np.pi**2))
        hs.append(H.grid.h)
    slope = np.polyfit(np.log(hs), np.log(errs), 1)[0]
    assert 1.8 < slope < 2.2


def test_oscillator_spectrum_pin():
    """Plain radial oscillator (m = 0): E_n = 2 n omega exactly."""
    model = OscillatorModel(1.0, 3, 0, 0)
    grid = RadialGrid(1e-4, 20.0, 4000)
    H = build_hamiltonian(lambda r: oscillator_solver_potential(model, r), grid)
    res = lowest_eigenpairs(H, 4)
    assert np.max(np.abs(res.eigenvalues - np.array([0.0, 2.0, 4.0, 6.0]))) < 5e-3


def test_sturm_count_brackets():
    H = box_hamiltonian(801)
    res = lowest_eigenpairs(H, 2)
    e0, e1 = res.eigenvalues
    assert sturm_count(H, e0 - 0.1) == 0
    assert sturm_count(H, 0.5 * (e0 + e1)) == 1
    assert sturm_count(H, e1 + 0.1) == 2


def test_eigenvector_normalization_and_sign():
    H = box_hamiltonian(801)
    res = lowest_eigenpairs(H, 2)
    h = H.grid.h
    for j in range(2):
        assert np.trapezoid(res.eigenvectors[:, j] ** 2, dx=h) == pytest.approx(1.0, rel=1e-10)
    # deterministic sign convention: first significant lobe is positive
    assert res.eigenvectors[len(res.eigenvectors) // 2, 0] > 0


def test_overlap_matches_analytic_state():
    model = OscillatorModel(1.0, 3, 0, 1)
    grid = RadialGrid(1e-4, 20.0, 4000)
    H = build_hamiltonian(lambda r: oscillator_solver_potential(model, r), grid)
    res = lowest_eigenpairs(H, 3)
    for n in range(3):
        ov = eigenfunction_overlap(res, lambda r: oscillator_chi(model, n, r), n)
        assert ov > 0.99999
    # mismatched indices are near-orthogonal
    ov = eigenfunction_overlap(res, lambda r: oscillator_chi(model, 0, r), 1)
    assert ov < 0.1


def test_overlap_index_check():
    H = box_hamiltonian(201)
    res = lowest_eigenpairs(H, 1)
    with pytest.raises(ParameterError):
        eigenfunction_overlap(res, lambda r: r, 1)


def test_nonfinite_potential_rejected():
    grid = RadialGrid(0.1, 1.0, 51)
    with pytest.raises(NonFiniteSampleError):
        build_hamiltonian(lambda r: np.where(r > 0.5, np.inf, 0.0), grid)


def test_k_range():
    H = box_hamiltonian(201)
    with pytest.raises(ParameterError):
        lowest_eigenpairs(H, 0)
    with pytest.raises(ParameterError):
        lowest_eigenpairs(H, 13)
