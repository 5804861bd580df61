"""Closed-form potentials, spectra and radial functions of both families."""

import numpy as np
import pytest

from xeop.errors import IndexRangeError, ParameterError
from xeop.potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    centrifugal_solver_term,
    gpt_chi,
    gpt_derived_params,
    gpt_energy,
    gpt_textbook_norm_constant,
    gpt_potential,
    gpt_special_case,
    oscillator_chi,
    oscillator_energy,
    oscillator_potential,
    oscillator_solver_potential,
    oscillator_special_case,
)


def count_sign_changes(y):
    s = np.sign(y[np.abs(y) > 1e-12 * np.max(np.abs(y))])
    return int(np.sum(s[1:] != s[:-1]))


# --- grids and models -----------------------------------------------------

def test_radial_grid_validation():
    with pytest.raises(ParameterError):
        RadialGrid(0.0, 1.0, 10)
    with pytest.raises(ParameterError):
        RadialGrid(1.0, 0.5, 10)
    with pytest.raises(ParameterError):
        RadialGrid(0.1, 1.0, 2)
    g = RadialGrid(0.5, 1.5, 11)
    assert g.h == pytest.approx(0.1)
    assert g.nodes[0] == 0.5 and g.nodes[-1] == 1.5


def test_oscillator_model_alpha():
    assert OscillatorModel(1.0, 5, 2, 0).alpha == pytest.approx(3.5)
    assert OscillatorModel(1.0, 3, 0, 1).alpha == pytest.approx(0.5)
    with pytest.raises(ParameterError):
        OscillatorModel(1.0, 2, 0, 0)  # alpha = 0
    with pytest.raises(ParameterError):
        OscillatorModel(-1.0, 3, 0, 0)


def test_centrifugal_solver_term():
    assert centrifugal_solver_term(3, 0, 2.0) == 0.0
    assert centrifugal_solver_term(5, 1, 2.0) == pytest.approx(8 / 16)


# --- oscillator -----------------------------------------------------------

def test_oscillator_energy():
    model = OscillatorModel(0.7, 4, 1, 2)
    assert [oscillator_energy(model, n) for n in range(3)] == [0.0, 1.4, 2.8]
    with pytest.raises(IndexRangeError):
        oscillator_energy(model, -1)


def test_oscillator_m0_hand_value():
    # V_solver = w^2 r^2/4 + (a^2 - 1/4)/r^2 - w(a+1); a = 1/2, w = 1, r = 1
    model = OscillatorModel(1.0, 3, 0, 0)
    assert oscillator_solver_potential(model, 1.0) == pytest.approx(-1.25)


def test_oscillator_psi_vs_solver_forms():
    r = np.linspace(0.3, 6.0, 40)
    model = OscillatorModel(1.0, 5, 1, 2)
    lhs = oscillator_potential(model, r)
    rhs = oscillator_solver_potential(model, r) - centrifugal_solver_term(5, 1, r)
    assert np.max(np.abs(lhs - rhs)) < 1e-12
    # at D = 3 the two forms coincide
    model = OscillatorModel(1.0, 3, 1, 1)
    assert np.max(np.abs(oscillator_potential(model, r) - oscillator_solver_potential(model, r))) < 1e-12


@pytest.mark.parametrize("omega,D,l,m", [
    (1.0, 3, 0, 0), (1.0, 3, 0, 1), (1.0, 3, 0, 2),
    (0.5, 4, 1, 1), (2.0, 5, 2, 2), (1.0, 2, 1, 2),
])
def test_oscillator_special_case_matches_general(omega, D, l, m):
    r = np.linspace(0.2, 8.0, 120)
    model = OscillatorModel(omega, D, l, m)
    general = oscillator_potential(model, r)
    case = oscillator_special_case(model, r)
    scale = np.maximum(np.abs(case), 1.0)
    assert np.max(np.abs(general - case) / scale) < 1e-10


def test_oscillator_special_case_range():
    with pytest.raises(ParameterError):
        oscillator_special_case(OscillatorModel(1.0, 3, 0, 3), np.array([1.0]))


def test_oscillator_deformation_decays():
    """V_m - V_0 -> 0 at large r: the rational terms are a localized deformation."""
    r = 20.0
    base = oscillator_solver_potential(OscillatorModel(1.0, 3, 0, 0), r)
    for m in (1, 2):
        vm = oscillator_solver_potential(OscillatorModel(1.0, 3, 0, m), r)
        assert abs(vm - base) < 0.05


def test_oscillator_chi_nodes_and_norm():
    model = OscillatorModel(1.0, 3, 0, 1)
    grid = RadialGrid(1e-3, 12.0, 4000)
    r = grid.nodes
    for n in range(4):
        chi = oscillator_chi(model, n, r)
        assert count_sign_changes(chi) == n
        norm = np.trapezoid(chi**2, r)
        assert norm == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(IndexRangeError):
        oscillator_chi(model, -1, r)


def test_oscillator_chi_unnormalized_scaling():
    model = OscillatorModel(1.0, 4, 1, 2)
    r = np.array([0.8, 1.7])
    raw = oscillator_chi(model, 1, r, normalized=False)
    full = oscillator_chi(model, 1, r)
    ratio = full / raw
    assert ratio[0] == pytest.approx(ratio[1], rel=1e-13)


# --- GPT ------------------------------------------------------------------

def test_gpt_derived_params_identity_at_d3_s_wave():
    zeta, Bp, Ap, alpha, beta, n_max = gpt_derived_params(1.0, 3.0, 3, 0)
    assert zeta == pytest.approx(11.0)
    assert Bp == pytest.approx(3.0, abs=1e-12)
    assert Ap == pytest.approx(1.0, abs=1e-12)
    assert n_max == 0
    zeta, Bp, Ap, alpha, beta, n_max = gpt_derived_params(2.5, 5.0, 3, 0)
    assert Bp == pytest.approx(5.0, abs=1e-12)
    assert Ap == pytest.approx(2.5, abs=1e-12)
    assert alpha == pytest.approx(2.0, abs=1e-12)
    assert beta == pytest.approx(-8.0, abs=1e-12)
    assert n_max == 2


def test_gpt_derived_params_shift_with_l():
    _, Bp, Ap, _, _, _ = gpt_derived_params(2.5, 5.0, 3, 1)
    assert Bp > 5.0
    assert Ap < 2.5


def test_gpt_parameter_rejection():
    with pytest.raises(ParameterError):
        gpt_derived_params(3.0, 2.0, 3, 0)  # B <= A + 1
    with pytest.raises(ParameterError):
        GPTModel(A=0.2, B=2.0, D=3, l=0, m=1)  # Ap < 1


def test_gpt_energy_and_index_range():
    model = GPTModel.from_primed(2.5, 5.0, 1)
    assert gpt_energy(model, 0) == pytest.approx(-6.25)
    assert gpt_energy(model, 2) == pytest.approx(-0.25)
    with pytest.raises(IndexRangeError):
        gpt_energy(model, 3)
    with pytest.raises(IndexRangeError):
        gpt_energy(model, -1)


@pytest.mark.parametrize("A,B,m", [(2.5, 5.0, 0), (2.5, 5.0, 1), (2.5, 5.0, 2), (1.5, 4.0, 2)])
def test_gpt_special_case_matches_general(A, B, m):
    r = np.linspace(0.1, 10.0, 120)
    model = GPTModel(A=A, B=B, D=3, l=0, m=m)
    general = gpt_potential(model, r)
    case = gpt_special_case(model, r)
    scale = np.maximum(np.abs(case), 1.0)
    assert np.max(np.abs(general - case) / scale) < 1e-10


def test_gpt_special_case_range():
    with pytest.raises(ParameterError):
        gpt_special_case(GPTModel.from_primed(2.5, 5.0, 3), np.array([1.0]))


def test_gpt_potential_pole_free_scan():
    r = np.linspace(1e-3, 25.0, 5000)
    for m in (1, 2):
        for A, B, D, l in [(2.5, 5.0, 3, 0), (2.5, 5.0, 4, 1), (1.5, 4.0, 4, 0)]:
            v = gpt_potential(GPTModel(A=A, B=B, D=D, l=l, m=m), r)
            assert np.all(np.isfinite(v))


def test_gpt_chi_nodes_and_norm():
    model = GPTModel.from_primed(2.5, 5.0, 1)
    grid = RadialGrid(1e-3, 25.0, 4000)
    r = grid.nodes
    for n in range(model.n_max + 1):
        chi = gpt_chi(model, n, r)
        assert count_sign_changes(chi) == n
        assert np.trapezoid(chi**2, r) == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(IndexRangeError):
        gpt_chi(model, model.n_max + 1, r)


def test_gpt_chi_decay_rate():
    """Log-slope of chi_n at large r approaches -(Ap - n)."""
    model = GPTModel.from_primed(2.5, 5.0, 1)
    r1, r2 = 12.0, 13.0
    for n in range(3):
        c1 = gpt_chi(model, n, np.array([r1]), normalized=False)[0]
        c2 = gpt_chi(model, n, np.array([r2]), normalized=False)[0]
        slope = np.log(abs(c2 / c1)) / (r2 - r1)
        assert slope == pytest.approx(-(model.Ap - n), abs=1e-3)


def test_gpt_textbook_norm_constant_diagnostic():
    model = GPTModel.from_primed(2.5, 5.0, 1)
    # beta + n is a non-positive integer here, so the closed-form constant is
    # degenerate and reported as NaN
    assert np.isnan(gpt_textbook_norm_constant(model, 0))
    model = GPTModel(A=2.5, B=5.0, D=4, l=0, m=1)
    val = gpt_textbook_norm_constant(model, 0)
    assert np.isfinite(val) and val > 0
