"""Acceptance suite: one test per contract criterion, fixed tolerances.

Each test prints a single PASS/FAIL line and enforces its runtime budget.
"""

import time

import numpy as np
import pytest

from xeop.eigensolve import build_hamiltonian, eigenfunction_overlap, lowest_eigenpairs
from xeop.potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    gpt_chi,
    oscillator_chi,
    oscillator_norm_constant,
)
from xeop.susyqm import partner_potentials, superpotential
from xeop.verify import (
    suite_closed_forms,
    suite_isospectrality,
    suite_orthogonality,
    suite_shape_invariance,
)
from xeop.xpoly import (
    XJacobiSpec,
    XLaguerreSpec,
    xjacobi_eval,
    xjacobi_ode_residual,
    xlaguerre_eval,
    xlaguerre_ode_residual,
)

OSC_GRID = RadialGrid(1e-4, 20.0, 4000)
GPT_GRID = RadialGrid(1e-4, 25.0, 4000)


def report(criterion: str, ok: bool, budget: float, elapsed: float):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(f"{status} {criterion} ({elapsed:.2f}s / budget {budget:.0f}s)")
    assert ok
    assert elapsed < budget


def split_checks(rep, prefix):
    return [c for c in rep.checks if c.id.startswith(prefix)]


@pytest.fixture(scope="module")
def orthogonality_report():
    t0 = time.perf_counter()
    rep = suite_orthogonality()
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def isospectrality_report():
    t0 = time.perf_counter()
    rep = suite_isospectrality()
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def shape_invariance_report():
    t0 = time.perf_counter()
    rep = suite_shape_invariance(include_exact_negative=True)
    return rep, time.perf_counter() - t0


def test_criterion_01_xlaguerre_orthonormality(orthogonality_report):
    rep, elapsed = orthogonality_report
    checks = split_checks(rep, "xlaguerre-")
    assert len(checks) == 18  # 9 parameter pairs x (diag, offdiag)
    report("criterion-01 Xm-Laguerre orthonormality", all(c.passed for c in checks), 10.0, elapsed)


def test_criterion_02_xjacobi_orthonormality(orthogonality_report):
    rep, elapsed = orthogonality_report
    checks = split_checks(rep, "xjacobi-")
    assert len(checks) == 6
    report("criterion-02 Xm-Jacobi orthonormality", all(c.passed for c in checks), 10.0, elapsed)


def test_criterion_03_ode_residuals():
    t0 = time.perf_counter()
    ok = True
    g = np.linspace(0.1, 15.0, 50)
    for m, n, a in [(1, 2, 0.5), (2, 4, 1.5), (3, 5, 3.0)]:
        spec = XLaguerreSpec(m, n, a)
        res = xlaguerre_ode_residual(spec, g)
        v, d1, d2 = xlaguerre_eval(spec, g)
        scale = np.maximum.reduce([np.ones_like(g), np.abs(v), np.abs(d1), np.abs(d2)])
        ok &= np.max(np.abs(res) / scale) <= 1e-8
        # sensitivity control: eigenvalue shifted by +1
        wrong = res + v / g
        ok &= np.max(np.abs(wrong) / scale) > 1e-3
    x = np.linspace(-0.95, 0.95, 50)
    for m, n, a, b in [(1, 2, 2.5, 0.5), (2, 3, 3.2, 0.7), (3, 4, 4.5, 0.7)]:
        spec = XJacobiSpec(m, n, a, b)
        res = xjacobi_ode_residual(spec, x)
        v, d1, d2 = xjacobi_eval(spec, x)
        scale = np.maximum.reduce([np.ones_like(x), np.abs(v), np.abs(d1), np.abs(d2)])
        ok &= np.max(np.abs(res) / scale) <= 1e-8
        wrong = res + v / (1 - x * x)
        ok &= np.max(np.abs(wrong) / scale) > 1e-3
    report("criterion-03 ODE residuals + sensitivity", bool(ok), 5.0, time.perf_counter() - t0)


def test_criterion_04_oscillator_isospectrality(isospectrality_report):
    rep, elapsed = isospectrality_report
    checks = split_checks(rep, "osc-")
    assert len(checks) == 66  # 3 x 4 x 3 minus (D=2, l=0), times 2 omegas
    report("criterion-04 oscillator isospectrality", all(c.passed for c in checks), 60.0, elapsed)


def test_criterion_05_gpt_spectra(isospectrality_report):
    rep, elapsed = isospectrality_report
    checks = split_checks(rep, "gpt-")
    assert len(checks) == 24
    report("criterion-05 GPT spectra", all(c.passed for c in checks), 60.0, elapsed)


def test_criterion_06_closed_form_special_cases():
    t0 = time.perf_counter()
    rep = suite_closed_forms()
    report("criterion-06 closed-form special cases", rep.passed, 2.0, time.perf_counter() - t0)


def test_criterion_07_oscillator_shape_invariance(shape_invariance_report):
    rep, elapsed = shape_invariance_report
    checks = split_checks(rep, "osc-")
    assert len(checks) == 18
    report("criterion-07 oscillator shape invariance", all(c.passed for c in checks), 5.0, elapsed)


def test_criterion_08_gpt_shape_invariance(shape_invariance_report):
    rep, elapsed = shape_invariance_report
    checks = split_checks(rep, "gpt-")
    assert any(c.id == "gpt-exact-D4-negative-control" for c in checks)
    report("criterion-08 GPT shape invariance + negative control",
           all(c.passed for c in checks), 5.0, elapsed)


def pairing_deviation(profile, grid, k_minus):
    vminus, vplus = partner_potentials(profile)
    res_minus = lowest_eigenpairs(build_hamiltonian(vminus, grid), k_minus)
    res_plus = lowest_eigenpairs(build_hamiltonian(vplus, grid), k_minus - 1)
    return np.max(np.abs(res_plus.eigenvalues - res_minus.eigenvalues[1:]))


def test_criterion_09_susy_pairing():
    t0 = time.perf_counter()
    dev_osc = pairing_deviation(
        superpotential(OscillatorModel(1.0, 3, 0, 1)), OSC_GRID, 4
    )
    dev_gpt = pairing_deviation(
        superpotential(GPTModel(A=2.5, B=5.0, D=3, l=0, m=1)), GPT_GRID, 3
    )
    ok = dev_osc <= 5e-3 and dev_gpt <= 5e-3
    report("criterion-09 SUSY pairing E+_n = E-_(n+1)", bool(ok), 20.0, time.perf_counter() - t0)


def count_sign_changes(y):
    s = np.sign(y[np.abs(y) > 1e-12 * np.max(np.abs(y))])
    return int(np.sum(s[1:] != s[:-1]))


def test_criterion_10_wavefunctions():
    t0 = time.perf_counter()
    ok = True
    osc = OscillatorModel(1.0, 3, 0, 1)
    from xeop.potentials import gpt_potential, oscillator_solver_potential

    res = lowest_eigenpairs(
        build_hamiltonian(lambda r: oscillator_solver_potential(osc, r), OSC_GRID), 3
    )
    for n in range(3):
        ok &= eigenfunction_overlap(res, lambda r: oscillator_chi(osc, n, r), n) >= 0.99999
        chi = oscillator_chi(osc, n, OSC_GRID.nodes)
        ok &= count_sign_changes(chi) == n
        ok &= abs(np.trapezoid(chi**2, OSC_GRID.nodes) - 1.0) <= 1e-6
        ok &= np.isfinite(oscillator_norm_constant(osc, n))
    gpt = GPTModel(A=2.5, B=5.0, D=3, l=0, m=1)
    res = lowest_eigenpairs(
        build_hamiltonian(lambda r: gpt_potential(gpt, r), GPT_GRID), gpt.n_max + 1
    )
    for n in range(gpt.n_max + 1):
        ok &= eigenfunction_overlap(res, lambda r: gpt_chi(gpt, n, r), n) >= 0.99999
        chi = gpt_chi(gpt, n, GPT_GRID.nodes)
        ok &= count_sign_changes(chi) == n
    report("criterion-10 wavefunction overlaps/nodes/normalization",
           bool(ok), 20.0, time.perf_counter() - t0)
