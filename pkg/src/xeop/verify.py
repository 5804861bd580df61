"""Named verification suites with machine-readable reports.

Each suite runs a built-in parameter matrix and returns a VerificationReport
whose records carry analytic value, numeric value, errors, tolerance and a
pass flag.  The suites double as the bulk of the acceptance checks; the CLI
serializes the reports to JSON.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .eigensolve import build_hamiltonian, lowest_eigenpairs
from .errors import InvalidPartnerError
from .potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    gpt_energy,
    gpt_potential,
    gpt_special_case,
    oscillator_energy,
    oscillator_potential,
    oscillator_solver_potential,
    oscillator_special_case,
)
from .quadrature import QuadratureRule, integrate
from .susyqm import shape_invariance_check
from .xpoly import (
    XJacobiSpec,
    XLaguerreSpec,
    xjacobi_eval,
    xjacobi_norm,
    xjacobi_weight,
    xlaguerre_eval,
    xlaguerre_norm,
    xlaguerre_weight,
)

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "suite_orthogonality",
    "suite_isospectrality",
    "suite_shape_invariance",
    "suite_closed_forms",
    "run_suite",
    "SUITE_NAMES",
]


@dataclass(frozen=True)
class CheckRecord:
    id: str
    analytic: float
    numeric: float
    abs_err: float
    rel_err: float
    tol: float
    passed: bool

    def to_dict(self):
        return {
            "id": self.id,
            "analytic": self.analytic,
            "numeric": self.numeric,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, id: str, analytic: float, numeric: float, tol: float, passed=None):
        abs_err = abs(numeric - analytic)
        rel_err = abs_err / max(abs(analytic), 1e-300)
        if passed is None:
            passed = abs_err <= tol
        self.checks.append(
            CheckRecord(id, float(analytic), float(numeric), abs_err, rel_err, tol, bool(passed))
        )

    def finalize(self, t0: float) -> "VerificationReport":
        self.checks.sort(key=lambda c: c.id)
        self.runtime_seconds = time.perf_counter() - t0
        return self

    def to_dict(self):
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
            "runtime_seconds": self.runtime_seconds,
        }


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------

_LAG_RULE = QuadratureRule(panels=16, nodes_per_panel=48, grade_left=True, grade_ratio=0.25)
_LAG_TAIL = QuadratureRule(panels=10, nodes_per_panel=48)
_JAC_RULE = QuadratureRule(panels=24, nodes_per_panel=48, grade_left=True, grade_right=True)

LAGUERRE_MATRIX = [(m, a) for m in (1, 2, 3) for a in (0.5, 1.5, 3.0)]
JACOBI_MATRIX = [(1, 2.5, 0.5), (2, 3.2, 0.7), (3, 4.5, 0.7)]


def _laguerre_inner(m, a, n1, n2):
    f = lambda g: (
        xlaguerre_eval(XLaguerreSpec(m, n1, a), g)[0]
        * xlaguerre_eval(XLaguerreSpec(m, n2, a), g)[0]
        * xlaguerre_weight(m, a, g)
    )
    return integrate(f, 0.0, 40.0, _LAG_RULE) + integrate(f, 40.0, 240.0, _LAG_TAIL)


def _jacobi_inner(m, a, b, n1, n2):
    f = lambda g: (
        xjacobi_eval(XJacobiSpec(m, n1, a, b), g)[0]
        * xjacobi_eval(XJacobiSpec(m, n2, a, b), g)[0]
        * xjacobi_weight(m, a, b, g)
    )
    return integrate(f, -1.0, 1.0, _JAC_RULE)


def suite_orthogonality(n_span: int = 5) -> VerificationReport:
    """Xm Laguerre and Xm Jacobi orthonormality against the closed-form norms."""
    t0 = time.perf_counter()
    rep = VerificationReport("orthogonality")
    for m, a in LAGUERRE_MATRIX:
        degrees = range(m, m + n_span + 1)
        norms = {n: xlaguerre_norm(XLaguerreSpec(m, n, a)) for n in degrees}
        diag_rel = max(abs(_laguerre_inner(m, a, n, n) / norms[n] - 1) for n in degrees)
        off = max(
            abs(_laguerre_inner(m, a, n1, n2)) / sqrt(norms[n1] * norms[n2])
            for n1 in degrees
            for n2 in degrees
            if n1 < n2
        )
        rep.add(f"xlaguerre-diag-m{m}-a{a}", 0.0, diag_rel, 1e-7)
        rep.add(f"xlaguerre-offdiag-m{m}-a{a}", 0.0, off, 1e-8)
    for m, a, b in JACOBI_MATRIX:
        degrees = range(m, m + n_span + 1)
        norms = {n: xjacobi_norm(XJacobiSpec(m, n, a, b)) for n in degrees}
        diag_rel = max(abs(_jacobi_inner(m, a, b, n, n) / norms[n] - 1) for n in degrees)
        off = max(
            abs(_jacobi_inner(m, a, b, n1, n2)) / sqrt(norms[n1] * norms[n2])
            for n1 in degrees
            for n2 in degrees
            if n1 < n2
        )
        rep.add(f"xjacobi-diag-m{m}-a{a}-b{b}", 0.0, diag_rel, 1e-7)
        rep.add(f"xjacobi-offdiag-m{m}-a{a}-b{b}", 0.0, off, 1e-8)
    return rep.finalize(t0)


# ---------------------------------------------------------------------------
# isospectrality
# ---------------------------------------------------------------------------

OSC_MATRIX = [
    (m, D, l, w)
    for m in (0, 1, 2)
    for D in (2, 3, 4, 5)
    for l in (0, 1, 2)
    for w in (0.5, 1.0)
    if not (D == 2 and l == 0)
]
GPT_MATRIX = [
    (A, B, D, l, m)
    for (A, B) in ((2.5, 5.0), (1.5, 4.0))
    for D in (3, 4)
    for l in (0, 1)
    for m in (0, 1, 2)
]


def oscillator_grid(omega: float, n_points: int = 4000) -> RadialGrid:
    return RadialGrid(1e-4, max(20.0, 8.0 / sqrt(omega)), n_points)


GPT_GRID = RadialGrid(1e-4, 25.0, 4000)


def suite_isospectrality(n_points: int = 4000) -> VerificationReport:
    """Finite-difference spectra against the closed-form energies."""
    t0 = time.perf_counter()
    rep = VerificationReport("isospectrality")
    for m, D, l, w in OSC_MATRIX:
        model = OscillatorModel(omega=w, D=D, l=l, m=m)
        H = build_hamiltonian(lambda r: oscillator_solver_potential(model, r), oscillator_grid(w, n_points))
        res = lowest_eigenpairs(H, 5)
        err = max(
            abs(res.eigenvalues[n] - oscillator_energy(model, n)) for n in range(5)
        )
        rep.add(f"osc-m{m}-D{D}-l{l}-w{w}", 0.0, err, 5e-3)
    for A, B, D, l, m in GPT_MATRIX:
        model = GPTModel(A=A, B=B, D=D, l=l, m=m)
        grid = RadialGrid(1e-4, 25.0, n_points)
        H = build_hamiltonian(lambda r: gpt_potential(model, r), grid)
        k = model.n_max + 1
        res = lowest_eigenpairs(H, k)
        err = max(abs(res.eigenvalues[n] - gpt_energy(model, n)) for n in range(k))
        rep.add(f"gpt-A{A}-B{B}-D{D}-l{l}-m{m}", 0.0, err, 5e-3)
    return rep.finalize(t0)


# ---------------------------------------------------------------------------
# shape invariance
# ---------------------------------------------------------------------------

def suite_shape_invariance(include_exact_negative: bool = False) -> VerificationReport:
    """Constant partner differences with the predicted remainders."""
    t0 = time.perf_counter()
    rep = VerificationReport("shape-invariance")
    omega = 1.0
    for m in (0, 1, 2):
        for D in (2, 3, 4):
            l = 1 if D == 2 else 0
            r = shape_invariance_check("oscillator", {"omega": omega, "D": D, "l": l}, m)
            rep.add(f"osc-R-m{m}-D{D}", 2 * omega, r.mean_R, 1e-8)
            rep.add(
                f"osc-const-m{m}-D{D}",
                0.0,
                r.max_deviation / abs(r.mean_R),
                1e-8,
            )
    for A, B, D, l in ((2.5, 5.0, 3, 0), (2.5, 5.0, 4, 1)):
        model = GPTModel(A=A, B=B, D=D, l=l, m=1)
        r = shape_invariance_check("gpt", {"A": A, "B": B, "D": D, "l": l}, 1)
        rep.add(f"gpt-R-m1-D{D}-l{l}", 2 * model.Ap - 1, r.mean_R, 1e-8)
        rep.add(f"gpt-const-m1-D{D}-l{l}", 0.0, r.max_deviation / abs(r.mean_R), 1e-8)
    if include_exact_negative:
        r = shape_invariance_check(
            "gpt", {"A": 2.5, "B": 5.0, "D": 4, "l": 0}, 1, exact=True
        )
        # negative control: the exact D=4 family must NOT look shape invariant
        rep.add(
            "gpt-exact-D4-negative-control",
            0.0,
            r.max_deviation,
            1e-3,
            passed=r.max_deviation > 1e-3,
        )
    return rep.finalize(t0)


# ---------------------------------------------------------------------------
# closed-form special cases
# ---------------------------------------------------------------------------

OSC_CASE_PARAMS = [(1.0, 3, 0), (0.5, 4, 1), (2.0, 5, 2)]
GPT_CASE_PARAMS = [(2.5, 5.0), (1.5, 4.0), (2.2, 6.3)]


def suite_closed_forms() -> VerificationReport:
    """General-m formulas against the independent m = 0, 1, 2 case displays."""
    t0 = time.perf_counter()
    rep = VerificationReport("closed-forms")
    r_osc = np.linspace(0.1, 10.0, 200)
    for omega, D, l in OSC_CASE_PARAMS:
        for m in (0, 1, 2):
            model = OscillatorModel(omega=omega, D=D, l=l, m=m)
            general = oscillator_potential(model, r_osc)
            case = oscillator_special_case(model, r_osc)
            dev = np.max(np.abs(general - case) / np.maximum(np.abs(case), 1.0))
            rep.add(f"osc-case-m{m}-w{omega}-D{D}-l{l}", 0.0, dev, 1e-10)
    r_gpt = np.linspace(0.2, 8.0, 200)
    for A, B in GPT_CASE_PARAMS:
        for m in (0, 1, 2):
            model = GPTModel(A=A, B=B, D=3, l=0, m=m)
            general = gpt_potential(model, r_gpt)
            case = gpt_special_case(model, r_gpt)
            dev = np.max(np.abs(general - case) / np.maximum(np.abs(case), 1.0))
            rep.add(f"gpt-case-m{m}-A{A}-B{B}", 0.0, dev, 1e-10)
    return rep.finalize(t0)


SUITE_NAMES = ("orthogonality", "isospectrality", "shape-invariance", "closed-forms", "all")


def run_suite(name: str, exact_gpt: bool = False) -> VerificationReport:
    """Run one named suite, or all of them merged into a single report."""
    if name == "orthogonality":
        return suite_orthogonality()
    if name == "isospectrality":
        return suite_isospectrality()
    if name == "shape-invariance":
        return suite_shape_invariance(include_exact_negative=exact_gpt)
    if name == "closed-forms":
        return suite_closed_forms()
    if name == "all":
        t0 = time.perf_counter()
        merged = VerificationReport("all")
        for sub in SUITE_NAMES[:-1]:
            merged.checks.extend(run_suite(sub, exact_gpt=exact_gpt).checks)
        return merged.finalize(t0)
    raise ValueError(f"unknown suite {name!r}")
