"""Superpotentials, partner potentials and shape-invariance checks.

The superpotential is the negative logarithmic derivative of the analytic
ground state, assembled from closed-form derivatives of its factors (never
from numerical differentiation).  Partner potentials are V-/+ = W^2 -/+ W',
so V- has its ground state at zero by construction; the additive offset
between V- and the model's solver potential (minus the factorization energy)
is reported, not asserted.

All checks run at the chi-equation level, where the oscillator map l -> l+1
is exactly alpha -> alpha+1 and "constant difference" is literally testable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidPartnerError, ParameterError
from .orthopoly import laguerre_value
from .potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    centrifugal_solver_term,
    gpt_effective_potential_primed,
    gpt_exact_potential,
    gpt_potential,
    oscillator_solver_potential,
)
from .xpoly import xjacobi_raw, _jacobi_triple

__all__ = [
    "SuperpotentialProfile",
    "ShapeInvarianceReport",
    "superpotential",
    "partner_potentials",
    "factorization_offset",
    "shape_invariance_check",
    "OSC_CHECK_GRID",
    "GPT_CHECK_GRID",
]

OSC_CHECK_GRID = RadialGrid(0.01, 12.0, 600)
GPT_CHECK_GRID = RadialGrid(0.05, 20.0, 600)


def _log_ratio_derivs(num_triple, den_triple, dg, d2g):
    """First and second r-derivatives of ln(num/den)(g(r)) by the chain rule."""
    lp = []
    for v, d1, d2 in (num_triple, den_triple):
        f1 = d1 / v
        f2 = d2 / v - f1 * f1
        lp.append((f1 * dg, f2 * dg * dg + f1 * d2g))
    return lp[0][0] - lp[1][0], lp[0][1] - lp[1][1]


def _osc_w(alpha: float, omega: float, m: int, r):
    """(W, W') for the extended oscillator in the alpha parameterization."""
    r = np.asarray(r, dtype=float)
    g = 0.5 * omega * r * r
    dg, d2g = omega * r, omega * np.ones_like(r)
    # phi_0 = r^(alpha+1/2) exp(-omega r^2/4)
    w = -((alpha + 0.5) / r - 0.5 * omega * r)
    dw = -(-(alpha + 0.5) / r**2 - 0.5 * omega)
    if m > 0:
        # phi_m = L_m^{(alpha)}(-g)/L_m^{(alpha-1)}(-g); d/dg L(-g) = +L_{m-1}^{(a+1)}(-g)
        num = (
            laguerre_value(m, alpha, -g),
            laguerre_value(m - 1, alpha + 1, -g),
            laguerre_value(m - 2, alpha + 2, -g),
        )
        den = (
            laguerre_value(m, alpha - 1, -g),
            laguerre_value(m - 1, alpha, -g),
            laguerre_value(m - 2, alpha + 1, -g),
        )
        l1, l2 = _log_ratio_derivs(num, den, dg, d2g)
        w = w - l1
        dw = dw - l2
    return w, dw


def _gpt_w(Ap: float, Bp: float, m: int, r):
    """(W, W') for the extended GPT family in the modified parameters."""
    r = np.asarray(r, dtype=float)
    ch, sh = np.cosh(r), np.sinh(r)
    alpha = Bp - Ap - 0.5
    beta = -Bp - Ap - 0.5
    # phi_0 = (cosh r - 1)^((Bp-Ap)/2) (cosh r + 1)^(-(Bp+Ap)/2)
    k1, k2 = 0.5 * (Bp - Ap), -0.5 * (Bp + Ap)
    l1 = k1 * sh / (ch - 1) + k2 * sh / (ch + 1)
    l2 = k1 * (ch / (ch - 1) - (sh / (ch - 1)) ** 2) + k2 * (ch / (ch + 1) - (sh / (ch + 1)) ** 2)
    w, dw = -l1, -l2
    if m > 0:
        num = xjacobi_raw(m, m, alpha, beta, ch)
        den = _jacobi_triple(m, -alpha - 1, beta - 1, ch)
        p1, p2 = _log_ratio_derivs(num, den, sh, ch)
        w = w - p1
        dw = dw - p2
    return w, dw


@dataclass(frozen=True)
class SuperpotentialProfile:
    """Grid-sampled W = -(ln chi_0)' with its analytic derivative."""

    grid: RadialGrid
    W: np.ndarray
    dW: np.ndarray
    source: str
    _w_fn: object
    _v_solver: object

    def w(self, r):
        return self._w_fn(np.asarray(r, dtype=float))[0]

    def dw(self, r):
        return self._w_fn(np.asarray(r, dtype=float))[1]


def superpotential(model, grid: RadialGrid | None = None) -> SuperpotentialProfile:
    """Superpotential profile of an oscillator or GPT model's ground state."""
    if isinstance(model, OscillatorModel):
        grid = grid or OSC_CHECK_GRID
        fn = lambda r: _osc_w(model.alpha, model.omega, model.m, r)
        v_solver = lambda r: oscillator_solver_potential(model, r)
        source = f"oscillator(omega={model.omega}, D={model.D}, l={model.l}, m={model.m}, n=0)"
    elif isinstance(model, GPTModel):
        grid = grid or GPT_CHECK_GRID
        fn = lambda r: _gpt_w(model.Ap, model.Bp, model.m, r)
        v_solver = lambda r: gpt_potential(model, r)
        source = f"gpt(Ap={model.Ap}, Bp={model.Bp}, m={model.m}, n=0)"
    else:
        raise ParameterError(f"unsupported model type {type(model).__name__}")
    w, dw = fn(grid.nodes)
    return SuperpotentialProfile(grid=grid, W=w, dW=dw, source=source, _w_fn=fn, _v_solver=v_solver)


def partner_potentials(profile: SuperpotentialProfile):
    """Callables (V-, V+) with V-/+ = W^2 -/+ W' (ground state of V- at zero)."""
    def vminus(r):
        w, dw = profile._w_fn(r)
        return w * w - dw

    def vplus(r):
        w, dw = profile._w_fn(r)
        return w * w + dw

    return vminus, vplus


def factorization_offset(profile: SuperpotentialProfile) -> float:
    """Mean of V_solver - (W^2 - W') over the profile grid.

    Equals minus the model's ground-state energy when the factorization is
    exact; the constancy of the pointwise difference is tested separately.
    """
    r = profile.grid.nodes
    vminus, _ = partner_potentials(profile)
    return float(np.mean(profile._v_solver(r) - vminus(r)))


@dataclass(frozen=True)
class ShapeInvarianceReport:
    """Outcome of one V+(a1) vs V-(a2) comparison on a shared grid."""

    grid: RadialGrid
    difference: np.ndarray
    mean_R: float
    max_deviation: float
    passed: bool
    parameter_map: str


def _report(grid, diff, tolerance, parameter_map) -> ShapeInvarianceReport:
    mean_r = float(np.mean(diff))
    max_dev = float(np.max(np.abs(diff - mean_r)))
    scale = abs(mean_r) if mean_r != 0 else 1.0
    return ShapeInvarianceReport(
        grid=grid,
        difference=diff,
        mean_R=mean_r,
        max_deviation=max_dev,
        passed=max_dev <= tolerance * scale,
        parameter_map=parameter_map,
    )


def shape_invariance_check(
    family: str,
    params: dict,
    m: int,
    tolerance: float = 1e-8,
    exact: bool = False,
    grid: RadialGrid | None = None,
) -> ShapeInvarianceReport:
    """Compare V+(a1) with V-(a2) on a shared grid.

    family "oscillator": params {omega, D, l}; a2 is l -> l+1.
    family "gpt": params {A, B, D, l}; a2 is Ap -> Ap-1 with Bp fixed.
    exact=True (gpt only) uses the un-approximated D-dimensional family as
    the negative control: V-(a2) is the closed-form exact potential with its
    bare centrifugal term, so the difference is non-constant unless D = 3.

    tolerance is relative to |mean_R| (absolute when mean_R = 0).
    """
    if family == "oscillator":
        grid = grid or OSC_CHECK_GRID
        m1 = OscillatorModel(omega=params["omega"], D=params["D"], l=params["l"], m=m)
        try:
            m2 = OscillatorModel(omega=params["omega"], D=params["D"], l=params["l"] + 1, m=m)
        except ParameterError as exc:
            raise InvalidPartnerError(str(exc)) from exc
        _, vplus = partner_potentials(superpotential(m1, grid))
        vminus2, _ = partner_potentials(superpotential(m2, grid))
        diff = vplus(grid.nodes) - vminus2(grid.nodes)
        return _report(grid, diff, tolerance, f"l={params['l']} -> l={params['l'] + 1}")

    if family == "gpt":
        grid = grid or GPT_CHECK_GRID
        A, B, D, l = params["A"], params["B"], params["D"], params["l"]
        if exact:
            # W from the closed-form s-wave ground state in raw (A, B) parameters
            w, dw = _gpt_w(A, B, m, grid.nodes)
            vplus = w * w + dw
            vminus2 = gpt_exact_potential(A - 1.0, B, m, D, grid.nodes)
            diff = vplus - vminus2
            return _report(grid, diff, tolerance, f"A={A} -> A={A - 1} (exact family, D={D})")
        m1 = GPTModel(A=A, B=B, D=D, l=l, m=m)
        if m1.Ap - 1 < 1:
            raise InvalidPartnerError("A' - 1 < 1: the partner family has no bound state")
        w1, dw1 = _gpt_w(m1.Ap, m1.Bp, m, grid.nodes)
        w2, dw2 = _gpt_w(m1.Ap - 1.0, m1.Bp, m, grid.nodes)
        diff = (w1 * w1 + dw1) - (w2 * w2 - dw2)
        return _report(grid, diff, tolerance, f"A'={m1.Ap} -> A'={m1.Ap - 1}, B'={m1.Bp} fixed")

    raise ParameterError(f"unknown family {family!r}")
