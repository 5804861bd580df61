"""Rationally extended radial-oscillator and generalized Poschl-Teller models.

Closed forms for the potentials, bound-state energies and radial functions
chi_{n,m}, the modified-parameter map of the GPT family, and the m = 0, 1, 2
special-case formulas used as independent cross-checks.

Two potential conventions coexist:
  * the "psi form" carries the l(l+D-2)/r^2 centrifugal barrier of the
    D-dimensional radial equation;
  * the "solver form" is the one-dimensional chi-equation potential,
    psi form + (D-1)(D-3)/(4 r^2), in which all D-dependence enters through
    alpha = l + (D-2)/2 alone.  The eigensolver and the SUSY machinery use
    the solver form.
For the GPT family the effective potential is already the solver form (the
sinh approximation absorbs the centrifugal bookkeeping).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lgamma, sqrt

import numpy as np
from scipy.special import gamma as _gamma

from .errors import IndexRangeError, ParameterError, PoleError
from .orthopoly import jacobi_value, laguerre_value
from .quadrature import QuadratureRule, integrate
from .xpoly import xjacobi_raw, xlaguerre_raw

__all__ = [
    "RadialGrid",
    "OscillatorModel",
    "GPTModel",
    "oscillator_energy",
    "oscillator_potential",
    "oscillator_solver_potential",
    "oscillator_chi",
    "oscillator_norm_constant",
    "oscillator_special_case",
    "gpt_derived_params",
    "gpt_energy",
    "gpt_potential",
    "gpt_chi",
    "gpt_numeric_norm",
    "gpt_textbook_norm_constant",
    "gpt_special_case",
    "gpt_exact_potential",
    "centrifugal_solver_term",
]


@dataclass(frozen=True)
class RadialGrid:
    """Uniform discretization of r on [r_min, r_max], all nodes positive."""

    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self):
        if self.r_min <= 0:
            raise ParameterError("r_min must be > 0")
        if self.r_max <= self.r_min:
            raise ParameterError("r_max must exceed r_min")
        if self.n_points < 3:
            raise ParameterError("need at least 3 grid points")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n_points)


def centrifugal_solver_term(D: int, l: int, r):
    """(D-1)(D-3)/(4 r^2): converts the psi-form potential to the chi form."""
    r = np.asarray(r, dtype=float)
    return (D - 1) * (D - 3) / (4.0 * r * r)


# ---------------------------------------------------------------------------
# extended radial oscillator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OscillatorModel:
    """Extended radial oscillator: strength omega, dimension D, angular l,
    codimension m; derived alpha = l + (D-2)/2 must be positive."""

    omega: float
    D: int
    l: int
    m: int

    def __post_init__(self):
        if self.omega <= 0:
            raise ParameterError("omega must be > 0")
        if self.D < 2 or self.l < 0 or self.m < 0:
            raise ParameterError("require D >= 2, l >= 0, m >= 0")
        if self.alpha <= 0:
            raise ParameterError("alpha = l + (D-2)/2 must be > 0 (D=2 needs l >= 1)")

    @property
    def alpha(self) -> float:
        return self.l + (self.D - 2) / 2.0


def oscillator_energy(model: OscillatorModel, n: int) -> float:
    """E_n = 2 n omega, independent of m, D and l (isospectral deformation)."""
    if n < 0:
        raise IndexRangeError("n must be >= 0")
    return 2.0 * n * model.omega


def _osc_laguerre_ratios(alpha: float, m: int, g):
    den = laguerre_value(m, alpha - 1, -g)
    if np.any(np.abs(den) < 1e-300):
        raise PoleError("oscillator denominator Laguerre vanished")
    r1 = laguerre_value(m - 1, alpha, -g) / den
    r2 = laguerre_value(m - 2, alpha + 1, -g) / den
    return den, r1, r2


def oscillator_solver_potential_alpha(alpha: float, omega: float, m: int, r):
    """chi-equation potential expressed through alpha alone.

    All dimensional bookkeeping is absorbed: the centrifugal coefficient is
    (alpha^2 - 1/4) and shape invariance l -> l+1 is exactly alpha -> alpha+1.
    """
    r = np.asarray(r, dtype=float)
    g = 0.5 * omega * r * r
    _, r1, r2 = _osc_laguerre_ratios(alpha, m, g)
    w2r2 = omega * omega * r * r
    return (
        0.25 * w2r2
        + (alpha * alpha - 0.25) / (r * r)
        - omega * (alpha + 1)
        - w2r2 * r2
        + omega * (omega * r * r + 2 * alpha - 2) * r1
        + 2 * w2r2 * r1 * r1
        - 2 * m * omega
    )


def oscillator_solver_potential(model: OscillatorModel, r):
    """chi-equation potential of the model."""
    return oscillator_solver_potential_alpha(model.alpha, model.omega, model.m, r)


def oscillator_potential(model: OscillatorModel, r):
    """Extended oscillator potential V_m(r) in the D-dimensional (psi) form."""
    return oscillator_solver_potential(model, r) - centrifugal_solver_term(model.D, model.l, r)


def oscillator_norm_constant(model: OscillatorModel, n: int) -> float:
    """Closed-form constant giving unit L2(dr) norm of chi_{n,m}.

    The g-space norm constant sqrt(n!/((alpha+n+m) Gamma(alpha+n))) times the
    Jacobian factor sqrt(omega^(alpha+1)/2^alpha) of g = omega r^2 / 2.
    """
    a, m, w = model.alpha, model.m, model.omega
    g_space = np.exp(0.5 * (lgamma(n + 1) - lgamma(a + n))) / sqrt(a + n + m)
    return g_space * sqrt(w ** (a + 1) / 2.0**a)


def oscillator_chi(model: OscillatorModel, n: int, r, normalized: bool = True):
    """Radial function chi_{n,m}(r) of the extended oscillator."""
    if n < 0:
        raise IndexRangeError("n must be >= 0")
    r = np.asarray(r, dtype=float)
    a, m, w = model.alpha, model.m, model.omega
    g = 0.5 * w * r * r
    den = laguerre_value(m, a - 1, -g)
    if np.any(np.abs(den) < 1e-300):
        raise PoleError("oscillator chi denominator vanished")
    body = r ** (a + 0.5) * np.exp(-0.25 * w * r * r) / den * xlaguerre_raw(m, n + m, a, g)[0]
    if normalized:
        return oscillator_norm_constant(model, n) * body
    return body


def oscillator_special_case(model: OscillatorModel, r):
    """Independent m = 0, 1, 2 closed forms of V_m (psi form).

    These are written out term by term and share no code with the general-m
    formula; they exist purely as a cross-check.
    """
    r = np.asarray(r, dtype=float)
    w, l, D, m = model.omega, model.l, model.D, model.m
    v_rad = 0.25 * w * w * r * r + l * (l + D - 2) / (r * r) - w * (l + D / 2.0)
    if m == 0:
        return v_rad
    if m == 1:
        q = w * r * r + 2 * l + D - 2
        return v_rad + 4 * w / q - 8 * w * (2 * l + D - 2) / q**2
    if m == 2:
        den = w * w * r**4 + 2 * w * r * r * (2 * l + D) + (2 * l + D - 2) * (2 * l + D)
        return (
            v_rad
            + 8 * w * (w * r * r - (2 * l + D)) / den
            + 64 * w * w * r * r * (2 * l + D) / den**2
        )
    raise ParameterError("special-case forms exist for m in {0, 1, 2} only")


# ---------------------------------------------------------------------------
# extended generalized Poschl-Teller
# ---------------------------------------------------------------------------

def gpt_derived_params(A: float, B: float, D: int, l: int):
    """Modified parameters of the arbitrary-(D, l) GPT family.

    Returns (zeta, Bp, Ap, alpha, beta, n_max).  For D = 3, l = 0 the map is
    the identity: Bp = B, Ap = A.
    """
    if not B > A + (D - 1) / 2.0 > (D - 1) / 2.0:
        raise ParameterError("require B > A + (D-1)/2 > (D-1)/2")
    zeta = B * B + A * (A + 1) + l * (l + D - 2) + (D - 1) * (D - 3) / 4.0
    t = zeta + 0.25
    inner = (t + B * (2 * A + 1)) * (t - B * (2 * A + 1))
    if inner < 0:
        raise ParameterError("(zeta + 1/4)^2 < (B(2A+1))^2: no real modified parameter")
    Bp = sqrt(0.5 * (t + sqrt(inner)))
    if Bp == 0:
        raise ParameterError("modified parameter B' vanished")
    Ap = 0.5 * (2 * B * (A + 0.5) / Bp - 1.0)
    alpha = Bp - Ap - 0.5
    beta = -Bp - Ap - 0.5
    n_max = int(np.ceil(Ap)) - 1  # largest integer strictly below Ap
    return zeta, Bp, Ap, alpha, beta, n_max


@dataclass(frozen=True)
class GPTModel:
    """Extended GPT system defined by (A, B, D, l, m), m >= 0.

    Arbitrary (D, l) enters only through the 1/r^2 -> 1/sinh^2 r approximation
    and its modified parameters (Bp, Ap); the derived (alpha, beta) follow.
    The model must support at least one bound state (Ap >= 1).
    """

    A: float
    B: float
    D: int
    l: int
    m: int
    zeta: float = field(init=False)
    Bp: float = field(init=False)
    Ap: float = field(init=False)
    alpha: float = field(init=False)
    beta: float = field(init=False)
    n_max: int = field(init=False)

    def __post_init__(self):
        if self.D < 2 or self.l < 0 or self.m < 0:
            raise ParameterError("require D >= 2, l >= 0, m >= 0")
        zeta, Bp, Ap, alpha, beta, n_max = gpt_derived_params(self.A, self.B, self.D, self.l)
        if Ap < 1:
            raise ParameterError("A' < 1: the family has no bound state")
        for name, value in (
            ("zeta", zeta), ("Bp", Bp), ("Ap", Ap),
            ("alpha", alpha), ("beta", beta), ("n_max", n_max),
        ):
            object.__setattr__(self, name, value)

    @classmethod
    def from_primed(cls, Ap: float, Bp: float, m: int) -> "GPTModel":
        """Model with prescribed modified parameters (identity map at D=3, l=0)."""
        return cls(A=Ap, B=Bp, D=3, l=0, m=m)


def gpt_energy(model: GPTModel, n: int) -> float:
    """E_n = -(A' - n)^2 for 0 <= n <= n_max."""
    if not 0 <= n <= model.n_max:
        raise IndexRangeError(f"n={n} outside bound-state range 0..{model.n_max}")
    return -((model.Ap - n) ** 2)


def _gpt_denominator(Ap: float, Bp: float, m: int, ch):
    alpha = Bp - Ap - 0.5
    beta = -Bp - Ap - 0.5
    return jacobi_value(m, -alpha - 1, beta - 1, ch)


def gpt_effective_potential_primed(Ap: float, Bp: float, m: int, r):
    """V_eff,m(r) in terms of the modified parameters; the chi-form potential."""
    r = np.asarray(r, dtype=float)
    alpha = Bp - Ap - 0.5
    beta = -Bp - Ap - 0.5
    ch, sh = np.cosh(r), np.sinh(r)
    v_gpt = (Bp * Bp + Ap * (Ap + 1)) / sh**2 - Bp * (2 * Ap + 1) * ch / sh**2
    if m == 0:
        return v_gpt
    den = _gpt_denominator(Ap, Bp, m, ch)
    if np.any(np.abs(den) < 1e-12):
        bad = r[np.abs(den) < 1e-12] if r.ndim else r
        raise PoleError(f"GPT denominator Jacobi polynomial vanished near r={bad!r}")
    ratio = jacobi_value(m - 1, -alpha, beta, ch) / den
    c = 2 * Bp - m + 1
    return (
        v_gpt
        + 2 * m * c
        - c * (2 * Ap + 1 - (2 * Bp + 1) * ch) * ratio
        + 0.5 * c * c * sh**2 * ratio**2
    )


def gpt_potential(model: GPTModel, r):
    """Effective (chi-form) potential of the model."""
    return gpt_effective_potential_primed(model.Ap, model.Bp, model.m, r)


def gpt_chi_raw(Ap: float, Bp: float, m: int, n: int, r):
    """Un-normalized chi_{n,m}(r) of the GPT family in modified parameters."""
    r = np.asarray(r, dtype=float)
    alpha = Bp - Ap - 0.5
    beta = -Bp - Ap - 0.5
    ch = np.cosh(r)
    den = _gpt_denominator(Ap, Bp, m, ch)
    if np.any(np.abs(den) < 1e-12):
        raise PoleError("GPT chi denominator vanished")
    pre = (ch - 1.0) ** (0.5 * (Bp - Ap)) * (ch + 1.0) ** (-0.5 * (Bp + Ap))
    if m == 0:
        poly = jacobi_value(n, alpha, beta, ch)
    else:
        poly = xjacobi_raw(m, n + m, alpha, beta, ch)[0]
    return pre / den * poly


_GPT_NORM_RULE = QuadratureRule(panels=24, nodes_per_panel=48, grade_left=True, grade_ratio=0.2)


def gpt_numeric_norm(model: GPTModel, n: int) -> float:
    """Numeric L2(dr) norm of the un-normalized GPT chi on (0, inf).

    The bound states decay like exp(-(Ap - n) r); a window of 40/(Ap - n_max)
    e-foldings is far beyond double-precision relevance.
    """
    if not 0 <= n <= model.n_max:
        raise IndexRangeError(f"n={n} outside bound-state range 0..{model.n_max}")
    kappa = model.Ap - model.n_max
    r_max = max(30.0, 40.0 / kappa)
    f = lambda r: gpt_chi_raw(model.Ap, model.Bp, model.m, n, r) ** 2
    return sqrt(integrate(f, 1e-12, r_max, _GPT_NORM_RULE))


def gpt_chi(model: GPTModel, n: int, r, normalized: bool = True):
    """chi_{n,m}(r) of the GPT family; normalization is numeric on (0, inf)."""
    if not 0 <= n <= model.n_max:
        raise IndexRangeError(f"n={n} outside bound-state range 0..{model.n_max}")
    body = gpt_chi_raw(model.Ap, model.Bp, model.m, n, r)
    if normalized:
        return body / gpt_numeric_norm(model, n)
    return body


def gpt_textbook_norm_constant(model: GPTModel, n: int) -> float:
    """Closed-form [-1, 1] Jacobi-weight normalization constant.

    Reported as a diagnostic only: the physical variable is cosh r on [1, inf),
    for which this constant does not normalize chi; compare with
    1/gpt_numeric_norm to see the ratio.
    """
    a, b, m = model.alpha, model.beta, model.m
    for arg in (a + b + n + 1, a + n + 2, b + n):
        if arg <= 0 and abs(arg - round(arg)) < 1e-9:
            return float("nan")  # gamma pole: the closed form is degenerate here
    num = (
        _gamma(n + 1.0)
        * (a + n + 1) ** 2
        * (a + b + 2 * n + 1)
        * _gamma(a + b + n + 1)
    )
    den = 2.0 ** (a + b + 1) * (1 + a + n - m) * (b + n + m) * _gamma(a + n + 2) * _gamma(b + n)
    return sqrt(abs(num / den))


def gpt_special_case(model: GPTModel, r):
    """Independent m = 0, 1, 2 closed forms of the GPT effective potential.

    The m = 2 display is sometimes quoted with an extra constant 2m(2B'-m+1)
    on top of its own fractions; that term is already part of the general-m
    formula, so carrying it twice shifts the case form by a constant and
    contradicts the E_n = -(A'-n)^2 spectrum.  It is dropped here.
    """
    r = np.asarray(r, dtype=float)
    Ap, Bp, m = model.Ap, model.Bp, model.m
    ch, sh = np.cosh(r), np.sinh(r)
    v_gpt = (Bp * Bp + Ap * (Ap + 1)) / sh**2 - Bp * (2 * Ap + 1) * ch / sh**2
    if m == 0:
        return v_gpt
    if m == 1:
        q = 2 * Bp * ch - 2 * Ap - 1
        return v_gpt + 2 * (2 * Ap + 1) / q - 2 * (4 * Bp * Bp - (2 * Ap + 1) ** 2) / q**2
    if m == 2:
        den = (
            (2 * Bp - 1) * (2 * Bp - 2) * ch**2
            - 2 * (2 * Bp - 1) * (2 * Ap + 1) * ch
            + 4 * Ap * (Ap + 1)
            + 2 * Bp
            - 1
        )
        return (
            v_gpt
            - 4 * (3 * (2 * Bp - 1) * (2 * Ap + 1) * ch - 2 * Bp * (2 * Bp - 1) - 8 * Ap * (Ap + 1)) / den
            + 8 * (2 * Bp - 1) ** 2 * sh**2 * ((2 * Ap + 1) - (2 * Bp - 2) * ch) ** 2 / den**2
            - 8
        )
    raise ParameterError("special-case forms exist for m in {0, 1, 2} only")


def gpt_exact_potential(A: float, B: float, m: int, D: int, r):
    """Exact (un-approximated) s-wave family lifted to D dimensions.

    The closed form in the raw (A, B) parameters plus the bare centrifugal
    term; used as the negative control, since this family is not shape
    invariant unless D = 3.
    """
    return gpt_effective_potential_primed(A, B, m, r) + centrifugal_solver_term(D, 0, r)
