"""Exceptional Xm Laguerre and Xm Jacobi orthogonal polynomials.

Evaluation goes through the composition formulas in terms of classical
polynomials, with all derivatives assembled by the product rule from the
classical parameter-shift identities.  Closed-form L2 norms, weights, ODE
residuals and the Jacobi admissibility conditions live here as well.

Conventions pinned by residual testing (each has a regression test):
  * the Xm Laguerre ODE eigenvalue term multiplies the polynomial by n
    (the polynomial's own spectral index), not n - m;
  * the Xm Jacobi first-order coefficient carries (alpha - beta - m + 1),
    and the eigenvalue term is m(alpha-beta-m+1) + (n-m)(alpha+beta+n-m+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, lgamma

import numpy as np

from .errors import AdmissibilityError, DomainError, ParameterError, PoleError
from .orthopoly import jacobi_value, laguerre_value

__all__ = [
    "XLaguerreSpec",
    "XJacobiSpec",
    "xlaguerre_eval",
    "xlaguerre_weight",
    "xlaguerre_norm",
    "xlaguerre_ode_residual",
    "xjacobi_eval",
    "xjacobi_weight",
    "xjacobi_norm",
    "xjacobi_ode_residual",
    "xjacobi_admissible",
]

_INT_TOL = 1e-9  # integer-membership tolerance; parameters arrive as floats


# ---------------------------------------------------------------------------
# helpers: (value, d1, d2) triples and product-rule combination
# ---------------------------------------------------------------------------

def _laguerre_triple(n: int, a: float, x):
    """L_n^{(a)} and derivatives at x."""
    return (
        laguerre_value(n, a, x),
        -laguerre_value(n - 1, a + 1, x),
        laguerre_value(n - 2, a + 2, x),
    )


def _laguerre_triple_neg(n: int, a: float, g):
    """L_n^{(a)}(-g) and g-derivatives (chain rule through x = -g)."""
    return (
        laguerre_value(n, a, -g),
        laguerre_value(n - 1, a + 1, -g),
        laguerre_value(n - 2, a + 2, -g),
    )


def _jacobi_triple(n: int, a: float, b: float, x):
    """P_n^{(a,b)} and derivatives at x."""
    return (
        jacobi_value(n, a, b, x),
        0.5 * (n + a + b + 1) * jacobi_value(n - 1, a + 1, b + 1, x),
        0.25 * (n + a + b + 1) * (n + a + b + 2) * jacobi_value(n - 2, a + 2, b + 2, x),
    )


def _product(t1, t2):
    v1, d1, s1 = t1
    v2, d2, s2 = t2
    return (v1 * v2, d1 * v2 + v1 * d2, s1 * v2 + 2 * d1 * d2 + v1 * s2)


# ---------------------------------------------------------------------------
# Xm Laguerre
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class XLaguerreSpec:
    """Codimension m, spectral index n >= m and parameter alpha > 0."""

    m: int
    n: int
    alpha: float

    def __post_init__(self):
        if self.m < 0:
            raise ParameterError("m must be >= 0")
        if self.n < self.m:
            raise ParameterError("n must be >= m")
        if self.alpha <= 0:
            raise ParameterError("alpha must be > 0")


def xlaguerre_raw(m: int, n: int, alpha: float, g):
    """Composition-formula triple for Lhat_{n,m}^{(alpha)}(g), unvalidated.

    Lhat_{n,m}^{(a)}(g) = L_m^{(a)}(-g) L_{n-m}^{(a-1)}(g)
                        + L_m^{(a-1)}(-g) L_{n-m-1}^{(a)}(g);
    the second term vanishes for n = m through the zero-polynomial convention.
    """
    g = np.asarray(g, dtype=float)
    a = alpha
    t1 = _product(_laguerre_triple_neg(m, a, g), _laguerre_triple(n - m, a - 1, g))
    t2 = _product(_laguerre_triple_neg(m, a - 1, g), _laguerre_triple(n - m - 1, a, g))
    return tuple(x + y for x, y in zip(t1, t2))


def xlaguerre_eval(spec: XLaguerreSpec, g):
    """Value and first two g-derivatives of the Xm Laguerre polynomial."""
    return xlaguerre_raw(spec.m, spec.n, spec.alpha, g)


def xlaguerre_weight(m: int, alpha: float, g):
    """W_m^{alpha}(g) = g^alpha e^{-g} / (L_m^{(alpha-1)}(-g))^2."""
    g = np.asarray(g, dtype=float)
    den = laguerre_value(m, alpha - 1, -g)
    if np.any(np.abs(den) < 1e-300):
        raise PoleError("degenerate Xm Laguerre weight: denominator underflowed")
    return g**alpha * np.exp(-g) / den**2


def xlaguerre_norm(spec: XLaguerreSpec) -> float:
    """Closed-form squared L2 norm: (alpha+n) Gamma(alpha+n-m) / (n-m)!."""
    a, n, m = spec.alpha, spec.n, spec.m
    return (a + n) * np.exp(lgamma(a + n - m) - lgamma(n - m + 1))


def xlaguerre_ode_residual(spec: XLaguerreSpec, g):
    """Residual of the Xm Laguerre differential equation at g > 0.

    y'' + [(a+1-g) - 2g L_{m-1}^{(a)}(-g)/L_m^{(a-1)}(-g)] y'/g
        + [n - 2a L_{m-1}^{(a)}(-g)/L_m^{(a-1)}(-g)] y/g = 0
    """
    g = np.asarray(g, dtype=float)
    if np.any(g <= 0):
        raise DomainError("the Xm Laguerre ODE has a singular point at g = 0")
    m, n, a = spec.m, spec.n, spec.alpha
    v, d1, d2 = xlaguerre_eval(spec, g)
    ratio = laguerre_value(m - 1, a, -g) / laguerre_value(m, a - 1, -g)
    q = ((a + 1 - g) - 2 * g * ratio) / g
    r = (n - 2 * a * ratio) / g
    return d2 + q * d1 + r * v


# ---------------------------------------------------------------------------
# Xm Jacobi
# ---------------------------------------------------------------------------

def xjacobi_admissible(m: int, alpha: float, beta: float):
    """Check the weight-positivity conditions on [-1, 1].

    Returns (ok, diagnostic); diagnostic names the first violated clause.
    Integer-membership tests use a 1e-9 tolerance because the parameters are
    derived from floating-point model data.
    """
    def near_int_in(x, lo, hi):
        k = round(x)
        return lo <= k <= hi and abs(x - k) <= _INT_TOL

    if abs(beta) <= _INT_TOL:
        return False, "beta must be nonzero"
    if near_int_in(alpha, 0, m - 1):
        return False, f"alpha in {{0,...,{m - 1}}}"
    if near_int_in(alpha - beta - m + 1, 0, m - 1):
        return False, f"alpha-beta-m+1 in {{0,...,{m - 1}}}"
    if not alpha > m - 2:
        return False, "alpha > m-2 violated"
    if np.sign(alpha - m + 1) != np.sign(beta):
        return False, "sgn(alpha-m+1) != sgn(beta)"
    return True, "admissible"


@dataclass(frozen=True)
class XJacobiSpec:
    """Codimension m >= 1, spectral index n >= m, admissible (alpha, beta).

    Construction enforces admissibility (so the weight is pole-free on
    [-1, 1]) plus alpha, beta > -1 and alpha != beta.
    """

    m: int
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError("m must be >= 1")
        if self.n < self.m:
            raise ParameterError("n must be >= m")
        if self.alpha <= -1 or self.beta <= -1:
            raise ParameterError("alpha and beta must be > -1")
        if self.alpha == self.beta:
            raise ParameterError("alpha must differ from beta")
        ok, why = xjacobi_admissible(self.m, self.alpha, self.beta)
        if not ok:
            raise AdmissibilityError(why)


def xjacobi_raw(m: int, n: int, alpha: float, beta: float, g):
    """Composition-formula triple for Phat_{n,m}^{(alpha,beta)}(g), unvalidated.

    With j = n - m:
    Phat = (-1)^m [ (1+a+b+j)/(2(1+a+j)) (g-1) P_m^{(-a-1,b-1)} P_{j-1}^{(a+2,b)}
                  + (1+a-m)/(a+1+j) P_m^{(-2-a,b)} P_j^{(a+1,b-1)} ].
    """
    g = np.asarray(g, dtype=float)
    a, b = alpha, beta
    j = n - m
    if abs(a + 1 + j) < 1e-14:
        raise ParameterError("alpha + 1 + n - m = 0: composition coefficients diverge")
    c1 = (1 + a + b + j) / (2 * (1 + a + j))
    c2 = (1 + a - m) / (a + 1 + j)
    lin = (g - 1.0, np.ones_like(g), np.zeros_like(g))
    t1 = _product(lin, _product(_jacobi_triple(m, -a - 1, b - 1, g), _jacobi_triple(j - 1, a + 2, b, g)))
    t2 = _product(_jacobi_triple(m, -2 - a, b, g), _jacobi_triple(j, a + 1, b - 1, g))
    sign = -1.0 if m % 2 else 1.0
    return tuple(sign * (c1 * x + c2 * y) for x, y in zip(t1, t2))


def xjacobi_eval(spec: XJacobiSpec, g):
    """Value and first two derivatives of the Xm Jacobi polynomial."""
    return xjacobi_raw(spec.m, spec.n, spec.alpha, spec.beta, g)


def xjacobi_weight(m: int, alpha: float, beta: float, g):
    """What_m^{alpha,beta}(g) = (1-g)^alpha (1+g)^beta / (P_m^{(-a-1,b-1)}(g))^2."""
    g = np.asarray(g, dtype=float)
    den = jacobi_value(m, -alpha - 1, beta - 1, g)
    if np.any(np.abs(den) < 1e-12):
        raise PoleError("Xm Jacobi weight denominator vanished: inadmissible parameters")
    return (1 - g) ** alpha * (1 + g) ** beta / den**2


def xjacobi_norm(spec: XJacobiSpec) -> float:
    """Closed-form squared L2 norm of Phat_{n,m}^{(alpha,beta)} on [-1, 1]."""
    a, b, n, m = spec.alpha, spec.beta, spec.n, spec.m
    for arg in (a + 2 + n - m, b + n - m, a + b + n - m + 1):
        if arg <= 0 and abs(arg - round(arg)) <= _INT_TOL:
            raise ParameterError(f"gamma argument {arg} is a non-positive integer")
    num = 2.0 ** (a + b + 1) * (1 + a + n - 2 * m) * (b + n) * np.exp(
        lgamma(a + 2 + n - m) + lgamma(b + n - m)
    )
    den = (
        factorial(n - m)
        * (a + 1 + n - m) ** 2
        * (a + b + 2 * n - 2 * m + 1)
        * np.exp(lgamma(a + b + n - m + 1))
    )
    return num / den


def xjacobi_ode_residual(spec: XJacobiSpec, g):
    """Residual of the Xm Jacobi differential equation at g in (-1, 1)."""
    g = np.asarray(g, dtype=float)
    if np.any(np.abs(g) >= 1):
        raise DomainError("the Xm Jacobi ODE is singular at g = +/-1")
    m, n, a, b = spec.m, spec.n, spec.alpha, spec.beta
    v, d1, d2 = xjacobi_eval(spec, g)
    ratio = jacobi_value(m - 1, -a, b, g) / jacobi_value(m, -a - 1, b - 1, g)
    q = (a - b - m + 1) * ratio - (a + 1) / (1 - g) + (b + 1) / (1 + g)
    eig = m * (a - b - m + 1) + (n - m) * (a + b + n - m + 1)
    r = (b * (a - b - m + 1) * (1 - g) * ratio + eig) / (1 - g**2)
    return d2 + q * d1 + r * v
