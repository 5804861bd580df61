"""Classical Laguerre and Jacobi polynomials with first and second derivatives.

Both families follow the convention that any negative degree denotes the zero
polynomial, which keeps the exceptional-polynomial composition formulas total
at their lowest indices.

Laguerre values come from the stable three-term recurrence; Jacobi values come
from the explicit finite sum with generalized binomial coefficients, which
stays well defined for the negative parameter combinations (e.g. alpha < -1,
non-integer alpha + beta near negative integers) that the exceptional
compositions require and where the three-term recurrence coefficients can
vanish.  Derivatives use the parameter-shift identities, never divided
differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lgamma

import numpy as np

__all__ = [
    "ClassicalLaguerreSpec",
    "ClassicalJacobiSpec",
    "laguerre_eval",
    "jacobi_eval",
    "laguerre_value",
    "jacobi_value",
    "gamma_ratio",
]


def gamma_ratio(num: float, den: float) -> float:
    """Gamma(num)/Gamma(den) via log-gamma, for positive arguments up to ~50."""
    return np.exp(lgamma(num) - lgamma(den))


@dataclass(frozen=True)
class ClassicalLaguerreSpec:
    """Degree and parameter of a classical Laguerre polynomial L_n^{(alpha)}.

    Degree -1 (or any negative degree) denotes the zero polynomial.
    """

    n: int
    alpha: float


@dataclass(frozen=True)
class ClassicalJacobiSpec:
    """Degree and parameters of a classical Jacobi polynomial P_n^{(alpha,beta)}."""

    n: int
    alpha: float
    beta: float


def laguerre_value(n: int, alpha: float, x):
    """L_n^{(alpha)}(x) by the three-term recurrence; negative n gives 0."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    if n == 0:
        return np.ones_like(x)
    p_prev = np.ones_like(x)
    p = 1.0 + alpha - x
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1 + alpha - x) * p - (k - 1 + alpha) * p_prev) / k
    return p


def laguerre_eval(spec: ClassicalLaguerreSpec, x):
    """Value, first and second derivative of L_n^{(alpha)} at x.

    d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}, applied twice for the second derivative.
    """
    n, a = spec.n, spec.alpha
    value = laguerre_value(n, a, x)
    d1 = -laguerre_value(n - 1, a + 1, x)
    d2 = laguerre_value(n - 2, a + 2, x)
    return value, d1, d2


def _binom_real(z: float, k: int) -> float:
    """Generalized binomial C(z, k) = z(z-1)...(z-k+1)/k! for real z."""
    out = 1.0
    for i in range(k):
        out *= (z - i) / (k - i)
    return out


def jacobi_value(n: int, alpha: float, beta: float, x):
    """P_n^{(alpha,beta)}(x) from the explicit finite sum; negative n gives 0.

    Valid for all real x (the formula is polynomial, not limited to [-1, 1])
    and all real parameters, including the negative values used by the
    exceptional composition formulas.
    """
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    u = (x - 1.0) / 2.0
    v = (x + 1.0) / 2.0
    total = np.zeros_like(x)
    for s in range(n + 1):
        c = _binom_real(n + alpha, n - s) * _binom_real(n + beta, s)
        total = total + c * u**s * v ** (n - s)
    return total


def jacobi_eval(spec: ClassicalJacobiSpec, x):
    """Value, first and second derivative of P_n^{(alpha,beta)} at x.

    d/dx P_n^{(a,b)} = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}.
    """
    n, a, b = spec.n, spec.alpha, spec.beta
    value = jacobi_value(n, a, b, x)
    d1 = 0.5 * (n + a + b + 1) * jacobi_value(n - 1, a + 1, b + 1, x)
    d2 = 0.25 * (n + a + b + 1) * (n + a + b + 2) * jacobi_value(n - 2, a + 2, b + 2, x)
    return value, d1, d2
