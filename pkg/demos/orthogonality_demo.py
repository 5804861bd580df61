"""Exceptional orthogonal polynomials: evaluation, weights and orthonormality.

The Xm families start at degree m (degrees 0..m-1 are missing) yet remain
complete and orthogonal under a rationally deformed weight.  This script
evaluates a few members, verifies the closed-form norms by quadrature, and
shows the Sturm-Liouville residual vanishing on the admissible domain.

Run:  python3 demos/orthogonality_demo.py
"""

import numpy as np

from xeop import (
    XJacobiSpec,
    XLaguerreSpec,
    xjacobi_eval,
    xjacobi_norm,
    xjacobi_weight,
    xlaguerre_eval,
    xlaguerre_norm,
    xlaguerre_ode_residual,
    xlaguerre_weight,
)
from xeop.quadrature import QuadratureRule, integrate

m, alpha = 2, 1.5
print(f"X{m} Laguerre family, alpha = {alpha}")
print("degrees present: n =", ", ".join(str(n) for n in range(m, m + 5)), "(0..%d missing)" % (m - 1))

rule = QuadratureRule(panels=16, nodes_per_panel=48, grade_left=True, grade_ratio=0.25)
tail = QuadratureRule(panels=10, nodes_per_panel=48)


def inner(n1, n2):
    f = lambda g: (
        xlaguerre_eval(XLaguerreSpec(m, n1, alpha), g)[0]
        * xlaguerre_eval(XLaguerreSpec(m, n2, alpha), g)[0]
        * xlaguerre_weight(m, alpha, g)
    )
    return integrate(f, 0.0, 40.0, rule) + integrate(f, 40.0, 240.0, tail)


print("\n  n   <n,n> quadrature     closed-form norm     off-diag <n,n+1>")
for n in range(m, m + 4):
    q = inner(n, n)
    c = xlaguerre_norm(XLaguerreSpec(m, n, alpha))
    off = inner(n, n + 1)
    print(f"  {n}   {q:18.12e}  {c:18.12e}  {off:12.3e}")

g = np.linspace(0.1, 10.0, 7)
res = xlaguerre_ode_residual(XLaguerreSpec(m, m + 3, alpha), g)
print(f"\nmax |ODE residual| on (0, 10]: {np.max(np.abs(res)):.3e}")

print("\nX1 Jacobi family on (-1, 1), (alpha, beta) = (2.5, 0.5)")
spec = XJacobiSpec(1, 2, 2.5, 0.5)
jrule = QuadratureRule(panels=24, nodes_per_panel=48, grade_left=True, grade_right=True)
f = lambda g: xjacobi_eval(spec, g)[0] ** 2 * xjacobi_weight(1, 2.5, 0.5, g)
print(f"  <2,2> quadrature  = {integrate(f, -1.0, 1.0, jrule):.12e}")
print(f"  closed-form norm  = {xjacobi_norm(spec):.12e}")
