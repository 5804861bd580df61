"""Closed-form bound states versus numeric eigenvectors.

The chi_{n,m} radial functions are assembled from exceptional polynomials and
a classical prefactor; this script checks their node counts, unit L2 norms,
and their overlap with the eigenvectors of the discretized Hamiltonian.

Run:  python3 demos/wavefunction_demo.py
"""

import numpy as np

from xeop import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    build_hamiltonian,
    eigenfunction_overlap,
    gpt_chi,
    gpt_potential,
    lowest_eigenpairs,
    oscillator_chi,
    oscillator_solver_potential,
)


def nodes_of(y):
    s = np.sign(y[np.abs(y) > 1e-12 * np.max(np.abs(y))])
    return int(np.sum(s[1:] != s[:-1]))


print("extended oscillator (omega = 1, D = 3, l = 0, m = 1)")
model = OscillatorModel(1.0, 3, 0, 1)
grid = RadialGrid(1e-4, 20.0, 4000)
H = build_hamiltonian(lambda r: oscillator_solver_potential(model, r), grid)
res = lowest_eigenpairs(H, 3)
print("  n   nodes   L2 norm (analytic)    overlap with eigenvector")
for n in range(3):
    chi = oscillator_chi(model, n, grid.nodes)
    ov = eigenfunction_overlap(res, lambda r: oscillator_chi(model, n, r), n)
    print(f"  {n}   {nodes_of(chi)}       {np.trapezoid(chi**2, grid.nodes):.9f}      {ov:.9f}")

print("\nextended GPT (A = 2.5, B = 5, m = 1)")
model = GPTModel(A=2.5, B=5.0, D=3, l=0, m=1)
grid = RadialGrid(1e-4, 25.0, 4000)
H = build_hamiltonian(lambda r: gpt_potential(model, r), grid)
res = lowest_eigenpairs(H, model.n_max + 1)
print("  n   nodes   L2 norm (analytic)    overlap with eigenvector")
for n in range(model.n_max + 1):
    chi = gpt_chi(model, n, grid.nodes)
    ov = eigenfunction_overlap(res, lambda r: gpt_chi(model, n, r), n)
    print(f"  {n}   {nodes_of(chi)}       {np.trapezoid(chi**2, grid.nodes):.9f}      {ov:.9f}")

print("\nasymptotic decay of the GPT states: log-slope -> -(A' - n)")
r1, r2 = 12.0, 13.0
for n in range(model.n_max + 1):
    c1 = gpt_chi(model, n, np.array([r1]), normalized=False)[0]
    c2 = gpt_chi(model, n, np.array([r2]), normalized=False)[0]
    slope = np.log(abs(c2 / c1)) / (r2 - r1)
    print(f"  n={n}: slope = {slope:+.6f}, -(A'-n) = {-(model.Ap - n):+.6f}")
