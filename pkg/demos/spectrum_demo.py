"""Isospectrality of the rationally extended potentials.

Adding the m-dependent rational terms deforms the potential but leaves the
bound-state energies untouched: E_n = 2 n omega for the extended radial
oscillator, E_n = -(A' - n)^2 for the extended generalized Poschl-Teller
(GPT) family.  An independent finite-difference eigensolver confirms both.

Run:  python3 demos/spectrum_demo.py
"""

import numpy as np

from xeop import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    build_hamiltonian,
    gpt_energy,
    gpt_potential,
    lowest_eigenpairs,
    oscillator_energy,
    oscillator_solver_potential,
)

print("extended radial oscillator, omega = 1, D = 3, l = 0")
grid = RadialGrid(1e-4, 20.0, 4000)
for m in (0, 1, 2):
    model = OscillatorModel(omega=1.0, D=3, l=0, m=m)
    H = build_hamiltonian(lambda r: oscillator_solver_potential(model, r), grid)
    res = lowest_eigenpairs(H, 4)
    errs = [abs(res.eigenvalues[n] - oscillator_energy(model, n)) for n in range(4)]
    levels = "  ".join(f"{e:8.5f}" for e in res.eigenvalues)
    print(f"  m={m}:  E_numeric = {levels}   max |err| = {max(errs):.2e}")
print("  -> the spectrum 0, 2, 4, 6 is independent of m")

print("\nextended GPT family, A = 2.5, B = 5, D = 3, l = 0 (A' = 2.5, 3 bound states)")
grid = RadialGrid(1e-4, 25.0, 4000)
for m in (0, 1, 2):
    model = GPTModel(A=2.5, B=5.0, D=3, l=0, m=m)
    H = build_hamiltonian(lambda r: gpt_potential(model, r), grid)
    res = lowest_eigenpairs(H, model.n_max + 1)
    errs = [abs(res.eigenvalues[n] - gpt_energy(model, n)) for n in range(model.n_max + 1)]
    levels = "  ".join(f"{e:9.5f}" for e in res.eigenvalues)
    print(f"  m={m}:  E_numeric = {levels}   max |err| = {max(errs):.2e}")
print("  -> the spectrum -6.25, -2.25, -0.25 is independent of m")

print("\narbitrary (D, l) enters the GPT family through modified parameters:")
for D, l in ((3, 0), (4, 0), (4, 1)):
    model = GPTModel(A=2.5, B=5.0, D=D, l=l, m=1)
    print(f"  D={D}, l={l}:  A' = {model.Ap:.6f}, B' = {model.Bp:.6f}, n_max = {model.n_max}")
