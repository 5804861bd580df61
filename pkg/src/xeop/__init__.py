"""Rationally extended shape-invariant potentials built on exceptional
Xm Laguerre and Xm Jacobi orthogonal polynomials, with an independent
finite-difference eigensolver for verification."""

from .orthopoly import (
    ClassicalJacobiSpec,
    ClassicalLaguerreSpec,
    jacobi_eval,
    laguerre_eval,
)
from .xpoly import (
    XJacobiSpec,
    XLaguerreSpec,
    xjacobi_admissible,
    xjacobi_eval,
    xjacobi_norm,
    xjacobi_ode_residual,
    xjacobi_weight,
    xlaguerre_eval,
    xlaguerre_norm,
    xlaguerre_ode_residual,
    xlaguerre_weight,
)
from .quadrature import QuadratureRule, integrate, integrate_semi_infinite
from .potentials import (
    GPTModel,
    OscillatorModel,
    RadialGrid,
    centrifugal_solver_term,
    gpt_chi,
    gpt_derived_params,
    gpt_energy,
    gpt_potential,
    oscillator_chi,
    oscillator_energy,
    oscillator_potential,
    oscillator_solver_potential,
)
from .eigensolve import (
    build_hamiltonian,
    eigenfunction_overlap,
    lowest_eigenpairs,
    sturm_count,
)
from .susyqm import (
    partner_potentials,
    shape_invariance_check,
    superpotential,
)

__version__ = "0.1.0"
