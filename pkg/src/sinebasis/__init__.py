"""Variational eigenvalue bounds in a scaled particle-in-a-box sine basis."""

__version__ = "0.1.0"

from .basis import BasisWindow, basis_function, basis_matrix, kinetic_diagonal, symmetric_window
from .eigensolve import SpectrumEstimate, eigenvalues_symmetric
from .errors import (
    ConstraintViolation,
    DomainError,
    IntegrationError,
    SineBasisError,
    SolverError,
    UnsupportedCaseError,
)
from .hamiltonian import HamiltonianMatrix, assemble
from .nboson import BosonSystem, exact_energy, lower_bound, upper_bound
from .optimizer import (
    OptimizationReport,
    ScanResult,
    estimate_spectrum,
    minimize_ab,
    minimize_L,
    minimize_L_joint,
    scan_L,
)
from .potentials import (
    Potential,
    RadialProblem,
    catalog,
    confined_hydrogen_cases,
    effective_radial,
    hydrogen_exact_energy,
    oscillator_exact_energy,
    singular_ground_state,
)
from .quadrature import QuadratureConfig, integrate, potential_matrix_element

__all__ = [
    "assemble",
    "basis_function",
    "basis_matrix",
    "BasisWindow",
    "BosonSystem",
    "catalog",
    "confined_hydrogen_cases",
    "ConstraintViolation",
    "DomainError",
    "effective_radial",
    "eigenvalues_symmetric",
    "estimate_spectrum",
    "exact_energy",
    "HamiltonianMatrix",
    "hydrogen_exact_energy",
    "integrate",
    "IntegrationError",
    "kinetic_diagonal",
    "lower_bound",
    "minimize_ab",
    "minimize_L",
    "minimize_L_joint",
    "OptimizationReport",
    "oscillator_exact_energy",
    "Potential",
    "potential_matrix_element",
    "QuadratureConfig",
    "RadialProblem",
    "scan_L",
    "ScanResult",
    "SineBasisError",
    "singular_ground_state",
    "SolverError",
    "SpectrumEstimate",
    "symmetric_window",
    "UnsupportedCaseError",
    "upper_bound",
]
