"""Two-parameter Dunkl operators in the plane: exact operator algebra, closed-form
oscillator and Coulomb spectra, and seeded verification suites."""

from .algebra import ExpPoly1, GaussPoly2, Poly2, TrigPoly, coefficient_residual
from .operators import (
    DunklParams,
    LinearOperator,
    ParameterError,
    angular_momentum_cartesian,
    angular_momentum_J,
    commutator,
    dunkl_standard,
    dunkl_tilde,
    hamiltonian,
    laplacian_cartesian,
    laplacian_factorized,
    laplacian_standard,
    make_params,
)
from .spectra import (
    AngularQuantum,
    angular_eigenfunction,
    cartesian_energy,
    coulomb_energy,
    coulomb_state,
    degeneracy_table,
    oscillator_cartesian_state,
    oscillator_polar_state,
    polar_energy,
)
from .special import DomainError

__version__ = "0.1.0"

__all__ = [
    "AngularQuantum",
    "DomainError",
    "DunklParams",
    "ExpPoly1",
    "GaussPoly2",
    "LinearOperator",
    "ParameterError",
    "Poly2",
    "TrigPoly",
    "angular_eigenfunction",
    "angular_momentum_J",
    "angular_momentum_cartesian",
    "cartesian_energy",
    "coefficient_residual",
    "commutator",
    "coulomb_energy",
    "coulomb_state",
    "degeneracy_table",
    "dunkl_standard",
    "dunkl_tilde",
    "hamiltonian",
    "laplacian_cartesian",
    "laplacian_factorized",
    "laplacian_standard",
    "make_params",
    "oscillator_cartesian_state",
    "oscillator_polar_state",
    "polar_energy",
]
