"""Complex-scaled infinite elements for exterior Helmholtz resonance problems.

Radial discretization by generalized Laguerre functions, assembly of the
complex-scaled radial forms, approximation-error tools, a truncated PML
baseline and generalized eigensolvers.
"""

__version__ = "0.1.0"

from .errors import ConvergenceError, NumericalError, SingularMatrixError
from .laguerre import LaguerreBasis, QuadratureRule, gauss_laguerre
from .assembly import PotentialSpec, RadialOperator, ScalingConfig
from .eig import ResonanceSet, SeparatedProblem, separated_problem, shift_invert_arnoldi, dense_eig
from .pml import PmlConfig, assemble_pml

__all__ = [
    "ConvergenceError",
    "NumericalError",
    "SingularMatrixError",
    "LaguerreBasis",
    "QuadratureRule",
    "gauss_laguerre",
    "PotentialSpec",
    "RadialOperator",
    "ScalingConfig",
    "ResonanceSet",
    "SeparatedProblem",
    "separated_problem",
    "shift_invert_arnoldi",
    "dense_eig",
    "PmlConfig",
    "assemble_pml",
]
