"""Exception types raised by the numerical kernels.

Invalid arguments (poles, branch cuts, negative indices) raise ``ValueError``.
Failures of an algorithm on valid input raise a :class:`NumericalError`.
"""


class NumericalError(RuntimeError):
    """An algorithm failed on admissible input (insufficient quadrature, no convergence, ...)."""


class SingularMatrixError(NumericalError):
    """A factorization met a numerically zero pivot."""


class ConvergenceError(NumericalError):
    """An iterative method did not converge.

    ``partial`` holds whatever was computed before giving up (may be ``None``).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
