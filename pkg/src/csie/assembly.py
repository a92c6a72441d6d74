"""Complex-scaled radial bilinear forms on the Laguerre basis.

With the linear scaling ``xi -> sigma xi`` the exterior forms split into

    m0(f, g) = sigma   int f g dxi
    m1(f, g) = sigma   int (1 + sigma xi / R)^2 f g dxi
    s(f, g)  = 1/sigma int (1 + sigma xi / R)^2 f' g' dxi

All integrands are polynomials times ``exp(-2 xi)``, so Gauss-Laguerre rules
with weight ``exp(-2 xi)`` integrate them exactly.
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NumericalError
from .laguerre import derivative_expansion, gauss_laguerre, nodes_for_degree, phi_table

__all__ = [
    "ScalingConfig",
    "PotentialSpec",
    "RadialOperator",
    "StructureReport",
    "POTENTIALS",
    "assemble_mass0",
    "assemble_mass1",
    "assemble_stiffness",
    "assemble_weighted_mass",
    "trace_vector",
    "structure_report",
    "BASES",
    "basis_change",
    "change_basis",
]

BASES = ("laguerre", "difference")


@dataclass(frozen=True)
class ScalingConfig:
    """Linear complex scaling ``xi -> sigma xi`` outside the interface radius ``R``."""

    sigma: complex
    R: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "sigma", complex(self.sigma))
        object.__setattr__(self, "R", float(self.R))
        if not self.sigma.imag > 0:
            raise ValueError(f"complex scaling needs Im(sigma) > 0, got sigma = {self.sigma}")
        if not self.R > 0:
            raise ValueError(f"interface radius must be positive, got R = {self.R}")

    def jacobian_factor(self, xi):
        """``(1 + sigma xi / R)^2``, the scaled radial surface-measure factor."""
        return (1 + self.sigma * np.asarray(xi) / self.R) ** 2


def _bump(xi):
    d = xi - 1
    return d**2 / (1 + d**4)


POTENTIALS = {
    "bump": _bump,
    "constant": lambda xi: np.ones_like(np.asarray(xi, dtype=complex)),
}


@dataclass(frozen=True)
class PotentialSpec:
    """Radial potential factor ``1 + eps_tilde * profile(arg)`` multiplying the m1 form.

    ``arg`` is ``xi`` by default and ``sigma * xi`` when ``scale_argument`` is set.
    """

    eps_tilde: float
    profile: Callable = field(default=_bump, compare=False)
    scale_argument: bool = False
    name: str = "bump"

    @classmethod
    def named(cls, name, eps_tilde, scale_argument=False):
        try:
            profile = POTENTIALS[name]
        except KeyError:
            raise ValueError(f"unknown potential {name!r}; known: {sorted(POTENTIALS)}") from None
        return cls(eps_tilde, profile, scale_argument, name)

    def weight(self, xi, sigma):
        arg = sigma * np.asarray(xi) if self.scale_argument else np.asarray(xi)
        p = np.asarray(self.profile(arg), dtype=complex)
        if not np.all(np.isfinite(p)):
            raise ValueError(f"potential {self.name!r} is not finite at all quadrature nodes")
        w = 1 + self.eps_tilde * p
        if np.any(w == 0):
            raise ValueError("potential weight 1 + eps*p vanishes at a quadrature node")
        return w


@dataclass(frozen=True)
class StructureReport:
    bandwidth: object  # int, or "dense"
    nnz: int
    tol: float


@dataclass(frozen=True)
class RadialOperator:
    """Dense complex-symmetric matrix of one radial form on ``phi_0..phi_N``."""

    entries: np.ndarray
    form: str
    cfg: ScalingConfig

    @property
    def dim(self):
        return self.entries.shape[0]

    @property
    def structure(self):
        return structure_report(self, 1e-12)


def _symmetric(A):
    return (A + A.T) / 2


def _gram(rule_weights, values_left, values_right=None):
    right = values_left if values_right is None else values_right
    return _symmetric((values_left * rule_weights) @ right.T)


def assemble_mass0(N, cfg):
    """``m0`` is ``sigma/2`` times the identity by orthogonality of the ``phi_n``."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return RadialOperator(cfg.sigma / 2 * np.eye(N + 1, dtype=complex), "mass0", cfg)


def _weighted_gram(N, cfg, n_nodes, extra=None):
    rule = gauss_laguerre(n_nodes, 2.0)
    x = rule.nodes
    w = rule.full_weights * cfg.jacobian_factor(x)
    if extra is not None:
        w = w * extra(x)
    return _gram(w, phi_table(N, x).real)


def _band(A, b):
    i, j = np.indices(A.shape)
    return np.where(np.abs(i - j) <= b, A, 0)


def _jacobian_gram(N, cfg, n_nodes=None):
    # entries beyond |i-j| = 2 vanish exactly (quadratic weight); drop the roundoff
    n_nodes = n_nodes or nodes_for_degree(N, 2)
    return _band(_weighted_gram(N, cfg, n_nodes), 2)


def assemble_mass1(N, cfg, n_nodes=None):
    """``m1(phi_j, phi_i)``: pentadiagonal since the weight is a quadratic polynomial."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return RadialOperator(cfg.sigma * _jacobian_gram(N, cfg, n_nodes), "mass1", cfg)


def assemble_stiffness(N, cfg, n_nodes=None):
    """``s(phi_j, phi_i) = D W D^T / sigma`` with ``W`` the m1 Gram matrix.

    ``D`` is the exact derivative expansion, which is lower triangular and
    full, so the stiffness matrix is dense.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    D = derivative_expansion(N)
    A = _symmetric(D @ _jacobian_gram(N, cfg, n_nodes) @ D.T)
    return RadialOperator(A / cfg.sigma, "stiffness", cfg)


_WEIGHTED_TOL = 1e-9
_WEIGHTED_FAIL = 1e-6
_WEIGHTED_MAX_NODES = 8192


def assemble_weighted_mass(N, cfg, pot, n_nodes=None, check=True):
    """``m1((1 + eps p) phi_j, phi_i)`` by Gauss-Laguerre quadrature.

    The profile is not polynomial, so the rule is validated by doubling its
    node count and the finer result is returned.  By default the count
    starts at ``2N + 64`` and doubles until two rules agree to 1e-9
    (relative); profiles with complex poles near the axis converge only
    like ``exp(-c sqrt(n))``.  An explicit ``n_nodes`` gets a single
    doubling check.  A change above 1e-6 raises :class:`NumericalError`.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    adaptive = n_nodes is None
    n_nodes = n_nodes or 2 * N + 64
    if n_nodes < N + 4:
        raise ValueError(f"need at least N+4 = {N + 4} nodes, got {n_nodes}")
    if pot is None or pot.eps_tilde == 0:
        return RadialOperator(assemble_mass1(N, cfg).entries, "weighted_mass", cfg)

    def extra(x):
        return pot.weight(x, cfg.sigma)

    A = cfg.sigma * _weighted_gram(N, cfg, n_nodes, extra)
    if not check:
        return RadialOperator(A, "weighted_mass", cfg)
    while True:
        B = cfg.sigma * _weighted_gram(N, cfg, 2 * n_nodes, extra)
        diff = np.abs(A - B).max() / np.abs(B).max()
        n_nodes *= 2
        if diff <= _WEIGHTED_TOL or not adaptive or 2 * n_nodes > _WEIGHTED_MAX_NODES:
            break
        A = B
    if diff > _WEIGHTED_FAIL:
        raise NumericalError(
            f"weighted mass unstable under node doubling ({diff:.2e} at {n_nodes} nodes)"
        )
    return RadialOperator(B, "weighted_mass", cfg)


def trace_vector(N, basis="laguerre"):
    """Evaluation at ``xi = 0`` on the chosen radial basis.

    ``L_j(0) = 1`` gives ``phi_j(0) = 1`` for every j, so on the Laguerre
    basis the functional is all ones.  On the ``"difference"`` basis
    ``psi_j = phi_{j,-1}`` it is ``e_0``, and only ``psi_0`` couples to the
    interior.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; known: {BASES}")
    if basis == "laguerre":
        return np.ones(N + 1)
    e = np.zeros(N + 1)
    e[0] = 1.0
    return e


def basis_change(N, basis="laguerre"):
    """Matrix ``C`` with ``psi_i = sum_j C[i, j] phi_j`` for the chosen radial basis.

    ``"difference"`` is ``psi_0 = phi_0``, ``psi_n = phi_n - phi_{n-1} = phi_{n,-1}``.
    It spans the same space, satisfies ``psi_j(0) = delta_{0j}``, and has the
    banded derivative ``psi_n' = -(phi_n + phi_{n-1})``, so every radial
    matrix becomes banded.
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; known: {BASES}")
    C = np.eye(N + 1)
    if basis == "difference":
        C -= np.eye(N + 1, k=-1)
    return C


def change_basis(op, basis):
    """Re-express an operator given on ``phi_0..phi_N`` in another radial basis."""
    if basis == "laguerre":
        return op
    C = basis_change(op.dim - 1, basis)
    return RadialOperator(_symmetric(C @ op.entries @ C.T), op.form, op.cfg)


def structure_report(op, tol):
    """Detected bandwidth (or ``"dense"``) and count of entries above ``tol``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    A = np.abs(op.entries if isinstance(op, RadialOperator) else np.asarray(op))
    n = A.shape[0]
    big = A > tol
    i, j = np.nonzero(big)
    bw = int(np.abs(i - j).max()) if len(i) else 0
    if n > 1 and bw == n - 1:
        off = ~np.eye(n, dtype=bool)
        if big[off].mean() > 0.1:
            bw = "dense"
    return StructureReport(bw, int(big.sum()), float(tol))
