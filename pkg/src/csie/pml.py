"""Truncated radial PML: high-order 1D finite elements on ``[0, T]``.

Uses the same complex-scaled forms as the infinite elements but on a bounded
interval with a homogeneous Dirichlet condition at ``xi = T``.  Each element
carries the two affine vertex modes and integrated-Legendre bubbles of degree
2..order.  Degrees of freedom are ordered element by element:
``[v0, bubbles(e0), v1, bubbles(e1), ..., v_n]``.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import legendre

from .assembly import PotentialSpec, ScalingConfig

__all__ = ["PmlConfig", "assemble_pml", "shape_functions"]


@dataclass(frozen=True)
class PmlConfig:
    """Uniform mesh of ``n_elems`` elements of polynomial ``order`` on ``[0, T]``."""

    T: float
    n_elems: int
    order: int
    cfg: ScalingConfig

    def __post_init__(self):
        if not self.T > 0:
            raise ValueError(f"truncation length must be positive, got T = {self.T}")
        if self.n_elems < 1:
            raise ValueError(f"need at least one element, got n_elems = {self.n_elems}")
        if self.order < 1:
            raise ValueError(f"element order must be >= 1, got order = {self.order}")

    @property
    def h(self):
        return self.T / self.n_elems

    @property
    def n_dofs(self):
        """Degrees of freedom before eliminating the Dirichlet vertex."""
        return self.n_elems * self.order + 1


def shape_functions(order, t):
    """Values and reference derivatives of the element modes at ``t`` in [-1, 1].

    Rows: left vertex, bubbles of degree 2..order, right vertex.
    """
    t = np.asarray(t, dtype=float)
    vals = [(1 - t) / 2]
    ders = [np.full_like(t, -0.5)]
    for k in range(2, order + 1):
        # (P_k - P_{k-2}) / sqrt(2(2k-1)) has derivative sqrt((2k-1)/2) P_{k-1}
        ck = np.zeros(k + 1)
        ck[k] = 1.0
        ck[k - 2] = -1.0
        vals.append(legendre.legval(t, ck) / np.sqrt(2 * (2 * k - 1)))
        dk = np.zeros(k)
        dk[k - 1] = 1.0
        ders.append(np.sqrt((2 * k - 1) / 2) * legendre.legval(t, dk))
    vals.append((1 + t) / 2)
    ders.append(np.full_like(t, 0.5))
    return np.array(vals), np.array(ders)


def _element_dofs(e, order):
    start = e * order
    return np.r_[start, start + 1 : start + order, start + order]


def assemble_pml(pml, nu, pot=None, eliminate_dirichlet=True):
    """Matrices ``S = s + nu(nu+1)/R^2 m0``, ``M = m1`` (potential-weighted) and the trace at 0.

    With ``eliminate_dirichlet`` the vertex at ``xi = T`` is removed, leaving
    ``n_elems * order`` unknowns.
    """
    if nu < 0 or int(nu) != nu:
        raise ValueError(f"spherical index must be a nonnegative integer, got {nu}")
    cfg = pml.cfg
    sigma, R = cfg.sigma, cfg.R
    lam = nu * (nu + 1) / R**2
    t, w = legendre.leggauss(pml.order + 2)
    V, dV = shape_functions(pml.order, t)
    h = pml.h
    n = pml.n_dofs
    S = np.zeros((n, n), dtype=complex)
    M = np.zeros((n, n), dtype=complex)
    for e in range(pml.n_elems):
        xi = e * h + (t + 1) * h / 2
        jw = w * h / 2
        jac = cfg.jacobian_factor(xi)
        pw = jac if pot is None else jac * pot.weight(xi, sigma)
        dphys = dV * (2 / h)
        Se = (dphys * (jw * jac)) @ dphys.T / sigma + lam * sigma * (V * jw) @ V.T
        Me = sigma * (V * (jw * pw)) @ V.T
        idx = _element_dofs(e, pml.order)
        S[np.ix_(idx, idx)] += Se
        M[np.ix_(idx, idx)] += Me
    S = (S + S.T) / 2
    M = (M + M.T) / 2
    trace = np.zeros(n)
    trace[0] = 1.0
    if eliminate_dirichlet:
        S, M, trace = S[:-1, :-1], M[:-1, :-1], trace[:-1]
    return S, M, trace
