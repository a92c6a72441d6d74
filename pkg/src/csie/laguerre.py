"""Generalized Laguerre polynomials/functions and Gauss-Laguerre quadrature.

Conventions::

    L_{n,m}(x) = sum_k binom(n+m, n-k) (-x)^k / k!
    phi_{n,m}(x) = exp(-x) L_{n,m}(2x),      phi_n = phi_{n,0}

The functions ``phi_n`` satisfy ``(phi_n, phi_k) = delta_nk / 2`` on (0, inf).
All evaluators accept complex arguments and broadcast over arrays.
"""

from dataclasses import dataclass, field
from functools import cached_property
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import NumericalError

__all__ = [
    "LaguerreBasis",
    "QuadratureRule",
    "eval_laguerre",
    "eval_phi",
    "laguerre_table",
    "phi_table",
    "dphi_table",
    "derivative_expansion",
    "gauss_laguerre",
    "nodes_for_degree",
]

_BIG = 1e150


def _check_index(n, m):
    if n < 0:
        raise ValueError(f"Laguerre index must be nonnegative, got n={n}")
    if m < -n:
        raise ValueError(f"shift m={m} below -n={-n}: binomials undefined")


def _recurrence_table(N, m, y, log_prefactor):
    """Rows ``exp(log_prefactor) * L_{k,m}(y)`` for k = 0..N.

    The recurrence runs on rescaled values with a per-point log scale, so the
    product is formed only at the end and neither factor over/underflows alone.
    """
    y = np.asarray(y, dtype=complex)
    out = np.empty((N + 1,) + y.shape, dtype=complex)
    logs = np.asarray(log_prefactor, dtype=complex) + np.zeros(y.shape)
    prev = np.zeros(y.shape, dtype=complex)
    cur = np.ones(y.shape, dtype=complex)
    out[0] = np.exp(logs)
    for k in range(1, N + 1):
        # k L_k = (2k-1+m-y) L_{k-1} - (k-1+m) L_{k-2}
        nxt = ((2 * k - 1 + m - y) * cur - (k - 1 + m) * prev) / k
        prev, cur = cur, nxt
        mag = np.abs(cur)
        rescale = (mag > _BIG) | ((mag < 1.0 / _BIG) & (mag > 0))
        if np.any(rescale):
            f = np.where(rescale, mag, 1.0)
            prev = prev / f
            cur = cur / f
            logs = logs + np.log(f)
        with np.errstate(under="ignore", over="ignore"):
            out[k] = cur * np.exp(logs)
    return out


def laguerre_table(N, x, m=0):
    """Values ``L_{k,m}(x)`` for k = 0..N, shape ``(N+1,) + x.shape``."""
    _check_index(N, m)
    return _recurrence_table(N, m, x, 0.0)


def phi_table(N, x, m=0):
    """Values ``phi_{k,m}(x)`` for k = 0..N, shape ``(N+1,) + x.shape``."""
    _check_index(N, m)
    x = np.asarray(x, dtype=complex)
    return _recurrence_table(N, m, 2 * x, -x)


def eval_laguerre(n, m, x):
    """Generalized Laguerre polynomial ``L_{n,m}(x)`` by the three-term recurrence."""
    _check_index(n, m)
    val = _recurrence_table(n, m, x, 0.0)[n]
    return val[()] if val.ndim == 0 else val


def eval_phi(n, m, x):
    """Generalized Laguerre function ``phi_{n,m}(x) = exp(-x) L_{n,m}(2x)``."""
    _check_index(n, m)
    x = np.asarray(x, dtype=complex)
    val = _recurrence_table(n, m, 2 * x, -x)[n]
    return val[()] if val.ndim == 0 else val


def derivative_expansion(N):
    """Matrix ``D`` with ``phi_n' = sum_k D[n, k] phi_k``.

    From ``L_n' = -sum_{k<n} L_k`` one gets ``phi_n' = -phi_n - 2 sum_{k<n} phi_k``.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    D = -2.0 * np.tril(np.ones((N + 1, N + 1)), -1)
    np.fill_diagonal(D, -1.0)
    return D


def dphi_table(N, x):
    """Derivatives ``phi_k'(x)`` for k = 0..N."""
    P = phi_table(N, x)
    D = derivative_expansion(N)
    return np.tensordot(D, P, axes=(1, 0))


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for ``int_0^inf g(x) exp(-c x) dx``.

    ``weights`` belong to the weight function ``exp(-c x)``; ``full_weights``
    equal ``weights * exp(c x)`` (computed without overflow) and integrate
    functions that already carry their own decay.
    """

    nodes: np.ndarray
    weights: np.ndarray
    weight_exponent: float
    full_weights: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.nodes)

    def integrate(self, values, axis=-1):
        """``int f dx`` from samples of f (decay included) at the nodes."""
        return np.tensordot(np.asarray(values), self.full_weights, axes=([axis], [0]))

    def integrate_weighted(self, values, axis=-1):
        """``int g exp(-c x) dx`` from samples of g at the nodes."""
        return np.tensordot(np.asarray(values), self.weights, axes=([axis], [0]))


def _laguerre_log_sumsq(n, t):
    """``log sum_{k<n} L_k(t)^2`` for real t, rescaling as the terms grow."""
    prev = np.zeros_like(t)
    cur = np.ones_like(t)
    logscale = np.zeros_like(t)
    sumsq = np.ones_like(t)
    for k in range(1, n):
        prev, cur = cur, ((2 * k - 1 - t) * cur - (k - 1) * prev) / k
        sumsq = sumsq + cur * cur
        big = np.abs(cur) > _BIG
        if np.any(big):
            f = np.where(big, np.abs(cur), 1.0)
            prev, cur = prev / f, cur / f
            sumsq = sumsq / (f * f)
            logscale = logscale + 2 * np.log(f)
    return np.log(sumsq) + logscale


def _newton_polish(n, t, sweeps=2):
    for _ in range(sweeps):
        prev = np.zeros_like(t)
        cur = np.ones_like(t)
        for k in range(1, n + 1):
            prev, cur = cur, ((2 * k - 1 - t) * cur - (k - 1) * prev) / k
            big = np.abs(cur) > _BIG
            if np.any(big):
                f = np.where(big, np.abs(cur), 1.0)
                prev, cur = prev / f, cur / f
        # L_n' = n (L_n - L_{n-1}) / t
        t = t - cur * t / (n * (cur - prev))
    return t


def gauss_laguerre(n_nodes, weight_exponent=1.0):
    """Gauss rule with ``n_nodes`` points for the weight ``exp(-c x)`` on (0, inf).

    Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix of the
    Laguerre polynomials, refined by Newton; weights come from the
    Christoffel function evaluated in log space.  Exact for polynomials of
    degree ``2 n_nodes - 1`` against the weight.
    """
    if n_nodes < 1:
        raise ValueError(f"need at least one node, got {n_nodes}")
    c = float(weight_exponent)
    if not c > 0:
        raise ValueError(f"weight exponent must be positive, got {weight_exponent}")
    n = int(n_nodes)
    diag = 2.0 * np.arange(n) + 1.0
    off = np.arange(1, n, dtype=float)
    try:
        t = eigh_tridiagonal(diag, off, eigvals_only=True)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"Jacobi eigensolve failed for {n} nodes") from exc
    t = np.sort(_newton_polish(n, t))
    log_sumsq = _laguerre_log_sumsq(n, t)
    log_w = -log_sumsq - math.log(c)
    nodes = t / c
    with np.errstate(under="ignore"):
        weights = np.exp(log_w)
    full = np.exp(log_w + t)
    if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(full))):
        raise NumericalError(f"non-finite Gauss-Laguerre rule for {n} nodes")
    if np.any(np.diff(nodes) <= 0) or nodes[0] <= 0:
        raise NumericalError(f"Gauss-Laguerre nodes not strictly increasing for {n} nodes")
    return QuadratureRule(nodes=nodes, weights=weights, weight_exponent=c, full_weights=full)


def nodes_for_degree(N, q):
    """Node count integrating ``p * phi_i * phi_j`` exactly for ``deg p <= q``, ``i, j <= N``."""
    return (2 * N + q + 2 + 1) // 2


@dataclass(frozen=True)
class LaguerreBasis:
    """The radial space spanned by ``phi_0 .. phi_N``."""

    N: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError(f"N must be nonnegative, got {self.N}")

    @property
    def dim(self):
        return self.N + 1

    def phi(self, x):
        return phi_table(self.N, x)

    def dphi(self, x):
        return dphi_table(self.N, x)

    @cached_property
    def derivative_matrix(self):
        return derivative_expansion(self.N)

    def rule(self, q=0):
        """Exact rule for basis products times a degree-``q`` polynomial."""
        return gauss_laguerre(nodes_for_degree(self.N, q), 2.0)
