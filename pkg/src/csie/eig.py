"""Generalized eigensolvers for ``S u = omega^2 M u`` and resonance bookkeeping.

The spectral parameter is ``lam = omega^2``; ``omega`` is recovered on the
principal branch (``Re omega >= 0``, and ``Im omega >= 0`` when ``Re omega = 0``).
"""

import warnings
from dataclasses import dataclass, field, replace

import numpy as np
import scipy.linalg as sla

from .assembly import (
    PotentialSpec,
    ScalingConfig,
    assemble_mass0,
    assemble_mass1,
    assemble_stiffness,
    assemble_weighted_mass,
    basis_change,
)
from .errors import ConvergenceError, NumericalError, SingularMatrixError

__all__ = [
    "SeparatedProblem",
    "Resonance",
    "ResonanceSet",
    "separated_problem",
    "lu_factor",
    "solve",
    "shift_invert_arnoldi",
    "dense_eig",
    "filter_resonances",
    "condition_number",
    "residual",
    "principal_sqrt",
]

CLASSES = ("physical", "essential_artifact", "unknown")


@dataclass(frozen=True)
class SeparatedProblem:
    """Radial problem ``S u = omega^2 M u`` for one spherical index ``nu``."""

    nu: int
    S: np.ndarray
    M: np.ndarray
    cfg: ScalingConfig
    pot: PotentialSpec = None
    basis: str = "laguerre"

    def __post_init__(self):
        if self.S.shape != self.M.shape or self.S.shape[0] != self.S.shape[1]:
            raise ValueError(f"S {self.S.shape} and M {self.M.shape} must be equal square shapes")

    @property
    def dim(self):
        return self.S.shape[0]

    @property
    def eps_tilde(self):
        return 0.0 if self.pot is None else float(self.pot.eps_tilde)


def separated_problem(nu, N, cfg, pot=None, basis="laguerre"):
    """Infinite-element matrices for the exterior of the sphere of radius ``cfg.R``.

    ``S = s + nu(nu+1)/R^2 m0`` and ``M = m1``, possibly potential weighted;
    the interface carries a natural (sound-hard) condition, so resonances are
    the zeros of ``h_nu'(omega R)``.  ``basis`` selects the radial basis
    (see :func:`csie.assembly.basis_change`); eigenvalues do not depend on it.
    """
    if nu < 0 or int(nu) != nu:
        raise ValueError(f"spherical index must be a nonnegative integer, got {nu}")
    lam = nu * (nu + 1) / cfg.R**2
    S = assemble_stiffness(N, cfg).entries + lam * assemble_mass0(N, cfg).entries
    if pot is None or pot.eps_tilde == 0:
        M = assemble_mass1(N, cfg).entries
    else:
        M = assemble_weighted_mass(N, cfg, pot).entries
    C = basis_change(N, basis)
    if basis != "laguerre":
        S = C @ S @ C.T
        M = C @ M @ C.T
        S, M = (S + S.T) / 2, (M + M.T) / 2
    return SeparatedProblem(int(nu), S, M, cfg, pot, basis)


@dataclass(frozen=True)
class Resonance:
    omega: complex
    vector: np.ndarray = field(repr=False)
    residual: float
    classification: str = "unknown"


@dataclass(frozen=True)
class ResonanceSet:
    """Eigenpairs with residuals ``||S v - omega^2 M v|| / ||v||``."""

    pairs: tuple
    nu: int = None
    N: int = None
    sigma: complex = None
    eps_tilde: float = 0.0

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def omegas(self):
        return np.array([p.omega for p in self.pairs], dtype=complex)

    @property
    def residuals(self):
        return np.array([p.residual for p in self.pairs])

    def nearest(self, z):
        if not self.pairs:
            raise ValueError("empty resonance set")
        return self.pairs[int(np.argmin(np.abs(self.omegas - z)))]

    def with_meta(self, problem):
        return replace(
            self,
            nu=problem.nu,
            N=problem.dim - 1,
            sigma=problem.cfg.sigma,
            eps_tilde=problem.eps_tilde,
        )


def principal_sqrt(lam):
    """``sqrt(lam)`` with ``Re >= 0``, and ``Im >= 0`` on the imaginary axis."""
    w = np.sqrt(np.asarray(lam, dtype=complex))
    flip = (w.real < 0) | ((w.real == 0) & (w.imag < 0))
    return np.where(flip, -w, w)


def residual(S, M, omega, v):
    return float(np.linalg.norm(S @ v - omega**2 * (M @ v)) / np.linalg.norm(v))


@dataclass(frozen=True)
class LUFactor:
    lu: np.ndarray
    piv: np.ndarray


def lu_factor(A):
    """Partial-pivoted LU; numerically zero pivots raise :class:`SingularMatrixError`."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"need a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sla.LinAlgWarning)
        lu, piv = sla.lu_factor(A, check_finite=False)
    if np.any(np.abs(np.diag(lu)) < 1e-300):
        raise SingularMatrixError("numerically singular pivot in LU factorization")
    return LUFactor(lu, piv)


def solve(handle, rhs):
    return sla.lu_solve((handle.lu, handle.piv), rhs, check_finite=False)


def _pairs(S, M, lam, vecs):
    omegas = principal_sqrt(lam)
    out = []
    for om, v in zip(omegas, vecs.T):
        v = v / np.linalg.norm(v)
        out.append(Resonance(complex(om), v, residual(S, M, om, v)))
    return out


def _arnoldi(op, v0, k):
    n = v0.shape[0]
    V = np.zeros((n, k + 1), dtype=complex)
    H = np.zeros((k + 1, k), dtype=complex)
    V[:, 0] = v0 / np.linalg.norm(v0)
    for j in range(k):
        w = op(V[:, j])
        for _ in range(2):  # modified Gram-Schmidt, then one reorthogonalization pass
            for i in range(j + 1):
                c = np.vdot(V[:, i], w)
                H[i, j] += c
                w = w - c * V[:, i]
        H[j + 1, j] = np.linalg.norm(w)
        if abs(H[j + 1, j]) < 1e-14:
            return V[:, : j + 1], H[: j + 1, : j + 1], True
        V[:, j + 1] = w / H[j + 1, j]
    return V[:, :k], H[:k, :k], False


def shift_invert_arnoldi(S, M, shift, k=None, n_wanted=1, tol=1e-9, seed=0, max_restarts=5):
    """Eigenpairs nearest ``shift`` (in omega) from Arnoldi on ``(S - shift^2 M)^{-1} M``.

    Ritz values ``theta`` map to ``lam = shift^2 + 1/theta``.  Returned pairs
    have residuals recomputed from ``S`` and ``M``; only pairs with residual
    ``<= tol`` are kept.  Restarts with a fresh random start vector if fewer
    than ``n_wanted`` converge; each restart also enlarges the Krylov space
    by half, since clustered eigenvalues near the shift may need more than
    the default dimension.  ``shift**2`` must stay off the spectrum: a shift
    within roundoff of an eigenvalue makes ``T`` huge and spoils every other
    Ritz pair, although the pair at the shift itself stays accurate.
    """
    S = np.asarray(S, dtype=complex)
    M = np.asarray(M, dtype=complex)
    n = S.shape[0]
    if n_wanted < 1:
        raise ValueError("n_wanted must be positive")
    k = min(k or max(40, 4 * n_wanted), n)
    if k <= n_wanted and k < n:
        raise ValueError(f"Krylov dimension k={k} must exceed n_wanted={n_wanted}")
    tau2 = complex(shift) ** 2
    handle = lu_factor(S - tau2 * M)

    def op(x):
        return solve(handle, M @ x)

    rng = np.random.default_rng(seed)
    best = []
    for _ in range(max_restarts + 1):
        v0 = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        V, H, _ = _arnoldi(op, v0, k)
        theta, Y = np.linalg.eig(H)
        keep = np.abs(theta) > 1e-300
        theta, Y = theta[keep], Y[:, keep]
        lam = tau2 + 1 / theta
        pairs = _pairs(S, M, lam, V @ Y)
        pairs.sort(key=lambda p: abs(p.omega - shift))
        good = [p for p in pairs if p.residual <= tol]
        if len(good) > len(best):
            best = good
        if len(best) >= n_wanted:
            return ResonanceSet(tuple(best[:n_wanted]))
        k = min(n, (3 * k + 1) // 2)
    raise ConvergenceError(
        f"only {len(best)} of {n_wanted} eigenpairs reached residual {tol:g}",
        partial=ResonanceSet(tuple(best)),
    )


def dense_eig(S, M, seed=0):
    """All eigenpairs via the dense eigendecomposition of ``(S - tau M)^{-1} M``.

    ``tau`` is a random probe scaled to the problem; the transform keeps
    infinite eigenvalues of a singular ``M`` harmless.
    """
    S = np.asarray(S, dtype=complex)
    M = np.asarray(M, dtype=complex)
    n = S.shape[0]
    if n > 2000:
        raise ValueError(f"dense solver limited to dim <= 2000, got {n}")
    rng = np.random.default_rng(seed)
    scale = np.linalg.norm(S, 1) / max(np.linalg.norm(M, 1), 1e-300)
    for _ in range(5):
        tau = scale * (rng.uniform(0.1, 1.0) + 1j * rng.uniform(0.1, 1.0))
        try:
            handle = lu_factor(S - tau * M)
            break
        except SingularMatrixError:
            continue
    else:
        raise SingularMatrixError("no regular probe shift found for S - tau M")
    T = solve(handle, M)
    try:
        theta, Y = np.linalg.eig(T)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("dense QR iteration did not converge") from exc
    keep = np.abs(theta) > 1e-14 * np.abs(theta).max()
    lam = tau + 1 / theta[keep]
    return ResonanceSet(tuple(_pairs(S, M, lam, Y[:, keep])))


def filter_resonances(rs, rs_alt, sigma=None):
    """Classify pairs by their stability under a change of the scaling parameter.

    ``rs`` and ``rs_alt`` come from the same problem solved with two values of
    sigma.  Stable pairs are physical; pairs that move and lie near the
    rotated ray ``arg omega = -arg sigma`` discretize the essential spectrum.
    """
    if rs.nu != rs_alt.nu or rs.N != rs_alt.N or rs.eps_tilde != rs_alt.eps_tilde:
        raise ValueError("resonance sets come from different problems")
    sigma = rs.sigma if sigma is None else sigma
    if not rs.pairs:
        return rs
    if sigma is None:
        raise ValueError("scaling parameter unknown for the primary set")
    alt = rs_alt.omegas
    ray = -np.angle(sigma)
    out = []
    for p in rs.pairs:
        delta = 1e-6 * (1 + abs(p.omega))
        move = np.abs(alt - p.omega).min() if len(alt) else np.inf
        angle = abs(np.angle(p.omega * np.exp(-1j * ray)))
        if move < delta:
            cls = "physical"
        elif move > 100 * delta and angle < 0.2:
            cls = "essential_artifact"
        else:
            cls = "unknown"
        out.append(replace(p, classification=cls))
    return replace(rs, pairs=tuple(out))


def condition_number(A):
    """2-norm condition number from the singular values; ``inf`` if singular."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"need a square matrix, got shape {A.shape}")
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] == 0:
        return float("inf")
    return float(s[0] / s[-1])
