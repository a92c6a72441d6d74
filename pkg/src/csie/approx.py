"""Best-approximation errors in the Laguerre space X_N = span{phi_0..phi_N}.

Everything here measures ``||(I - Pi_N) f||`` in L2(0, inf) for targets that
appear as exterior solutions: exponentials ``exp(-b x)`` (closed form) and
complex-scaled spherical Hankel functions ``h_nu(omega (R + sigma x))``
(quadrature).  Tail norms are always summed from expansion coefficients;
subtracting ``sum |c_n|^2 / 2`` from ``||f||^2`` would bury errors below
``sqrt(eps) * ||f||``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import NumericalError
from .hankel import alpha, eval_h
from .laguerre import gauss_laguerre, laguerre_table, phi_table

__all__ = [
    "ProjectionResult",
    "RatePrediction",
    "laplace_coefficient",
    "project_exp",
    "exp_tail_error",
    "project_general",
    "quadrature_tail_errors",
    "hankel_target",
    "hankel_coefficients",
    "hankel_error_curve",
    "hankel_best_approx_error",
    "epsilon_term",
    "exp_rate",
    "alg_rate",
    "predicted_rates",
    "fit_rate_constants",
    "anchor_rate_constants",
    "regression_slope",
]


@dataclass(frozen=True)
class ProjectionResult:
    """Coefficients of ``Pi_N f = sum c_n phi_n`` and the L2 norm of ``f - Pi_N f``."""

    coefficients: np.ndarray
    tail_error: float
    norm: float = math.nan

    @property
    def N(self):
        return len(self.coefficients) - 1


def laplace_coefficient(b, n):
    """``int_0^inf exp(-b x) phi_n(x) dx = (b-1)^n / (b+1)^(n+1)`` for ``Re b > -1``."""
    b = complex(b)
    if not b.real > -1:
        raise ValueError(f"need Re(b) > -1, got b = {b}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return (b - 1) ** n / (b + 1) ** (n + 1)


def _check_decaying(b):
    b = complex(b)
    if not b.real > 0:
        raise ValueError(f"exp(-b x) is not square integrable for Re(b) <= 0 (b = {b})")
    return b


def exp_tail_error(b, N):
    """``||(I - Pi_N) exp(-b .)|| = |(b-1)/(b+1)|^(N+1) / sqrt(2 Re b)``."""
    b = _check_decaying(b)
    return abs((b - 1) / (b + 1)) ** (N + 1) / math.sqrt(2 * b.real)


def project_exp(b, N):
    """Projection of ``exp(-b x)`` onto X_N; coefficients ``2/(b+1) q^n``, ``q = (b-1)/(b+1)``."""
    b = _check_decaying(b)
    q = (b - 1) / (b + 1)
    coeffs = 2.0 / (b + 1) * q ** np.arange(N + 1)
    return ProjectionResult(coeffs, exp_tail_error(b, N), 1.0 / math.sqrt(2 * b.real))


def project_general(f, N, rule):
    """Project a callable ``f`` (vectorized over x) onto X_N with a Gauss-Laguerre rule.

    ``c_n = 2 int f phi_n``.  The tail is ``sqrt(||f||^2 - sum |c_n|^2 / 2)``,
    which is only accurate to about ``sqrt(eps) * ||f||``; use
    :func:`hankel_error_curve` style coefficient tails for small errors.
    """
    x = rule.nodes
    fx = np.asarray(f(x), dtype=complex)
    P = phi_table(N, x).real
    coeffs = 2.0 * rule.integrate(P * fx)
    norm2 = float(rule.integrate(np.abs(fx) ** 2).real)
    var = norm2 - float(np.sum(np.abs(coeffs) ** 2)) / 2
    if var < -1e-13 * norm2:
        raise NumericalError(
            f"negative tail variance {var:.3e} (||f||^2 = {norm2:.3e}): quadrature too coarse"
        )
    return ProjectionResult(coeffs, math.sqrt(max(var, 0.0)), math.sqrt(norm2))


def quadrature_tail_errors(f, Ns, rule, n_max=None):
    """``||(I - Pi_N) f||`` for N in ``Ns`` from quadrature coefficients up to ``n_max``.

    Tails are summed from the coefficients, so the result is accurate down
    to the coefficient roundoff rather than ``sqrt(eps) ||f||``.  ``n_max``
    must be large enough for the coefficients beyond it to be negligible.
    """
    Ns = np.asarray(Ns, dtype=int)
    n_max = n_max or 2 * int(Ns.max()) + 100
    if Ns.max() > n_max:
        raise ValueError(f"N = {Ns.max()} exceeds n_max = {n_max}")
    coeffs, _ = _coefficients_with_rule(f, n_max, rule)
    return np.sqrt(_tails(coeffs))[Ns]


def hankel_target(nu, omega, sigma, R):
    """Callable ``x -> h_nu(omega (R + sigma x))``; needs ``Im(sigma omega) > 0``."""
    omega, sigma = complex(omega), complex(sigma)
    if not (sigma * omega).imag > 0:
        raise ValueError(
            f"Im(sigma*omega) = {(sigma * omega).imag:.3g} <= 0: scaled Hankel function does not decay"
        )
    if not R > 0:
        raise ValueError(f"interface radius must be positive, got {R}")
    return lambda x: eval_h(nu, omega * (R + sigma * np.asarray(x)))


def _coefficients_with_rule(f, n_max, rule):
    x = rule.nodes
    fx = np.asarray(f(x), dtype=complex)
    P = phi_table(n_max, x).real
    coeffs = 2.0 * rule.integrate(P * fx)
    norm2 = float(rule.integrate(np.abs(fx) ** 2).real)
    return coeffs, norm2


def hankel_coefficients(nu, omega, sigma, R, n_max, n_nodes=None):
    """Laguerre coefficients ``c_0..c_{n_max}`` of ``h_nu(omega (R + sigma x))`` and ``||f||^2``."""
    f = hankel_target(nu, omega, sigma, R)
    decay = 1.0 + (complex(sigma) * complex(omega)).imag
    q = n_nodes or max(2 * n_max + 64, 256)
    return _coefficients_with_rule(f, n_max, gauss_laguerre(q, decay))


def _tails(coeffs):
    # tail[N] = sum_{n > N} |c_n|^2 / 2, accumulated from the small end
    sq = np.abs(coeffs) ** 2 / 2
    rev = np.cumsum(sq[::-1])[::-1]
    return np.append(rev[1:], 0.0)


# absolute noise of quadrature coefficients, relative to ||f||
_NOISE_FLOOR = 1e-11
_MAX_NODES = 16000


def hankel_error_curve(nu, omega, sigma, R, Ns, n_max=None, n_nodes=None, check_doubling=True):
    """``||(I - Pi_N) h_nu(omega (R + sigma .))||`` for every N in ``Ns``.

    Coefficients are computed up to ``n_max`` (grown until the trailing
    coefficients are at roundoff level) and the tail is summed from them.
    With ``check_doubling`` the whole curve is recomputed with twice the
    quadrature nodes, repeatedly, until two successive rules agree to 1e-8
    (relative, with an absolute floor at roundoff of ``max(||f||, |f(0)|)``).
    """
    Ns = np.asarray(Ns, dtype=int)
    if np.any(Ns < 0):
        raise ValueError("N must be nonnegative")
    n_max = n_max or max(2 * int(Ns.max()) + 100, 200)
    while True:
        q = n_nodes or 2 * n_max + 64
        coeffs, norm2 = hankel_coefficients(nu, omega, sigma, R, n_max, q)
        # roundoff in the coefficients follows the peak of |f|, not only its norm
        scale = max(math.sqrt(norm2), abs(complex(hankel_target(nu, omega, sigma, R)(0.0))))
        trailing = np.abs(coeffs[-max(10, n_max // 10):]).max()
        if trailing <= 1e-13 * scale or n_max >= 4000:
            break
        n_max *= 2
    if trailing > 1e-11 * scale:
        raise NumericalError(
            f"Laguerre coefficients of h_{nu} not resolved by n_max={n_max} "
            f"(trailing |c| = {trailing:.2e})"
        )
    errs = np.sqrt(_tails(coeffs))[Ns]
    if not check_doubling:
        return errs
    # near-singular targets (large nu, small R) need more nodes; refine until stable
    while True:
        coeffs2, _ = hankel_coefficients(nu, omega, sigma, R, n_max, 2 * q)
        errs2 = np.sqrt(_tails(coeffs2))[Ns]
        tol = 1e-8 * errs2 + _NOISE_FLOOR * scale
        if np.all(np.abs(errs - errs2) <= tol):
            return errs2
        if 2 * q > _MAX_NODES:
            worst = int(np.argmax(np.abs(errs - errs2) - tol))
            raise NumericalError(
                f"hankel error unstable under node doubling at N={Ns[worst]}: "
                f"{errs[worst]:.6e} vs {errs2[worst]:.6e} with {2 * q} nodes"
            )
        errs, q = errs2, 2 * q


def hankel_best_approx_error(nu, omega, sigma, R, N, **kwargs):
    """Best L2 approximation error of ``h_nu(omega (R + sigma .))`` from X_N."""
    if nu < 0 or nu > 12:
        raise ValueError(f"nu must lie in 0..12, got {nu}")
    return float(hankel_error_curve(nu, omega, sigma, R, [N], **kwargs)[0])


def epsilon_term(N, a, b):
    """Cross term ``||(I - Pi_N) (1/(a+.)) Pi_N exp(-b .)||``.

    Uses ``beta_{n,k} = alpha_{n,1} L_k(-2a)`` so that the n-th coefficient
    factorizes as ``4/(b+1) alpha_{n,1}(a) sum_{k<=N} q^k L_k(-2a)``.
    """
    a = complex(a)
    b = _check_decaying(b)
    if a.imag == 0 and a.real <= 0:
        raise ValueError(f"a = {a} lies on the branch cut (-inf, 0]")
    q = (b - 1) / (b + 1)
    L = laguerre_table(N, -2 * a).ravel()
    s = complex(np.sum(q ** np.arange(N + 1) * L))
    pref = abs(4.0 / (b + 1) * s) ** 2 / 2
    total = 0.0
    last = math.inf
    rising = 0
    for n in range(N + 1, N + 20000):
        inc = pref * abs(alpha(n, 1, a)) ** 2
        total += inc
        if inc <= 1e-16 * total:
            return math.sqrt(total)
        rising = rising + 1 if inc >= last else 0
        if rising >= 50:
            raise NumericalError(f"epsilon tail not decreasing near n={n}")
        last = inc
    raise NumericalError("epsilon tail did not converge")


def exp_rate(omega, sigma):
    """``log |(1 + i sigma omega) / (1 - i sigma omega)|``: per-N slope of the exponential regime."""
    z = 1j * complex(sigma) * complex(omega)
    return math.log(abs((1 + z) / (1 - z)))


def alg_rate(R, sigma):
    """``-2 Re sqrt(2R/sigma)``: slope of log-error against ``sqrt(N+1)`` in the super-algebraic regime."""
    return -2.0 * np.sqrt(2.0 * R / complex(sigma)).real


@dataclass(frozen=True)
class RatePrediction:
    """Both terms of the two-regime error bound (scalars, or arrays over N)."""

    exp_term: float
    alg_term: float

    @property
    def total(self):
        return self.exp_term + self.alg_term


def _rate_shapes(nu, omega, sigma, R, N):
    N = np.asarray(N, dtype=float)
    e = np.exp((N + 1) * exp_rate(omega, sigma))
    g = np.exp(alg_rate(R, sigma) * np.sqrt(N + 1)) * (N + 1) ** (nu / 2)
    return e, g


def predicted_rates(nu, omega, sigma, R, N, c1=1.0, c2=1.0):
    """``c1 |(1+i sigma omega)/(1-i sigma omega)|^(N+1) + c2 exp(-2 Re sqrt(2R(N+1)/sigma)) (N+1)^(nu/2)``."""
    omega, sigma = complex(omega), complex(sigma)
    if not (sigma * omega).imag > 0:
        raise ValueError("need Im(sigma*omega) > 0")
    if sigma.imag == 0 and sigma.real <= 0:
        raise ValueError("sigma on the branch cut")
    e, g = _rate_shapes(nu, omega, sigma, R, N)
    if np.ndim(N) == 0:
        return RatePrediction(float(c1 * e), float(c2 * g))
    return RatePrediction(c1 * e, c2 * g)


def fit_rate_constants(Ns, errors, nu, omega, sigma, R, exp_window, alg_window):
    """Least-squares fit (in log scale) of ``c1`` and ``c2`` over two N windows.

    ``exp_window`` and ``alg_window`` are inclusive ``(N_lo, N_hi)`` ranges
    where the respective term is expected to dominate.
    """
    Ns = np.asarray(Ns, dtype=float)
    errors = np.asarray(errors, dtype=float)
    e, g = _rate_shapes(nu, omega, sigma, R, Ns)

    def fit(shape, window):
        sel = (Ns >= window[0]) & (Ns <= window[1]) & (errors > 0)
        if not np.any(sel):
            raise ValueError(f"no data in window {window}")
        return float(np.exp(np.mean(np.log(errors[sel]) - np.log(shape[sel]))))

    return fit(e, exp_window), fit(g, alg_window)


def anchor_rate_constants(Ns, errors, nu, omega, sigma, R, exp_anchor, alg_anchor):
    """Constants matching each predicted term to the measured error at one anchor.

    ``c1 = e(N_a) / E(N_a)`` and ``c2 = e(N_b) / G(N_b)``.  Anchoring the
    exponential term at the smallest N and the algebraic term at the largest
    N of a window gives an upper envelope when each ratio is extremal there.
    """
    Ns = np.asarray(Ns)
    errors = np.asarray(errors, dtype=float)
    e, g = _rate_shapes(nu, omega, sigma, R, Ns)

    def at(N, shape):
        hit = np.nonzero(Ns == N)[0]
        if len(hit) == 0:
            raise ValueError(f"anchor N = {N} not in the sampled Ns")
        return float(errors[hit[0]] / shape[hit[0]])

    return at(exp_anchor, e), at(alg_anchor, g)


def regression_slope(x, errors, lo=1e-11, hi=1e-2):
    """Least-squares slope of ``log(errors)`` against ``x``, keeping errors in ``[lo, hi]``."""
    x = np.asarray(x, dtype=float)
    errors = np.asarray(errors, dtype=float)
    sel = (errors >= lo) & (errors <= hi)
    if sel.sum() < 3:
        raise ValueError(f"only {int(sel.sum())} points inside [{lo:g}, {hi:g}]")
    return float(np.polyfit(x[sel], np.log(errors[sel]), 1)[0])
