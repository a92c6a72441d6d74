"""Spherical Hankel functions of the first kind and Laguerre expansion coefficients.

``h_nu(z) = -(i/z) exp(iz) htilde_nu(z)`` with ``htilde_nu`` a polynomial in
``1/z``.  Equivalently ``h_nu(z) = exp(iz) P_nu(z) / z**(nu+1)`` for a degree
``nu`` polynomial ``P_nu``, which is what the evaluators below use.

The coefficients

    alpha_{n,k}(a) = int_0^inf exp(-x) phi_n(x) / (a+x)**k dx
    beta_{n,k}(a)  = int_0^inf phi_n(x) phi_k(x) / (a+x) dx

govern how well ``exp(-x)/(a+x)`` and its relatives are captured by the
Laguerre space.
"""

from functools import lru_cache
import math
import warnings

import numpy as np
from scipy import integrate

from .errors import NumericalError
from .laguerre import eval_laguerre, eval_phi

__all__ = [
    "eval_h",
    "eval_h_prime",
    "eval_h_recurrence",
    "hprime_polynomial",
    "hprime_polynomial_roots",
    "resonance_roots",
    "alpha",
    "alpha_asymptotic",
    "beta",
]


def _ext(num, den):
    # exact integer ratio rounded once to extended precision
    return np.longdouble(str(num)) / np.longdouble(str(den))


@lru_cache(maxsize=None)
def _p_coeffs_ext(nu):
    """Coefficients of ``P_nu`` in ascending powers of z, in extended precision."""
    c = np.zeros(nu + 1, dtype=np.clongdouble)
    for m in range(nu + 1):
        t = _ext(math.factorial(nu + m), math.factorial(m) * math.factorial(nu - m) * 2**m)
        # -i * (-i)^nu * i^m is a power of i
        c[nu - m] = t * np.clongdouble((-1j) ** ((nu + 1 - m) % 4))
    return c


@lru_cache(maxsize=None)
def _q_coeffs_ext(nu):
    """Ascending coefficients of ``z**(nu+2) exp(-iz) h_nu'(z)``: ``z (i P + P') - (nu+1) P``."""
    P = _p_coeffs_ext(nu)
    Q = np.zeros(nu + 2, dtype=np.clongdouble)
    Q[1:] += 1j * P
    Q[1:nu + 1] += P[1:] * np.arange(1, nu + 1)
    Q[: nu + 1] -= (nu + 1) * P
    return Q


def _horner(coeffs, z):
    acc = np.zeros(z.shape, dtype=np.clongdouble)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def _closed_form(coeffs, power, z):
    """``exp(iz) poly(z) / z**power`` with the cancellation-prone parts in extended precision."""
    ze = z.astype(np.clongdouble)
    val = np.exp(1j * ze) * _horner(coeffs, ze) / ze**power
    return val.astype(complex)


def _check_nu(nu):
    if nu < 0 or int(nu) != nu:
        raise ValueError(f"Hankel index must be a nonnegative integer, got {nu}")
    return int(nu)


def _check_z(z):
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValueError("spherical Hankel functions have a pole at z = 0")
    return z


def _scalar(v):
    return v[()] if np.ndim(v) == 0 else v


def eval_h(nu, z):
    """Spherical Hankel function ``h_nu^(1)(z)`` from its closed form."""
    nu = _check_nu(nu)
    z = _check_z(z)
    return _scalar(_closed_form(_p_coeffs_ext(nu), nu + 1, z))


def hprime_polynomial(nu):
    """Ascending coefficients of ``Q_nu(z) = z**(nu+2) exp(-iz) h_nu'(z)`` (degree nu+1)."""
    nu = _check_nu(nu)
    return _q_coeffs_ext(nu).astype(complex)


def eval_h_prime(nu, z):
    """Derivative ``h_nu'(z)``, differentiated exactly from the closed form."""
    nu = _check_nu(nu)
    z = _check_z(z)
    return _scalar(_closed_form(_q_coeffs_ext(nu), nu + 2, z))


def eval_h_recurrence(nu, z):
    """``h_nu(z)`` by upward recurrence ``h_{k+1} = (2k+1)/z h_k - h_{k-1}``.

    Independent of the closed form beyond the seeds ``h_0``, ``h_1``.
    """
    nu = _check_nu(nu)
    z = _check_z(z)
    e = np.exp(1j * z)
    h_prev = -1j * e / z
    if nu == 0:
        return _scalar(h_prev)
    h = -e * (z + 1j) / z**2
    for k in range(1, nu):
        h_prev, h = h, (2 * k + 1) / z * h - h_prev
    return _scalar(h)


def _h_second(nu, z):
    # spherical Bessel equation: z^2 h'' + 2 z h' + (z^2 - nu(nu+1)) h = 0
    return -2.0 / z * eval_h_prime(nu, z) - (1.0 - nu * (nu + 1) / z**2) * eval_h(nu, z)


def _companion_roots(coeffs):
    """Roots of an ascending-coefficient polynomial via its companion matrix."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    deg = len(c) - 1
    if deg < 1:
        return np.empty(0, dtype=complex)
    C = np.zeros((deg, deg), dtype=complex)
    C[1:, :-1] = np.eye(deg - 1)
    C[:, -1] = -c[:-1] / c[-1]
    try:
        return np.linalg.eigvals(C)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("companion eigensolve failed") from exc


def _newton_hprime(nu, z, tol=1e-13, maxit=50):
    for _ in range(maxit):
        step = eval_h_prime(nu, z) / _h_second(nu, z)
        z = z - step
        if abs(step) <= tol * max(1.0, abs(z)):
            break
    return complex(z)


def hprime_polynomial_roots(nu):
    """All zeros of ``h_nu'``, Newton-polished, sorted by real part."""
    nu = _check_nu(nu)
    roots = [_newton_hprime(nu, r) for r in _companion_roots(hprime_polynomial(nu))]
    # roots on the imaginary axis come out with a roundoff-level real part
    roots = [complex(0.0, r.imag) if abs(r.real) <= 1e-12 * abs(r) else r for r in roots]
    return sorted(roots, key=lambda r: (r.real, r.imag))


def resonance_roots(nu, box):
    """Zeros of ``h_nu'`` inside ``box = (re_min, re_max, im_min, im_max)``.

    These are the exact resonances of the sound-hard unit sphere for the
    spherical index ``nu``.
    """
    re_lo, re_hi, im_lo, im_hi = (float(b) for b in box)
    if re_lo < 0:
        raise ValueError("search box must lie in the half-plane Re(z) > 0")
    if re_lo >= re_hi or im_lo >= im_hi:
        return []
    return [
        r
        for r in hprime_polynomial_roots(nu)
        if re_lo <= r.real <= re_hi and im_lo <= r.imag <= im_hi and r.real > 0
    ]


def _check_a(a):
    a = complex(a)
    if a.imag == 0 and a.real <= 0:
        raise ValueError(f"a = {a} lies on the branch cut (-inf, 0]")
    return a


def _quad_complex(f, lo, hi):
    with warnings.catch_warnings():
        # QUADPACK flags roundoff once the requested tolerance sits at machine level
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(f, lo, hi, complex_func=True, epsabs=0.0, epsrel=1e-13, limit=400)
    return val


def _alpha1_contour(n, a):
    """``int_0^inf x^n exp(-x) / (2a+x)^(n+1) dx`` along a path through the saddle.

    The integrand ``exp(g(x))`` has its saddle at the root of
    ``x^2 + (2a+1) x - 2an = 0``.  Integrating ``0 -> x* -> x* + inf``
    instead of along the real axis avoids the cancellation of a rapidly
    rotating phase when ``a`` is complex; ``g`` is kept in log form.
    """
    two_a = 2 * a

    def logg(x):
        return n * np.log(x) - x - (n + 1) * np.log(two_a + x) if n else -x - np.log(two_a + x)

    xs = (-(two_a + 1) + np.sqrt((two_a + 1) ** 2 + 4 * two_a * n)) / 2 if n else 1.0 + 0j
    shift = float(np.real(logg(xs)))

    def ray(s):
        if s == 0.0:
            return 0.0 if n else np.exp(-np.log(two_a) - shift) * xs
        return np.exp(logg(xs * s) - shift) * xs

    def tail(t):
        return np.exp(logg(xs + t) - shift)

    total = sum(_quad_complex(ray, lo, hi) for lo, hi in ((0, 0.25), (0.25, 0.5), (0.5, 0.75), (0.75, 1)))
    cuts = [0.0] + [abs(xs) * c for c in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)]
    total += sum(_quad_complex(tail, lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]))
    total += _quad_complex(tail, cuts[-1], np.inf)
    return total * math.exp(shift)


@lru_cache(maxsize=100_000)
def _alpha1_cached(n, a):
    return _alpha1_contour(n, a)


def _alpha_definition(n, k, a):
    # int_0^inf exp(-x) phi_n(x) / (a+x)^k dx with phi_n oscillating on (0, ~4n)
    def f(x):
        return np.exp(-x) * eval_phi(n, 0, x) / (a + x) ** k

    span = 4.0 * n + 8.0
    cuts = np.linspace(0.0, span, max(2, n + 2))
    total = sum(_quad_complex(f, lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]))
    return total + _quad_complex(f, span, np.inf)


def alpha(n, k, a, method="auto"):
    """Coefficient ``alpha_{n,k}(a)``.

    For ``k == 1`` the default evaluates the single-integral representation
    ``int x^n exp(-x) / (2a+x)^(n+1) dx`` in log space, which stays accurate
    for large n.  ``method="definition"`` (or any ``k > 1``) integrates the
    defining integral against ``phi_n`` directly; that route loses relative
    accuracy once ``alpha`` is far below one, i.e. for large n.
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    a = _check_a(a)
    if method not in ("auto", "contour", "definition"):
        raise ValueError(f"unknown method {method!r}")
    if k == 1 and method != "definition":
        return _alpha1_cached(int(n), a)
    if method == "contour":
        raise ValueError("the single-integral form exists only for k = 1")
    return _alpha_definition(int(n), int(k), a)


def alpha_asymptotic(n, a):
    """Leading-order large-n behaviour of ``alpha_{n,1}(a)`` (principal branches)."""
    a = _check_a(a)
    z = 2 * a * (n + 1)
    return np.exp(a - 2 * np.sqrt(z)) * math.sqrt(math.pi) * np.exp(-0.25 * np.log(z))


def beta(n, k, a):
    """``beta_{n,k}(a) = alpha_{n,1}(a) L_k(-2a)``, valid for ``n >= k``."""
    if k < 0 or n < k:
        raise ValueError(f"closed form needs n >= k >= 0, got n={n}, k={k}")
    a = _check_a(a)
    return alpha(n, 1, a) * eval_laguerre(k, 0, -2 * a)
