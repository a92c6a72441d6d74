"""Best-approximation error of the scaled Hankel function in the Laguerre space.

For large R the error decays exponentially with rate log|(1+i sigma omega)/(1-i sigma omega)|.
For small R it decays like exp(-2 Re sqrt(2R/sigma) sqrt(N+1)).
"""

import numpy as np

from csie.approx import alg_rate, exp_rate, hankel_error_curve, regression_slope

omega = 10 - 0.5j
Ns = np.arange(0, 121)

sigma = 0.3 + 0.3j
print(f"exponential regime, sigma={sigma}: predicted slope {exp_rate(omega, sigma):.4f}")
for R in (4, 8, 16):
    e = hankel_error_curve(0, omega, sigma, R, Ns)
    print(f"  R={R:2d}  fitted slope {regression_slope(Ns, e):.4f}  error at N=120: {e[-1]:.2e}")

sigma, R = 0.1 + 0.1j, 0.1
print(f"super-algebraic regime, sigma={sigma}, R={R}: predicted sqrt-slope {alg_rate(R, sigma):.4f}")
for om in (omega, 5 - 0.5j):
    e = hankel_error_curve(0, om, sigma, R, Ns)
    print(f"  omega={om}  fitted slope vs sqrt(N+1): {regression_slope(np.sqrt(Ns + 1), e):.4f}")
