"""Compute the nu = 3 resonance of a sound-hard unit sphere with infinite elements.

The exact resonances are the zeros of h_3'. We compare the eigenvalue nearest
2.9-1.2i with the polynomial root as the radial order N grows, then use a
second scaling parameter to separate physical resonances from the discretized
essential spectrum.
"""

from csie import ScalingConfig, dense_eig, separated_problem, shift_invert_arnoldi
from csie.eig import filter_resonances
from csie.hankel import hprime_polynomial_roots

exact = min(hprime_polynomial_roots(3), key=lambda r: abs(r - (2.9 - 1.2j)))
print(f"root of h_3': {exact:.11f}")

cfg = ScalingConfig(0.3 + 0.3j, 1.0)
for N in (5, 10, 20, 40, 60):
    P = separated_problem(3, N, cfg)
    pair = shift_invert_arnoldi(P.S, P.M, 2.8 - 1.5j).pairs[0]
    print(f"N={N:3d}  omega={pair.omega:.11f}  error={abs(pair.omega - exact):.2e}  residual={pair.residual:.1e}")

sets = []
for sigma in (0.3 + 0.3j, 0.25 + 0.35j):
    P = separated_problem(3, 40, ScalingConfig(sigma))
    sets.append(dense_eig(P.S, P.M).with_meta(P))
classified = filter_resonances(*sets)
counts = {}
for p in classified:
    counts[p.classification] = counts.get(p.classification, 0) + 1
print("classification of all 41 eigenvalues:", counts)
print("nearest to the root:", classified.nearest(exact).classification)
