"""Resonances under a radial bump potential p = 1 + eps (xi-1)^2 / (1 + (xi-1)^4).

Each branch starts at a root of h_nu' (eps = 0) and moves toward the real axis as eps grows.
"""

from csie import PotentialSpec, ScalingConfig, separated_problem, shift_invert_arnoldi
from csie.hankel import hprime_polynomial_roots

cfg = ScalingConfig(0.1 + 0.5j)
for nu in (1, 3, 5):
    root = max(hprime_polynomial_roots(nu), key=lambda r: r.imag if r.real > 0 else -1e9)
    guess, track = root, []
    for eps in (0.0, 0.5, 1.0, 1.5):
        P = separated_problem(nu, 100, cfg, PotentialSpec.named("bump", eps))
        guess = shift_invert_arnoldi(P.S, P.M, guess).pairs[0].omega
        track.append(guess)
    print(f"nu={nu}: " + "  ".join(f"{w:.5f}" for w in track))
