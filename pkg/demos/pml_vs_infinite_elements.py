"""Error per degree of freedom: truncated PML versus infinite elements.

Both discretizations use sigma = (1+i)/omega with omega the nu = 3 resonance.
The PML stagnates at the truncation floor; infinite elements do not truncate.
"""

from csie import PmlConfig, ScalingConfig, assemble_pml, separated_problem, shift_invert_arnoldi
from csie.hankel import hprime_polynomial_roots

exact = min(hprime_polynomial_roots(3), key=lambda r: abs(r - (2.9 - 1.2j)))
cfg = ScalingConfig((1 + 1j) / exact)

for T in (5.0, 8.0):
    print(f"PML T={T}, order 5")
    for ne in (2, 4, 8, 16, 32, 64):
        S, M, _ = assemble_pml(PmlConfig(T, ne, 5, cfg), 3)
        om = shift_invert_arnoldi(S, M, exact, tol=1e-6).pairs[0].omega
        print(f"  dofs={S.shape[0]:4d}  error={abs(om - exact):.2e}")

print("infinite elements")
for N in (4, 9, 19, 29, 39):
    P = separated_problem(3, N, cfg)
    om = shift_invert_arnoldi(P.S, P.M, exact).pairs[0].omega
    print(f"  dofs={N + 1:4d}  error={abs(om - exact):.2e}")
