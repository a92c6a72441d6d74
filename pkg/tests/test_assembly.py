from functools import lru_cache

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from csie.assembly import (
    POTENTIALS,
    PotentialSpec,
    RadialOperator,
    ScalingConfig,
    assemble_mass0,
    assemble_mass1,
    assemble_stiffness,
    assemble_weighted_mass,
    basis_change,
    change_basis,
    structure_report,
    trace_vector,
)
from csie.errors import NumericalError

CFG = ScalingConfig(0.3 + 0.3j, 1.0)


@lru_cache(maxsize=None)
def exact_moments(N):
    """Oracle: rational matrices int xi^k f g exp(...) for k = 0, 1, 2, for f, g = phi and phi'."""
    x = sp.symbols("x", positive=True)
    phis = [sp.exp(-x) * sp.laguerre(n, 2 * x) for n in range(N + 1)]
    dphis = [sp.diff(p, x) for p in phis]

    def gram(fs, k):
        M = sp.zeros(N + 1, N + 1)
        for i in range(N + 1):
            for j in range(i, N + 1):
                M[i, j] = M[j, i] = sp.integrate(sp.expand(x**k * fs[i] * fs[j]), (x, 0, sp.oo))
        return np.array(M.tolist(), dtype=float)

    return [gram(phis, k) for k in range(3)], [gram(dphis, k) for k in range(3)]


def oracle_forms(N, cfg):
    G, DG = exact_moments(N)
    s = cfg.sigma / cfg.R
    m1 = cfg.sigma * (G[0] + 2 * s * G[1] + s**2 * G[2])
    st_ = (DG[0] + 2 * s * DG[1] + s**2 * DG[2]) / cfg.sigma
    return m1, st_


# --- configuration ------------------------------------------------------------------


def test_scaling_config_validation():
    with pytest.raises(ValueError):
        ScalingConfig(1.0, 1.0)
    with pytest.raises(ValueError):
        ScalingConfig(0.3 - 0.1j, 1.0)
    with pytest.raises(ValueError):
        ScalingConfig(0.3 + 0.3j, 0.0)
    c = ScalingConfig(1j, 2)
    assert isinstance(c.sigma, complex) and c.R == 2.0
    assert c.jacobian_factor(2.0) == pytest.approx((1 + 1j) ** 2)


# --- mass0 -----------------------------------------------------------------------------


def test_mass0_examples():
    m = assemble_mass0(0, ScalingConfig(1j))
    assert m.entries.tolist() == [[0.5j]]
    m = assemble_mass0(30, CFG).entries
    assert np.abs(m - np.diag(np.diag(m))).max() < 1e-14
    assert np.allclose(np.diag(m), CFG.sigma / 2, rtol=0, atol=1e-15)


def test_mass0_matches_quadrature():
    G, _ = exact_moments(5)
    assert np.abs(assemble_mass0(5, CFG).entries - CFG.sigma * G[0]).max() < 1e-13


def test_mass0_homogeneity():
    a = assemble_mass0(8, ScalingConfig(0.3 + 0.3j)).entries
    b = assemble_mass0(8, ScalingConfig(1.1 + 2.0j)).entries
    assert np.allclose(a / (0.3 + 0.3j), b / (1.1 + 2.0j), rtol=0, atol=1e-15)


# --- mass1 / stiffness against the exact oracle -----------------------------------------


@pytest.mark.parametrize("cfg", [CFG, ScalingConfig(0.7 + 1.9j, 3.5)])
def test_forms_match_exact_moments(cfg):
    m1, st_ = oracle_forms(5, cfg)
    A = assemble_mass1(5, cfg).entries
    S = assemble_stiffness(5, cfg).entries
    assert np.abs(A - m1).max() <= 1e-13 * np.abs(m1).max()
    assert np.abs(S - st_).max() <= 1e-13 * np.abs(st_).max()


def test_stiffness_leading_entries():
    sig, R = CFG.sigma, CFG.R
    s = sig / R
    S = assemble_stiffness(6, CFG).entries
    assert S[0, 0] == pytest.approx((0.5 + s / 2 + s**2 / 4) / sig, rel=1e-13)
    assert S[0, 1] == pytest.approx((1 + s / 2) / sig, rel=1e-13)
    assert S[0, 2] == pytest.approx((1 - s**2 / 4) / sig, rel=1e-13)
    assert S[0, 3] == pytest.approx(1 / sig, rel=1e-13)


def test_mass1_leading_entry():
    sig, R = CFG.sigma, CFG.R
    M = assemble_mass1(4, CFG).entries
    assert M[0, 0] == pytest.approx(sig * (0.5 + sig / (2 * R) + sig**2 / (4 * R**2)), rel=1e-14)


def test_mass1_band():
    M = assemble_mass1(40, CFG).entries
    i, j = np.indices(M.shape)
    assert np.abs(M[np.abs(i - j) > 2]).max() < 1e-13
    assert structure_report(assemble_mass1(40, CFG), 1e-12).bandwidth == 2


def test_mass1_small_sigma_limit():
    sig = 1e-8 * (1 + 1j) / np.sqrt(2)
    # the deviation is about |sigma| (n + 1/2), below 1e-7 for n <= 9
    M = assemble_mass1(8, ScalingConfig(sig, 1.0)).entries / sig
    assert np.abs(M - np.eye(9) / 2).max() < 1e-7


def test_stiffness_dense():
    rep = structure_report(assemble_stiffness(20, CFG), 1e-10)
    assert rep.bandwidth == "dense"
    assert rep.nnz > 0.5 * 21**2


@pytest.mark.parametrize("N", [0, 1, 7, 40])
def test_symmetry(N):
    for op in (assemble_mass0(N, CFG), assemble_mass1(N, CFG), assemble_stiffness(N, CFG)):
        assert np.array_equal(op.entries, op.entries.T)
    pot = PotentialSpec.named("bump", 1.5)
    W = assemble_weighted_mass(N, CFG, pot).entries
    assert np.array_equal(W, W.T)


def test_quadrature_exactness_under_doubling():
    from csie.laguerre import nodes_for_degree

    N = 30
    n = nodes_for_degree(N, 2)
    for fn in (assemble_mass1, assemble_stiffness):
        a = fn(N, CFG).entries
        b = fn(N, CFG, n_nodes=2 * n).entries
        assert np.abs(a - b).max() <= 1e-13 * np.abs(a).max()


def test_negative_N():
    for fn in (assemble_mass0, assemble_mass1, assemble_stiffness, trace_vector):
        with pytest.raises(ValueError):
            fn(-1, CFG) if fn is not trace_vector else fn(-1)


# --- potentials ----------------------------------------------------------------------------


def test_weighted_mass_zero_eps_is_mass1():
    pot = PotentialSpec.named("bump", 0.0)
    assert np.abs(assemble_weighted_mass(12, CFG, pot).entries - assemble_mass1(12, CFG).entries).max() < 1e-13


def test_weighted_mass_constant_profile():
    c = 0.75
    pot = PotentialSpec.named("constant", c)
    W = assemble_weighted_mass(15, CFG, pot).entries
    M = assemble_mass1(15, CFG).entries
    assert np.abs(W - (1 + c) * M).max() <= 1e-13 * np.abs(M).max()


def test_weighted_mass_bump_finite():
    pot = PotentialSpec.named("bump", 1.5)
    W = assemble_weighted_mass(30, CFG, pot).entries
    assert np.all(np.isfinite(W))
    assert np.array_equal(W, W.T)


def test_weighted_mass_doubling_stable():
    pot = PotentialSpec.named("bump", 1.5)
    a = assemble_weighted_mass(30, CFG, pot).entries
    b = assemble_weighted_mass(30, CFG, pot, n_nodes=4096, check=False).entries
    assert np.abs(a - b).max() <= 1e-9 * np.abs(b).max()


def test_weighted_mass_affine_in_eps():
    m = {e: assemble_weighted_mass(20, CFG, PotentialSpec.named("bump", e)).entries for e in (0.0, 1.0, 0.37)}
    pred = m[0.0] + 0.37 * (m[1.0] - m[0.0])
    assert np.abs(m[0.37] - pred).max() < 1e-12


def test_weighted_mass_guards():
    with pytest.raises(ValueError):
        assemble_weighted_mass(10, CFG, PotentialSpec.named("bump", 1.0), n_nodes=12)
    bad = PotentialSpec(1.0, lambda x: np.where(x > 3, np.inf, 0.0), name="bad")
    with pytest.raises(ValueError):
        assemble_weighted_mass(5, CFG, bad)
    vanishing = PotentialSpec(-1.0, lambda x: np.ones_like(x), name="minus_one")
    with pytest.raises(ValueError):
        assemble_weighted_mass(5, CFG, vanishing)
    with pytest.raises(ValueError):
        PotentialSpec.named("nope", 1.0)


def test_weighted_mass_unresolved_raises():
    # a profile with structure far finer than the node spacing fails the doubling check
    wild = PotentialSpec(1.0, lambda x: np.sin(200 * x) ** 2, name="wild")
    with pytest.raises(NumericalError):
        assemble_weighted_mass(5, CFG, wild, n_nodes=20)


def test_potential_argument_switch():
    xi = np.linspace(0, 4, 9)
    p0 = PotentialSpec.named("bump", 1.0)
    p1 = PotentialSpec.named("bump", 1.0, scale_argument=True)
    assert np.allclose(p0.weight(xi, CFG.sigma), 1 + POTENTIALS["bump"](xi))
    assert np.allclose(p1.weight(xi, CFG.sigma), 1 + POTENTIALS["bump"](CFG.sigma * xi))


# --- trace and bases ---------------------------------------------------------------------


def test_trace_vector():
    assert trace_vector(0).tolist() == [1.0]
    assert trace_vector(5, "difference").tolist() == [1, 0, 0, 0, 0, 0]
    assert trace_vector(5, "difference").sum() == 1
    # on phi_j the evaluation at 0 is L_j(0) = 1
    assert trace_vector(5).tolist() == [1.0] * 6
    with pytest.raises(ValueError):
        trace_vector(3, "nope")


def test_trace_vector_evaluates_basis_at_zero():
    from csie.laguerre import phi_table

    N = 9
    for basis in ("laguerre", "difference"):
        C = basis_change(N, basis)
        vals = C @ phi_table(N, 0.0).real
        assert np.array_equal(vals, trace_vector(N, basis))


def test_difference_basis_is_banded():
    N = 30
    for fn, bw in ((assemble_mass0, 1), (assemble_mass1, 3), (assemble_stiffness, 3)):
        op = change_basis(fn(N, CFG), "difference")
        assert structure_report(op, 1e-12).bandwidth == bw
        assert np.array_equal(op.entries, op.entries.T)


def test_basis_change_roundtrip():
    C = basis_change(6, "difference")
    assert np.allclose(np.linalg.inv(C), np.tril(np.ones((7, 7))))
    assert change_basis(assemble_mass1(4, CFG), "laguerre").form == "mass1"
    with pytest.raises(ValueError):
        basis_change(3, "chebyshev")


def test_structure_report_examples():
    assert structure_report(assemble_mass0(10, CFG), 1e-12).bandwidth == 0
    rep = assemble_mass1(10, CFG).structure
    assert rep.bandwidth == 2 and rep.tol == 1e-12
    with pytest.raises(ValueError):
        structure_report(assemble_mass0(3, CFG), 0.0)
    assert structure_report(np.zeros((4, 4)), 1e-12).bandwidth == 0


@given(N=st.integers(0, 25), re=st.floats(0.01, 3), im=st.floats(0.01, 3), R=st.floats(0.1, 20))
@settings(max_examples=15, deadline=None)
def test_operator_properties(N, re, im, R):
    cfg = ScalingConfig(complex(re, im), R)
    M = assemble_mass1(N, cfg)
    S = assemble_stiffness(N, cfg)
    assert isinstance(M, RadialOperator) and M.dim == N + 1
    assert np.array_equal(M.entries, M.entries.T) and np.array_equal(S.entries, S.entries.T)
    bw = structure_report(M, 1e-12 * max(1.0, np.abs(M.entries).max())).bandwidth
    # a full matrix of size <= 3 is reported as "dense" by definition
    assert bw in range(0, 3) or (bw == "dense" and N <= 2)
