import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from csie.laguerre import (
    LaguerreBasis,
    derivative_expansion,
    dphi_table,
    eval_laguerre,
    eval_phi,
    gauss_laguerre,
    laguerre_table,
    nodes_for_degree,
    phi_table,
)


# --- eval_laguerre / eval_phi -------------------------------------------------


def test_laguerre_examples():
    assert eval_laguerre(0, 0, 7.3) == 1
    assert eval_laguerre(1, 0, 2.0) == pytest.approx(-1)
    assert eval_laguerre(3, 1, 0.0) == pytest.approx(4)


@pytest.mark.parametrize("m", [-2, 0, 1, 3])
def test_laguerre_at_zero_is_binomial(m):
    for n in range(max(0, -m), 15):
        assert eval_laguerre(n, m, 0.0) == pytest.approx(math.comb(n + m, n), rel=1e-13)


@pytest.mark.parametrize("x", [0.3, 2.5, 11.0, 37.0, 50.0, 3 - 4j, -10 + 20j])
def test_recurrence_matches_binomial_sum(x):
    vals = laguerre_table(30, x)
    z = complex(x)
    xs = sp.nsimplify(z.real) + sp.I * sp.nsimplify(z.imag)
    for n in range(31):
        ref = complex(sp.N(sum(
            sp.binomial(n, n - k) * (-xs) ** k / sp.factorial(k) for k in range(n + 1)
        ), 30))
        assert abs(vals[n] - ref) <= 1e-12 * max(abs(ref), 1.0)


@pytest.mark.parametrize("m", [-1, 1, 2])
def test_generalized_recurrence_matches_binomial(m):
    x = 4.25
    for n in range(max(0, -m), 31):
        ref = float(sum(
            sp.binomial(n + m, n - k) * (-sp.Rational(17, 4)) ** k / sp.factorial(k)
            for k in range(n + 1)
        ))
        assert abs(eval_laguerre(n, m, x) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_index_out_of_range():
    with pytest.raises(ValueError):
        eval_laguerre(-1, 0, 1.0)
    with pytest.raises(ValueError):
        eval_laguerre(2, -3, 1.0)
    with pytest.raises(ValueError):
        eval_phi(-1, 0, 1.0)


def test_phi_examples():
    # the coupling identity holds for the m = -1 family; phi_j(0) = L_j(0) = 1
    for j in (1, 5):
        assert eval_phi(j, -1, 0.0) == 0.0
    for j in (0, 1, 5):
        assert eval_phi(j, 0, 0.0) == 1.0
    assert eval_phi(2, 0, 1.0) == pytest.approx(-math.exp(-1), rel=1e-14)
    for x in (0.0, 1.3, 2 - 1j):
        assert eval_phi(0, 0, x) == pytest.approx(np.exp(-x), rel=1e-14)


def test_phi_at_zero_exact_table():
    v = phi_table(20, 0.0, m=-1)
    assert v[0] == 1.0
    assert np.all(v[1:] == 0.0)
    assert np.all(phi_table(20, 0.0) == 1.0)


def test_phi_three_term_recurrence():
    x = np.linspace(0, 20, 81)
    P = phi_table(40, x).real
    for k in range(2, 41):
        lhs = k * P[k]
        rhs = (2 * k - 1 - 2 * x) * P[k - 1] - (k - 1) * P[k - 2]
        scale = np.maximum(np.abs(lhs), np.exp(-x) * 1e-3 + np.abs(rhs))
        assert np.all(np.abs(lhs - rhs) <= 1e-12 * np.maximum(scale, 1e-300) + 1e-14)


def test_index_recursion():
    x = np.linspace(0, 20, 101)
    for m in (0, 1, 2):
        A = phi_table(30, x, m - 1)
        B = phi_table(30, x, m)
        for n in range(1, 31):
            assert np.abs(A[n] - (B[n] - B[n - 1])).max() < 1e-12


def test_generating_function():
    x = np.linspace(0, 10, 41)
    for t in (0.3, 0.5j, -0.2 + 0.4j):
        exact = np.exp(-t * x / (1 - t)) / (1 - t)
        K = 10
        while True:
            L = laguerre_table(K, x)
            bound = abs(t) ** (K + 1) / (1 - abs(t)) * np.abs(L).max()
            if bound < 1e-11:
                break
            K += 10
        partial = np.tensordot(t ** np.arange(K + 1), L, axes=(0, 0))
        assert np.abs(partial - exact).max() < 1e-10


def test_large_index_no_overflow():
    v = phi_table(300, np.array([0.5, 50.0, 400.0]))
    assert np.all(np.isfinite(v))


# --- derivative expansion -------------------------------------------------------


def test_derivative_expansion_small():
    assert derivative_expansion(0).tolist() == [[-1.0]]
    assert derivative_expansion(2)[2].tolist() == [-2.0, -2.0, -1.0]


def test_derivative_expansion_symbolic():
    x = sp.symbols("x")
    N = 4
    phis = [sp.exp(-x) * sp.laguerre(n, 2 * x) for n in range(N + 1)]
    D = derivative_expansion(N)
    for n in range(N + 1):
        lhs = sp.diff(phis[n], x)
        rhs = sum(sp.Rational(int(D[n, k])) * phis[k] for k in range(N + 1))
        assert sp.simplify(lhs - rhs) == 0


def test_derivative_expansion_finite_difference():
    N = 25
    x = np.linspace(0.5, 20, 40)
    h = 1e-2

    def cd(step):
        return (phi_table(N, x + step) - phi_table(N, x - step)).real / (2 * step)

    # Richardson: removes the h^2 term of the central difference
    fd = (4 * cd(h / 2) - cd(h)) / 3
    fd2 = (16 * ((4 * cd(h / 4) - cd(h / 2)) / 3) - fd) / 15
    exact = dphi_table(N, x).real
    assert np.abs(fd2 - exact).max() < 1e-10


def test_literal_item_iii_holds_for_polynomials_only():
    # d/dx L_{n,m} = -L_{n-1,m+1}, but phi_1' != -phi_{0,1}
    x = np.linspace(0.1, 5, 7)
    for n in range(1, 8):
        for m in (0, 1):
            h = 1e-5
            d = (eval_laguerre(n, m, x + h) - eval_laguerre(n, m, x - h)) / (2 * h)
            assert np.allclose(d, -eval_laguerre(n - 1, m + 1, x), rtol=1e-7, atol=1e-7)
    dphi1 = dphi_table(1, x)[1]
    assert not np.allclose(dphi1, -eval_phi(0, 1, x))
    assert np.allclose(dphi1, np.exp(-x) * (2 * x - 3))


# --- quadrature ------------------------------------------------------------------


def test_one_point_rule():
    r = gauss_laguerre(1, 1.0)
    assert r.nodes[0] == pytest.approx(1.0, abs=1e-15)
    assert r.weights[0] == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("n", [1, 2, 7, 40, 150])
def test_low_moments(n):
    r = gauss_laguerre(n, 1.0)
    assert r.weights.sum() == pytest.approx(1.0, rel=1e-13)
    assert (r.weights * r.nodes).sum() == pytest.approx(1.0, rel=1e-13)


@pytest.mark.parametrize("n,c", [(5, 1.0), (12, 2.0), (30, 0.7), (60, 3.5)])
def test_exactness_degree(n, c):
    r = gauss_laguerre(n, c)
    for d in range(2 * n):
        exact = math.factorial(d) / c ** (d + 1)
        approx = np.sum(r.full_weights * np.exp(-c * r.nodes) * (r.nodes / 1.0) ** d)
        assert approx == pytest.approx(exact, rel=1e-11)


@given(n=st.integers(1, 200), c=st.floats(0.05, 20))
@settings(max_examples=40, deadline=None)
def test_rule_structure(n, c):
    r = gauss_laguerre(n, c)
    assert len(r) == n
    assert np.all(r.nodes > 0)
    assert np.all(np.diff(r.nodes) > 0)
    assert np.all(r.weights >= 0)
    assert np.all(r.full_weights > 0)
    assert r.weight_exponent == c


def test_orthonormality_32():
    r = gauss_laguerre(32, 2.0)
    P = phi_table(31, r.nodes).real
    G = (P * r.full_weights) @ P.T
    assert np.abs(G - np.eye(32) / 2).max() < 1e-12


def test_orthonormality_50():
    r = gauss_laguerre(51, 2.0)
    P = phi_table(50, r.nodes).real
    G = (P * r.full_weights) @ P.T
    assert np.abs(G - np.eye(51) / 2).max() < 1e-12


def test_quadratic_sparsity_identity():
    N = 40
    r = gauss_laguerre(nodes_for_degree(N, 2), 2.0)
    P = phi_table(N, r.nodes).real
    G = (P * (r.full_weights * r.nodes**2)) @ P.T
    i, j = np.indices(G.shape)
    assert np.abs(G[np.abs(i - j) > 2]).max() < 1e-10


def test_nodes_for_degree():
    for N in range(0, 30):
        for q in range(0, 4):
            n = nodes_for_degree(N, q)
            assert 2 * n - 1 >= 2 * N + q
            assert n == math.ceil((2 * N + q + 2) / 2)


def test_invalid_rules():
    with pytest.raises(ValueError):
        gauss_laguerre(0, 1.0)
    with pytest.raises(ValueError):
        gauss_laguerre(3, 0.0)


def test_basis_object():
    B = LaguerreBasis(6)
    assert B.dim == 7
    assert B.phi(0.0)[0] == 1
    assert B.derivative_matrix.shape == (7, 7)
    r = B.rule(2)
    assert len(r) == nodes_for_degree(6, 2)
    with pytest.raises(ValueError):
        LaguerreBasis(-1)

