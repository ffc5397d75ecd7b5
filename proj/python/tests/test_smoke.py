import math

import numpy as np
import pytest

import qclattice as qc


def test_solve_square_dirichlet_invariants():
    res = qc.solve("square", "dirichlet", M=6)
    y = res["y"]
    assert y.shape == (13, 13)
    assert res["eps"] == pytest.approx(1.0 / 12.0)
    assert res["residual"] <= 1e-10
    # pinned ring
    assert np.all(y[0, :] == 0.0) and np.all(y[-1, :] == 0.0)
    assert np.all(y[:, 0] == 0.0) and np.all(y[:, -1] == 0.0)
    # forcing and operator are both even in n
    assert np.max(np.abs(y - y[:, ::-1])) <= 1e-10
    assert np.max(np.abs(y)) > 0.0


def test_solve_periodic_is_constant_transversely():
    res = qc.solve("triangular", "periodic", M=8, N=4)
    y = res["y"]
    spread = y.max(axis=1) - y.min(axis=1)
    assert np.max(spread) <= 1e-10


def test_analytic_matches_iterative_solver():
    M = 8
    series = qc.analytic(M)
    solved = qc.solve("square", "dirichlet", M=M)
    scale = np.max(np.abs(solved["y"]))
    assert series["modes_used"] == M
    assert np.max(np.abs(series["y"] - solved["y"])) <= 1e-8 * scale


def test_ghost_force_profile():
    M = 10
    F1, F2 = qc.ghost_force(M)
    eps = 1.0 / (2 * M)
    for m in range(-M, M + 1):
        # pinned ring carries no residual, so check the free columns
        row = np.abs(F1[m + M, 1:-1])
        if m in (-1, 1):
            assert row == pytest.approx(0.75 * eps, abs=1e-12)
        elif m == 0:
            assert row == pytest.approx(1.5 * eps, abs=1e-12)
        else:
            assert np.max(row) <= 1e-14
    assert np.max(np.abs(F2 + F1 / math.sqrt(3.0))) <= 1e-12


def test_gradient_of_linear_ramp():
    M, N, eps = 4, 3, 0.5
    y = np.fromfunction(lambda i, j: i, (2 * M + 1, 2 * N + 1))
    g = qc.gradient(y, eps, dm=1, dn=0)
    assert g[:-1, :] == pytest.approx(1.0 / eps)
    assert np.all(g[-1, :] == 0.0)


def test_width_sweep_small_grids():
    table = qc.width_sweep("square", "dirichlet", [4, 8], c0=0.04)
    assert table["eps"] == pytest.approx([0.125, 0.0625])
    # at this threshold the marked band spans every free column
    assert table["width"] == pytest.approx([7 * 0.125, 15 * 0.0625])
    assert len(table["interval_slopes"]) == 1
    assert math.isfinite(table["rate"])


def test_mode_params_midpoint():
    M = N = 8
    md = qc.mode_params(N, M, N)
    assert md["lambda"] == pytest.approx(1.0, abs=1e-14)
    assert math.cosh(md["alpha"]) == pytest.approx(1.2, abs=1e-14)
    assert math.cosh(md["gamma"]) == pytest.approx((1 + math.sqrt(33)) / 4, abs=1e-13)
    assert 0.0 < md["rho"] <= 1.0 / 6.0
