"""The LP kernel against an independent solver on random instances."""

import numpy as np
import pytest
from scipy.optimize import linprog

from signpoly.errors import SolverFailureError
from signpoly.simplex import feasible_nonneg


def _reference_feasible(A, b):
    res = linprog(np.zeros(A.shape[1]), A_eq=A, b_eq=b,
                  bounds=[(0, None)] * A.shape[1], method="highs")
    return res.status == 0


def test_trivial_systems():
    ok, z = feasible_nonneg(np.array([[1.0]]), np.array([2.0]))
    assert ok and z[0] == pytest.approx(2.0)
    ok, z = feasible_nonneg(np.array([[1.0]]), np.array([-2.0]))
    assert not ok and z is None


def test_negative_rhs_rows_are_flipped():
    # x - y = -1 with x, y >= 0 is feasible (x=0, y=1)
    A = np.array([[1.0, -1.0]])
    ok, z = feasible_nonneg(A, np.array([-1.0]))
    assert ok
    assert A @ z == pytest.approx([-1.0])


def test_agrees_with_reference_solver():
    rng = np.random.default_rng(314)
    checked_feasible = checked_infeasible = 0
    for _ in range(300):
        k = int(rng.integers(1, 6))
        p = int(rng.integers(1, 12))
        A = rng.integers(-4, 5, size=(k, p)).astype(float)
        if rng.random() < 0.5:
            z0 = rng.random(p) * rng.integers(0, 2, size=p)
            b = A @ z0
        else:
            b = rng.integers(-6, 7, size=k).astype(float)
        ok, z = feasible_nonneg(A, b)
        assert ok == _reference_feasible(A, b)
        if ok:
            checked_feasible += 1
            assert z.min() >= 0.0
            np.testing.assert_allclose(A @ z, b, atol=1e-7)
        else:
            checked_infeasible += 1
            assert z is None
    # the generator must actually exercise both outcomes
    assert checked_feasible > 50
    assert checked_infeasible > 50


def test_degenerate_hull_systems():
    """Highly redundant columns (many identical vertices) must not cycle."""
    rng = np.random.default_rng(99)
    for _ in range(50):
        n = int(rng.integers(2, 5))
        m = int(rng.integers(4, 30))
        V = rng.integers(-2, 3, size=(m, n)).astype(float)
        x = V[: max(1, m // 2)].mean(axis=0)
        A = np.vstack([V.T, np.ones((1, m))])
        b = np.append(x, 1.0)
        ok, z = feasible_nonneg(A, b)
        assert ok
        np.testing.assert_allclose(A @ z, b, atol=1e-8)


def test_iteration_cap_raises():
    V = np.vstack([np.eye(3), -np.eye(3)])
    A = np.vstack([V.T, np.ones((1, 6))])
    b = np.array([0.0, 0.0, 0.0, 1.0])
    with pytest.raises(SolverFailureError):
        feasible_nonneg(A, b, max_iter=1)


def test_shape_validation():
    with pytest.raises(ValueError):
        feasible_nonneg(np.ones((2, 2)), np.ones(3))
    with pytest.raises(ValueError):
        feasible_nonneg(np.ones(4), np.ones(2))


def test_tolerance_separates_near_feasible():
    # b is 1e-6 outside the column cone; loose tolerance accepts it
    A = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    b = np.array([0.5, 0.5, 1e-6])
    ok_tight, _ = feasible_nonneg(A, b, tol=1e-9)
    ok_loose, _ = feasible_nonneg(A, b, tol=1e-4)
    assert not ok_tight
    assert ok_loose
