import numpy as np
import pytest
from scipy.optimize import linprog

from curvecone import LPInfeasibleError, solve_lp


def test_single_segment_reproduces_half_sup():
    # One segment from (0, 0) to (2, 6): min t with t >= |x_e - y_e| / 2.
    # Rows: -2t <= -(y_e - x_e) and -2t <= (y_e - x_e) per edge.
    c = [1.0]
    rows = [[-2.0], [-2.0], [-2.0], [-2.0]]
    rhs = [2.0, -2.0, 6.0, -6.0]
    res = solve_lp(c, rows, rhs)
    assert res.value == pytest.approx(3.0, abs=1e-9)


def test_two_segment_hand_derived():
    # Two quadrant segments joined at one shared-ray breakpoint w:
    # endpoints (4, 0) and (2, 2); minimize t0 + t1 with
    #   t0 >= max(4, w) / 2   (first quadrant: (4,0) to (0,w))
    #   t1 >= max(|w-2|, 2) / 2   (second quadrant: (w,0) to (2,2))
    # Hand minimization gives 2 + 1 = 3 at any w in [0, 4].
    c = [1.0, 1.0, 0.0]  # t0, t1, w
    rows = [
        [-2.0, 0.0, 0.0],   # 4 - 0 <= 2 t0
        [-2.0, 0.0, 0.0],
        [-2.0, 0.0, 1.0],   # w - 0 <= 2 t0
        [-2.0, 0.0, -1.0],
        [0.0, -2.0, 1.0],   # w - 2 <= 2 t1
        [0.0, -2.0, -1.0],
        [0.0, -2.0, 0.0],   # 0 - 2 <= 2 t1
        [0.0, -2.0, 0.0],
    ]
    rhs = [-4.0, 4.0, 0.0, 0.0, 2.0, -2.0, 2.0, -2.0]
    res = solve_lp(c, rows, rhs)
    assert res.value == pytest.approx(3.0, abs=1e-9)


def test_degenerate_first_segment():
    # Endpoint already on the shared face: first segment can have length 0.
    c = [1.0, 1.0, 0.0]
    rows = [
        [-2.0, 0.0, 0.0],
        [-2.0, 0.0, 0.0],
        [-2.0, 0.0, 1.0],
        [-2.0, 0.0, -1.0],
        [0.0, -2.0, 1.0],
        [0.0, -2.0, -1.0],
        [0.0, -2.0, 0.0],
        [0.0, -2.0, 0.0],
    ]
    # p = (0, 3) on the shared ray, q = (3, 1): w = 3 gives t0 = 0 and the
    # value is the direct second-segment length max(0, 1) / 2.
    rhs = [0.0, 0.0, 3.0, -3.0, 3.0, -3.0, 1.0, -1.0]
    res = solve_lp(c, rows, rhs)
    assert res.value == pytest.approx(0.5, abs=1e-9)
    assert res.x[0] == pytest.approx(0.0, abs=1e-9)


def test_infeasible_detected():
    # x <= -1 with x >= 0.
    with pytest.raises(LPInfeasibleError):
        solve_lp([1.0], [[1.0]], [-1.0])


@pytest.mark.parametrize("seed", range(12))
def test_matches_scipy_on_random_bounded_programs(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(2, 8), rng.integers(2, 6)
    a = rng.normal(size=(m, n))
    x0 = rng.uniform(0, 2, size=n)
    b = a @ x0 + rng.uniform(0.1, 1.0, size=m)
    c = rng.uniform(0.1, 2.0, size=n)  # c >= 0 keeps the program bounded
    mine = solve_lp(c, a, b)
    ref = linprog(c, A_ub=a, b_ub=b, bounds=(0, None), method="highs")
    assert ref.status == 0
    assert mine.value == pytest.approx(ref.fun, abs=1e-7)
    assert np.all(a @ mine.x <= b + 1e-7)
    assert np.all(mine.x >= -1e-12)


def test_deterministic_resolution_of_ties():
    c = [1.0, 1.0]
    rows = [[-1.0, -1.0]]
    rhs = [-1.0]
    first = solve_lp(c, rows, rhs)
    second = solve_lp(c, rows, rhs)
    assert first.value == second.value == pytest.approx(1.0)
    assert np.array_equal(first.x, second.x)
