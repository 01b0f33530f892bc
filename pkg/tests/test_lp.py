import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from widecolor.lp import Infeasible, Unbounded, solve_covering, solve_standard_form


def random_lp(rng, m, n):
    A = [[rng.randint(-2, 4) for _ in range(n)] for _ in range(m)]
    x0 = [rng.randint(0, 3) for _ in range(n)]
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    for i in range(m):  # keep b >= 0 by flipping rows
        if b[i] < 0:
            A[i] = [-a for a in A[i]]
            b[i] = -b[i]
    c = [rng.randint(0, 5) for _ in range(n)]
    return c, A, b


def columns(A):
    m, n = len(A), len(A[0])
    return [{i: A[i][j] for i in range(m) if A[i][j]} for j in range(n)]


def test_against_scipy():
    rng = random.Random(3)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(2, 7)
        c, A, b = random_lp(rng, m, n)
        ref = linprog(c, A_eq=np.array(A), b_eq=b, bounds=[(0, None)] * n, method="highs")
        sol = solve_standard_form(c, columns(A), b)
        assert ref.status == 0
        assert float(sol.value) == pytest.approx(ref.fun, abs=1e-7)
        assert all(sum(A[i][j] * sol.x[j] for j in range(n)) == b[i] for i in range(m))
        assert all(v >= 0 for v in sol.x)
        # duality: pi^T b equals the optimum and every reduced cost is non-negative
        assert sum(p * bi for p, bi in zip(sol.y, b)) == sol.value
        assert all(c[j] - sum(sol.y[i] * A[i][j] for i in range(m)) >= 0 for j in range(n))


def test_exact_rationals():
    # min x + y  s.t.  3x + y = 2, x + 3y = 2  ->  x = y = 1/2
    sol = solve_standard_form([1, 1], [{0: 3, 1: 1}, {0: 1, 1: 3}], [2, 2])
    assert sol.value == 1 and sol.x == [Fraction(1, 2), Fraction(1, 2)]
    assert all(isinstance(v, Fraction) for v in sol.x + sol.y)


def test_infeasible():
    with pytest.raises(Infeasible):
        # x1 + x2 = 1 and x1 + x2 = 2
        solve_standard_form([1, 1], [{0: 1, 1: 1}, {0: 1, 1: 1}], [1, 2])


def test_unbounded():
    # min -x1  s.t.  x1 - x2 = 0
    with pytest.raises(Unbounded):
        solve_standard_form([-1, 0], [{0: 1}, {0: -1}], [0])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError):
        solve_standard_form([1], [{0: 1}], [-1])


def test_degenerate_does_not_cycle():
    # the classic cycling example for Dantzig pricing without a fallback (slack form)
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6, 0, 0, 0]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0],
         [Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    b = [0, 0, 1]
    sol = solve_standard_form(c, columns(A), b)
    assert sol.value == Fraction(-1, 20)


class TestCovering:
    def test_c5(self):
        sets = [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)]
        sol = solve_covering(sets, 5)
        assert sol.value == Fraction(5, 2)
        assert sum(sol.y) == sol.value

    def test_against_scipy(self):
        rng = random.Random(8)
        for _ in range(30):
            n = rng.randint(2, 7)
            sets = [tuple(sorted(rng.sample(range(n), rng.randint(1, n)))) for _ in range(rng.randint(1, 8))]
            covered = set().union(*sets)
            sets += [(v,) for v in range(n) if v not in covered]
            A = np.zeros((n, len(sets)))
            for j, S in enumerate(sets):
                A[list(S), j] = 1
            ref = linprog(np.ones(len(sets)), A_ub=-A, b_ub=-np.ones(n), bounds=[(0, None)] * len(sets),
                          method="highs")
            sol = solve_covering(sets, n)
            assert float(sol.value) == pytest.approx(ref.fun, abs=1e-7)
