"""Exact-rational revised simplex for small linear programs.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with ``b >= 0`` using two phases,
all in :class:`fractions.Fraction`. Pricing is Dantzig (most negative reduced
cost) until a run of degenerate pivots shows up, after which Bland's rule takes
over for good, so the method cannot cycle. Columns are sparse dicts
``{row: coefficient}`` so that programs with many columns and few rows (the
covering LP over independent sets) stay cheap: the basis inverse is only
``m x m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

# consecutive degenerate pivots tolerated before switching to Bland's rule
DEGENERATE_RUN = 50


class Infeasible(ValueError):
    pass


class Unbounded(ValueError):
    pass


@dataclass
class LPSolution:
    value: Fraction
    x: list[Fraction]      # primal values of the original columns
    y: list[Fraction]      # dual values, one per row
    pivots: int


def _dot_col(pi, col):
    return sum((pi[i] * a for i, a in col.items()), Fraction(0))


def _ftran(Binv, col, m):
    u = [Fraction(0)] * m
    for i, a in col.items():
        for r in range(m):
            v = Binv[r][i]
            if v:
                u[r] += v * a
    return u


def solve_standard_form(c: Sequence, columns: Sequence[dict], b: Sequence, max_pivots: int = 100_000) -> LPSolution:
    m = len(b)
    n = len(columns)
    c = [Fraction(v) for v in c]
    b = [Fraction(v) for v in b]
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")
    cols = [{i: Fraction(a) for i, a in col.items() if a} for col in columns]
    # artificials n..n+m-1 start as the basis
    cols += [{i: Fraction(1)} for i in range(m)]
    basis = list(range(n, n + m))
    Binv = [[Fraction(int(r == q)) for q in range(m)] for r in range(m)]
    xB = list(b)
    pivots = 0

    integral = all(a.denominator == 1 for col in cols for a in col.values())
    icols = [[(i, int(a)) for i, a in col.items()] for col in cols] if integral else None

    def reduced_costs(cost, pi, allowed, in_basis):
        # scaled by a common denominator so the inner sums stay in ints
        if icols is not None:
            D = lcm(*(p.denominator for p in pi), *(cost[j].denominator for j in range(allowed)))
            P = [int(p * D) for p in pi]
            for j in range(allowed):
                if j not in in_basis:
                    yield j, int(cost[j] * D) - sum(P[i] * a for i, a in icols[j])
        else:
            for j in range(allowed):
                if j not in in_basis:
                    yield j, cost[j] - _dot_col(pi, cols[j])

    def run(cost, allowed):
        nonlocal pivots
        bland = False
        degenerate = 0
        while True:
            cB = [cost[j] for j in basis]
            pi = [sum((cB[r] * Binv[r][i] for r in range(m)), Fraction(0)) for i in range(m)]
            in_basis = set(basis)
            enter, best_d = None, 0
            for j, d in reduced_costs(cost, pi, allowed, in_basis):
                if d < best_d:
                    enter, best_d = j, d
                    if bland:
                        break
            if enter is None:
                return pi
            u = _ftran(Binv, cols[enter], m)
            leave, best = None, None
            for r in range(m):
                if u[r] > 0:
                    ratio = xB[r] / u[r]
                    if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                        leave, best = r, ratio
            if leave is None:
                raise Unbounded("objective is unbounded below")
            degenerate = degenerate + 1 if best == 0 else 0
            if degenerate >= DEGENERATE_RUN:
                bland = True
            _pivot(leave, enter, u)
            pivots += 1
            if pivots > max_pivots:
                raise RuntimeError("pivot limit reached")

    def _pivot(r, j, u):
        piv = u[r]
        Binv[r] = [v / piv for v in Binv[r]]
        xB[r] = xB[r] / piv
        for q in range(m):
            if q != r and u[q]:
                f = u[q]
                rowr = Binv[r]
                Binv[q] = [a - f * br for a, br in zip(Binv[q], rowr)]
                xB[q] -= f * xB[r]
        basis[r] = j

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    run(phase1, n + m)
    if sum((xB[r] for r in range(m) if basis[r] >= n), Fraction(0)) > 0:
        raise Infeasible("no feasible point")
    # drive zero-level artificials out where possible; remaining rows are redundant
    for r in range(m):
        if basis[r] >= n:
            for j in range(n):
                if j in basis:
                    continue
                u = _ftran(Binv, cols[j], m)
                if u[r] != 0:
                    _pivot(r, j, u)
                    break
    cost = c + [Fraction(0)] * m
    pi = run(cost, n)
    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        if j < n:
            x[j] = xB[r]
    value = sum((c[j] * x[j] for j in range(n)), Fraction(0))
    return LPSolution(value, x, pi, pivots)


def solve_covering(sets: Sequence[Sequence[int]], n: int) -> LPSolution:
    """min sum w_S  s.t. every element 0..n-1 is covered with total weight >= 1.

    ``y`` in the result is a dual optimum: non-negative element weights whose
    sum over every set is at most 1, with total equal to ``value``.
    """
    columns = [{v: 1 for v in S} for S in sets]
    columns += [{v: -1} for v in range(n)]
    c = [1] * len(sets) + [0] * n
    sol = solve_standard_form(c, columns, [1] * n)
    return LPSolution(sol.value, sol.x[:len(sets)], sol.y, sol.pivots)
