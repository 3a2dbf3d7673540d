"""Exact linear feasibility over the rationals.

A dense phase-one simplex with Bland's rule, kept fraction-free: every
tableau row is an integer vector, rescaled by positive factors and reduced by
its gcd after each pivot.  The basic variable of row i is
``rhs_i / row_i[basis_i]`` with a positive coefficient.  It is only used on
tiny systems (d+1 rows), where exactness matters more than speed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _reduce(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    return [v // g for v in row] if g > 1 else row


def _integer_row(values) -> list[int]:
    vals = [Fraction(v) for v in values]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in vals]


def feasible_nonneg(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return some x >= 0 with A x = b, or None if no such x exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    width = n + m
    rows = []
    for i in range(m):
        row = _integer_row(list(A[i]) + [b[i]])
        if row[-1] < 0:
            row = [-v for v in row]
        # artificial variables occupy columns n .. n+m-1
        rows.append(row[:n] + [int(i == k) for k in range(m)] + [row[-1]])
    basis = [n + i for i in range(m)]
    # reduced costs of "minimise the sum of artificials"
    cost = [0] * (width + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                if leave is None:
                    leave = i
                    continue
                lhs = row[width] * rows[leave][enter]
                rhs = rows[leave][width] * row[enter]
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave is None:  # phase one is bounded below; cannot happen
            break
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(rows[i][width], rows[i][j])
    return x


def _pivot(rows, cost, r, c):
    prow = rows[r]
    pv = prow[c]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            a = row[c]
            rows[i] = _reduce([pv * x - a * p for x, p in zip(row, prow)])
    if cost[c] != 0:
        a = cost[c]
        cost[:] = _reduce([pv * x - a * p for x, p in zip(cost, prow)])


def in_convex_hull(q: Sequence, others: Sequence[Sequence]) -> bool:
    """True if q is a convex combination of ``others`` (exact)."""
    if not others:
        return False
    d = len(q)
    A = [[p[r] for p in others] for r in range(d)] + [[1] * len(others)]
    b = list(q) + [1]
    return feasible_nonneg(A, b) is not None
