from fractions import Fraction

import pytest

from eslab.kernel import PointSet, make_rng
from eslab.verifiers import is_general_position


def random_points(rng, n, d, coord_bits=20, den_bits=12):
    """n distinct random rational points in R^d."""
    pts = set()
    out = []
    while len(out) < n:
        p = tuple(Fraction(int(rng.integers(-(2 ** coord_bits), 2 ** coord_bits)),
                           int(rng.integers(1, 2 ** den_bits)))
                  for _ in range(d))
        if p not in pts:
            pts.add(p)
            out.append(p)
    return PointSet(d, tuple(out))


def random_general_position(rng, n, d, **kw):
    while True:
        P = random_points(rng, n, d, **kw)
        if is_general_position(P):
            return P


def laplace_det(m):
    """Cofactor expansion along the first row; the independent oracle."""
    if len(m) == 0:
        return 1
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * laplace_det(minor)
    return total


def oracle_orientation(pts):
    """Clear all denominators with one common multiple, then Laplace."""
    from math import lcm
    den = 1
    for p in pts:
        for c in p:
            den = lcm(den, Fraction(c).denominator)
    d = len(pts[0])
    cols = [[int(Fraction(c) * den) for c in p] + [1] for p in pts]
    m = [[col[r] for col in cols] for r in range(d + 1)]
    det = laplace_det(m)
    return (det > 0) - (det < 0)


@pytest.fixture
def rng():
    return make_rng(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
