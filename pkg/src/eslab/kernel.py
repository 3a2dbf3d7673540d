"""Exact rational point sets and geometric predicates.

Coordinates are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator, so structural equality of points is
value equality.  Every predicate reduces to the sign of an integer
determinant; no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

import numpy as np

Scalar = Fraction
Point = tuple  # tuple[Fraction, ...]


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def as_point(coords: Iterable) -> Point:
    return tuple(as_scalar(c) for c in coords)


@dataclass(frozen=True)
class PointSet:
    """A dimension-tagged sequence of exact points.

    Points must be pairwise distinct unless ``allow_duplicates`` is set, which
    only projections do; ``has_duplicates`` records the outcome either way.
    """

    dim: int
    points: tuple
    allow_duplicates: bool = False
    has_duplicates: bool = field(init=False, default=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pts = tuple(as_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        dup = len(set(pts)) != len(pts)
        if dup and not self.allow_duplicates:
            raise ValueError("point set contains duplicate points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "has_duplicates", dup)

    @classmethod
    def of(cls, points: Iterable[Iterable], dim: int | None = None) -> "PointSet":
        pts = [as_point(p) for p in points]
        if dim is None:
            if not pts:
                raise ValueError("cannot infer the dimension of an empty point set")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, idx):
        return self.points[idx]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self.dim, tuple(self.points[i] for i in indices),
                        allow_duplicates=self.allow_duplicates)

    def integer_coords(self) -> list[tuple[int, ...]]:
        """Coordinates scaled by one common positive denominator.

        A common positive scaling multiplies every orientation determinant by
        the same positive factor, so all sign predicates are preserved.
        """
        den = 1
        for p in self.points:
            for c in p:
                den = lcm(den, c.denominator)
        return [tuple(c.numerator * (den // c.denominator) for c in p)
                for p in self.points]


def _check_same_dim(points: Sequence[Point], dim: int) -> None:
    for p in points:
        if len(p) != dim:
            raise ValueError(f"point {p} does not have dimension {dim}")


# --------------------------------------------------------------------------
# integer determinants

def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def orient_int(pts: Sequence[Sequence[int]]) -> int:
    """Orientation sign of d+1 integer points in R^d.

    The homogenized determinant det[[p_0 .. p_d], [1 .. 1]] (points as
    columns, ones row last) equals (-1)^d det[p_1 - p_0, ..., p_d - p_0].
    """
    d = len(pts) - 1
    p0 = pts[0]
    if d == 1:
        return _sign(p0[0] - pts[1][0])
    if d == 2:
        ax, ay = pts[1][0] - p0[0], pts[1][1] - p0[1]
        bx, by = pts[2][0] - p0[0], pts[2][1] - p0[1]
        return _sign(ax * by - ay * bx)
    diffs = [[q[r] - p0[r] for q in pts[1:]] for r in range(d)]
    if d == 3:
        (a, b, c), (e, f, g), (h, i, j) = diffs
        det = a * (f * j - g * i) - b * (e * j - g * h) + c * (e * i - f * h)
        return -_sign(det)
    s = _sign(bareiss_det(diffs))
    return -s if d % 2 else s


def orientation(pts: Sequence[Sequence]) -> int:
    """Sign in {-1, 0, 1} of the homogenized determinant of d+1 points in R^d.

    Each point is scaled by the lcm of its own denominators first; scaling a
    column of the homogenized matrix by a positive number keeps the sign.
    """
    pts = [as_point(p) for p in pts]
    if not pts:
        raise ValueError("orientation needs d+1 points")
    d = len(pts[0])
    _check_same_dim(pts, d)
    if len(pts) != d + 1:
        raise ValueError(f"orientation in dimension {d} needs {d + 1} points, got {len(pts)}")
    cols = []
    for p in pts:
        den = 1
        for c in p:
            den = lcm(den, c.denominator)
        cols.append([c.numerator * (den // c.denominator) for c in p] + [den])
    # columns are points, homogenizing row last
    matrix = [[col[r] for col in cols] for r in range(d + 1)]
    return _sign(bareiss_det(matrix))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix (fraction-free elimination)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            m[r] = [(p * m[r][j] - a * m[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def affine_dimension(P: PointSet | Sequence[Sequence]) -> int:
    """Dimension of the affine hull; 0 for a single point."""
    if not isinstance(P, PointSet):
        P = PointSet(len(P[0]), tuple(P), allow_duplicates=True) if len(P) else None
    if P is None or len(P) == 0:
        raise ValueError("affine dimension of an empty set is undefined")
    ints = P.integer_coords()
    base = ints[0]
    diffs = [[a - b for a, b in zip(q, base)] for q in ints[1:]]
    return integer_rank(diffs)


@dataclass(frozen=True)
class OrderTypeComparison:
    same: bool
    witness: tuple | None = None  # first index tuple where signs differ
    signs: tuple | None = None    # (sign in P, sign in Q) at the witness

    def __bool__(self) -> bool:
        return self.same


def same_order_type(P: PointSet, Q: PointSet) -> OrderTypeComparison:
    """Compare orientations of every (d+1)-subset, index tuples in lex order."""
    if P.dim != Q.dim:
        raise ValueError("point sets have different dimensions")
    if len(P) != len(Q):
        raise ValueError("point sets have different sizes")
    a, b = P.integer_coords(), Q.integer_coords()
    for idx in combinations(range(len(P)), P.dim + 1):
        sp = orient_int([a[i] for i in idx])
        sq = orient_int([b[i] for i in idx])
        if sp != sq:
            return OrderTypeComparison(False, idx, (sp, sq))
    return OrderTypeComparison(True)


def project_drop_last(P: PointSet) -> PointSet:
    """Drop the last coordinate. Duplicates are kept and flagged."""
    if P.dim < 2:
        raise ValueError("projection needs dimension >= 2")
    return PointSet(P.dim - 1, tuple(p[:-1] for p in P.points), allow_duplicates=True)


def make_rng(seed, *stream) -> np.random.Generator:
    """Generator for an independent, reproducible substream of ``seed``."""
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, *map(int, stream)])


def random_shear(dim: int, seed) -> list[list[Fraction]]:
    """Product L @ U of unit triangular matrices with small rational entries.

    Determinant is exactly 1, so the map preserves orientation signs.
    """
    rng = make_rng(seed, 0x5E4)
    lower = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    upper = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            num = int(rng.integers(-64, 65))
            den = int(rng.integers(1, 33))
            if i > j:
                lower[i][j] = Fraction(num, den)
            elif i < j:
                upper[i][j] = Fraction(num, den)
    return [[sum((lower[i][k] * upper[k][j] for k in range(dim)), Fraction(0))
             for j in range(dim)] for i in range(dim)]


def apply_linear(P: PointSet, matrix: Sequence[Sequence[Fraction]]) -> PointSet:
    pts = tuple(tuple(sum((row[k] * p[k] for k in range(P.dim)), Fraction(0)) for row in matrix)
                for p in P.points)
    return PointSet(P.dim, pts, allow_duplicates=P.allow_duplicates)


def generic_linear_map(P: PointSet, seed=None) -> PointSet:
    """Apply a seeded determinant-one shear; ``seed=None`` is the identity."""
    if P.dim < 2:
        raise ValueError("generic linear map needs dimension >= 2")
    if seed is None:
        return P
    return apply_linear(P, random_shear(P.dim, seed))
