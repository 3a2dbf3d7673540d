"""Exact decision procedures for general position, incidence and convexity."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .kernel import PointSet, bareiss_det, integer_rank, orient_int
from .lp import in_convex_hull


@dataclass(frozen=True)
class PositionResult:
    """Boolean verdict plus the witness that refutes it (if any)."""

    ok: bool
    witness: tuple | None = None
    reason: str = ""
    degenerate_size: bool = False

    def __bool__(self) -> bool:
        return self.ok


def is_general_position(P: PointSet) -> PositionResult:
    """No d+1 points on a common hyperplane (exhaustive orientation scan)."""
    d = P.dim
    if len(P) <= d:
        return PositionResult(True, degenerate_size=True)
    pts = P.integer_coords()
    for idx in combinations(range(len(pts)), d + 1):
        if orient_int([pts[i] for i in idx]) == 0:
            return PositionResult(False, idx, "degenerate (d+1)-subset")
    return PositionResult(True)


def is_convex_position(P: PointSet) -> PositionResult:
    """General position and every point a vertex of the hull.

    Vertex status is decided by exact linear feasibility, independently of the
    orientation-based machinery used by the mc solver.
    """
    d = P.dim
    if len(P) <= d:
        return PositionResult(False, reason="fewer than d+1 points", degenerate_size=True)
    gp = is_general_position(P)
    if not gp:
        return PositionResult(False, gp.witness, gp.reason)
    pts = P.integer_coords()  # common scaling keeps hull membership
    for i, q in enumerate(pts):
        if in_convex_hull(q, pts[:i] + pts[i + 1:]):
            return PositionResult(False, (i,), "point inside hull of the others")
    return PositionResult(True)


# --------------------------------------------------------------------------
# hyperplanes

def hyperplane_through(points: list[tuple[int, ...]]) -> tuple[tuple[int, ...], int] | None:
    """Canonical integer equation (normal, offset) of the hyperplane through
    d integer points in R^d, or None if they are affinely dependent.

    Canonical: gcd of all entries 1, first nonzero normal entry positive.
    """
    d = len(points[0])
    p0 = points[0]
    rows = [[a - b for a, b in zip(q, p0)] for q in points[1:]]
    normal = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        normal.append((-1) ** j * bareiss_det(minor))
    if not any(normal):
        return None
    offset = sum(a * b for a, b in zip(normal, p0))
    g = 0
    for v in normal:
        g = gcd(g, v)
    g = gcd(g, offset)
    normal = [v // g for v in normal]
    offset //= g
    lead = next(v for v in normal if v)
    if lead < 0:
        normal = [-v for v in normal]
        offset = -offset
    return tuple(normal), offset


def on_hyperplane(p, plane) -> bool:
    normal, offset = plane
    return sum(a * b for a, b in zip(normal, p)) == offset


@dataclass(frozen=True)
class IncidenceCertificate:
    max_count: int
    witness: tuple          # sorted indices of the points on the best hyperplane
    spanning: tuple | None  # d indices spanning it
    normal: tuple | None    # integer normal in the set's common-denominator frame
    offset: int | None
    hyperplanes_checked: int = 0

    def to_dict(self) -> dict:
        return {"max_count": self.max_count, "witness": list(self.witness),
                "spanning": list(self.spanning) if self.spanning else None,
                "hyperplanes_checked": self.hyperplanes_checked}


def max_hyperplane_incidence(P: PointSet) -> IncidenceCertificate:
    """Largest number of points of P on one hyperplane.

    Every hyperplane holding at least d points of P is spanned by d of them,
    so enumerating affinely independent d-subsets is exhaustive.
    """
    d = P.dim
    n = len(P)
    if n == 0:
        raise ValueError("empty point set")
    if n < d:
        # fewer than d points always share a hyperplane
        return IncidenceCertificate(n, tuple(range(n)), None, None, None, 0)
    pts = P.integer_coords()
    seen = set()
    best = None
    for idx in combinations(range(n), d):
        plane = hyperplane_through([pts[i] for i in idx])
        if plane is None or plane in seen:
            continue
        seen.add(plane)
        on = tuple(k for k in range(n) if on_hyperplane(pts[k], plane))
        if best is None or len(on) > len(best[0]):
            best = (on, idx, plane)
    if best is None:
        # the whole set lies in a flat of dimension < d-1
        return IncidenceCertificate(n, tuple(range(n)), None, None, None, 0)
    on, idx, plane = best
    return IncidenceCertificate(len(on), on, idx, plane[0], plane[1], len(seen))


# --------------------------------------------------------------------------
# general-position decomposition

@dataclass
class DecompositionReport:
    S: tuple
    assignment: dict                 # point index -> d-subset of S (indices)
    per_hyperplane_counts: dict      # d-subset of S -> incidences outside S
    n_points: int
    dim: int
    l: int | None = None
    bound: int | None = None
    bound_holds: bool | None = None
    max_count_outside: int = 0

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "assignment": {str(k): list(v) for k, v in sorted(self.assignment.items())},
            "max_count_outside": self.max_count_outside,
            "n_points": self.n_points,
            "l": self.l,
            "bound": self.bound,
            "bound_holds": self.bound_holds,
        }


def _extends_general_position(pts, S, p, d) -> bool:
    if len(S) < d:
        # below d+1 points general position means affine independence
        rows = [[a - b for a, b in zip(pts[q], pts[p])] for q in S]
        return integer_rank(rows) == len(rows)
    for T in combinations(S, d):
        if orient_int([pts[i] for i in T] + [pts[p]]) == 0:
            return False
    return True


def general_position_decomposition(X: PointSet, l: int | None = None) -> DecompositionReport:
    """Greedy inclusion-maximal general-position subset S and the
    hyperplanes through d points of S that cover the rest of X.

    With ``l`` given, checks |X| <= (l-d-1) C(|S|, d) + |S|.
    """
    d = X.dim
    n = len(X)
    if n < d + 1:
        raise ValueError("decomposition needs at least d+1 points")
    pts = X.integer_coords()
    S: list[int] = []
    for p in range(n):
        if _extends_general_position(pts, S, p, d):
            S.append(p)
    if len(S) < d:
        raise ValueError("point set lies in a flat of dimension < d-1")
    S_set = set(S)
    rest = [p for p in range(n) if p not in S_set]
    planes = {}
    for T in combinations(S, d):
        plane = hyperplane_through([pts[i] for i in T])
        if plane is None:
            raise AssertionError(f"S is not in general position at {T}")
        planes[T] = plane
    assignment = {}
    counts = {}
    for T, plane in planes.items():
        on = [p for p in rest if on_hyperplane(pts[p], plane)]
        counts[T] = len(on)
        for p in on:
            assignment.setdefault(p, T)
    missing = [p for p in rest if p not in assignment]
    if missing:
        raise AssertionError(f"points {missing} lie on no hyperplane spanned by S")
    rep = DecompositionReport(tuple(S), assignment, counts, n, d)
    rep.max_count_outside = max(counts.values(), default=0)
    if l is not None:
        rep.l = l
        rep.bound = (l - d - 1) * comb(len(S), d) + len(S)
        rep.bound_holds = n <= rep.bound
    return rep
