"""Maximum convex-position subset, mc(P).

Two exact solvers share one contract:

* the plane uses an O(n^4) worst-case dynamic program over convex chains
  anchored at their lowest vertex (strict turns only);
* general dimension uses branch and bound over subsets that avoid every
  *forbidden* hyperedge: a degenerate (d+1)-subset, or a (d+2)-subset in
  general position that is not in convex position.  By Caratheodory a set in
  general position is in convex position iff all its (d+2)-subsets are, so
  avoiding those hyperedges is exactly the convex-position condition.

Sets with no convex (d+1)-subset get the size of their largest affinely
independent subset (a simplex of lower dimension) and ``trivial=True``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from .kernel import PointSet, integer_rank, orient_int
from .verifiers import is_convex_position

DEFAULT_BUDGET = 10**7
ORACLE_CAP = 14


def default_budget() -> int:
    env = os.environ.get("ESLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class McResult:
    size: int
    witness: tuple
    node_count: int = 0
    status: str = "optimal"   # or "unknown" when the node budget ran out
    trivial: bool = False
    method: str = ""

    @property
    def conclusive(self) -> bool:
        return self.status == "optimal"

    def to_dict(self) -> dict:
        return {"size": self.size, "witness": list(self.witness), "node_count": self.node_count,
                "status": self.status, "trivial": self.trivial, "method": self.method}


class BudgetExceeded(Exception):
    pass


# --------------------------------------------------------------------------
# forbidden hyperedges

def radon_is_convex(signs: list[int]) -> bool:
    """Convexity of d+2 points in general position from the orientations of
    the (d+1)-subsets omitting each point in turn (sorted order).

    The affine dependence has coefficients (-1)^j * signs[j]; the points are
    in convex position iff neither side of that Radon partition is a single
    point.
    """
    lam = [s if j % 2 == 0 else -s for j, s in enumerate(signs)]
    pos = sum(1 for v in lam if v > 0)
    return pos >= 2 and len(lam) - pos >= 2


def forbidden_edges(pts: list[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    n = len(pts)
    orient = {}
    edges = []
    for idx in combinations(range(n), d + 1):
        s = orient_int([pts[i] for i in idx])
        orient[idx] = s
        if s == 0:
            edges.append(idx)
    if n >= d + 2:
        for idx in combinations(range(n), d + 2):
            signs = []
            for j in range(d + 2):
                s = orient[idx[:j] + idx[j + 1:]]
                if s == 0:
                    break
                signs.append(s)
            else:
                if not radon_is_convex(signs):
                    edges.append(idx)
    return edges


def _pair_table(n: int, edges) -> dict:
    table: dict = {}
    for e in edges:
        full = 0
        for v in e:
            full |= 1 << v
        for q, r in combinations(e, 2):
            table.setdefault((q, r), []).append(full & ~(1 << q) & ~(1 << r))
    return table


def _branch_and_bound(n: int, edges, budget: int):
    table = _pair_table(n, edges)
    best: list[int] = []
    best_len = 0
    nodes = 0

    def compatible(mask, q, r):
        for m in table.get((q, r) if q < r else (r, q), ()):
            if m & ~mask == 0:
                return False
        return True

    def rec(chosen, mask, cand):
        nonlocal best, best_len, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded
        if len(chosen) > best_len:
            best, best_len = list(chosen), len(chosen)
        for idx, q in enumerate(cand):
            if len(chosen) + len(cand) - idx <= best_len:
                break
            new_mask = mask | (1 << q)
            new_cand = [r for r in cand[idx + 1:] if compatible(new_mask, q, r)]
            chosen.append(q)
            rec(chosen, new_mask, new_cand)
            chosen.pop()

    try:
        rec([], 0, list(range(n)))
        status = "optimal"
    except BudgetExceeded:
        status = "unknown"
    return tuple(best), nodes, status


# --------------------------------------------------------------------------
# planar dynamic program

def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _mc_plane(pts: list[tuple[int, int]]):
    n = len(pts)
    best_size, best_witness = 0, ()
    steps = 0
    for a in range(n):
        pa = pts[a]
        above = [j for j in range(n) if (pts[j][1], pts[j][0]) > (pa[1], pa[0])]

        def by_angle(i, j):
            c = _cross(pa, pts[i], pts[j])
            if c:
                return -1 if c > 0 else 1
            return i - j

        cand = sorted(above, key=cmp_to_key(by_angle))
        P = [pts[c] for c in cand]
        m = len(cand)
        f = [[0] * m for _ in range(m)]
        par = [[-1] * m for _ in range(m)]
        for k in range(m):
            for j in range(k):
                if _cross(pa, P[j], P[k]) <= 0:
                    continue
                val, arg = 3, -1
                for i in range(j):
                    fij = f[i][j]
                    if fij >= val and _cross(P[i], P[j], P[k]) > 0:
                        val, arg = fij + 1, i
                    steps += 1
                f[j][k], par[j][k] = val, arg
                if val > best_size and _cross(P[j], P[k], pa) > 0:
                    chain = [k, j]
                    i, jj = arg, j
                    while i >= 0:
                        chain.append(i)
                        i, jj = par[i][jj], i
                    best_size = val
                    best_witness = tuple(sorted([a] + [cand[c] for c in chain]))
    return best_size, best_witness, steps


# --------------------------------------------------------------------------

def _trivial(P: PointSet, nodes: int = 0, method: str = "") -> McResult:
    """No convex (d+1)-subset: the largest affinely independent subset is the
    best there is, found greedily in index order."""
    pts = P.integer_coords()
    chosen: list[int] = []
    for q in range(len(pts)):
        if not chosen:
            chosen.append(q)
            continue
        rows = [[a - b for a, b in zip(pts[c], pts[chosen[0]])] for c in chosen[1:] + [q]]
        if integer_rank(rows) == len(rows):
            chosen.append(q)
    return McResult(len(chosen), tuple(chosen), nodes, "optimal", True, method)


def mc(P: PointSet, budget: int | None = None, method: str = "auto") -> McResult:
    """Exact mc(P).  ``method`` is "auto", "dp" (planar only) or "bnb"."""
    d = P.dim
    n = len(P)
    if budget is None:
        budget = default_budget()
    if n <= d:
        return _trivial(P, method="trivial")
    pts = P.integer_coords()
    if method == "auto":
        method = "dp" if d == 2 else "bnb"
    if method == "dp":
        if d != 2:
            raise ValueError("the dynamic program is planar only")
        size, witness, steps = _mc_plane(pts)
        if size < 3:
            return _trivial(P, steps, "dp")
        return McResult(size, witness, steps, "optimal", False, "dp")
    if method != "bnb":
        raise ValueError(f"unknown method {method!r}")
    edges = forbidden_edges(pts, d)
    witness, nodes, status = _branch_and_bound(n, edges, budget)
    if len(witness) < d + 1 and status == "optimal":
        return _trivial(P, nodes, "bnb")
    return McResult(len(witness), witness, nodes, status, len(witness) < d + 1, "bnb")


def mc_bruteforce_oracle(P: PointSet) -> McResult:
    """Try every subset from largest to smallest; first convex one wins."""
    d = P.dim
    n = len(P)
    if n > ORACLE_CAP:
        raise ValueError(f"brute-force oracle is capped at {ORACLE_CAP} points")
    checked = 0
    for k in range(n, d, -1):
        for idx in combinations(range(n), k):
            checked += 1
            if is_convex_position(P.subset(idx)):
                return McResult(k, idx, checked, "optimal", False, "bruteforce")
    return _trivial(P, checked, "bruteforce")
