"""Karolyi-Valtr doubling sets X_i and their clustered refinements Y_i.

All randomness comes from ``seed`` through per-level substreams, so the
displacement vectors used to double X_{i-1} into X_i are exactly the ones
used to grow the clusters of Y_i; the cluster endpoints of Y_i are X_i
before its final jitter.

"Sufficiently small" epsilons are found by certification: generate, verify
exactly, and on failure square every epsilon and start over.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple

from .kernel import PointSet, integer_rank, make_rng, same_order_type
from .verifiers import is_general_position, max_hyperplane_incidence

log = logging.getLogger(__name__)

BASE_BITS = 10
RETRIES = 3
RATIO_BITS = 20
JITTER_BITS = 16
INCIDENCE_CAP = 64      # exhaustive incidence certification up to this many points
ORDER_TYPE_SAMPLES = 20

_V_STREAM = 1
_JITTER_STREAM = 2
_REP_STREAM = 3


class RefinementError(RuntimeError):
    """Certification kept failing after the retry budget."""


def default_schedule(depth: int, base_bits: int = BASE_BITS) -> tuple:
    return tuple(Fraction(1, 2 ** (base_bits * (k + 1))) for k in range(depth))


@dataclass(frozen=True)
class ConstructionParams:
    d: int
    i: int
    l: int | None = None
    seed: int = 0
    epsilon_schedule: tuple | None = None

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.i < 0:
            raise ValueError("depth i must be non-negative")
        if self.l is not None and self.l <= self.d:
            raise ValueError("l must exceed d")
        sched = self.epsilon_schedule
        if sched is None:
            sched = default_schedule(self.i)
        sched = tuple(Fraction(e) for e in sched)
        if len(sched) < self.i:
            raise ValueError(f"epsilon schedule needs {self.i} entries")
        if any(not (0 < e < 1) for e in sched):
            raise ValueError("every epsilon must lie in (0, 1)")
        if any(b >= a for a, b in zip(sched, sched[1:])):
            raise ValueError("epsilon schedule must be strictly decreasing")
        object.__setattr__(self, "epsilon_schedule", sched)

    def refined(self) -> "ConstructionParams":
        return replace(self, epsilon_schedule=tuple(e * e for e in self.epsilon_schedule))

    def to_dict(self) -> dict:
        return {"d": self.d, "i": self.i, "l": self.l, "seed": self.seed,
                "epsilon_schedule": [str(e) for e in self.epsilon_schedule]}


def _dyadic(rng, bits: int) -> Fraction:
    """Random dyadic rational in the open interval (1/2, 1)."""
    u = int(rng.integers(1, 2 ** bits))
    return Fraction(2 ** bits + u, 2 ** (bits + 1))


def displacement(rng, d: int, eps: Fraction) -> tuple:
    """v with 0 < v^1 < ... < v^d < eps and v^f < eps * v^(f+1).

    v^f = r_f (eps/2)^(d-f+1) with r_f in (1/2, 1); consecutive ratios are
    below (r_f / r_(f+1)) eps/2 < eps.
    """
    half = eps / 2
    return tuple(_dyadic(rng, RATIO_BITS) * half ** (d - f + 1) for f in range(1, d + 1))


def check_displacement(v, eps) -> bool:
    if not 0 < v[0]:
        return False
    if not all(a < b for a, b in zip(v, v[1:])) or not v[-1] < eps:
        return False
    return all(a < eps * b for a, b in zip(v, v[1:]))


def _level_vectors(params: ConstructionParams, level: int, n_points: int) -> list:
    rng = make_rng(params.seed, level, _V_STREAM)
    eps = params.epsilon_schedule[level]
    return [displacement(rng, params.d, eps) for _ in range(n_points)]


def _jitter(params: ConstructionParams, level: int, points: list) -> list:
    rng = make_rng(params.seed, level, _JITTER_STREAM)
    scale = params.epsilon_schedule[level] ** (params.d + 2)
    out = []
    for p in points:
        shift = [int(rng.integers(-(2 ** JITTER_BITS) + 1, 2 ** JITTER_BITS)) for _ in p]
        out.append(tuple(c + Fraction(s, 2 ** JITTER_BITS) * scale for c, s in zip(p, shift)))
    return out


def _double(points, vectors) -> list:
    out = []
    for x, v in zip(points, vectors):
        out.append(tuple(a - b for a, b in zip(x, v)))
        out.append(tuple(a + b for a, b in zip(x, v)))
    return out


def _generate_kv(params: ConstructionParams, depth: int) -> list:
    pts = [tuple(Fraction(0) for _ in range(params.d))]
    for level in range(depth):
        vecs = _level_vectors(params, level, len(pts))
        pts = _jitter(params, level, _double(pts, vecs))
    return pts


def _certified(params, attempt_fn):
    p = params
    for attempt in range(RETRIES + 1):
        result, ok, why = attempt_fn(p)
        if ok:
            return result, p, attempt
        log.info("certification failed (%s); refining epsilons", why)
        p = p.refined()
    raise RefinementError(f"certification failed after {RETRIES} refinements: {why}")


def build_kv(params: ConstructionParams) -> PointSet:
    """X_i: 2^i points from the origin by seeded doubling, certified to be in
    general position."""
    return build_kv_certified(params)[0]


def build_kv_certified(params: ConstructionParams):
    """Like :func:`build_kv` but also returns the params actually used and a
    certification summary."""
    def attempt(p):
        P = PointSet(p.d, tuple(_generate_kv(p, p.i)))
        gp = is_general_position(P)
        return P, bool(gp), f"degenerate subset {gp.witness}"

    P, used, attempts = _certified(params, attempt)
    cert = {"general_position": True, "refinements": attempts}
    return P, used, cert


# --------------------------------------------------------------------------
# clusters

def cluster_size(d: int, l: int) -> tuple[int, bool]:
    """Points per cluster and whether the centre is one of them."""
    if d < 2 or l <= d:
        raise ValueError("need l > d >= 2")
    t = 2 * (l - 1) // d if d % 2 == 0 else 2 * (l - 2) // (d - 1)
    return t, t % 2 == 1


@dataclass(frozen=True)
class ClusterSpec:
    center: tuple
    v: tuple
    size: int
    includes_center: bool
    eps: Fraction | None = None


def build_cluster(spec: ClusterSpec) -> PointSet:
    """{x +- v/k : k = 1 .. t//2}, plus x itself when t is odd.

    Order: x - v, x + v, x - v/2, x + v/2, ..., then x.
    """
    if spec.size < 1:
        raise ValueError("cluster size must be positive")
    if spec.includes_center != (spec.size % 2 == 1):
        raise ValueError("a cluster includes its centre exactly when its size is odd")
    if spec.eps is not None and not check_displacement(spec.v, spec.eps):
        raise ValueError("displacement vector violates its ordering constraints")
    if not any(spec.v):
        raise ValueError("displacement vector must be nonzero")
    x, v = spec.center, spec.v
    pts = []
    for k in range(1, spec.size // 2 + 1):
        pts.append(tuple(a - b / k for a, b in zip(x, v)))
        pts.append(tuple(a + b / k for a, b in zip(x, v)))
    if spec.includes_center:
        pts.append(tuple(x))
    return PointSet(len(x), tuple(pts))


@dataclass
class LabeledPointSet:
    base: PointSet
    cluster_of: tuple
    level: int
    params: ConstructionParams
    centers: PointSet                 # X_{i-1}
    vectors: tuple                    # v(x) per cluster
    cluster_size: int
    certification: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return self.base.dim

    def clusters(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(len(self.centers))]
        for idx, c in enumerate(self.cluster_of):
            out[c].append(idx)
        return out

    def endpoint_indices(self) -> list[int]:
        """Indices of x - v(x), x + v(x) for every cluster, in X_i order."""
        return [idx for cl in self.clusters() for idx in cl[:2]]

    def endpoints(self) -> PointSet:
        """X_i as a subset of Y_i (the k = 1 points of every cluster)."""
        return self.base.subset(self.endpoint_indices())

    def metadata(self) -> dict:
        return {"params": self.params.to_dict(), "level": self.level,
                "cluster_size": self.cluster_size, "cluster_of": list(self.cluster_of),
                "certification": self.certification}


def _lines_skew(centers, vectors, d) -> tuple[bool, tuple | None]:
    ints = PointSet(d, tuple(centers)).integer_coords() if centers else []
    vec_set = PointSet(d, tuple(vectors), allow_duplicates=True).integer_coords()
    for a in range(len(centers)):
        for b in range(a + 1, len(centers)):
            if d == 2:
                rank = integer_rank([vec_set[a], vec_set[b]])
                ok = rank == 2
            else:
                diff = [p - q for p, q in zip(ints[a], ints[b])]
                ok = integer_rank([diff, vec_set[a], vec_set[b]]) == 3
            if not ok:
                return False, (a, b)
    return True, None


def _representative_choices(n_clusters: int, t: int, seed: int, samples: int):
    yield [0] * n_clusters
    yield [t - 1] * n_clusters
    rng = make_rng(seed, _REP_STREAM)
    for _ in range(samples):
        yield [int(rng.integers(0, t)) for _ in range(n_clusters)]


def _generate_Y(p: ConstructionParams) -> LabeledPointSet:
    t, center = cluster_size(p.d, p.l)
    X = _generate_kv(p, p.i - 1)
    vecs = _level_vectors(p, p.i - 1, len(X))
    eps = p.epsilon_schedule[p.i - 1]
    pts, owner = [], []
    for c, (x, v) in enumerate(zip(X, vecs)):
        cl = build_cluster(ClusterSpec(x, v, t, center, eps))
        pts.extend(cl.points)
        owner.extend([c] * len(cl))
    return LabeledPointSet(PointSet(p.d, tuple(pts)), tuple(owner), p.i, p,
                           PointSet(p.d, tuple(X)), tuple(vecs), t)


def certify_Y(Y: LabeledPointSet, samples: int = ORDER_TYPE_SAMPLES) -> tuple[bool, dict]:
    p = Y.params
    cert: dict = {}
    skew, pair = _lines_skew(list(Y.centers.points), list(Y.vectors), p.d)
    cert["cluster_lines_skew"] = skew
    if not skew:
        cert["skew_witness"] = list(pair)
        return False, cert
    clusters = Y.clusters()
    ok_ot = True
    n_checked = 0
    if len(Y.centers) >= p.d + 1:
        for choice in _representative_choices(len(clusters), Y.cluster_size, p.seed, samples):
            reps = Y.base.subset([cl[k] for cl, k in zip(clusters, choice)])
            n_checked += 1
            if not same_order_type(reps, Y.centers):
                ok_ot = False
                break
    cert["representative_order_type"] = ok_ot
    cert["representative_samples"] = n_checked
    if not ok_ot:
        return False, cert
    if len(Y.base) <= INCIDENCE_CAP:
        inc = max_hyperplane_incidence(Y.base)
        cert["max_hyperplane_incidence"] = inc.max_count
        cert["incidence_ok"] = inc.max_count <= p.l - 1
        if not cert["incidence_ok"]:
            return False, cert
    else:
        cert["max_hyperplane_incidence"] = None
        cert["incidence_ok"] = None
    return True, cert


def build_Y(params: ConstructionParams) -> LabeledPointSet:
    """Y_i: every point x of X_{i-1} replaced by its cluster P_x."""
    if params.l is None:
        raise ValueError("build_Y needs l")
    if params.i < 1:
        raise ValueError("build_Y needs i >= 1")

    def attempt(p):
        # the centres must themselves be a certified X_{i-1}
        X = PointSet(p.d, tuple(_generate_kv(p, p.i - 1)))
        if not is_general_position(X):
            return None, False, "X_{i-1} not in general position"
        Y = _generate_Y(p)
        ok, cert = certify_Y(Y)
        Y.certification = cert
        return Y, ok, str(cert)

    Y, used, attempts = _certified(params, attempt)
    Y.certification["refinements"] = attempts
    return Y


class LowerBoundCount(NamedTuple):
    count: int
    bound: Fraction


def kv_lower_bound_count(d: int, l: int, i: int) -> LowerBoundCount:
    """|Y_i| = t(d,l) 2^(i-1) and the lower-bound expression it dominates,
    (l - d + 2 floor(d/2) - 1) / (2 floor(d/2)) * 2^i."""
    if i < 1:
        raise ValueError("i must be at least 1")
    t, _ = cluster_size(d, l)
    count = t * 2 ** (i - 1)
    h = d // 2
    bound = Fraction(l - d + 2 * h - 1, 2 * h) * 2 ** i
    if count < bound:
        raise AssertionError(f"|Y_i| = {count} below {bound}")
    return LowerBoundCount(count, bound)
