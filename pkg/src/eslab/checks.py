"""Instance-level checks of the recurrence, the cluster lemma and the
projection-lifting argument.  Each returns a :class:`CheckReport`."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .constructions import LabeledPointSet
from .kernel import PointSet, generic_linear_map, project_drop_last
from .mc import McResult, mc
from .verifiers import is_convex_position, is_general_position

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class CheckReport:
    check: str
    status: str
    values: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    instance: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"check": self.check, "instance": self.instance, "params": self.params,
                "values": self.values, "witnesses": self.witnesses, "status": self.status}


def _points(obj) -> PointSet:
    return obj.base if isinstance(obj, LabeledPointSet) else obj


def _params(obj) -> dict:
    return obj.params.to_dict() if isinstance(obj, LabeledPointSet) else {}


def check_recurrence(prev, nxt, budget: int | None = None) -> CheckReport:
    """mc(next) <= mc(prev) + mc(prev projected to x_d = 0)."""
    P, Q = _points(prev), _points(nxt)
    if P.dim != Q.dim:
        raise ValueError("levels have different dimensions")
    results: dict[str, McResult] = {
        "mc_next": mc(Q, budget),
        "mc_prev": mc(P, budget),
        "mc_prev_projected": mc(project_drop_last(P), budget),
    }
    values = {k: r.size for k, r in results.items()}
    values["rhs"] = values["mc_prev"] + values["mc_prev_projected"]
    if not all(r.conclusive for r in results.values()):
        status = INCONCLUSIVE
    else:
        status = PASS if values["mc_next"] <= values["rhs"] else FAIL
    return CheckReport("recurrence", status, values,
                       {k: list(r.witness) for k, r in results.items()},
                       {"prev": _params(prev), "next": _params(nxt)})


def check_lemma4(Y: LabeledPointSet, X: PointSet | None = None,
                 budget: int | None = None) -> CheckReport:
    """mc(Y_i) = mc(X_i), with X_i the cluster endpoints unless given.

    Also checks on the optimal witness C of Y_i that no cluster contributes
    more than two points, and that replacing C by the endpoint pairs of the
    clusters it meets gives a convex set C' with |C| <= |C'|.
    """
    if X is None:
        X = Y.endpoints()
    rY, rX = mc(Y.base, budget), mc(X, budget)
    per_cluster = Counter(Y.cluster_of[i] for i in rY.witness)
    max_per_cluster = max(per_cluster.values(), default=0)
    clusters = Y.clusters()
    c_prime = sorted(idx for c in per_cluster for idx in clusters[c][:2])
    values = {"mc_Y": rY.size, "mc_X": rX.size, "max_per_cluster": max_per_cluster,
              "c_prime_size": len(c_prime)}
    if rY.trivial:
        values["c_prime_convex"] = None
    else:
        values["c_prime_convex"] = bool(is_convex_position(Y.base.subset(c_prime)))
    if not (rY.conclusive and rX.conclusive):
        status = INCONCLUSIVE
    else:
        ok = rY.size == rX.size and (rY.trivial or max_per_cluster <= 2)
        status = PASS if ok else FAIL
    return CheckReport("lemma4", status, values,
                       {"mc_Y": list(rY.witness), "mc_X": list(rX.witness), "c_prime": c_prime},
                       _params(Y))


def check_valtr_lift(X: PointSet, seed: int = 0, max_resamples: int = 5,
                     compare_mc: bool = False, budget: int | None = None) -> CheckReport:
    """Project generically to one dimension lower, take an optimal convex
    subset of the projection and check that its preimage is convex."""
    if X.dim < 3:
        raise ValueError("the lifting check needs d >= 3")
    if not is_general_position(X):
        raise ValueError("X must be in general position")
    for attempt in range(max_resamples):
        s = seed + attempt
        proj = project_drop_last(generic_linear_map(X, s))
        if proj.has_duplicates or not is_general_position(proj):
            continue
        Z = mc(proj, budget)
        lift = X.subset(Z.witness)
        values = {"mc_projection": Z.size, "lift_size": len(lift), "seed_used": s,
                  "resamples": attempt}
        if len(lift) <= X.dim:
            # at most d points in general position span a simplex
            lift_ok = True
            values["trivial"] = True
        else:
            lift_ok = bool(is_convex_position(lift))
        values["lift_convex"] = lift_ok
        if compare_mc:
            values["mc_X"] = mc(X, budget).size
        if not Z.conclusive:
            status = INCONCLUSIVE
        else:
            status = PASS if lift_ok else FAIL
        return CheckReport("valtr_lift", status, values, {"Z": list(Z.witness)},
                           {"seed": seed})
    return CheckReport("valtr_lift", FAIL, {"resamples": max_resamples},
                       params={"seed": seed, "reason": "no generic projection found"})
