"""
Checking the argument on concrete instances
===========================================

Cluster replacement keeps mc unchanged, consecutive levels obey the
projection recurrence, projected witnesses lift to convex sets, and the
greedy decomposition respects its counting bound.
"""
from eslab import (ConstructionParams, PointSet, build_Y, check_lemma4, check_recurrence,
                   check_valtr_lift, general_position_decomposition, is_general_position)
from eslab.kernel import make_rng

Y = build_Y(ConstructionParams(d=2, l=5, i=3, seed=0))
print(check_lemma4(Y).to_dict()["values"])

prev, nxt = (build_Y(ConstructionParams(d=3, l=5, i=k, seed=0)) for k in (2, 3))
rep = check_recurrence(prev, nxt)
print(rep.status, rep.values)

# a random 12-point set in R^3, redrawn until it is in general position
rng = make_rng(5)
while True:
    cloud = PointSet.of(sorted({tuple(int(c) for c in rng.integers(-99, 100, 3)) for _ in range(12)}))
    if is_general_position(cloud):
        break
print(check_valtr_lift(cloud, seed=0, compare_mc=True).values)

grid = PointSet.of([(x, y) for x in range(3) for y in range(3)])
dec = general_position_decomposition(grid, l=4)
print("S =", dec.S, "assignment", dec.assignment, "bound", dec.bound)
