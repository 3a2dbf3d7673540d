"""
Largest subset in convex position
=================================

The planar dynamic program, the general branch and bound and the brute-force
oracle agree; the budget turns an overlong search into an explicit "unknown".
"""
from eslab import ConstructionParams, PointSet, build_kv, is_convex_position, mc, mc_bruteforce_oracle
from eslab.kernel import make_rng

square_and_centre = PointSet.of([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
print(mc(square_and_centre), mc_bruteforce_oracle(square_and_centre).size)

rng = make_rng(3)
P = PointSet.of(sorted({(int(rng.integers(0, 20)), int(rng.integers(0, 20))) for _ in range(12)}))
dp, bnb, oracle = mc(P, method="dp"), mc(P, method="bnb"), mc_bruteforce_oracle(P)
print("dp / bnb / oracle:", dp.size, bnb.size, oracle.size)
print("witness convex:", bool(is_convex_position(P.subset(bnb.witness))))

# Doubling keeps convex subsets small: mc(X_i) grows linearly in the plane.
for i in range(1, 5):
    print(f"mc(X_{i}) in the plane = {mc(build_kv(ConstructionParams(d=2, i=i))).size}")

X = build_kv(ConstructionParams(d=3, i=4))
print("tiny budget:", mc(X, budget=10).status, "full:", mc(X).size)
