"""
Doubling constructions
======================

X_i doubles every point along a tiny displacement; Y_i swaps each point for
a short collinear cluster.  Both are certified exactly after generation.
"""
from eslab import (ConstructionParams, build_kv, build_Y, cluster_size, is_general_position,
                   kv_lower_bound_count, max_hyperplane_incidence)

for i in range(5):
    X = build_kv(ConstructionParams(d=3, i=i, seed=1))
    print(f"|X_{i}| = {len(X)}, general position: {bool(is_general_position(X))}")

# Cluster sizes depend on the parity of d.
for d, l in [(2, 4), (2, 5), (3, 4), (3, 5)]:
    print(f"d={d} l={l}: cluster size and centre flag {cluster_size(d, l)}")

# Y_3 in the plane with at most three points on any line.
Y = build_Y(ConstructionParams(d=2, l=4, i=3, seed=7))
print("|Y_3| =", len(Y), "clusters:", Y.clusters())
print("certification:", Y.certification)
cert = max_hyperplane_incidence(Y.base)
print("max points on a line:", cert.max_count, "witness", cert.witness)

print("count versus the lower-bound expression:", kv_lower_bound_count(2, 4, 3))
