"""
Exact predicates
================

Coordinates are rationals, so orientation tests never suffer round-off.
"""
from fractions import Fraction

from eslab import PointSet, affine_dimension, orientation, same_order_type
from eslab.kernel import project_drop_last

# Counter-clockwise, collinear, clockwise.
print(orientation([(0, 0), (1, 0), (0, 1)]))
print(orientation([(0, 0), (1, 1), (2, 2)]))
print(orientation([(0, 0), (0, 1), (1, 0)]))

# A triple that floating point calls collinear but exact arithmetic does not.
tiny = Fraction(1, 2 ** 80)
print("nearly collinear:", orientation([(0, 0), (1, 1), (2, 2 + tiny)]))

# Affine dimension of a cluster x + {-v, v, 0}.
cluster = PointSet.of([(Fraction(9, 10), Fraction(8, 5)), (Fraction(11, 10), Fraction(12, 5)), (1, 2)])
print("cluster dimension:", affine_dimension(cluster))

# Order types survive translation and flip under reflection.
P = PointSet.of([(0, 0), (5, 1), (2, 7), (-3, 4)])
shifted = PointSet.of([(x + 10, y - 3) for x, y in P])
mirrored = PointSet.of([(-x, y) for x, y in P])
print("translated:", bool(same_order_type(P, shifted)))
res = same_order_type(P, mirrored)
print("mirrored:", bool(res), "first differing triple", res.witness, "signs", res.signs)

# Projection drops the last coordinate and flags collisions.
print(project_drop_last(PointSet.of([(1, 2, 3), (1, 2, 4)])).has_duplicates)
