"""Exact geometry for Erdos-Szekeres problems with hyperplane incidence
constraints: predicates, recursive constructions, a certified largest-convex-
subset solver and exact bound evaluators."""
from .checks import CheckReport, check_lemma4, check_recurrence, check_valtr_lift
from .constructions import (ClusterSpec, ConstructionParams, LabeledPointSet, RefinementError,
                            build_cluster, build_kv, build_Y, cluster_size, kv_lower_bound_count)
from .kernel import (PointSet, affine_dimension, generic_linear_map, orientation,
                     project_drop_last, same_order_type)
from .mc import McResult, mc, mc_bruteforce_oracle
from .pointio import load_pointset, save_pointset
from .verifiers import (general_position_decomposition, is_convex_position,
                        is_general_position, max_hyperplane_incidence)

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "ClusterSpec", "ConstructionParams", "LabeledPointSet", "McResult",
    "PointSet", "RefinementError", "affine_dimension", "build_Y", "build_cluster", "build_kv",
    "check_lemma4", "check_recurrence", "check_valtr_lift", "cluster_size",
    "general_position_decomposition", "generic_linear_map", "is_convex_position",
    "is_general_position", "kv_lower_bound_count", "load_pointset", "max_hyperplane_incidence",
    "mc", "mc_bruteforce_oracle", "orientation", "project_drop_last", "same_order_type",
    "save_pointset",
]
