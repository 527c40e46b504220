"""
Veldkamp lines of the near hexagon L3 x GQ(2,2): geometry, the F2 space of
hyperplanes, the automorphism group S6 x S3 and the classification of
Veldkamp lines into orbits.
"""

from .geometry import (
    QuadLabel, build_gq, build_near_hexagon, classify_gq_subset,
    is_geometric_hyperplane, point_order, triad_centers,
)
from .veldkamp import (
    Hyperplane, Quadruple, SetPartition, ZeroSum, enumerate_hyperplanes,
    enumerate_veldkamp_lines, hyperplane_from_quadruple, hyperplane_type,
    ovoid_basis, partition_sum, quadruple_from_hyperplane, veldkamp_sum,
)
from .group import (
    GroupElement, act_on_hyperplane, act_on_line, build_group,
    conjugacy_class_reps, stabilizer_order,
)
from .classify import (
    CoreProfile, burnside_count, core_of_line, core_profile, discriminate,
    enumerate_orbits, fix_decomposition, profile_collisions,
)

__all__ = [
    "QuadLabel",
    "build_gq",
    "build_near_hexagon",
    "classify_gq_subset",
    "is_geometric_hyperplane",
    "point_order",
    "triad_centers",
    "Hyperplane",
    "Quadruple",
    "SetPartition",
    "ZeroSum",
    "enumerate_hyperplanes",
    "enumerate_veldkamp_lines",
    "hyperplane_from_quadruple",
    "hyperplane_type",
    "ovoid_basis",
    "partition_sum",
    "quadruple_from_hyperplane",
    "veldkamp_sum",
    "GroupElement",
    "act_on_hyperplane",
    "act_on_line",
    "build_group",
    "conjugacy_class_reps",
    "stabilizer_order",
    "CoreProfile",
    "burnside_count",
    "core_of_line",
    "core_profile",
    "discriminate",
    "enumerate_orbits",
    "fix_decomposition",
    "profile_collisions",
]

__version__ = "0.1.0"
