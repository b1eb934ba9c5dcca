"""Benes-family interconnection networks, their distance descriptors and broadcasting."""
from .broadcast import BroadcastTrace, broadcast_from, broadcast_sweep, simulate_fdf
from .closedforms import closed_forms, per_class_closed_forms, cluster_wiener
from .descriptors import DESCRIPTOR_NAMES, DescriptorSet, all_descriptors, wiener
from .generators import (
    ClusterFamilyParams,
    NodeLabel,
    make_augmented_benes,
    make_benes,
    make_butterfly,
    make_cluster_family,
    make_network,
)
from .netparams import NetworkParams, comparison_sweep, formula_params, measure_params
from .swgraph import (
    DistanceOracle,
    GraphNotConnectedError,
    StrengthWeightedGraph,
    all_pairs_distances,
)
from .thetacuts import cut_method_descriptors, quotient, theta_star_classes

__version__ = "0.1.0"

__all__ = [
    "BroadcastTrace",
    "broadcast_from",
    "broadcast_sweep",
    "simulate_fdf",
    "closed_forms",
    "per_class_closed_forms",
    "cluster_wiener",
    "DESCRIPTOR_NAMES",
    "DescriptorSet",
    "all_descriptors",
    "wiener",
    "ClusterFamilyParams",
    "NodeLabel",
    "make_augmented_benes",
    "make_benes",
    "make_butterfly",
    "make_cluster_family",
    "make_network",
    "NetworkParams",
    "comparison_sweep",
    "formula_params",
    "measure_params",
    "DistanceOracle",
    "GraphNotConnectedError",
    "StrengthWeightedGraph",
    "all_pairs_distances",
    "cut_method_descriptors",
    "quotient",
    "theta_star_classes",
]
