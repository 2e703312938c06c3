"""Metric granular computing on graphs: distance information tables,
indiscernibility partitions, rough approximations, discernibility matrices
and minimal resolving sets."""

from .discern import (
    DiscernibilityMatrix,
    EssentialSetReport,
    closed_form_delta_boolean,
    closed_form_delta_zn,
    discernibility_matrix,
    distinct_entries,
    enumerate_reducts_transversal,
    essential_sets,
    essential_sets_by_definition,
    numerical_matrix,
)
from .errors import GranularError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    diameter,
    distance_similar_classes,
    enumerate_automorphisms,
    make_family,
    max_degree,
    parse_edge_list,
)
from .metric_table import (
    InformationTable,
    equivalent,
    granule,
    join,
    max_partitioner,
    meet,
    min_partitioners,
    partition,
    partitioners,
    refines,
    representation,
)
from .resolving import ReductReport, check_bounds, enumerate_reducts, is_resolving
from .rough import ApproximationPair, approximate, dependency, positive_region
from .zerodiv import gamma_boolean, gamma_zn, h_partition_zn, layer_partition_check

__version__ = "0.1.0"
