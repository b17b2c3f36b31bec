"""Weighted poset block metrics on Z_m^N.

The pieces compose bottom-up: a coordinate weight on Z_m, a partial order
on block labels, and a block-length profile together make a metric space;
on top sit exact shell counts, code-level distance analysis, and the
chain-poset closed forms.
"""

from .blockspace import METRIC_KEYS, BlockSpace, LabelMap
from .codes import (
    DEFAULT_CODEWORD_CAP,
    Code,
    CodeAnalysis,
    DistanceComparison,
    MdsInheritance,
    SingletonReport,
    analyze_code,
    build_code,
    ceil_log,
    distance_comparison_check,
    mds_inheritance_check,
    mds_necessary_interval,
    min_distance,
    singleton_check,
)
from .distribution import (
    DEFAULT_BRUTE_CAP,
    WeightDistribution,
    arrangement_count,
    arrangements,
    ball_size,
    bounded_partitions,
    brute_distribution,
    method_counts,
    partitions_into,
    sphere_size,
    sphere_size_uniform,
    weight_distribution,
)
from .errors import (
    CapacityError,
    DomainError,
    InstanceError,
    InvalidPosetError,
    InvalidWeightError,
    PosetBlockError,
    PreconditionError,
    UnsupportedAlphabetError,
)
from .nrt import (
    BallContainmentReport,
    ChainAnalysis,
    ChainSingletonReport,
    MinDistanceRelation,
    analyze_chain,
    ball_containment_check,
    chain_distribution,
    chain_order,
    chain_singleton_check,
    min_distance_relation_check,
    packing_radius,
)
from .poset import (
    DEFAULT_IDEAL_CAP,
    Ideal,
    IdealIndex,
    Poset,
    enumerate_ideals,
    ideal_closure,
)
from .weights import BlockWeightTable, WeightFunction, make_weight
from .cli import Instance, parse_instance

__version__ = "0.1.0"

__all__ = [
    "BallContainmentReport",
    "BlockSpace",
    "BlockWeightTable",
    "CapacityError",
    "ChainAnalysis",
    "ChainSingletonReport",
    "Code",
    "CodeAnalysis",
    "DEFAULT_BRUTE_CAP",
    "DEFAULT_CODEWORD_CAP",
    "DEFAULT_IDEAL_CAP",
    "DistanceComparison",
    "DomainError",
    "Ideal",
    "IdealIndex",
    "Instance",
    "InstanceError",
    "InvalidPosetError",
    "InvalidWeightError",
    "LabelMap",
    "METRIC_KEYS",
    "MdsInheritance",
    "MinDistanceRelation",
    "Poset",
    "PosetBlockError",
    "PreconditionError",
    "SingletonReport",
    "UnsupportedAlphabetError",
    "WeightDistribution",
    "WeightFunction",
    "analyze_chain",
    "analyze_code",
    "arrangement_count",
    "arrangements",
    "ball_containment_check",
    "ball_size",
    "bounded_partitions",
    "brute_distribution",
    "build_code",
    "ceil_log",
    "chain_distribution",
    "chain_order",
    "chain_singleton_check",
    "distance_comparison_check",
    "enumerate_ideals",
    "ideal_closure",
    "make_weight",
    "mds_inheritance_check",
    "mds_necessary_interval",
    "method_counts",
    "min_distance",
    "min_distance_relation_check",
    "packing_radius",
    "parse_instance",
    "partitions_into",
    "singleton_check",
    "sphere_size",
    "sphere_size_uniform",
    "weight_distribution",
]
