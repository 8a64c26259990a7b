"""Monophonic convexity on Kneser, Johnson and product graphs.

Exact search for monophonic intervals and numbers, explicit induced-path
constructions with independent validation, and structural checks around
strongly 2-monophonic graphs.
"""

__version__ = "0.1.0"

from .engine import (  # noqa: E402
    BudgetExceeded,
    convexity_number,
    induced_path_through,
    is_m_convex,
    is_monophonic_set,
    is_strongly_2_monophonic,
    m_convex_hull,
    monophonic_interval,
    monophonic_number,
)
from .generators import basic_graph, cartesian_product, generalized_johnson, hamming, hypercube, johnson, kneser  # noqa: E402
from .graph import Graph, GraphInputError, distance, is_connected, is_induced_path, parse_graph, to_text  # noqa: E402
from .paths import (  # noqa: E402
    PreconditionError,
    disjoint_path_pair,
    even_path,
    johnson_witness_path,
    kneser_witness_path,
    lift_witness,
    odd_path,
    product_witness_path,
    venn_partition,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphInputError",
    "PreconditionError",
    "basic_graph",
    "cartesian_product",
    "convexity_number",
    "disjoint_path_pair",
    "distance",
    "even_path",
    "generalized_johnson",
    "hamming",
    "hypercube",
    "induced_path_through",
    "is_connected",
    "is_induced_path",
    "is_m_convex",
    "is_monophonic_set",
    "is_strongly_2_monophonic",
    "johnson",
    "johnson_witness_path",
    "kneser",
    "kneser_witness_path",
    "lift_witness",
    "m_convex_hull",
    "monophonic_interval",
    "monophonic_number",
    "odd_path",
    "parse_graph",
    "product_witness_path",
    "to_text",
    "venn_partition",
]
