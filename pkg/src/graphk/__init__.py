"""K-theory of graph C*-algebras over signed directed graphs.

Quick tour::

    >>> from graphk import parse_graph, graded_k_groups
    >>> g = parse_graph("vertices: v w\\nedges: v -> w +inf\\nedges: w -> v +2\\nedges: w -> w +1")
    >>> print(graded_k_groups(g))
    (Z (+) Z_2, 0)
"""

__version__ = "0.1.0"

from .exact_linalg import (
    AbelianGroup,
    IntMatrix,
    SmithDecomposition,
    cokernel,
    elementary_divisors_oracle,
    group_pretty,
    kernel_basis,
    smith_normal_form,
)
from .graph_model import (
    INF,
    GraphProperties,
    SignedGraph,
    SignedMultiplicity,
    classify,
    out_degree,
    validate,
)
from .graph_ktheory import (
    GradedKGroups,
    SinkError,
    graded_adjacency,
    graded_k_groups,
    k_matrix,
    ungraded_k_groups,
)
from .clifford import CliffordElement, GaussianRational, graded_k_lookup, parse_element
from .formats import parse_graph, serialize_graph

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "SmithDecomposition",
    "cokernel",
    "elementary_divisors_oracle",
    "group_pretty",
    "kernel_basis",
    "smith_normal_form",
    "INF",
    "GraphProperties",
    "SignedGraph",
    "SignedMultiplicity",
    "classify",
    "out_degree",
    "validate",
    "GradedKGroups",
    "SinkError",
    "graded_adjacency",
    "graded_k_groups",
    "k_matrix",
    "ungraded_k_groups",
    "CliffordElement",
    "GaussianRational",
    "graded_k_lookup",
    "parse_element",
    "parse_graph",
    "serialize_graph",
]
