"""Multiplicative Zagreb indices of trees with a given number of
maximum-degree vertices: exact index computation, closed-form extremal
sequences with witness trees, and exhaustive brute-force verification.

``KERNEL_BACKEND`` reports whether the compiled extension ("c") or the
pure-Python fallback ("python") is active; set ``ZAGREB_PURE_PYTHON=1``
before import to force the fallback.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import DomainError, GraphFormatError, NotATreeError, ZagrebError
from .extremal import (
    ClassParams,
    ExtremalSpec,
    Goal,
    Index,
    class_params,
    extremal_spec,
    is_admissible,
    realize,
)
from .indices import IndexValue, m1, m2, pi1, pi2_edge, pi2_vertex
from .oracle import (
    ExtremalReport,
    canonical_form,
    classify,
    enumerate_free_trees,
    verify_class,
    verify_grid,
)
from .transform import (
    degree_shift_ratio,
    edge_rotating_capacity,
    f_ratio,
    g_ratio,
    leaf_reattach,
    leaf_reattach_chain,
)
from .trees import (
    DegreeSequence,
    Tree,
    degree_sequence_of,
    is_tree_sequence,
    max_degree_count,
)
from .treeio import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "ZagrebError",
    "DomainError",
    "GraphFormatError",
    "NotATreeError",
    "Tree",
    "DegreeSequence",
    "degree_sequence_of",
    "is_tree_sequence",
    "max_degree_count",
    "parse_graph6",
    "emit_graph6",
    "parse_edgelist",
    "emit_edgelist",
    "IndexValue",
    "pi1",
    "pi2_vertex",
    "pi2_edge",
    "m1",
    "m2",
    "Index",
    "Goal",
    "ClassParams",
    "ExtremalSpec",
    "class_params",
    "is_admissible",
    "extremal_spec",
    "realize",
    "enumerate_free_trees",
    "canonical_form",
    "classify",
    "verify_class",
    "verify_grid",
    "ExtremalReport",
    "f_ratio",
    "g_ratio",
    "edge_rotating_capacity",
    "leaf_reattach",
    "leaf_reattach_chain",
    "degree_shift_ratio",
]
