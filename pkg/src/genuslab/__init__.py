"""Embedding schemes, genus invariants, genus-function graph classes and small-n census."""
from .canon import canonical_form, iso_classes
from .classes import ClassSpec, GenusFunction, check_k5_chered, ext_count, g_star, member, minext
from .config import BudgetExceeded, CeilingExceeded, LIMITS
from .embedding import (EmbeddingScheme, FaceTrace, chordify_to_unicellular, face_trace, gauge_normalize,
                        induced_scheme, is_orientable, split_to_precubic)
from .genus import is_planar, max_euler_genus, min_euler_genus
from .graphs import (ComponentPartition, Graph, components, contract_edge, core, cycle_rank, enumerate_graphs,
                     excess, induced_subgraph, kernel, subdivide_edge)
from .minors import enumerate_minors

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CeilingExceeded", "ClassSpec", "ComponentPartition", "EmbeddingScheme", "FaceTrace",
    "GenusFunction", "Graph", "LIMITS", "canonical_form", "check_k5_chered", "chordify_to_unicellular",
    "components", "contract_edge", "core", "cycle_rank", "enumerate_graphs", "enumerate_minors", "excess",
    "ext_count", "face_trace", "g_star", "gauge_normalize", "induced_scheme", "induced_subgraph",
    "is_orientable", "is_planar", "iso_classes", "kernel", "max_euler_genus", "member", "min_euler_genus",
    "minext", "split_to_precubic", "subdivide_edge",
]
