"""Local-fraction decompositions and full-nonlocality certificates for
multipartite correlation tables."""

from ._core import (
    Behavior,
    CapExceededError,
    DimensionError,
    LocalityError,
    Scenario,
    SignalingError,
    StructuralError,
    ZeroProbabilityError,
    bipartition_local_fraction,
    bipartitions,
    born_table,
    certify_graph,
    certify_smolin,
    chained_sweep,
    cut_scan,
    ghz_mermin_box,
    hybrid_vertex_count,
    local_fraction,
    local_vertex_count,
    ns_vertices,
    pr_box,
    signaling_box,
    smolin_negative_control,
    svetlichny_box,
    svetlichny_decomposition,
    tsirelson_box,
)

__version__ = "0.1.0"

__all__ = [
    "Behavior",
    "CapExceededError",
    "DimensionError",
    "LocalityError",
    "Scenario",
    "SignalingError",
    "StructuralError",
    "ZeroProbabilityError",
    "bipartition_local_fraction",
    "bipartitions",
    "born_table",
    "certify_graph",
    "certify_smolin",
    "chained_sweep",
    "cut_scan",
    "ghz_mermin_box",
    "hybrid_vertex_count",
    "local_fraction",
    "local_vertex_count",
    "ns_vertices",
    "pr_box",
    "signaling_box",
    "smolin_negative_control",
    "svetlichny_box",
    "svetlichny_decomposition",
    "tsirelson_box",
]
