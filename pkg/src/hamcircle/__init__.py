"""Hamiltonian circle actions on blowups of ruled surfaces over positive-genus curves.

Exact-rational library and CLI: normal forms of blowup-form vectors, decorated
graphs of circle actions with equivalence up to translation and flip, staged
enumeration by equivariant blowups, and closed-form counts plus symplectic
invariants (exceptional-class minima, volume, Gromov width, packing number).
"""

from .blowups import (
    BlowupSite,
    FatSide,
    InteriorSite,
    all_blowups,
    blowup_at,
    blowup_fat,
    blowup_interior,
)
from .enumeration import (
    CountReport,
    GraphStore,
    blowup_stage,
    count_actions,
    enumerate_actions,
    initial_graphs,
    initial_twists,
)
from .formulas import (
    count_equal_sizes,
    count_ruled,
    indicator,
    max_count,
    max_count_conditions,
)
from .graphs import (
    Chain,
    DecoratedGraph,
    FatVertex,
    GraphKey,
    GraphReport,
    are_equivalent,
    are_reflection,
    are_same,
    canonical_json,
    canonical_sort_key,
    compare_by_end,
    compare_by_start,
    flip,
    graph_from_json_dict,
    graph_key,
    to_json_dict,
    validate,
)
from .vectors import (
    BlowupVector,
    BundleType,
    ConeReport,
    E,
    EminCase,
    EminResult,
    ExceptionalClass,
    F_minus_E,
    GromovWidth,
    NotBlowupFormError,
    Q,
    ReduceResult,
    as_q,
    check_cone,
    cremona,
    cremona_move,
    cremona_reduce,
    defect,
    emin,
    equal_tail_start,
    exceptional_areas,
    gromov_width,
    is_g_reduced,
    packing_number,
    qstr,
    require_cone,
    sort_deltas,
    swap_bundle,
    volume,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupSite",
    "BlowupVector",
    "BundleType",
    "Chain",
    "ConeReport",
    "CountReport",
    "DecoratedGraph",
    "E",
    "EminCase",
    "EminResult",
    "ExceptionalClass",
    "F_minus_E",
    "FatSide",
    "FatVertex",
    "GraphKey",
    "GraphReport",
    "GraphStore",
    "GromovWidth",
    "InteriorSite",
    "NotBlowupFormError",
    "Q",
    "ReduceResult",
    "all_blowups",
    "are_equivalent",
    "are_reflection",
    "are_same",
    "as_q",
    "blowup_at",
    "blowup_fat",
    "blowup_interior",
    "blowup_stage",
    "canonical_json",
    "canonical_sort_key",
    "check_cone",
    "compare_by_end",
    "compare_by_start",
    "count_actions",
    "count_equal_sizes",
    "count_ruled",
    "cremona",
    "cremona_move",
    "cremona_reduce",
    "defect",
    "emin",
    "enumerate_actions",
    "equal_tail_start",
    "exceptional_areas",
    "flip",
    "graph_from_json_dict",
    "graph_key",
    "gromov_width",
    "indicator",
    "initial_graphs",
    "initial_twists",
    "is_g_reduced",
    "max_count",
    "max_count_conditions",
    "packing_number",
    "qstr",
    "require_cone",
    "sort_deltas",
    "swap_bundle",
    "to_json_dict",
    "validate",
    "volume",
]
