"""arlabel: exact search for distinct-subset-sum sets, the ES sequence, and
AR-labelings of graphs, with certified witnesses and refutations."""

__version__ = "0.1.0"

from .check import (
    DuplicateLabels,
    Labeling,
    SumCollision,
    Verdict,
    is_ar_labeling,
    is_ar_vertex,
    load_labeling,
    save_labeling,
    third_label_feasible,
    verify_files,
)
from .dss import (
    DssSet,
    SumBitset,
    can_extend,
    enumerate_dss_sets,
    is_dss,
    subset_sum_collision,
    sum_bitset,
)
from .errors import ParseError, SearchTimeout, UnsupportedSizeError
from .es import (
    KNOWN_ES,
    EsRecord,
    EsTable,
    conway_guy_set,
    conway_guy_u,
    erdos_counting_lb,
    erdos_moser_lb,
    es,
    es_table,
)
from .graphs import (
    Graph,
    bistar,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    load_graph,
    path,
    save_graph,
    star,
    wheel,
)
from .reproduce import ClaimRow, ReproReport, run_reproduction
from .solver import (
    AriResult,
    SearchConfig,
    SearchOutcome,
    SearchStats,
    ari,
    ari_lower_bound,
    counting_prune,
    disjoint_dss_cover,
    embed_in_ar_graph,
    find_ar_labeling,
    is_almost_ar,
    is_ar_graph,
    label_wheel,
)

__all__ = [
    "__version__",
    "AriResult",
    "ClaimRow",
    "DssSet",
    "DuplicateLabels",
    "EsRecord",
    "EsTable",
    "Graph",
    "KNOWN_ES",
    "Labeling",
    "ParseError",
    "ReproReport",
    "SearchConfig",
    "SearchOutcome",
    "SearchStats",
    "SearchTimeout",
    "SumBitset",
    "SumCollision",
    "UnsupportedSizeError",
    "Verdict",
    "ari",
    "ari_lower_bound",
    "bistar",
    "can_extend",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "conway_guy_set",
    "conway_guy_u",
    "counting_prune",
    "cycle",
    "disjoint_dss_cover",
    "embed_in_ar_graph",
    "enumerate_dss_sets",
    "erdos_counting_lb",
    "erdos_moser_lb",
    "es",
    "es_table",
    "find_ar_labeling",
    "is_almost_ar",
    "is_ar_graph",
    "is_ar_labeling",
    "is_ar_vertex",
    "is_dss",
    "label_wheel",
    "load_graph",
    "load_labeling",
    "path",
    "run_reproduction",
    "save_graph",
    "save_labeling",
    "star",
    "subset_sum_collision",
    "sum_bitset",
    "third_label_feasible",
    "verify_files",
    "wheel",
]
