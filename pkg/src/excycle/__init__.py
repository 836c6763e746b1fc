"""Extremal graphs without an odd cycle C_{2k+1}: formulas, constructions and exhaustive checks."""

from .canon import CanonicalForm, canonical_form, is_isomorphic
from .constructions import (
    Cactus,
    CactusSpec,
    Complete,
    CompleteBipartite,
    H1,
    H2,
    Turan,
    cactus,
    complete,
    complete_bipartite,
    h1_graph,
    h2_graph,
    realize,
    turan,
)
from .cycles import circumference, cycle_spectrum, girth, has_cycle_of_length, is_pancyclic_from_3
from .formulas import (
    ex_matching,
    ex_odd_cycle,
    extremal_family,
    g_decompose,
    g_formula,
    h1_formula,
    h2_formula,
    turan_edges,
)
from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    block_decomposition,
    edge_count,
    from_edges,
    is_bipartite,
    is_connected,
    is_two_connected,
)
from .graph6 import g6_decode, g6_encode
from .search import ExtremalReport, SearchConfig, enumerate_graphs, max_edges_c2k1_free
from .theorem import check_brandt, check_kopylov, check_ledger, sweep_properties, verify_theorem

__version__ = "0.1.0"
