"""Tools for studying which graph classes occur as the set of vertex neighbourhoods of some graph."""

from .errors import InputError, StructureAbsent
from .formats import from_graph6, loads, dumps, read_graphs, to_graph6, write_graphs
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    complete_multipartite,
    components,
    cycle,
    dominating_vertices,
    empty,
    induced_subgraph,
    is_connected,
    is_regular,
    make_family,
    neighbourhood,
    neighbourhood_graph,
    path,
    special_edges,
)
from .iso import GraphClass, canonical_form, canonical_graph, canonical_labelling, dedup, is_isomorphic, relabel
from .ops import (
    blow_up,
    cartesian_product,
    complement,
    composition,
    disjoint_union,
    expansion,
    join,
    line_graph,
    multiple,
    power,
    subdivide,
)
from .profile import (
    NecessityVerdict,
    Witness,
    check_necessary,
    local_profile,
    predict_profile_composition,
    predict_profile_product,
    realizes,
)
from .search import (
    SearchOutcome,
    SoltesVerdict,
    construct_multipartite,
    locally_cop3_from_cubic,
    search_realization,
    soltes_applies,
    soltes_verdict,
    verify_family_power,
)
from .transforms import *  # noqa: F401,F403
from .transforms import __all__ as _transforms_all

__all__ = [name for name in dir() if not name.startswith("_") and name not in {"errors", "formats", "graph", "iso", "ops", "profile", "search", "transforms"}]
