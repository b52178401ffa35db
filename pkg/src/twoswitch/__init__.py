"""Small-graph toolkit for 2-switches, unigraphs and their forbidden configurations."""

__version__ = "0.1.0"

from .graph import (
    CapacityError,
    Graph,
    GraphError,
    complement,
    complete_graph,
    degree_sequence,
    delete_vertices,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    join,
    neighborhood_list,
    relabel,
)
from .formats import Graph6Error, from_edge_list_text, from_graph6, to_edge_list_text, to_graph6
from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_labeling, find_isomorphism
from .catalog import FORBIDDEN_NAMES, catalog, forbidden_family
from .switches import (
    AlternatingFourCycle,
    SwitchError,
    alternating_four_cycles,
    changes_isomorphism_class,
    is_module,
    module_hypothesis,
    rho_is_automorphism,
    swap_map,
    swap_map_is_isomorphism,
    trace_census,
    two_switch,
)
from .configurations import (
    A4C,
    FIG2,
    FIG5,
    FIG6,
    Configuration,
    ConfigurationFamily,
    Embedding,
    contains,
    contains_on_cycle,
    embeddings_on_cycle,
    find_embeddings,
    realizations,
)
from .enumeration import (
    NotGraphicalError,
    TransitionGraph,
    construct_realization,
    count_realizations,
    enumerate_graphs,
    enumerate_realizations,
    graphical_sequences,
    is_graphical,
    transition_graph,
)
from .classifiers import (
    ClassProfile,
    RouteDisagreement,
    classify,
    is_hereditary_unigraph,
    is_matrogenic,
    is_threshold,
    is_unigraph,
    unigraph_producing,
)
from .verifier import CLAIMS, VerificationReport, negative_control, verify
