from __future__ import (
    absolute_import,
    unicode_literals,
)

from dualeq.graphs.axioms import (
    AxiomReport,
    check_axioms,
)
from dualeq.graphs.core import (
    SignedColoredGraph,
    Vertex,
    augmented_graph,
    build_graph_from_family,
    components,
    conjugate_graph,
    generating_function,
    restrict,
    standard_graph,
)
from dualeq.graphs.io import (
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    load_graph,
)
from dualeq.graphs.morphism import (
    Classification,
    Morphism,
    classify_component,
    graph_schur_expansion,
    is_morphism,
)


__all__ = (
    'AxiomReport',
    'Classification',
    'Morphism',
    'SignedColoredGraph',
    'Vertex',
    'augmented_graph',
    'build_graph_from_family',
    'check_axioms',
    'classify_component',
    'components',
    'conjugate_graph',
    'generating_function',
    'graph_from_json',
    'graph_to_dot',
    'graph_to_json',
    'is_morphism',
    'load_graph',
    'restrict',
    'standard_graph',
)
