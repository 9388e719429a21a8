"""Graph representation by words under pattern avoidance."""

from .core import (
    Graph,
    NotATreeError,
    OpenProblemError,
    RepresentationReport,
    UniformityReport,
    UnrepresentableError,
    UnsupportedPatternError,
    WordRepError,
    alternates,
    as_word,
    complete_graph,
    cycle_graph,
    empty_graph,
    final_permutation,
    format_word,
    induced_graph_11,
    initial_permutation,
    path_graph,
    represents_11,
    restrict,
    reverse_word,
    star_graph,
    uniformity,
)
from .patterns import (
    Pattern,
    PatternShape,
    ShapeKind,
    classify_pattern,
    contains,
    induced_graph_t,
    is_isomorphic,
    kitaev_induced_graph,
    pair_avoids,
    represents_t,
)

__version__ = "0.1.0"
