"""Word metric, geodesics and dead-end words for the discrete Heisenberg
group with the standard two-element generating set, plus the
minimal-perimeter polyomino machinery behind its dead-end language and a
brute-force Cayley-graph oracle that certifies everything."""

from .group import (
    Element,
    IDENTITY,
    LETTERS,
    SYMMETRIES,
    Symmetry,
    cyclic_shifts,
    evaluate,
    format_word,
    invert,
    multiply,
    parse_word,
    word_inverse,
    word_reverse,
)
from .metric import (
    LengthCase,
    canonicalize,
    geodesic_extensions,
    is_dead_end_element,
    is_dead_end_word,
    is_geodesic,
    is_simple_path,
    length,
)
from .oracle import (
    DistanceBall,
    bfs_ball,
    dead_end_census,
    enumerate_geodesics,
    geodesic_growth,
)
from .polyomino import (
    OrientedBoundary,
    Polyomino,
    boundary_word,
    brute_force_min_perimeter,
    enumerate_min_perimeter,
    p,
    q_minus,
    q_plus,
    word_to_polyomino,
)
from .language import (
    CyclicWord,
    InfiniteClass,
    classify_infinite_prefix,
    extend_to_dead_end,
    generate_dead_end_words,
)
from .errors import CompletionLimitError, ResourceLimitError, WordParseError

__version__ = "0.1.0"
