"""Knot diagrams as plane maps, cowrithe, and minimal Reidemeister sequences
between the torus diagrams D(n+1, n) and D(n, n+1)."""

from .braid import BraidWord, closure, torus_braid, torus_diagram
from .diagram import (
    CanonicalCode,
    Dart,
    Diagram,
    Face,
    canonical_form,
    diagram_from_json,
    diagram_from_pd,
    diagram_to_json,
    export_pd,
    gauss_code,
    is_isomorphic,
)
from .invariants import (
    BoundsReport,
    ChordDiagram,
    chord_diagram,
    cowrithe,
    cowrithe_closed_form,
    interleave_count,
    interleaved,
    move_lower_bounds,
    writhe,
)
from .moves import Move, MoveDelta, MoveKind, apply_move, enumerate_moves, move_delta
from .search import SearchLimits, SearchResult, bfs_min_moves
from .torus_deform import (
    DeformReport,
    MoveTrace,
    deform_sequence,
    predicted_move_count,
    verify_trace,
)

__version__ = "0.1.0"
