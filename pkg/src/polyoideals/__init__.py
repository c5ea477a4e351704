"""Inner 2-minor ideals of collections of cells in the integer grid.

Construct the binomial ideal attached to a polyomino or a weakly connected
collection of cells, the matrix it comes from, and the toric kernel used for
primality verdicts; compute reduced Groebner bases, initial ideals and reduced
Hilbert series, from Python, the command line or a local JSON service.
"""

from .errors import (
    Deadline,
    ParseError,
    PolyoError,
    PreconditionError,
    ResourceLimitExceeded,
    RingMismatchError,
)
from .geometry import (
    Cell,
    CellCollection,
    Classification,
    EdgeInterval,
    GridPoint,
    Hole,
    Interval,
    classify,
    detect_holes,
    inner_intervals,
    maximal_edge_intervals,
    vertex_set,
)
from .groebner import (
    IdealHandle,
    buchberger_reduced,
    eliminate,
    ideal_equal,
    initial_ideal,
    is_reduced_groebner_basis,
    member,
    minimal_generators,
    normal_form,
    s_polynomial,
)
from .hilbert import HilbertSeries, hilbert_numerator, reduced_hilbert_series
from .ideals import PolyoMatrix, inner_minor, matrix_minors, polyo_ideal, polyo_matrix
from .polyalg import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    Variable,
    build_ring,
    field_from_spec,
    order_compare,
    QQ,
)
from .toric import AlphaAssignment, ToricComparison, alpha, f_sets, polyo_toric, toric_compare
from .cli import parse_encoding, render_encoding, run_command

__version__ = "0.1.0"

__all__ = [
    "AlphaAssignment", "Cell", "CellCollection", "Classification", "Deadline",
    "EdgeInterval", "GridPoint", "HilbertSeries", "Hole", "IdealHandle",
    "Interval", "Monomial", "MonomialOrder", "ParseError", "PolyoError",
    "PolyoMatrix", "PolyRing", "Polynomial", "PreconditionError", "QQ",
    "ResourceLimitExceeded", "RingMismatchError", "ToricComparison", "Variable",
    "alpha", "buchberger_reduced", "build_ring", "classify", "detect_holes",
    "eliminate", "f_sets", "field_from_spec", "hilbert_numerator", "ideal_equal",
    "initial_ideal", "inner_intervals", "inner_minor", "is_reduced_groebner_basis",
    "matrix_minors", "maximal_edge_intervals", "member", "minimal_generators",
    "normal_form", "order_compare", "parse_encoding", "polyo_ideal", "polyo_matrix",
    "polyo_toric", "reduced_hilbert_series", "render_encoding", "run_command",
    "s_polynomial", "toric_compare", "vertex_set",
]
