"""Explicit open books on plumbings of circle bundles, decided with exact arithmetic."""
from .errors import (
    EmptyBindingError,
    ForeignCurveError,
    GraphSyntaxError,
    GraphValidationError,
    PlumbookError,
    SeifertConventionError,
    SingularMatrixError,
)
from .graph import (
    Edge,
    PlumbingGraph,
    VertexData,
    bridges,
    cycle_rank,
    degree,
    first_homology,
    format_graph,
    intersection_matrix,
    is_non_positive,
    parse_graph,
)
from .milnor import MilnorReport, milnor_fillable, milnor_report, planar_milnor_criterion
from .openbook import OpenBook, classify_curve, parse_openbook, render_openbook, synthesize
from .seifert import SeifertInvariants, hj_expansion, horizontal_criterion, star_graph

__version__ = "0.1.0"
