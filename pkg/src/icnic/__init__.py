"""Saturated IC-plane and NIC-plane drawings.

Drawings are stored as rotation systems of their planarization.  The
package builds the sparse extremal families, validates and saturates
drawings, checks structural properties and density bounds, and searches
small cases exhaustively.
"""

from icnic.analysis import (
    BoundReport,
    CStarReport,
    StructureReport,
    crossing_face_incidence,
    detect_c_star,
    lower_bound,
    upper_bound,
    verify_bounds,
    verify_structure,
)
from icnic.constructions import (
    gen_base,
    gen_H,
    gen_H_prime,
    gen_h_star,
    gen_M,
    gen_M_prime,
    gen_m_star,
    generate,
    insert_hermit,
    octahedron,
    one_crossing_k5,
    plane_k4,
)
from icnic.drawing import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    Census,
    Drawing,
    DrawingClass,
    Edge,
    Face,
    Segment,
    census,
    classify,
    classify_face,
    faces,
    planarize,
    validate,
)
from icnic.errors import (
    BudgetExceeded,
    DrawingError,
    FormatError,
    IcnicError,
    InsertionError,
    SpecError,
)
from icnic.interchange import build_drawing, dump, dumps, load, loads
from icnic.saturation import (
    Insertion,
    SaturationPolicy,
    addable_edges,
    insert_edge,
    is_maximal,
    saturate,
)
from icnic.search import CrossingSpec, EnumResult, enumerate_maximal_small, random_saturated, realizable

__version__ = "0.1.0"
