"""Exact finite models of D-laminated MV-spaces, D-frames and the Ω ⊣ pt adjunction."""

__version__ = "0.1.0"

from .errors import CheckReport, ConsistencyError, InputError, MVTopError, ResourceError
from .mvcore import Chain, MVValue, Subquantale, check_subquantale, parse_value
from .fuzzy import Carrier, FuzzySet, parse_fuzzy, pointwise, powerset, scalar_mul
from .spaces import (CrispMap, MVSpace, check_axioms, generate_topology, interior,
                     is_continuous, is_hausdorff, is_neighbourhood, is_T0, nbhd_system)
from .frames import (DFrame, FrameHom, Point, check_d_frame, check_frame_hom,
                     enumerate_points, pt_of_hom, spectrum)
from .adjunction import (check_triangles, counit, is_sober, is_spatial, omega_of_map,
                         omega_of_space, sober_via_nbhd, unit)
from .operators import (FuzzyFilter, InteriorOperator, NbhdFunction, check_fuzzy_filter,
                        check_interior_operator, check_nbhd_function, interior_from_nbhd,
                        nbhd_from_interior, topology_from_interior, topology_from_nbhd)

__all__ = [
    "CheckReport", "ConsistencyError", "InputError", "MVTopError", "ResourceError",
    "Chain", "MVValue", "Subquantale", "check_subquantale", "parse_value",
    "Carrier", "FuzzySet", "parse_fuzzy", "pointwise", "powerset", "scalar_mul",
    "CrispMap", "MVSpace", "check_axioms", "generate_topology", "interior", "is_continuous",
    "is_hausdorff", "is_neighbourhood", "is_T0", "nbhd_system",
    "DFrame", "FrameHom", "Point", "check_d_frame", "check_frame_hom", "enumerate_points",
    "pt_of_hom", "spectrum",
    "check_triangles", "counit", "is_sober", "is_spatial", "omega_of_map", "omega_of_space",
    "sober_via_nbhd", "unit",
    "FuzzyFilter", "InteriorOperator", "NbhdFunction", "check_fuzzy_filter",
    "check_interior_operator", "check_nbhd_function", "interior_from_nbhd",
    "nbhd_from_interior", "topology_from_interior", "topology_from_nbhd",
]
