"""Exact vertex census of regular tessellations of the Euclidean and hyperbolic plane.

For an admissible symbol {p,q} (faces of degree p meeting q per vertex,
with 1/p + 1/q <= 1/2), this package derives the rational generating
function counting vertices by graph distance from an origin vertex,
evaluates it through exact linear recurrences, computes the exponential
growth constants, and verifies everything against an explicit planar-map
construction explored by breadth-first search.
"""

from pqcensus.polyarith import (
    IntPoly,
    NotDivisible,
    RationalGF,
    ZeroDenominatorConstant,
    gf_normalize,
    poly_add,
    poly_div_exact,
    poly_mul,
    series_coeffs,
)
from pqcensus.genfunc import (
    INFINITY,
    BadDegree,
    BadShape,
    CensusGF,
    Schlafli,
    SphericalOutOfScope,
    derive,
    gf_even,
    gf_infinite,
    gf_odd,
    gf_triangle,
)
from pqcensus.recurrence import LinRec, fibonacci_check, rec_eval, rec_from_gf
from pqcensus.oracle import (
    BudgetExceeded,
    BadSymbol,
    CensusReport,
    PlanarMap,
    StructureViolation,
    VertexProfile,
    bfs_census,
    build_map,
    build_tree,
    classify,
    dump_map,
)
from pqcensus.asymptotics import GrowthInfo, NoRootFound, growth, palindrome_check, ratio_probe

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "RationalGF",
    "NotDivisible",
    "ZeroDenominatorConstant",
    "poly_add",
    "poly_mul",
    "poly_div_exact",
    "gf_normalize",
    "series_coeffs",
    "INFINITY",
    "Schlafli",
    "CensusGF",
    "BadDegree",
    "BadShape",
    "SphericalOutOfScope",
    "gf_infinite",
    "gf_even",
    "gf_triangle",
    "gf_odd",
    "derive",
    "LinRec",
    "rec_from_gf",
    "rec_eval",
    "fibonacci_check",
    "PlanarMap",
    "CensusReport",
    "VertexProfile",
    "BudgetExceeded",
    "BadSymbol",
    "StructureViolation",
    "build_map",
    "build_tree",
    "bfs_census",
    "classify",
    "dump_map",
    "GrowthInfo",
    "NoRootFound",
    "growth",
    "palindrome_check",
    "ratio_probe",
    "__version__",
]
