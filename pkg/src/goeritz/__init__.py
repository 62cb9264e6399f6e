"""Exact combinatorics of reducing spheres for the genus-2 splitting of S^3.

Curves on the splitting surface are handled through the hyperelliptic
quotient, a six-punctured sphere, where normal coordinates give exact
canonical forms.  On top of that sit the generators of the Goeritz group,
the descent step that moves a reducing sphere closer to the base one, the
factorization of group elements, and finite balls in the complex of
reducing spheres.
"""

from .curve_model import (
    BASE, INFINITY, REFERENCE_CURVES, ArcFamily, CurveDiagram, CurveError,
    SideDiagram, Slope, ValidationReport, base_intersection, canonical_form,
    farey_distance, from_json, handlebody_word, is_reducing, minimize,
    normalize_slope, slope_spectrum, to_json, validate,
)
from .goeritz_action import (
    RELATIONS, RelationReport, StabilizerNormalForm, apply_generator,
    apply_word, check_relations, inverse_word, neighbor, parse_word,
    random_word, reduce_word, stabilizer_normal_form,
)
from .reduction import (
    BandedCurve, CrossingPair, NoQualifyingPair, PreconditionError, band,
    candidate_pairs, find_crossing_pair, reduce_step,
)
from .factor import CurveImages, EdgeWord, InconsistentImages, factorize, identify_edge_word, path_to_base
from .gamma_complex import (
    GammaBall, LocalStructureReport, ResourceLimit, UnknownFormat, build_ball,
    export, import_ball, verify_local_structure,
)

__version__ = "0.1.0"
