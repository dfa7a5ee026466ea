"""Exact computations in the Yangian Y(gl_N), its dual and the double Yangian.

Everything is exact rational arithmetic.  The main entry points are
re-exported here; see the submodules for the rest.
"""

from .algebra import AlgElement, basis_enumerate, commutator, normal_form, rel_rhs
from .errors import IncompatibleError, ParseError, TruncationError, YangianError
from .hopf import TensorElement, antipode, counit, delta, yangian_map, z_circ_series, z_series
from .pairing import dual_system, gram_matrix, pair_elements, pair_monomials, universal_r
from .parse import parse_element
from .reps import RepSpec, evaluation_image, gl_embedding, rep_apply, rep_relation_check, separation_search
from .series import PolySeries, Var
from .tensor import TensorOperator, build_r, ybe_check

__all__ = [
    "AlgElement",
    "IncompatibleError",
    "ParseError",
    "PolySeries",
    "RepSpec",
    "TensorElement",
    "TensorOperator",
    "TruncationError",
    "Var",
    "YangianError",
    "antipode",
    "basis_enumerate",
    "build_r",
    "commutator",
    "counit",
    "delta",
    "dual_system",
    "gram_matrix",
    "normal_form",
    "pair_elements",
    "pair_monomials",
    "parse_element",
    "rel_rhs",
    "evaluation_image",
    "gl_embedding",
    "rep_apply",
    "rep_relation_check",
    "separation_search",
    "universal_r",
    "ybe_check",
    "yangian_map",
    "z_circ_series",
    "z_series",
]
