"""Exact derivations, centroids and nilpotency flags of finite-dimensional algebras.

Algebras are given by structure constants over the rationals; every
computation is exact.
"""

from .algebra import (
    ParameterBinding,
    StructureConstants,
    algebra_square,
    associativity_witness,
    center,
    centralizer,
    check_associative,
    commutant_center,
    is_nilpotent_algebra,
    left_mult_operator,
    multiply,
    right_mult_operator,
    transport,
)
from .centroid import (
    CentralDerivationSpace,
    CentroidSpace,
    central_derivations,
    centroid,
    centroid_constraint_matrix,
    verify_centroid_derivation_props,
)
from .corpus import CorpusEntry, load_corpus
from .derivations import (
    DerivationSpace,
    bracket_closure_check,
    derivation_constraint_matrix,
    derivations,
    verify_theorem_p2,
)
from .errors import AlgkitError, CorpusError, EngelPreconditionError, ParameterError, ParseError
from .linalg import RationalMatrix, Subspace, contains, intersect, is_nilpotent_matrix, kernel_basis, rref
from .parsing import parse_algebra, serialize_algebra
from .structure import AlgebraReport, ClassificationFlags, all_derivations_nilpotent, classify, dimension_report

__version__ = "0.1.0"
