"""gic — Galois-image certificates for abelian threefolds.

Library + CLI that takes a hyperelliptic curve (or a Frobenius polynomial
directly) and produces exact, finite certificates: characteristic
polynomials of Frobenius, Galois-group certification through signed cycle
types, per-obstruction exclusion integers whose prime divisors bound where
a mod-l Galois image can fail to be maximal, and the explicit numeric
thresholds from the underlying effective theorems.
"""

__version__ = "0.1.0"

from .intpoly import (
    poly_resultant,
    poly_discriminant,
    reciprocal_transform,
    real_weil_poly,
)
from .frobenius import (
    BadReductionError,
    HyperellipticCurve,
    count_points,
    frobenius_charpoly,
    validate_weil,
)
from .weyl import certify_weyl, certify_A7, signed_cycle_type
from .exclusion import (
    StructuralRelationError,
    RootLabeling,
    label_roots,
    Relation,
    galois_orbit_norm,
    f1_f2,
    ExclusionReport,
    tensor_exclusion,
    lie_exclusion,
    minuscule_exclusion,
    induced_exclusion,
    verify_weight_identities,
)
from .eigstruct import (
    EigenMultiset,
    TensorDecomposition,
    decompose_tensor,
    weakly_independent,
    sigma_gamma_scan,
    u_membership,
)
from .bounds import main_bound, threefold_q, chebotarev_B

__all__ = [
    "poly_resultant",
    "poly_discriminant",
    "reciprocal_transform",
    "real_weil_poly",
    "BadReductionError",
    "HyperellipticCurve",
    "count_points",
    "frobenius_charpoly",
    "validate_weil",
    "certify_weyl",
    "certify_A7",
    "signed_cycle_type",
    "StructuralRelationError",
    "RootLabeling",
    "label_roots",
    "Relation",
    "galois_orbit_norm",
    "f1_f2",
    "ExclusionReport",
    "tensor_exclusion",
    "lie_exclusion",
    "minuscule_exclusion",
    "induced_exclusion",
    "verify_weight_identities",
    "EigenMultiset",
    "TensorDecomposition",
    "decompose_tensor",
    "weakly_independent",
    "sigma_gamma_scan",
    "u_membership",
    "main_bound",
    "threefold_q",
    "chebotarev_B",
]
