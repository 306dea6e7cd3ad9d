"""Exact arithmetic for Z2-graded Leibniz algebras with pseudo-Euclidean forms.

Scalars are :class:`fractions.Fraction` throughout.  The main entry points:

* :func:`check_identity` for the identity families,
* :func:`levi_civita`, :func:`is_flat` and :class:`CurvatureTensors`,
* :func:`quadratic_flat_report` and the structural helpers,
* the constructions in :mod:`superleibniz.extensions`.
"""

from .bilinear import (
    BilinearForm,
    SubSpace,
    adjoint,
    build_form,
    is_invariant,
    is_totally_isotropic,
    orthogonal,
    span,
)
from .errors import (
    CocycleError,
    DeconstructionError,
    DegenerateForm,
    DimensionMismatch,
    ExtensionError,
    InapplicableIdentity,
    InconsistentSystem,
    InternalInconsistency,
    MuDataError,
    NotHomogeneous,
    NotIsomorphism,
    NotLeibniz,
    ParityError,
    SingularMatrix,
    SpaceMismatch,
    SuperLeibnizError,
    SupersymmetryConflict,
    TrilinearError,
    WitnessedError,
)
from .exactla import LinearMap, Parity, SuperSpace, Vector, format_scalar, parity_shift, to_scalar
from .extensions import (
    AdmissibleTuple,
    CentralExtensionData,
    CocycleTensor,
    DoubleExtensionData,
    central_extension,
    deconstruct_double_extension,
    double_extension,
    iterate_to_lie,
    pi_t_star_extension,
    reduce_to_t_star,
    semidirect_product,
    t_star_extension,
)
from .fixtures import FIXTURES, PAIR_FIXTURES, fixture
from .levicivita import (
    CurvatureTensors,
    LeviCivitaPair,
    bianchi_check,
    chara_conditions,
    curvature,
    flatness_conditions,
    is_flat,
    levi_civita,
    verify_pair,
)
from .structure import (
    MuData,
    annihilator,
    center,
    is_two_step_nilpotent,
    leibniz_from_lie_mu,
    leibniz_ideal,
    product_space,
    quadratic_flat_report,
    trilinear_data,
    verify_isometric_isomorphism,
)
from .superalg import (
    CheckReport,
    Counterexample,
    DiSuperAlgebra,
    IdentityKind,
    SuperAlgebra,
    admissible_product,
    check_identity,
    polarization,
)


__all__ = [
    "AdmissibleTuple", "BilinearForm", "CentralExtensionData", "CheckReport", "CocycleError",
    "CocycleTensor", "Counterexample", "CurvatureTensors", "DeconstructionError",
    "DegenerateForm", "DiSuperAlgebra", "DimensionMismatch", "DoubleExtensionData",
    "ExtensionError", "FIXTURES", "IdentityKind", "InapplicableIdentity", "InconsistentSystem",
    "InternalInconsistency", "LeviCivitaPair", "LinearMap", "MuData", "MuDataError",
    "NotHomogeneous", "NotIsomorphism", "NotLeibniz", "PAIR_FIXTURES", "Parity", "ParityError",
    "SingularMatrix", "SpaceMismatch", "SubSpace", "SuperAlgebra", "SuperLeibnizError",
    "SuperSpace", "SupersymmetryConflict", "TrilinearError", "Vector", "WitnessedError",
    "adjoint", "admissible_product", "annihilator", "bianchi_check", "build_form", "center",
    "central_extension", "chara_conditions", "check_identity", "curvature",
    "deconstruct_double_extension", "double_extension", "fixture", "flatness_conditions",
    "format_scalar", "is_flat", "is_invariant", "is_totally_isotropic", "is_two_step_nilpotent",
    "iterate_to_lie", "leibniz_from_lie_mu", "leibniz_ideal", "levi_civita", "load_algebra",
    "orthogonal", "parity_shift", "pi_t_star_extension", "polarization", "product_space",
    "quadratic_flat_report", "reduce_to_t_star", "semidirect_product", "span",
    "t_star_extension", "to_scalar", "trilinear_data", "verify_isometric_isomorphism",
    "verify_pair",
]


def load_algebra(path):
    """Read an algebra document; returns ``(algebra, form or None)``."""
    from .cli.documents import load_algebra as _load
    return _load(path)


__version__ = "0.1.0"
