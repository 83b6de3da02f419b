from .classify import (
    DivisionRing,
    MatrixAlgebraType,
    ReductionChain,
    ReductionRule,
    ReductionStep,
    SpinorTypeReport,
    classify_complex,
    classify_complex_even,
    classify_even,
    classify_real,
    periodicity_type,
    spinor_types,
    tensor_type,
)
from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    ClassificationError,
    FieldShapeError,
    GradeError,
    NotInCliffordGroupError,
    OracleError,
    PinNormalFormError,
    RegistryError,
    RepresentationError,
    SignatureError,
    SignatureMismatchError,
    SpinorKitError,
    TensorTypeError,
)
from .gamma import (
    ConjugationOperator,
    GammaRepresentation,
    SpinorVector,
    build_conjugation,
    build_representation,
    chirality,
    conjugation_channels,
    majorana_subspace,
    represent,
    weyl_projectors,
    weyl_split,
)
from .geometry import (
    ConnectionField,
    FrameField,
    SpinorField,
    covariant_derivative,
    dirac_operator,
    lift_to_spin,
    operator_symbol,
)
from .multivector import (
    CenterReport,
    Multivector,
    bar,
    blade,
    center,
    commutator,
    even_part,
    generator,
    geometric_product,
    inverse,
    orientation_operator,
    orientation_projectors,
    scalar,
    vector,
)
from .oracle import classify_structural
from .scalars import I, GaussianRational
from .signature import Signature, relabel_time_first
from .spin_group import (
    Component,
    OrthogonalMatrix,
    SpinElement,
    boost,
    chi,
    component_of,
    exp_bivector,
    from_vectors,
    lie_algebra_basis,
    pin_normalize,
    random_unit_vectors,
    random_versor,
    rotation,
)
from .standard_model import (
    ParticleSpec,
    Registry,
    bilinear_decomposition_check,
    dirac_adjoint,
    hypercharge_audit,
    load_registry,
)
from .tables import generate_table

__all__ = [
    "DivisionRing",
    "MatrixAlgebraType",
    "ReductionChain",
    "ReductionRule",
    "ReductionStep",
    "SpinorTypeReport",
    "classify_complex",
    "classify_complex_even",
    "classify_even",
    "classify_real",
    "periodicity_type",
    "spinor_types",
    "tensor_type",
    "DEFAULT_SETTINGS",
    "Settings",
    "ClassificationError",
    "FieldShapeError",
    "GradeError",
    "NotInCliffordGroupError",
    "OracleError",
    "PinNormalFormError",
    "RegistryError",
    "RepresentationError",
    "SignatureError",
    "SignatureMismatchError",
    "SpinorKitError",
    "TensorTypeError",
    "ConjugationOperator",
    "GammaRepresentation",
    "SpinorVector",
    "build_conjugation",
    "build_representation",
    "chirality",
    "conjugation_channels",
    "majorana_subspace",
    "represent",
    "weyl_projectors",
    "weyl_split",
    "ConnectionField",
    "FrameField",
    "SpinorField",
    "covariant_derivative",
    "dirac_operator",
    "lift_to_spin",
    "operator_symbol",
    "CenterReport",
    "Multivector",
    "bar",
    "blade",
    "center",
    "commutator",
    "even_part",
    "generator",
    "geometric_product",
    "inverse",
    "orientation_operator",
    "orientation_projectors",
    "scalar",
    "vector",
    "classify_structural",
    "I",
    "GaussianRational",
    "Signature",
    "relabel_time_first",
    "Component",
    "OrthogonalMatrix",
    "SpinElement",
    "boost",
    "chi",
    "component_of",
    "exp_bivector",
    "from_vectors",
    "lie_algebra_basis",
    "pin_normalize",
    "random_unit_vectors",
    "random_versor",
    "rotation",
    "ParticleSpec",
    "Registry",
    "bilinear_decomposition_check",
    "dirac_adjoint",
    "hypercharge_audit",
    "load_registry",
    "generate_table",
]
