"""Exception hierarchy shared by every spinorkit module."""


class SpinorKitError(Exception):
    """Base class for all errors raised by spinorkit."""


class SignatureError(SpinorKitError, ValueError):
    """A signature (p, q) is malformed, too large, or unsupported by an operator."""


class SignatureMismatchError(SpinorKitError, ValueError):
    def __init__(self, left, right, what="operands"):
        self.left = left
        self.right = right
        super().__init__(
            f"{what} have different signatures: {left} and {right}"
        )


class GradeError(SpinorKitError, ValueError):
    """A multivector has the wrong grade support for the requested operation."""


class NotInCliffordGroupError(SpinorKitError, ValueError):
    """The element does not map the generator span to itself under conjugation."""


class PinNormalFormError(SpinorKitError, ValueError):
    """bar(s)·s is not a nonzero scalar, so s cannot be normalised into Pin."""


class TensorTypeError(SpinorKitError, ValueError):
    """Tensor product of two doubled algebras; the result is not a single block type."""


class OracleError(SpinorKitError):
    """The structural classifier did not reach a stable minimal ideal rank."""


class RepresentationError(SpinorKitError, ValueError):
    """A representation-level operator is undefined for this signature."""


class FieldShapeError(SpinorKitError, ValueError):
    """Lattice fields disagree in grid shape, dimension or signature."""


class RegistryError(SpinorKitError, ValueError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        listed = ", ".join(self.missing) if self.missing else "(none listed)"
        super().__init__(f"particle registry is incomplete; missing: {listed}")


class ClassificationError(SpinorKitError):
    """Two classification routes that must agree gave different algebra types."""
