"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes): malformed or
inconsistent input data, and mathematical preconditions that a well-formed
input simply does not meet.
"""


class LieHermError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LieHermError, ValueError):
    """Input data is malformed or violates a structural invariant."""


class MathPreconditionError(LieHermError):
    """Input is well formed but outside the domain of the requested operation."""


class IndexOutOfRange(ValidationError):
    pass


class DuplicateEntry(ValidationError):
    pass


class DiagonalBracket(ValidationError):
    pass


class NotAntisymmetric(ValidationError):
    pass


class JacobiViolation(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NotUnitary(ValidationError):
    pass


class NotType11(ValidationError):
    """A 2-form fails one of the (1,1) component conditions."""

    def __init__(self, condition, index):
        self.condition = condition
        self.index = index
        a, b, c = index
        super().__init__(
            f"not of type (1,1): condition ({condition}) fails at "
            f"a={a}, b={b}, c={c}"
        )


class UnknownName(ValidationError):
    pass


class NijenhuisNotSkew(MathPreconditionError):
    pass


class NotProductForm(MathPreconditionError):
    pass


class NotTotallySkew(MathPreconditionError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not totally skew-symmetric at {list(witness)}")


class NotBiinvariantFrame(MathPreconditionError):
    pass
