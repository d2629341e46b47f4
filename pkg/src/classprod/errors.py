"""Exception types shared across the package.

Every error raised by library code derives from ClassprodError so callers
can catch broadly.  The CLI maps these onto stable exit codes.
"""


class ClassprodError(Exception):
    """Base class for all package errors."""


# --- scalar / polynomial layer ---

class FieldMismatch(ClassprodError):
    """Operands belong to different coefficient fields."""


class NotPrime(ClassprodError):
    """Modulus for a prime field failed the primality check."""


class DivisionByZeroPoly(ClassprodError):
    """Polynomial division by the zero polynomial."""


class BothZero(ClassprodError):
    """gcd of two zero polynomials is undefined."""


class ZeroConstantTerm(ClassprodError):
    """Reciprocal requires a nonzero constant coefficient."""


class ZeroPolynomial(ClassprodError):
    """Operation undefined for the zero polynomial."""


class NotMonic(ClassprodError):
    """A monic polynomial was required."""


class ConstantPolynomial(ClassprodError):
    """Operation requires degree >= 1."""


class NonIntegerCoefficients(ClassprodError):
    """Eisenstein test requires integer coefficients."""


# --- matrix layer ---

class DimensionMismatch(ClassprodError):
    """Matrix dimensions are incompatible."""


class Singular(ClassprodError):
    """Matrix is not invertible."""


class BadIndices(ClassprodError):
    """Invalid generator indices."""


class ZeroParameter(ClassprodError):
    """Generator parameter must be nonzero."""


# --- normal forms ---

class FactorizationUnavailable(ClassprodError):
    """Invariant factor cannot be split into irreducibles with the
    provided tests (rationals, degree >= 4, no root, Eisenstein fails)."""


class BrokenChain(ClassprodError):
    """A divisibility chain of invariant factors is invalid."""


# --- classification / witnesses ---

class CentralMatrix(ClassprodError):
    """Scalar matrices have no class-product invariant."""


class CentralElement(CentralMatrix):
    """Stable identity class; verdict undefined."""


class DimensionTooSmall(ClassprodError):
    """Class analysis requires dimension >= 3."""


class WrongDimension(ClassprodError):
    """Operation is specific to another dimension."""


class NotInT(ClassprodError):
    """Matrix is not in the transvection class."""


class NoRoot(ClassprodError):
    """Characteristic polynomial has no root in the field."""


class HasDegreeOneFactor(ClassprodError):
    """A degree-1 invariant factor exists; the two-factor route applies."""


class PreconditionViolated(ClassprodError):
    """Witness construction preconditions not met."""


class SynthesisFailed(ClassprodError):
    """Bounded conjugator search exhausted; no verified construction found."""


class VerificationFailed(ClassprodError):
    """An internally produced identity failed its exact re-check.

    This always indicates a bug; emitting the unverified result is never
    an option.
    """


class NotSimilar(ClassprodError):
    """Matrices have different invariant factors."""


class ShapeMismatch(ClassprodError):
    """Matrix does not match the expected antidiagonal pattern."""


# --- oracle / cli ---

class TooLarge(ClassprodError):
    """Enumeration would exceed the configured cap."""


class ParseError(ClassprodError):
    """Malformed input file or argument."""
