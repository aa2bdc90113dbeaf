"""Exception taxonomy shared by every module in the package.

The CLI maps these onto process exit codes, so the class hierarchy matters:
anything that means "the input was bad" derives from MalformedInputError,
anything that means "a documented size cap was hit" derives from
CapExceededError, and anything that means "an internal consistency check
failed" derives from InternalInvariantError.
"""


class Error(Exception):
    """Base class for all package errors."""


class MalformedInputError(Error):
    """Input data does not satisfy a documented precondition."""


class NotPrimeError(MalformedInputError):
    """The requested field characteristic is not prime."""


class ReducibleModulusError(MalformedInputError):
    """A user-supplied field modulus is reducible."""


class DegreeMismatchError(MalformedInputError):
    """A coefficient sequence has the wrong length or leading term."""


class DimensionTooLargeError(MalformedInputError):
    """Matrix dimension or entry degree above the documented cap."""


class ZeroElementError(Error):
    """Multiplicative order of zero requested."""


class RootIsZeroError(Error):
    """Order of the residue class of X requested modulo a multiple of X."""


class ReducibleError(Error):
    """An operation requiring an irreducible polynomial got a reducible one."""


class BothZeroError(Error):
    """gcd(0, 0) requested."""


class NonMonicModulusError(Error):
    """Modular exponentiation needs a monic modulus."""


class ZeroInputError(Error):
    """Zero polynomial or rational function where a nonzero one is required."""


class NonMonicError(Error):
    """A monic polynomial is required here."""


class NonIntegralError(Error):
    """Polynomial coefficients must lie in the polynomial ring, not the
    fraction field."""


class ZeroRootError(Error):
    """Zero is a root where only nonzero roots are meaningful."""


class ZeroConstantTermError(Error):
    """The constant term vanishes, so the polynomial has a zero root."""


class SingularMatrixError(Error):
    """The matrix (or the relevant difference with the identity) is singular."""


class CapExceededError(Error):
    """A documented computational size cap was exceeded."""


class NotAlgebraicError(Error):
    """Closed form requested for a zeta function that has none."""


class InternalInvariantError(Error):
    """An internal cross-check failed; indicates a bug, not bad input."""


class NonNegativeWeightError(InternalInvariantError):
    """A magnitude that must be strictly below one came out at or above it."""
