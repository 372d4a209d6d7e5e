"""Exception types shared across the package.

The CLI maps these onto exit codes: invalid-input errors exit with 2,
verification failures with 3, and internal assertion failures (violations
of theorem-backed invariants, which indicate a bug) with 4.
"""


class HiggsBettiError(Exception):
    """Base class for all package errors."""


class InvalidInputError(HiggsBettiError):
    """Rejected user input (CLI exit code 2)."""


class InvalidTopologyError(InvalidInputError):
    """Curve topology outside the allowed range (b < 0, b > g, or empty real locus)."""


class NonCoprimeError(InvalidInputError):
    """Rank and degree are not coprime."""


class ArityMismatchError(HiggsBettiError):
    """Two polynomials from different variable contexts were combined."""


class ExponentOverflowError(HiggsBettiError):
    """An exponent left the range the packed representation can hold safely."""


class NotDivisibleError(HiggsBettiError):
    """Exact polynomial division failed; carries the offending remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotPolynomialError(HiggsBettiError):
    """A factored rational did not cancel to a Laurent polynomial.

    For pipeline-produced series coefficients this is an internal assertion
    failure (CLI exit code 4): polynomiality is guaranteed by theorem.
    """


class ConstantTermNotOneError(HiggsBettiError):
    """Series logarithm requested for a series whose constant term is not 1."""


class OddUPowerError(HiggsBettiError):
    """A real specialization produced odd powers of u = t^(1/2) (exit code 4)."""


class PoleAtOneError(HiggsBettiError):
    """The rank-2 closed form failed to cancel its poles at z = 1 (exit code 4)."""


#: Errors that signal an internal assertion violation rather than bad input.
INTERNAL_ERRORS = (NotPolynomialError, OddUPowerError, PoleAtOneError)
