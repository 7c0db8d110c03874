"""
Exception hierarchy shared by the algebra engine, the services and the CLI
"""

from typing import Optional


class GrasscharError(Exception):
    """Base class for every error raised by grasschar"""


class VariableTableError(GrasscharError):
    """Invalid variable table (empty or duplicate names, degree below 1)"""


class AlignmentError(GrasscharError):
    """Objects built over different variable tables or rings were combined"""


class ExponentOverflowError(GrasscharError):
    """An exponent left the supported 16-bit range"""


class PolynomialParseError(GrasscharError):
    """Polynomial text does not follow the grammar"""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(PolynomialParseError):
    """Polynomial text names a variable missing from the table"""

    def __init__(self, name: str, position: int, text: Optional[str] = None):
        self.name = name
        super().__init__(f"unknown variable {name!r}", position, text)


class NonHomogeneousError(GrasscharError):
    """A generator handed to Buchberger's algorithm is not homogeneous"""


class ZeroPolynomialError(GrasscharError):
    """An operation that needs a leading monomial received the zero polynomial"""


class SealedRangeError(GrasscharError):
    """A sealed quotient was queried above its sealed degree range"""


class FamilyIdentityError(GrasscharError):
    """An internal cross-check between two constructions of a polynomial family failed"""


class UnsupportedParameterError(GrasscharError):
    """Parameters outside the supported range (t, case, gamma, n, k)"""


class UnknownClaimError(GrasscharError):
    """The requested claim id is not in the catalog"""


class CacheMismatchError(GrasscharError):
    """A cached Groebner basis differs from a fresh recomputation"""

    def __init__(self, key: str, message: str = "cached basis differs from recomputation"):
        self.key = key
        super().__init__(f"{key}: {message}")
