"""Exception types shared across the package."""


class SalemforgeError(Exception):
    """Base class for all package-specific errors."""


class NoRealRoot(SalemforgeError):
    """Root isolation was asked for a polynomial without real roots."""


class EndpointIsRoot(SalemforgeError):
    """A Sturm count was requested on an interval whose endpoint is a root."""


class DegenerateSchurStep(SalemforgeError):
    """A Schur-Cohn leading parameter vanished; caller must use a fallback."""


class InvalidOrbitData(SalemforgeError):
    """Orbit data violates d >= 1, n_i >= 1 or m <= 2d-1."""


class StructureViolation(SalemforgeError):
    """A structural matrix identity failed; signals an implementation bug."""


class InvalidRoot(SalemforgeError):
    """A reflection vector does not have self-intersection -2."""


class IndexClash(SalemforgeError):
    """The three indices of a quadratic generator are not distinct/in range."""


class NotAnIsometry(SalemforgeError):
    """A matrix handed to the Weyl machinery does not preserve the form."""


class InvalidKey(SalemforgeError):
    """A spectrum key violates the preconditions of the requested operation."""


class BoundTooSmall(SalemforgeError):
    """Enumeration ran out of candidates below the entry bound."""


class ToleranceNotReached(SalemforgeError):
    """Limit verification could not certify the requested gap."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class CensusContradiction(SalemforgeError):
    """A census reported outside != 1 where theory forces exactly one."""


class ModulusMismatch(SalemforgeError):
    """Residue operands live in different residue contexts."""


class NotInvertible(SalemforgeError):
    """A residue element shares a factor with the modulus, so no inverse."""


class StoreCorrupt(SalemforgeError):
    """A cache record could not be parsed (corrupt line)."""
