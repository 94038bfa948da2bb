#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.


class PConnectError(ValueError):
    """Base class of all pconnect errors."""
    pass


class GroupMismatchError(PConnectError):
    """Operands belong to different deck groups."""
    pass


class RingMismatchError(PConnectError):
    """Operands belong to different coefficient rings."""
    pass


class DimensionError(PConnectError):
    """Matrix dimensions or index lists do not agree."""
    pass


class DivisionByZeroError(PConnectError, ZeroDivisionError):
    """Division by a series which is zero to precision."""
    pass


class AdmissibilityError(PConnectError):
    """Orbit relation is not a valid gradient-like order."""
    pass


class RegimeError(PConnectError):
    """Coefficient regime does not fit the deck group."""
    pass


class DegreeError(PConnectError):
    """Orbit record or incidence does not drop degree by exactly one."""
    pass


class PathError(PConnectError):
    """Edge path is not consecutive."""
    pass


class HomomorphismError(PConnectError):
    """Generator map does not induce a group isomorphism."""
    pass


class NotAComplexError(PConnectError):
    """Boundary maps do not compose to zero."""
    pass


class InconsistentDataError(PConnectError):
    """Incidence or Morse data violate the boundary condition."""
    pass


class InsufficientPrecisionError(PConnectError):
    """
    Novikov reduction ran out of known coefficients.
    
    Attributes:
        pivot: (str, str) or None
            Row and column id of the entry which could not be decided.
    """
    
    
    def __init__(self, message, pivot=None):
        super().__init__(message)
        self.pivot = pivot


class SchemaError(PConnectError):
    """
    Input document cannot be parsed.
    
    Attributes:
        location: str or None
            Location of the problem within the document.
    """
    
    
    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location
