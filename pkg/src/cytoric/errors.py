"""Exception hierarchy.

Every rejection raised by the library is a subclass of :class:`CytoricError`.
The CLI maps :class:`CrossCheckError` subclasses to exit code 3 and every
other library error to exit code 1.
"""


class CytoricError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(CytoricError, ValueError):
    pass


class UnboundedPolytope(CytoricError):
    pass


class FanError(CytoricError):
    """Raised when a ray/cone configuration is rejected.

    ``cones`` names the offending max cones (as tuples of ray indices).
    """

    def __init__(self, message, cones=()):
        super().__init__(message)
        self.cones = tuple(cones)


class NotSimplicial(FanError):
    pass


class TorusFactor(FanError):
    pass


class NotAFan(FanError):
    pass


class NotComplete(FanError):
    pass


class WrongDegree(CytoricError):
    pass


class IndeterminateChase(CytoricError):
    pass


class UnknownEntry(CytoricError, KeyError):
    def __str__(self):
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class NonPrimitiveConfiguration(CytoricError):
    pass


class UnsupportedWeights(CytoricError):
    pass


class ValidationRejected(CytoricError):
    """A Calabi-Yau input failed one of the named validation checks."""

    def __init__(self, check, message):
        super().__init__(f"{check}: {message}")
        self.check = check


class AdjunctionFailed(ValidationRejected):
    def __init__(self, message):
        super().__init__("adjunction", message)


class NotCertified(CytoricError):
    pass


class CrossCheckError(CytoricError):
    """An internal oracle disagreed with the primary computation."""


class CrossCheckFailed(CrossCheckError):
    pass


class NonIntegerEuler(CrossCheckError):
    pass


class NonIntegerSignatureTerm(CrossCheckError):
    pass
