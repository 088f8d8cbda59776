"""Exception hierarchy shared by every facehit module."""


class FacehitError(Exception):
    """Base class for all library errors."""


class ParseError(FacehitError):
    """Malformed PLG text."""


class InvalidEmbedding(FacehitError):
    """Rotation system, nesting or Euler check is inconsistent."""


class UnknownVertex(FacehitError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class PreconditionViolated(FacehitError):
    """Input does not satisfy the assumptions of the requested construction.

    ``reason`` is a short machine-readable tag (``"isolated-vertex"``,
    ``"self-loop"``, ``"2-face"``, ...) and ``where`` names the offending
    vertex, edge or face.
    """

    def __init__(self, reason: str, where=None, message: str | None = None):
        self.reason = reason
        self.where = where
        if message is None:
            message = reason if where is None else f"{reason}: {where}"
        super().__init__(message)


class NonConvergence(FacehitError):
    pass


class NotAChord(FacehitError):
    pass


class WouldSelfLoop(FacehitError):
    pass


class DegreeTooLow(FacehitError):
    pass


class VertexAlreadyHappy(FacehitError):
    pass


class NoTransferEdge(FacehitError):
    pass


class SelfLoopPresent(FacehitError):
    pass


class NotFourColorable(FacehitError):
    pass


class NotATriangulation(FacehitError):
    pass


class NotIndependent(FacehitError):
    pass


class BudgetExceeded(FacehitError):
    pass


class BadParameter(FacehitError, ValueError):
    pass
