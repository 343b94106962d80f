"""Exception types raised across the package."""


class HalfspaceError(ValueError):
    """Base class for input and precondition errors."""


class DimensionMismatch(HalfspaceError):
    pass


class EmptyPolyhedron(HalfspaceError):
    pass


class PointNotInPolyhedron(HalfspaceError):
    pass


class NotAFace(HalfspaceError):
    pass


class MultiArrangementUnsupported(HalfspaceError):
    pass


class DeskScaleExceeded(HalfspaceError):
    pass


class InconsistentInput(HalfspaceError):
    pass


class LoopElement(HalfspaceError):
    pass


class CertificateError(AssertionError):
    """An internally produced witness or certificate failed verification.

    This signals a bug, never a property of the input.
    """
