"""Exception hierarchy shared by every module of the package."""


class SignedGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(SignedGraphError, ValueError):
    pass


class InvalidColoring(SignedGraphError, ValueError):
    pass


class InvalidClass(SignedGraphError, ValueError):
    pass


class UnknownVertex(SignedGraphError, KeyError):
    pass


class MalformedRotation(SignedGraphError, ValueError):
    pass


class NonPlanar(SignedGraphError):
    pass


class NotNearTriangulation(SignedGraphError):
    pass


class NotOnOuterFace(SignedGraphError):
    pass


class NotBalanced(SignedGraphError):
    """Raised when an algorithm needs a balanced signature.

    ``witness`` holds a cycle (as a vertex sequence) with an odd number of
    negative edges, when one is known.
    """

    def __init__(self, message="signature is not balanced", witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidLists(SignedGraphError, ValueError):
    pass


class ListTooSmall(InvalidLists):
    pass


class PrecolorInvalid(SignedGraphError, ValueError):
    pass


class NotWagner(SignedGraphError):
    pass


class BadPin(SignedGraphError, ValueError):
    pass


class SharedCliqueMismatch(SignedGraphError):
    pass


class ColoringsDisagree(SignedGraphError):
    pass


class NotDecomposable(SignedGraphError):
    pass


class Exhausted(SignedGraphError):
    pass


class OracleCapExceeded(SignedGraphError):
    pass


class ColoringDefect(SignedGraphError, AssertionError):
    """A constructive routine produced a coloring the checker rejects.

    Valid inputs can never produce it, so it always indicates a bug.
    """


class FormatError(SignedGraphError, ValueError):
    pass
