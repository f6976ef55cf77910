from typing import Any, Optional


class OuterdomError(Exception):
    """Base class for outerdom exceptions."""


class InvalidGraphError(OuterdomError):
    """Indicates that a graph does not satisfy its structural invariants."""


class CountMismatchError(InvalidGraphError):
    """Indicates that a MOP has the wrong number of chords."""


class CrossingChordsError(InvalidGraphError):
    """Indicates that two chords cross."""


class DuplicateOrBoundaryChordError(InvalidGraphError):
    """Indicates a repeated chord or a chord equal to a boundary edge."""


class BadIndexError(InvalidGraphError):
    """Indicates a vertex position outside 1..n."""


class NotAChordError(InvalidGraphError):
    """Indicates that a pair of positions is not a chord."""


class SideInvalidError(InvalidGraphError):
    """Indicates that one side of a Hamiltonian split is not a MOP."""

    def __init__(self, message: str, side: str) -> None:
        """Initialize the exception."""
        super().__init__(message)
        self.side = side


class SharedChordError(InvalidGraphError):
    """Indicates that the same chord is drawn on both sides of the cycle."""


class NotTriangulationError(InvalidGraphError):
    """Indicates that an edge list cannot be a plane triangulation."""


class NotHamiltonCycleError(InvalidGraphError):
    """Indicates that a vertex sequence is not a Hamilton cycle of the graph."""


class ConflictGraphNotBipartiteError(InvalidGraphError):
    """Indicates that the chords cannot be split into two noncrossing sides."""


class NotBandedError(InvalidGraphError):
    """Indicates an edge longer than the band width of a cyclic-band solver."""


class TooSmallError(OuterdomError):
    """Indicates an instance below the size an operation is defined for."""


class TooLargeError(OuterdomError):
    """Indicates an instance above a configured size limit."""


class SolverTooLargeError(TooLargeError):
    """Indicates that an exact solve was required beyond the solver limit."""


class PreconditionViolatedError(OuterdomError):
    """Indicates that a reduction step does not apply to the given graph."""


class ResultNotMaximalOuterplaneError(OuterdomError):
    """Indicates that a reduction produced something other than a MOP."""


class InvalidInputSetError(OuterdomError):
    """Indicates that a vertex set handed to a lift does not dominate."""


class CertificateError(OuterdomError):
    """Indicates that a checked certificate (lift, invariant) failed."""


class BoundViolatedError(OuterdomError):
    """Indicates a constructed set larger than a proven bound."""

    def __init__(self, message: str, payload: Optional[Any] = None) -> None:
        """Initialize the exception."""
        super().__init__(message)
        self.payload = payload


class NoHamiltonCycleError(OuterdomError):
    """Indicates that a graph has no Hamilton cycle."""


class NotFoundError(OuterdomError):
    """Indicates that an exhaustive search found nothing."""

    def __init__(self, message: str, tried: int) -> None:
        """Initialize the exception."""
        super().__init__(message)
        self.tried = tried


class UnknownNameError(OuterdomError):
    """Indicates an unknown named graph."""


class InvalidInputError(OuterdomError):
    """Indicates that an input file could not be decoded."""
