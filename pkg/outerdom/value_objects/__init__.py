"""Outerdom value objects."""

__all__ = (
    # objects
    "ConsecutivePair",
    "Rational",
    "Section",
    # enums
    "BaseResolution",
    "Branch",
    "OutputFormat",
    "ReductionKind",
    "SearchTarget",
    "Side",
    "Suite",
    "VertexState",
    # type aliases
    "Pair",
)

from outerdom.value_objects.enums import (
    BaseResolution,
    Branch,
    OutputFormat,
    ReductionKind,
    SearchTarget,
    Side,
    Suite,
    VertexState,
)
from outerdom.value_objects.types import ConsecutivePair, Pair, Rational, Section
