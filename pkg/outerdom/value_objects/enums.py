import enum


class Side(str, enum.Enum):
    """Side of a Hamilton cycle."""

    INTERIOR = "interior"
    EXTERIOR = "exterior"

    @property
    def other(self) -> "Side":
        """Return the opposite side."""
        return Side.EXTERIOR if self is Side.INTERIOR else Side.INTERIOR


class ReductionKind(str, enum.Enum):
    """Kinds of reduction steps used by the domination engine."""

    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    CLAIM1_DELETE = "Claim1Delete"
    CLAIM2_CONTRACT_BOTH = "Claim2ContractBoth"
    CLAIM2_CONTRACT_ONE = "Claim2ContractOne"
    FINAL_CONTRACT = "FinalContract"

    @property
    def is_claim(self) -> bool:
        """Return True for the steps taken inside the main proof."""
        return self not in {
            ReductionKind.R1,
            ReductionKind.R2,
            ReductionKind.R3,
            ReductionKind.R4,
        }


class VertexState(enum.IntEnum):
    """State of a sub-polygon endpoint in the MOP domination DP."""

    CHOSEN = 0
    DOMINATED = 1
    PENDING = 2


class BaseResolution(str, enum.Enum):
    """How the domination engine resolved its smallest graph."""

    SMALL = "small"
    DOMINATING_VERTEX = "dominating-vertex"
    STRIPED = "striped"
    FALLBACK = "fallback"


class Branch(str, enum.Enum):
    """Branch taken by the triangulation pipeline."""

    DOMINATING_VERTEX = "dominating-vertex"
    HABO = "habo"
    SIDE = "side"
    SIDE_EXACT = "side-exact"


class Suite(str, enum.Enum):
    """Acceptance suites run by `outerdom verify`."""

    ORACLE = "oracle"
    THM11 = "thm11"
    THM12 = "thm12"
    REDUCTIONS = "reductions"
    LEMMA31 = "lemma31"
    THM32 = "thm32"
    PIPELINE = "pipeline"
    STRUCTURE = "structure"


class OutputFormat(str, enum.Enum):
    """Output formats of the command line."""

    JSON = "json"
    TABLE = "table"
    DOT = "dot"


class SearchTarget(str, enum.Enum):
    """Bounds `outerdom search-counterexamples` looks for violations of."""

    LI = "li"
    MATHESON_TARJAN = "matheson-tarjan"
