"""Error hierarchy for frieze computations.

Every domain failure raises a subclass of FriezeError. The ``code`` class
attribute is the short name the CLI prints next to the message, so callers
can tell the failure kind apart without parsing text.
"""


class FriezeError(Exception):
    """Base class for all domain errors."""

    code: str = "FriezeError"

    def __init__(self, message: str | None = None):
        super().__init__(message or self.code)


class InvalidQuiddityError(FriezeError):
    """Raised when a quiddity sequence is empty or has a non-positive entry."""

    code = "InvalidQuiddity"


class NotAOneError(FriezeError):
    """Raised when a reduction targets an entry that is not 1."""

    code = "NotAOne"


class IllegalReductionError(FriezeError):
    """Raised when a 1 cannot be reduced (neighbour is 1, or (1,k) with k < 3)."""

    code = "IllegalReduction"


class NotInfiniteTypeError(FriezeError):
    """Raised when an operation needs a quiddity sequence of an infinite frieze."""

    code = "NotInfiniteType"


class NotSkeletalError(FriezeError):
    """Raised for trivial (2,...,2) sequences or sequences containing 1's."""

    code = "NotSkeletal"


class IndexOutOfRangeError(FriezeError):
    """Raised for frieze windows above the row of 0's."""

    code = "IndexOutOfRange"


class NotACycleWordError(FriezeError):
    """Raised when an arrow word is oriented or malformed."""

    code = "NotACycleWord"


class InvalidTriangulationError(FriezeError):
    """Raised when arc data does not describe a skeletal triangulation."""

    code = "InvalidTriangulation"


class RankMismatchError(FriezeError):
    """Raised when a tube index has a rank different from the quiddity length."""

    code = "RankMismatch"


class OverlappingPairsError(FriezeError):
    """Raised when excluded pairs overlap or leave the window."""

    code = "OverlappingPairs"


class LevelTooSmallError(FriezeError):
    """Raised when the alternating-sum identity is asked for below level 3."""

    code = "LevelTooSmall"


class InconsistentGrowthError(FriezeError):
    """Raised when two growth computations disagree."""

    code = "InconsistentGrowth"


class IOFailureError(FriezeError):
    """Raised when a rendering cannot be written."""

    code = "IOFailure"


class SubsetLimitError(FriezeError):
    """Raised when a subset-sum window is longer than the configured limit."""

    code = "SubsetLimit"
