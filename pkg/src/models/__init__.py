from src.models.errors import (
    FriezeError,
    IllegalReductionError,
    IndexOutOfRangeError,
    InconsistentGrowthError,
    InvalidQuiddityError,
    InvalidTriangulationError,
    IOFailureError,
    LevelTooSmallError,
    NotACycleWordError,
    NotAOneError,
    NotInfiniteTypeError,
    NotSkeletalError,
    OverlappingPairsError,
    RankMismatchError,
    SubsetLimitError,
)
from src.models.frieze import FriezeTable, SubsetFamily
from src.models.growth import GrowthMethod, GrowthReport
from src.models.quiddity import BlockForm, FriezeType, QuidditySequence
from src.models.quiver import Arrow, NonOrientedCycle, VertexRole
from src.models.triangulation import (
    Boundary,
    EarInsertion,
    EarScript,
    QuiddityPair,
    SkeletalTriangulation,
)
from src.models.tube import IdentityReport, TubeModuleIndex
from src.models.verify import SuiteResult

__all__ = [
    "FriezeError",
    "IllegalReductionError",
    "IndexOutOfRangeError",
    "InconsistentGrowthError",
    "InvalidQuiddityError",
    "InvalidTriangulationError",
    "IOFailureError",
    "LevelTooSmallError",
    "NotACycleWordError",
    "NotAOneError",
    "NotInfiniteTypeError",
    "NotSkeletalError",
    "OverlappingPairsError",
    "RankMismatchError",
    "SubsetLimitError",
    "FriezeTable",
    "SubsetFamily",
    "GrowthMethod",
    "GrowthReport",
    "BlockForm",
    "FriezeType",
    "QuidditySequence",
    "Arrow",
    "NonOrientedCycle",
    "VertexRole",
    "Boundary",
    "EarInsertion",
    "EarScript",
    "QuiddityPair",
    "SkeletalTriangulation",
    "IdentityReport",
    "TubeModuleIndex",
    "SuiteResult",
]
