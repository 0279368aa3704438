"""Domain models for pcube."""

from pcube.models.census import CensusReport, CheckName, CheckTally, PerGraphRow, QdEnumeration
from pcube.models.cycles import CycleRecord, IntersectionKind, IntertwiningRecord, XEmbedding
from pcube.models.events import BudgetEvent, ViolationEvent
from pcube.models.graph import BasicInvariants, DistanceMatrix, Graph
from pcube.models.theta import Coordinatization, Halfspaces, RecognitionResult, ThetaPartition
from pcube.models.traverse import PasteCycleWitness, Traverse, TraverseSearch, TwoPossibilities
from pcube.models.zones import EulerReport, TreeZoneVerdict, ZoneGraph

__all__ = [
    "BasicInvariants",
    "BudgetEvent",
    "CensusReport",
    "CheckName",
    "CheckTally",
    "Coordinatization",
    "CycleRecord",
    "DistanceMatrix",
    "EulerReport",
    "Graph",
    "Halfspaces",
    "IntersectionKind",
    "IntertwiningRecord",
    "PasteCycleWitness",
    "PerGraphRow",
    "QdEnumeration",
    "RecognitionResult",
    "ThetaPartition",
    "Traverse",
    "TraverseSearch",
    "TreeZoneVerdict",
    "TwoPossibilities",
    "ViolationEvent",
    "XEmbedding",
    "ZoneGraph",
]
