"""Exact combinatorics of splitting types and boundary divisors on Hurwitz spaces."""

from hurwitz_divisors.errors import (
    DomainError,
    EmptySearchError,
    ExclusionError,
    MissingChainDataError,
    PreconditionError,
    TieError,
)
from hurwitz_divisors.p1bundles import SplittingType
from hurwitz_divisors.coverclass import CoverClass, GreedyTrajectory, decompose
from hurwitz_divisors.acceptable import AcceptabilityConfig, Condition3
from hurwitz_divisors.boundary import ChainData, Partition, StratumLabel

__all__ = [
    "AcceptabilityConfig",
    "ChainData",
    "Condition3",
    "CoverClass",
    "DomainError",
    "EmptySearchError",
    "ExclusionError",
    "GreedyTrajectory",
    "MissingChainDataError",
    "Partition",
    "PreconditionError",
    "SplittingType",
    "StratumLabel",
    "TieError",
    "decompose",
]
