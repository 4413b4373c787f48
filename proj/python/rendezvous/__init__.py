"""Symmetric rendezvous in a disk."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DegenerateInstanceError,
    Instance,
    InvalidStrategyError,
    NumericDomainError,
    OutOfValidatedRangeError,
    Strategy,
)

__all__ = [
    "DegenerateInstanceError",
    "Instance",
    "InvalidStrategyError",
    "NumericDomainError",
    "OutOfValidatedRangeError",
    "Strategy",
]
