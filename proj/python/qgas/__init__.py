"""Mono-energetic ideal Bose gas: order-3/2 polylogarithms, the self-consistent
fugacity equation, and regime classification."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    ConvergenceError,
    DomainError,
    PreconditionError,
    TruncationError,
)

__version__ = "0.1.0"
