"""Exact q-series engine: theta quotients, level-2 modular forms, virtual-bundle
expansions and the odd-dimensional cancellation-identity verifier."""

from ._kernel import BACKEND as KERNEL_BACKEND
from .graded import GradedPoly, OddProductError, PolyRing
from .series import (
    PolyCoeffRing,
    QQ,
    QSeries,
    RationalRing,
    RingMismatchError,
    TruncationError,
    poly_series_ring,
)

__all__ = [
    "KERNEL_BACKEND",
    "GradedPoly",
    "OddProductError",
    "PolyRing",
    "PolyCoeffRing",
    "QQ",
    "QSeries",
    "RationalRing",
    "RingMismatchError",
    "TruncationError",
    "poly_series_ring",
]
