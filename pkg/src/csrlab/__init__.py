"""Sparse recovery under side constraints.

Subpackages cover coherence-minimizing sensing matrix design, sparse phase
retrieval (with and without dictionary learning), joint-sparse covariance
reformulations, exact constant-modulus antenna selection by spatial
branch-and-bound, and desk-scale null-space-property certification, on top
of small self-contained LP/SDP/QCQP solvers.
"""

from .errors import ConfigError, InvalidInputError, ResourceBudgetError
from .rng import complex_gaussian, make_rng, substream

__all__ = [
    "ConfigError",
    "InvalidInputError",
    "ResourceBudgetError",
    "complex_gaussian",
    "make_rng",
    "substream",
]

__version__ = "0.1.0"
