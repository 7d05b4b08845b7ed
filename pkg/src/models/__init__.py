"""
Models Package

Immutable value types shared by the services.
"""

from .digraph import Arc, BlowUp, Digraph, NeighborhoodProfile
from .matrix import RatMatrix, RatVector, as_fraction, integer_scaling

__all__ = [
    "Arc",
    "BlowUp",
    "Digraph",
    "NeighborhoodProfile",
    "RatMatrix",
    "RatVector",
    "as_fraction",
    "integer_scaling",
]
