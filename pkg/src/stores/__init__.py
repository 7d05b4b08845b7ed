"""
Stores Package

Plain-text persistence: digraph files, matrix files and sweep checkpoints.
"""

from .checkpoint_store import Checkpoint, CheckpointStore
from .digraph_store import DigraphStore
from .matrix_store import MatrixStore
from .text_reader import TextReader, read_text

__all__ = [
    "Checkpoint",
    "CheckpointStore",
    "DigraphStore",
    "MatrixStore",
    "TextReader",
    "read_text",
]
