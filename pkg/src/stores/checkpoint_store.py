"""Checkpoint Store.

A sweep checkpoint is one line `mode n next_index violations_so_far seed dedup
prune`, with dedup and prune written as 0 or 1. A four-field line from an older
run reads with seed 0 and both filters off.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from src.core.logger import get_logger
from src.stores.text_reader import TextReader, Token, read_text

logger = get_logger(__name__)

SWEEP_MODES = ("all", "tournaments", "random")


class Checkpoint(BaseModel):
    """Resumable sweep position together with the settings that shaped it."""

    mode: str = Field(..., description="Sweep mode")
    n: int = Field(..., ge=1, description="Vertex count")
    next_index: int = Field(..., ge=0, description="First index not yet processed")
    violations_so_far: int = Field(
        default=0, ge=0, description="Cross-check violations before next_index"
    )
    seed: int = Field(default=0, ge=0, description="Random-mode seed")
    dedup: bool = Field(default=False, description="Isomorphism dedup was on")
    prune: bool = Field(default=False, description="Out-degree prune was on")

    def to_line(self) -> str:
        return (
            f"{self.mode} {self.n} {self.next_index} {self.violations_so_far} "
            f"{self.seed} {int(self.dedup)} {int(self.prune)}\n"
        )


class CheckpointStore:
    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)

    def exists(self) -> bool:
        return self.path.exists()

    def read(self) -> Checkpoint:
        """
        Raises:
            FormatException: FILE_NOT_FOUND or PARSE_FAILED
        """
        reader = TextReader(read_text(self.path), str(self.path))
        tokens = reader.next_line(
            (4, 7), "`mode n next_index violations_so_far seed dedup prune`"
        )
        mode, n, next_index, violations = tokens[:4]
        if mode.text not in SWEEP_MODES:
            reader.fail(f"unknown sweep mode {mode.text!r}", mode.line, mode.column)
        reader.expect_end()
        filters: Dict[str, Any] = {}
        if len(tokens) == 7:
            seed, dedup, prune = tokens[4:]
            filters = {
                "seed": reader.integer(seed, minimum=0),
                "dedup": _flag(reader, dedup),
                "prune": _flag(reader, prune),
            }
        return Checkpoint(
            mode=mode.text,
            n=reader.integer(n, minimum=1),
            next_index=reader.integer(next_index, minimum=0),
            violations_so_far=reader.integer(violations, minimum=0),
            **filters,
        )

    def read_optional(self) -> Optional[Checkpoint]:
        return self.read() if self.exists() else None

    def write(self, checkpoint: Checkpoint) -> None:
        """Replace the checkpoint atomically."""
        tmp = self.path.with_name(self.path.name + ".tmp")
        tmp.write_text(checkpoint.to_line(), encoding="ascii", newline="\n")
        os.replace(tmp, self.path)
        logger.debug("Checkpoint written to %s: %s", self.path, checkpoint.to_line())


def _flag(reader: TextReader, token: Token) -> bool:
    if token.text not in ("0", "1"):
        reader.fail(f"expected 0 or 1, found {token.text!r}", token.line, token.column)
    return token.text == "1"


__all__ = ["Checkpoint", "CheckpointStore", "SWEEP_MODES"]
