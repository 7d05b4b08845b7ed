"""Digraph Store.

Text format: line 1 is `n m`, followed by m lines `u v`, one arc each.
Lines starting with '#' are comments. The writer emits arcs in
lexicographic order with LF line ends.
"""

from pathlib import Path
from typing import Dict, Sequence, Tuple

from src.core.error_codes import DigraphErrorCode
from src.core.exceptions import DigraphException
from src.core.logger import get_logger
from src.models import Arc, Digraph
from src.stores.text_reader import TextReader, read_text

logger = get_logger(__name__)


class DigraphStore:
    """Reads and writes digraphs in the `n m` / `u v` text format."""

    def parse(self, text: str, source: str = "<input>") -> Digraph:
        """
        Parse a digraph, reporting the line and column of malformed input.

        Raises:
            FormatException: PARSE_FAILED
            DigraphException: LOOP_ARC, DIGON_PAIR or VERTEX_OUT_OF_RANGE,
                with the offending line in details
        """
        reader = TextReader(text, source)
        n_token, m_token = reader.next_line(2, "header `n m`")
        n = reader.integer(n_token, minimum=0)
        m = reader.integer(m_token, minimum=0)

        seen: Dict[Tuple[int, int], int] = {}
        for _ in range(m):
            u_token, v_token = reader.next_line(2, "arc `u v`")
            u = reader.integer(u_token)
            v = reader.integer(v_token)
            line = u_token.line
            for vertex, token in ((u, u_token), (v, v_token)):
                if not 1 <= vertex <= n:
                    raise DigraphException(
                        f"{source}:{line}:{token.column}: vertex {vertex} "
                        f"outside 1..{n}",
                        DigraphErrorCode.VERTEX_OUT_OF_RANGE,
                        {"vertex": vertex, "n": n, "line": line},
                    )
            if u == v:
                raise DigraphException(
                    f"{source}:{line}: loop arc ({u},{v})",
                    DigraphErrorCode.LOOP_ARC,
                    {"arc": [u, v], "line": line},
                )
            if (v, u) in seen:
                raise DigraphException(
                    f"{source}:{line}: arcs ({v},{u}) and ({u},{v}) form a digon",
                    DigraphErrorCode.DIGON_PAIR,
                    {"pair": sorted([u, v]), "lines": [seen[(v, u)], line]},
                )
            seen.setdefault((u, v), line)
        reader.expect_end()
        return Digraph(n, frozenset(Arc(u, v) for u, v in seen))

    def format(self, D: Digraph, comments: Sequence[str] = ()) -> str:
        """Canonical text: header, sorted arcs, then one '# ' line per comment."""
        lines = [f"{D.n} {D.arc_count}"]
        lines.extend(f"{u} {v}" for u, v in D.sorted_arcs())
        lines.extend(f"# {c}" for c in comments)
        return "\n".join(lines) + "\n"

    def load(self, path: str | Path) -> Digraph:
        D = self.parse(read_text(path), str(path))
        logger.debug("Loaded %r from %s", D, path)
        return D

    def save(self, path: str | Path, D: Digraph, comments: Sequence[str] = ()) -> None:
        Path(path).write_text(self.format(D, comments), encoding="ascii", newline="\n")


__all__ = ["DigraphStore"]
