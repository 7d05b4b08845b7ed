"""Matrix Store.

Text format: line 1 is `rows cols`, then one line per row with
space-separated entries written as `p/q`, or `p` when the denominator is 1.
Vectors are stored as single-column matrices.
"""

from pathlib import Path

from src.core.error_codes import LinalgErrorCode
from src.core.exceptions import LinalgException
from src.models import RatMatrix, RatVector
from src.stores.text_reader import TextReader, read_text


class MatrixStore:
    """Reads and writes exact rational matrices and vectors."""

    def parse(self, text: str, source: str = "<input>") -> RatMatrix:
        """
        Raises:
            FormatException: PARSE_FAILED with line and column
        """
        reader = TextReader(text, source)
        rows_token, cols_token = reader.next_line(2, "header `rows cols`")
        n_rows = reader.integer(rows_token, minimum=0)
        n_cols = reader.integer(cols_token, minimum=0)
        rows = []
        for r in range(n_rows):
            if n_cols == 0:
                rows.append(())
                continue
            tokens = reader.next_line(n_cols, f"row {r + 1}")
            rows.append(tuple(reader.rational(t) for t in tokens))
        reader.expect_end()
        return RatMatrix.from_rows(rows, n_cols)

    def parse_vector(self, text: str, source: str = "<input>") -> RatVector:
        """
        Raises:
            FormatException: PARSE_FAILED
            LinalgException: DIMENSION_MISMATCH unless the matrix has one column
        """
        M = self.parse(text, source)
        if M.n_cols != 1:
            raise LinalgException(
                f"{source}: a vector needs exactly one column, found {M.n_cols}",
                LinalgErrorCode.DIMENSION_MISMATCH,
                {"shape": list(M.shape), "source": source},
            )
        return M.column(0)

    def format(self, M: RatMatrix) -> str:
        lines = [f"{M.n_rows} {M.n_cols}"]
        lines.extend(" ".join(str(x) for x in row) for row in M.rows)
        return "\n".join(lines) + "\n"

    def format_vector(self, v: RatVector) -> str:
        return self.format(RatMatrix.from_columns([v], v.dim))

    def load(self, path: str | Path) -> RatMatrix:
        return self.parse(read_text(path), str(path))

    def load_vector(self, path: str | Path) -> RatVector:
        return self.parse_vector(read_text(path), str(path))


__all__ = ["MatrixStore"]
