"""
Line-oriented reading shared by the text stores.

Blank lines and lines starting with '#' are skipped; every other line is
split on single spaces and each token keeps its 1-based line and column for
diagnostics.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, NoReturn, Tuple

from src.core.error_codes import FormatErrorCode
from src.core.exceptions import FormatException

_INTEGER = re.compile(r"-?\d+")
_RATIONAL = re.compile(r"-?\d+(/\d+)?")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def read_text(path: str | Path) -> str:
    """
    Raises:
        FormatException: FILE_NOT_FOUND
    """
    try:
        return Path(path).read_text(encoding="ascii")
    except FileNotFoundError as exc:
        raise FormatException.wrap(
            exc, f"No such file: {path}", FormatErrorCode.FILE_NOT_FOUND, path=str(path)
        ) from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatException.wrap(
            exc, f"Cannot read {path}", FormatErrorCode.PARSE_FAILED, path=str(path)
        ) from exc


class TextReader:
    """Cursor over the significant lines of a text payload."""

    def __init__(self, text: str, source: str = "<input>") -> None:
        self.source = source
        self.lines: List[Tuple[int, List[Token]]] = []
        for number, raw in enumerate(text.split("\n"), start=1):
            if not raw.strip() or raw.startswith("#"):
                continue
            tokens = []
            column = 1
            for part in raw.rstrip("\r").split(" "):
                if part:
                    tokens.append(Token(part, number, column))
                column += len(part) + 1
            self.lines.append((number, tokens))
        self.position = 0

    def fail(self, message: str, line: int, column: int = 1) -> NoReturn:
        raise FormatException(
            f"{self.source}:{line}:{column}: {message}",
            FormatErrorCode.PARSE_FAILED,
            {"source": self.source, "line": line, "column": column},
        )

    def next_line(self, expected: int | Tuple[int, ...], what: str) -> List[Token]:
        """Next significant line, whose token count must be one of expected."""
        counts = (expected,) if isinstance(expected, int) else expected
        if self.position >= len(self.lines):
            last = self.lines[-1][0] + 1 if self.lines else 1
            self.fail(f"unexpected end of input, expected {what}", last)
        number, tokens = self.lines[self.position]
        self.position += 1
        if len(tokens) not in counts:
            limit = max(counts)
            column = tokens[limit].column if len(tokens) > limit else 1
            wanted = " or ".join(str(count) for count in counts)
            self.fail(
                f"expected {wanted} values for {what}, found {len(tokens)}",
                number,
                column,
            )
        return tokens

    def expect_end(self) -> None:
        if self.position < len(self.lines):
            number, tokens = self.lines[self.position]
            self.fail("unexpected trailing content", number, tokens[0].column)

    def integer(self, token: Token, minimum: int | None = None) -> int:
        if not _INTEGER.fullmatch(token.text):
            self.fail(f"expected an integer, found {token.text!r}", *_at(token))
        value = int(token.text)
        if minimum is not None and value < minimum:
            self.fail(f"expected a value >= {minimum}, found {value}", *_at(token))
        return value

    def rational(self, token: Token) -> str:
        """Validated 'p' or 'p/q' text; q must be positive."""
        match = _RATIONAL.fullmatch(token.text)
        if match is None or (match.group(1) and int(match.group(1)[1:]) == 0):
            self.fail(f"expected a rational p/q, found {token.text!r}", *_at(token))
        return token.text


def _at(token: Token) -> Tuple[int, int]:
    return token.line, token.column


__all__ = ["Token", "TextReader", "read_text"]
