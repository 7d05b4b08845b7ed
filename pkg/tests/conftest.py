from pathlib import Path
from typing import Callable

import pytest

from src.core.config import settings
from src.models import Digraph
from src.services.digraph_service import build_digraph


@pytest.fixture
def test_settings():
    return settings


@pytest.fixture
def override_settings(monkeypatch) -> Callable[..., None]:
    """Temporarily replace fields of the global settings object."""

    def apply(**values) -> None:
        for name, value in values.items():
            monkeypatch.setattr(settings, name, value)

    return apply


@pytest.fixture
def path2() -> Digraph:
    """Single arc 1 -> 2."""
    return build_digraph(2, [(1, 2)])


@pytest.fixture
def cycle3() -> Digraph:
    return build_digraph(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def out_star() -> Digraph:
    return build_digraph(3, [(1, 2), (1, 3)])


@pytest.fixture
def transitive3() -> Digraph:
    return build_digraph(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], str]:
    def write(name: str, content: str) -> str:
        path = tmp_path / name
        path.write_text(content, encoding="ascii")
        return str(path)

    return write
