"""Tests for error codes, exceptions and settings."""

import pytest

from src.core.config import Settings
from src.core.error_codes import (
    ERROR_CODE_MAP,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_DEFECT,
    DigraphErrorCode,
    ErrorCode,
    FarkasErrorCode,
    FormatErrorCode,
    get_exit_code,
)
from src.core.exceptions import DigraphException, FormatException


def test_every_error_code_has_an_exit_code():
    for domain in ErrorCode.__subclasses__():
        for code in domain:
            assert code in ERROR_CODE_MAP


def test_solver_defects_exit_4():
    assert get_exit_code(FarkasErrorCode.UNVERIFIED_OUTCOME) == EXIT_INTERNAL_DEFECT
    assert get_exit_code("FARKAS_ITERATION_LIMIT") == EXIT_INTERNAL_DEFECT
    assert get_exit_code("UNKNOWN_CODE") == EXIT_INPUT_ERROR


def test_exception_string_and_dict():
    exc = DigraphException(
        "arcs (1,2) and (2,1) form a digon",
        DigraphErrorCode.DIGON_PAIR,
        {"pair": [1, 2]},
    )
    assert str(exc) == (
        "arcs (1,2) and (2,1) form a digon [DIGRAPH_DIGON_PAIR] "
        "Details: {'pair': [1, 2]}"
    )
    assert exc.to_dict()["code"] == "DIGRAPH_DIGON_PAIR"
    assert exc.exit_code == 1


def test_wrap_keeps_cause():
    cause = ValueError("bad token")
    exc = FormatException.wrap(
        cause, "Unreadable", FormatErrorCode.PARSE_FAILED, line=3
    )
    assert exc.cause is cause
    assert exc.details == {"line": 3}
    assert exc.to_dict()["cause"] == {"type": "ValueError", "message": "bad token"}


def test_settings_normalize_probabilities():
    assert Settings(random__p_forward="2/6").random__p_forward == "1/3"
    with pytest.raises(ValueError):
        Settings(random__p_backward="3/2")
    with pytest.raises(ValueError):
        Settings(log_level="verbose")


def test_snc_threads_read_from_environment(monkeypatch):
    monkeypatch.setenv("SNC_THREADS", "3")
    assert Settings().snc_threads == 3
    monkeypatch.setenv("SNC_THREADS", "0")
    with pytest.raises(ValueError):
        Settings()
