"""
Error Codes

Standardized error codes for snc-toolkit.
"""

from enum import StrEnum
from types import MappingProxyType
from typing import Any, Dict, Mapping


class ErrorCode(StrEnum):
    """Base error code enum (string-based)."""


class ConfigurationErrorCode(ErrorCode):
    """Configuration-related error codes."""

    INVALID_CONFIG = "CONFIGURATION_INVALID_CONFIG"


class DigraphErrorCode(ErrorCode):
    """Digraph construction and editing error codes."""

    LOOP_ARC = "DIGRAPH_LOOP_ARC"
    DIGON_PAIR = "DIGRAPH_DIGON_PAIR"
    VERTEX_OUT_OF_RANGE = "DIGRAPH_VERTEX_OUT_OF_RANGE"
    ARC_NOT_PRESENT = "DIGRAPH_ARC_NOT_PRESENT"
    NON_POSITIVE_MULTIPLICITY = "DIGRAPH_NON_POSITIVE_MULTIPLICITY"


class LinalgErrorCode(ErrorCode):
    """Exact linear algebra error codes."""

    DIMENSION_MISMATCH = "LINALG_DIMENSION_MISMATCH"
    NOT_SQUARE = "LINALG_NOT_SQUARE"


class FarkasErrorCode(ErrorCode):
    """Feasibility solver error codes. Both signal a solver defect."""

    ITERATION_LIMIT = "FARKAS_ITERATION_LIMIT"
    UNVERIFIED_OUTCOME = "FARKAS_UNVERIFIED_OUTCOME"


class EliminationErrorCode(ErrorCode):
    """Column elimination error codes."""

    SIGN_PRECONDITION_VIOLATED = "ELIMINATION_SIGN_PRECONDITION_VIOLATED"
    INVALID_DELETION_WITNESS = "ELIMINATION_INVALID_DELETION_WITNESS"


class ConjectureErrorCode(ErrorCode):
    """Conjecture checker error codes."""

    EMPTY_DIGRAPH = "CONJECTURE_EMPTY_DIGRAPH"
    NOT_A_COUNTEREXAMPLE = "CONJECTURE_NOT_A_COUNTEREXAMPLE"


class EnumerationErrorCode(ErrorCode):
    """Enumeration and sweep error codes."""

    SIZE_CAP_EXCEEDED = "ENUMERATION_SIZE_CAP_EXCEEDED"
    INVALID_PROBABILITY = "ENUMERATION_INVALID_PROBABILITY"
    INVALID_SPEC = "ENUMERATION_INVALID_SPEC"


class FormatErrorCode(ErrorCode):
    """Text format error codes."""

    PARSE_FAILED = "FORMAT_PARSE_FAILED"
    FILE_NOT_FOUND = "FORMAT_FILE_NOT_FOUND"


# Error code to process exit code mapping
#
# CONVENTIONS FOR ADDING NEW ERROR CODES:
# 1. Error code values MUST include a domain prefix (DIGRAPH_*, LINALG_*, ...)
# 2. Always add the corresponding exit code here
# 3. Exit code guidelines:
#    - 1: input errors and violated preconditions
#    - 4: solver defects (a result that failed its own verification)
#    Codes 2 and 3 are reserved for conjecture failures and cross-check
#    violations and are never produced by exceptions.
#
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CONJECTURE_FAILS = 2
EXIT_CROSS_CHECK_VIOLATION = 3
EXIT_INTERNAL_DEFECT = 4

ERROR_CODE_MAP: Mapping[ErrorCode, int] = MappingProxyType(
    {
        ConfigurationErrorCode.INVALID_CONFIG: EXIT_INPUT_ERROR,
        # Digraph errors
        DigraphErrorCode.LOOP_ARC: EXIT_INPUT_ERROR,
        DigraphErrorCode.DIGON_PAIR: EXIT_INPUT_ERROR,
        DigraphErrorCode.VERTEX_OUT_OF_RANGE: EXIT_INPUT_ERROR,
        DigraphErrorCode.ARC_NOT_PRESENT: EXIT_INPUT_ERROR,
        DigraphErrorCode.NON_POSITIVE_MULTIPLICITY: EXIT_INPUT_ERROR,
        # Linear algebra errors
        LinalgErrorCode.DIMENSION_MISMATCH: EXIT_INPUT_ERROR,
        LinalgErrorCode.NOT_SQUARE: EXIT_INPUT_ERROR,
        # Solver defects
        FarkasErrorCode.ITERATION_LIMIT: EXIT_INTERNAL_DEFECT,
        FarkasErrorCode.UNVERIFIED_OUTCOME: EXIT_INTERNAL_DEFECT,
        # Elimination errors
        EliminationErrorCode.SIGN_PRECONDITION_VIOLATED: EXIT_INPUT_ERROR,
        EliminationErrorCode.INVALID_DELETION_WITNESS: EXIT_INPUT_ERROR,
        # Conjecture errors
        ConjectureErrorCode.EMPTY_DIGRAPH: EXIT_INPUT_ERROR,
        ConjectureErrorCode.NOT_A_COUNTEREXAMPLE: EXIT_INPUT_ERROR,
        # Enumeration errors
        EnumerationErrorCode.SIZE_CAP_EXCEEDED: EXIT_INPUT_ERROR,
        EnumerationErrorCode.INVALID_PROBABILITY: EXIT_INPUT_ERROR,
        EnumerationErrorCode.INVALID_SPEC: EXIT_INPUT_ERROR,
        # Format errors
        FormatErrorCode.PARSE_FAILED: EXIT_INPUT_ERROR,
        FormatErrorCode.FILE_NOT_FOUND: EXIT_INPUT_ERROR,
    }
)


def _get_exit_code_for_string(error_code_str: str) -> int:
    """Helper function to get the exit code for a string error code."""
    for code in ERROR_CODE_MAP:
        if code.value == error_code_str:
            return ERROR_CODE_MAP[code]
    return EXIT_INPUT_ERROR


def get_exit_code(error_code: ErrorCode | str) -> int:
    """
    Get the process exit code for an error code.

    Args:
        error_code: Error code enum or string

    Returns:
        Exit code (defaults to 1 if not found)
    """
    if isinstance(error_code, ErrorCode):
        return ERROR_CODE_MAP.get(error_code, EXIT_INPUT_ERROR)
    return _get_exit_code_for_string(error_code)


def get_error_info(error_code: ErrorCode | str) -> Dict[str, Any]:
    """
    Get error information including the exit code.

    Args:
        error_code: Error code enum or string

    Returns:
        Dictionary with error information
    """
    code_value = error_code.value if isinstance(error_code, ErrorCode) else error_code
    return {"error_code": code_value, "exit_code": get_exit_code(error_code)}
