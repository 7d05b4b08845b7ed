"""
Core Package

Configuration, logging and error handling shared by every service.
"""

# ruff: noqa: F401  # All imports are re-exported via __all__

from .config import Settings, settings  # noqa: F401
from .error_codes import (  # noqa: F401
    ERROR_CODE_MAP,
    ConfigurationErrorCode,
    ConjectureErrorCode,
    DigraphErrorCode,
    EliminationErrorCode,
    EnumerationErrorCode,
    ErrorCode,
    FarkasErrorCode,
    FormatErrorCode,
    LinalgErrorCode,
    get_error_info,
    get_exit_code,
)
from .exceptions import (  # noqa: F401
    ApplicationException,
    ConfigurationException,
    ConjectureException,
    DigraphException,
    EliminationException,
    EnumerationException,
    FarkasException,
    FormatException,
    LinalgException,
)
from .logfire_config import initialize_logfire, is_logfire_enabled  # noqa: F401
from .logger import (  # noqa: F401
    clear_instance_id,
    get_instance_id,
    get_logger,
    set_instance_id,
)

__all__ = [
    # Configuration
    "Settings",
    "settings",
    # Error handling
    "ErrorCode",
    "ConfigurationErrorCode",
    "DigraphErrorCode",
    "LinalgErrorCode",
    "FarkasErrorCode",
    "EliminationErrorCode",
    "ConjectureErrorCode",
    "EnumerationErrorCode",
    "FormatErrorCode",
    "ERROR_CODE_MAP",
    "get_exit_code",
    "get_error_info",
    # Exceptions
    "ApplicationException",
    "ConfigurationException",
    "DigraphException",
    "LinalgException",
    "FarkasException",
    "EliminationException",
    "ConjectureException",
    "EnumerationException",
    "FormatException",
    # Logger
    "get_logger",
    "set_instance_id",
    "get_instance_id",
    "clear_instance_id",
    # Logfire
    "initialize_logfire",
    "is_logfire_enabled",
]
