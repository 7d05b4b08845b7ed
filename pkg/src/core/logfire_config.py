"""
Logfire Configuration Module

Optional Logfire export for snc-toolkit logs.

Usage:
    from src.core.logfire_config import initialize_logfire

    results = initialize_logfire()  # idempotent; safe to call at startup
    # results: {"configured": bool}
"""

import logging
from typing import Any, Dict

from src.core.config import settings
from src.core.logger import _get_logfire_module, setup_logfire_handler


class _LogfireState:
    """Internal state management for logfire configuration."""

    def __init__(self) -> None:
        self.configured = False

    def is_configured(self) -> bool:
        return self.configured

    def set_configured(self, value: bool) -> None:
        self.configured = value


_state = _LogfireState()


def setup_logfire() -> bool:
    """
    Configure logfire when enabled in settings.

    Returns:
        bool: True if logfire is configured, False otherwise
    """
    logger = logging.getLogger("snc_toolkit.logfire")

    if not settings.logfire__enabled or _state.is_configured():
        return _state.is_configured()

    logfire = _get_logfire_module()
    if logfire is None:
        logger.warning("Logfire enabled but the package is not installed")
        return False

    try:
        config_kwargs: Dict[str, Any] = {
            "service_name": settings.logfire__service_name,
            "environment": settings.logfire__environment,
            # never print the Logfire project link to stdout
            "console": False,
        }
        if settings.logfire__token:
            config_kwargs["token"] = settings.logfire__token.get_secret_value()

        logfire.configure(**config_kwargs)
        logger.info(
            "Logfire initialized for service: %s", settings.logfire__service_name
        )

        setup_logfire_handler()
        _state.set_configured(True)
        return True

    except Exception as e:
        logger.error("Failed to initialize logfire: %s", e)
        return False


def initialize_logfire() -> Dict[str, Any]:
    """
    Complete logfire initialization.

    Returns:
        dict: Initialization results
    """
    return {"configured": setup_logfire()}


def is_logfire_enabled() -> bool:
    """Check if logfire is enabled in settings."""
    return settings.logfire__enabled
