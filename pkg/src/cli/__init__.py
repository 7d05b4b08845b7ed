"""
CLI Package

Subcommands of the snc-toolkit entry point and their JSON-line output models.
"""

from .commands import cmd_blowup, cmd_check, cmd_farkas, cmd_matrix, cmd_sweep

__all__ = ["cmd_check", "cmd_matrix", "cmd_blowup", "cmd_sweep", "cmd_farkas"]
