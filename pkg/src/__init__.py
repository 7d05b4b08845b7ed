"""
snc-toolkit Package

Exact-arithmetic checkers for six linear-algebra formulations of the
second-neighborhood conjecture on oriented graphs.
"""

__version__ = "0.1.0"

__all__ = [
    "cli",
    "core",
    "models",
    "services",
    "stores",
]
