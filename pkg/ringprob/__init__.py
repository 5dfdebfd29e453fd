"""
ringprob package initialization.
"""

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "cli",
    "config",
    "errors",
    "neumann",
    "probability",
    "ring_core",
    "schema",
    "storage",
    "subobjects",
]
