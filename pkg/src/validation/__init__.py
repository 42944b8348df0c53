"""Integrity checks for solver answers and benchmark tables."""

from .integrity_checks import collection_checks, solution_checks, summarize

__all__ = [
    "solution_checks",
    "collection_checks",
    "summarize",
]
