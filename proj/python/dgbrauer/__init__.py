"""Exact computations with graded and differential graded algebras."""

from ._core import (
    Algebra,
    ParseError,
    PreconditionError,
    ValidationError,
    canonical,
    run,
    template,
)

__all__ = [
    "Algebra",
    "ParseError",
    "PreconditionError",
    "ValidationError",
    "canonical",
    "load",
    "run",
    "template",
]


def load(path):
    """Read and validate a presentation document from a file."""
    with open(path, encoding="utf-8") as fh:
        return Algebra.from_json(fh.read())
