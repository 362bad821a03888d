"""Orbit structure, orbital similarity and self-similar graph sequences."""

import json

from . import _core
from ._core import (
    ConvergenceError,
    DisconnectedError,
    InvalidArgument,
    InvalidDivisorMatrix,
    NotEquitableError,
    ParseError,
    ResourceError,
    SelfsimError,
    VerificationError,
    family_names,
)

__version__ = _core.__version__

__all__ = [
    "analyze",
    "compare",
    "entropy",
    "family_names",
    "generate",
    "sequence",
    "ConvergenceError",
    "DisconnectedError",
    "InvalidArgument",
    "InvalidDivisorMatrix",
    "NotEquitableError",
    "ParseError",
    "ResourceError",
    "SelfsimError",
    "VerificationError",
]


def analyze(text, format="edgelist"):
    """Orbits, divisor matrix, entropy and spectral data of one graph."""
    return json.loads(_core.analyze(text, format))


def compare(a, b, format="edgelist"):
    """Orbital similarity and homothety of two graphs."""
    return json.loads(_core.compare(a, b, format))


def generate(family, n=0, p=0, q=0, m=0, dims=(), format="edgelist"):
    """Serialized member of a named family."""
    return _core.generate(family, n, p, q, m, list(dims), format)


def sequence(spec, count=5, jobs=1, exhaustive=False):
    """Generate and verify a sequence; `spec` is a dict or a JSON string."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_core.sequence(text, count, jobs, exhaustive))


def entropy(omega):
    """Base-2 entropy of a probability vector given as fractions or 'p/q' strings."""
    return _core.entropy([str(p) for p in omega])
