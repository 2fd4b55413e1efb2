"""Cycle-splitness of étale algebras: group models, prime scans and Hasse
certificates, backed by the C++ core.

Fibre, group and scan specifications are accepted either as a path to a JSON
file or as an already-parsed dict (relative paths inside a dict resolve
against the current directory, or ``base`` when given).
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Sequence, Union

from . import _core
from ._core import CyclesplitError

__all__ = [
    "CyclesplitError",
    "analyze",
    "density",
    "indices",
    "hasse",
    "scan",
    "degree_pattern",
    "discriminant",
    "witness_cycle",
    "prime_stream",
    "cli",
]

Spec = Union[str, os.PathLike, dict]


def _load(spec: Spec, base: str | None) -> tuple[str, str]:
    if isinstance(spec, dict):
        return json.dumps(spec), base or os.getcwd()
    path = os.fspath(spec)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return text, base or os.path.dirname(os.path.abspath(path))


def analyze(fibre: Spec, r: int = 1, base: str | None = None) -> dict[str, Any]:
    """Per-class indices, verdict and witness class for the fibre model."""
    text, root = _load(fibre, base)
    return json.loads(_core.analyze(text, root, r))


def density(fibre: Spec, r: int = 1, base: str | None = None) -> Fraction:
    """Exact proportion of group elements whose index divides r."""
    text, root = _load(fibre, base)
    return Fraction(_core.density(text, root, r))


def indices(fibre: Spec, base: str | None = None) -> list[int]:
    """Combinatorial index of every group element, in enumeration order."""
    text, root = _load(fibre, base)
    return _core.indices(text, root)


def hasse(group: Spec, subgroup: str) -> dict[str, Any]:
    text, _ = _load(group, None)
    return json.loads(_core.hasse(text, subgroup))


def scan(
    spec: Spec,
    primes_up_to: int | None = None,
    r: int | None = None,
    workers: int = 1,
    base: str | None = None,
) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    """Returns (summary, per-prime records)."""
    text, root = _load(spec, base)
    summary, records = _core.scan(text, root, primes_up_to, r, workers)
    return json.loads(summary), json.loads(records)


def degree_pattern(coefficients: Sequence[int], p: int) -> list[int]:
    """Factor degrees of a monic integer polynomial (constant term first) mod p."""
    return _core.degree_pattern(list(coefficients), p)


def discriminant(polynomial: str) -> int:
    return int(_core.discriminant(polynomial))


def witness_cycle(degrees: Sequence[int], r: int = 1) -> list[tuple[int, int]]:
    """(degree, coefficient) pairs with sum of coefficient * degree equal to r."""
    return _core.witness_cycle(list(degrees), r)


def prime_stream(bound: int) -> list[int]:
    return _core.prime_stream(bound)


def cli(*args: str) -> tuple[int, str, str]:
    """Runs the command line in-process; returns (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])
