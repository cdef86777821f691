"""Exact δ-derivations of finite-dimensional algebras."""

import json

from ._core import (
    Algebra,
    InputError,
    MathError,
    abelian,
    current,
    deformed_zassenhaus,
    divided_powers,
    elduque4,
    grassmann_envelope,
    osp12,
    s4_dim,
    sl,
    truncated_polynomials,
    witt,
    zassenhaus,
)
from . import _core

__all__ = [
    "Algebra",
    "InputError",
    "MathError",
    "abelian",
    "current",
    "deformed_zassenhaus",
    "divided_powers",
    "elduque4",
    "grade",
    "grassmann_envelope",
    "halfring_report",
    "osp12",
    "s4_dim",
    "sl",
    "solve",
    "solve_parametric",
    "truncated_polynomials",
    "witt",
    "zassenhaus",
]


def solve(algebra, delta="1", kind="der", parity=0):
    """Solution space as a dict with "dim" and "basis" (matrices of exact strings)."""
    return json.loads(_core._solve(algebra, kind, str(delta), parity))


def solve_parametric(algebra):
    return json.loads(_core._solve_parametric(algebra))


def grade(algebra, maps, delta):
    """Root decomposition for a list of commuting δ-derivations given as string matrices."""
    return json.loads(_core._grade(algebra, json.dumps(maps), str(delta)))


def halfring_report(algebra):
    return json.loads(_core._halfring(algebra))
