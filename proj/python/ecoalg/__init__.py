"""Exact E-infinity coalgebra structures on simplicial sets.

Every function taking a ``source`` accepts a bundled fixture name
(``"torus"``), a file path, ``.sset`` text or ``.coalg`` JSON text.
"""

import json

from . import _core
from ._core import EcoalgError, check_d_squared, cobar, fixture_names, fixture_text, same_class, validate

__all__ = [
    "EcoalgError",
    "check_d_squared",
    "coalgebra",
    "cobar",
    "fixture_names",
    "fixture_text",
    "homology",
    "invariant",
    "run",
    "same_class",
    "transfer",
    "validate",
]


def homology(source):
    return json.loads(_core.homology(source))


def coalgebra(source, max_cup=3):
    return json.loads(_core.coalgebra(source, max_cup))


def transfer(source, seed=0):
    return json.loads(_core.transfer(source, seed))


def invariant(source, which="massey", seed=0):
    return json.loads(_core.invariant(source, which, seed))


def run(command, inputs=(), max_cup=3, max_len=4, seed=0):
    """Same reports as the command-line tool."""
    return json.loads(_core.run(command, list(inputs), max_cup, max_len, seed))
