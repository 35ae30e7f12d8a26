"""Structural analysis and weakly reversible realizations of reaction networks.

Every function takes network-file text (see the README for the grammar) and
returns the same JSON reports as the command-line tool, already decoded.
"""

import json

from . import _core
from ._core import InvariantError, ParseError

__all__ = ["check", "realize", "disguised", "equiv", "simulate", "normalize", "ParseError", "InvariantError"]


def normalize(text):
    """Canonical printed form of a network file."""
    return _core.normalize(text)


def check(text, max_hyperplanes=20):
    return json.loads(_core.check(text, max_hyperplanes))


def realize(text, mode="auto"):
    return json.loads(_core.realize(text, mode))


def disguised(text, at=None):
    if at is not None:
        at = [str(v) for v in at]
    return json.loads(_core.disguised(text, at))


def equiv(a, b, samples=200, lo=0.1, hi=10.0):
    return json.loads(_core.equiv(a, b, samples, lo, hi))


def simulate(text, x0, t_end, tol=1e-8):
    """Returns (times, states, halted)."""
    times, states, halted = _core.simulate(text, list(x0), t_end, tol)
    return times, states, halted
