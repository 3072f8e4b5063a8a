"""Exact integer checks of the maps from graph homology to Roe algebra K-theory.

Graphs and chains are passed as dicts (or JSON strings) in the same format the
command-line tool reads; reports come back as dicts.
"""

import json

from ._coarsek import (
    InputError,
    NotACycleError,
    OverflowError,
    PreconditionError,
    phi1_on_z,
    run_acceptance,
    scenario_names,
    shift_index,
)
from . import _coarsek

__all__ = [
    "InputError",
    "NotACycleError",
    "OverflowError",
    "PreconditionError",
    "homology",
    "phi0",
    "phi1",
    "phi1_on_z",
    "run_acceptance",
    "scenario",
    "scenario_names",
    "shift_index",
]


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def homology(graph, window=16, margin=4):
    return json.loads(_coarsek.homology(_text(graph), window, margin))


def phi0(graph, chain, window=16, margin=4, dump=False):
    return json.loads(_coarsek.phi0(_text(graph), _text(chain), window, margin, dump))


def phi1(graph, chain, alpha=None, window=16, margin=4, dump=False):
    alpha_text = None if alpha is None else _text(alpha)
    return json.loads(_coarsek.phi1(_text(graph), _text(chain), alpha_text, window, margin, dump))


def scenario(name, window=16, margin=4, seed=1):
    return json.loads(_coarsek.scenario(name, window, margin, seed))
