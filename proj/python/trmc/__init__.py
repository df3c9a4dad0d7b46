"""Exact verifier for toric residues against intersection numbers."""

import json
import os
from fractions import Fraction

from . import _trmc

__all__ = ["Error", "load", "verify", "residue_at", "intersect", "mori", "expand"]


class Error(Exception):
    """Raised for any failure inside the core; `kind` and `stage` mirror the CLI."""

    def __init__(self, message, kind=None, stage=None):
        super().__init__(message)
        self.kind = kind
        self.stage = stage


def _text(scenario):
    if isinstance(scenario, (str, os.PathLike)) and not str(scenario).lstrip().startswith("{"):
        with open(scenario) as f:
            return f.read()
    if isinstance(scenario, dict):
        return json.dumps(scenario)
    return str(scenario)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _trmc.Error as e:
        message, kind, stage = e.args if len(e.args) == 3 else (str(e), None, None)
        raise Error(message, kind, stage) from None


def load(scenario):
    """Validated scenario as a dict (a path, JSON text or dict is accepted)."""
    return json.loads(_call(_trmc.normalize_scenario, _text(scenario)))


def verify(scenario, order=None, jobs=1, max_monomials=20000, timing=True):
    """Full report as a dict; report["verdict"] is "pass" or "fail"."""
    return json.loads(_call(_trmc.verify, _text(scenario), order, jobs, max_monomials, timing))


def residue_at(scenario, a):
    """Toric residue of the scenario polynomial at the coefficient vector a."""
    return Fraction(_call(_trmc.residue_at, _text(scenario), [str(Fraction(x)) for x in a]))


def intersect(scenario, rays=()):
    """Intersection number of the 1-based ray divisors, or the integral of P when rays is empty."""
    return Fraction(_call(_trmc.intersect, _text(scenario), list(rays)))


def mori(scenario):
    return json.loads(_call(_trmc.mori, _text(scenario)))


def expand(scenario, order=None):
    return json.loads(_call(_trmc.expand, _text(scenario), order))
