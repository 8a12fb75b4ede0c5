"""Exact q-series for cubic theta functions and their identities."""

import json
from fractions import Fraction

from ._cubictheta import Error, ParseError, UnknownIdentity, UnknownName
from ._cubictheta import expand_json, registry_json, run_cli, verify_all_json, verify_json

__all__ = [
    "Error",
    "ParseError",
    "UnknownIdentity",
    "UnknownName",
    "expand",
    "coefficients",
    "verify",
    "verify_all",
    "identities",
    "run_cli",
]


def expand(name, order=40):
    """Series `name` below q^order, in the engine's JSON layout."""
    return json.loads(expand_json(name, order))


def coefficients(name, order=40):
    """Nonzero coefficients of a series with rational coefficients, as {exponent: value} Fractions."""
    series = expand(name, order)
    den = series["D"]
    out = {}
    for num, basis in series["terms"]:
        if any(Fraction(c) != 0 for c in basis[1:]):
            raise Error(f"{name} has irrational coefficients")
        out[Fraction(num, den)] = Fraction(basis[0])
    return out


def verify(identity, order=40):
    return json.loads(verify_json(identity, order))


def verify_all(order=40, category=None, jobs=1):
    return json.loads(verify_all_json(order, category, jobs))


def identities():
    return json.loads(registry_json())
