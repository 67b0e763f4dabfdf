"""Python front end for the orbitcy core; JSON reports are returned as dicts."""

import json

from ._orbitcy import Category, catalog, grammar
from . import _orbitcy as _core

__all__ = ["Category", "catalog", "grammar", "endo", "geom", "verify_tables", "compare", "gorenstein_demo"]


def endo(spec, objects):
    return json.loads(Category(spec).endo_json(list(objects)))


def geom(spec):
    return json.loads(Category(spec).geom_json())


def verify_tables(n=4, t=3, k=10):
    return json.loads(_core.verify_tables_json(n, t, k))


def compare(left, right):
    return json.loads(_core.compare_json(left, right))


def gorenstein_demo():
    ok, lines = _core.gorenstein_demo()
    return {"pass": ok, "lines": list(lines)}
