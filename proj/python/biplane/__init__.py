"""Bipartite 1-planar graphs: bounds, drawings, extremal structure and search.

Graphs and drawings are plain dicts in the JSON schema used by the
``biplane`` command line tool.
"""

import json

from . import _core
from ._core import BiplaneError, beta

__all__ = [
    "BiplaneError",
    "analyze",
    "beta",
    "beta_exhaustive",
    "bound_check",
    "census",
    "classify",
    "complete_bipartite",
    "crbound",
    "decide",
    "generate",
    "is_isomorphic",
    "refute_k37",
    "render_svg",
    "verify",
]


def _enc(obj):
    return json.dumps(obj)


def _dec(text):
    return json.loads(text)


def complete_bipartite(a, b):
    return _dec(_core.complete_bipartite(a, b))


def bound_check(graph):
    return _dec(_core.bound_check(_enc(graph)))


def is_isomorphic(a, b):
    return _core.is_isomorphic(_enc(a), _enc(b))


def generate(family, **params):
    """family is one of tube, box, two-strips, odd, extremal, kab."""
    return _dec(_core.generate(family, params))


def verify(drawing, level=4):
    return _dec(_core.verify(_enc(drawing), level))


def classify(drawing):
    return _dec(_core.classify(_enc(drawing)))


def census(drawing):
    return _dec(_core.census(_enc(drawing)))


def analyze(drawing):
    return _dec(_core.analyze(_enc(drawing)))


def render_svg(drawing):
    return _core.render_svg(_enc(drawing))


def decide(graph, timeout=None, jobs=1):
    return _dec(_core.decide(_enc(graph), timeout, jobs))


def beta_exhaustive(v, timeout=None):
    return _dec(_core.beta_exhaustive(v, timeout))


def crbound(m, lb, hosts):
    """Chain of counting steps from K_{m,n0} with lower bound lb through hosts."""
    return _dec(_core.crbound(m, lb, list(hosts)))


def refute_k37():
    return _dec(_core.refute_k37())
