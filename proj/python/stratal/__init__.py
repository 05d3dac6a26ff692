"""Exact intersection homology of weighted stratified spaces."""

import json
import os
from fractions import Fraction

_bundled = os.path.join(os.path.dirname(__file__), "corpus")
if "STRATAL_CORPUS_DIR" not in os.environ and os.path.isdir(_bundled):
    os.environ["STRATAL_CORPUS_DIR"] = _bundled

from . import _stratal  # noqa: E402
from ._stratal import (  # noqa: E402
    ComplexError,
    ConfigError,
    DomainError,
    LoadError,
    Space,
    StratalError,
    StructureError,
    betti,
    corpus_dir,
    load_space,
    subdivide,
)

__all__ = [
    "ComplexError", "ConfigError", "DomainError", "LoadError", "Space", "StratalError", "StructureError",
    "betti", "cone", "cone_max_cohomology", "corpus", "corpus_dir", "duality_check", "hilbert_report",
    "intersection_betti", "kodaira", "load_space", "perversity_from_weight", "predict", "run_suite",
    "subdivide", "summary", "suspension", "weights_from_perversity",
]


def _q(x):
    return str(Fraction(x))


_RATIONAL_KEYS = {"weight", "cutoff"}


def _fractions(obj, key=None):
    """Rational fields arrive as "p/q" strings; turn those into Fractions."""
    if isinstance(obj, dict):
        if key == "weights":
            return {k: Fraction(v) for k, v in obj.items()}
        return {k: _fractions(v, k) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v, key) for v in obj]
    if key in _RATIONAL_KEYS and isinstance(obj, str):
        return Fraction(obj)
    return obj


def _perversity(p):
    """Accepts "from-weights", {codim: value} with int keys, or a full dict."""
    if p == "from-weights":
        return json.dumps(p)
    if isinstance(p, dict) and "kind" not in p:
        if all(isinstance(k, int) for k in p):
            p = {"kind": "by-codim", "values": {str(k): v for k, v in p.items()}}
        else:
            p = {"kind": "per-stratum", "values": p}
    return json.dumps(p)


def corpus(name):
    return load_space(os.path.join(corpus_dir(), name + ".json"))


def summary(space):
    return _fractions(json.loads(space.summary_json()))


def cone(space, weight=1):
    return _stratal.cone(space, _q(weight))


def suspension(space, north=1, south=1):
    return _stratal.suspension(space, _q(north), _q(south))


def intersection_betti(space, perversity):
    return _stratal.intersection_betti(space, _perversity(perversity))


def duality_check(space, perversity):
    return json.loads(_stratal.duality_check(space, _perversity(perversity)))


def predict(space):
    return _fractions(json.loads(_stratal.predict(space)))


def perversity_from_weight(link_dim, weight):
    return _stratal.perversity_from_weight(link_dim, _q(weight))


def weights_from_perversity(space, perversity):
    raw = json.loads(_stratal.weights_from_perversity(space, _perversity(perversity)))
    return {k: Fraction(v) for k, v in raw.items()}


def cone_max_cohomology(link_betti, f, weight):
    return _stratal.cone_max_cohomology(list(link_betti), f, _q(weight))


def _matrix(m):
    return [[_q(x) for x in row] for row in m]


def _complex(dims, differentials):
    return json.dumps({"dims": list(dims), "differentials": [_matrix(d) for d in differentials]})


def hilbert_report(dims, differentials):
    return json.loads(_stratal.hilbert_report(_complex(dims, differentials)))


def kodaira(dims, differentials, degree, vector):
    raw = _stratal.kodaira(_complex(dims, differentials), degree, json.dumps([_q(x) for x in vector]))
    return {k: [Fraction(x) for x in v] for k, v in json.loads(raw).items()}


def run_suite(suite, corpus=""):
    return json.loads(_stratal.run_suite(suite, corpus))
