"""Python access to the lethargy core. Descriptors and results travel as JSON."""

import json as _json

from . import _core
from ._core import IncompatibleVersion, LethargyError, UsageError, ValidationError

__version__ = _core.__version__


def _dump(obj):
    # Plain strings are scheme or element names, not JSON documents.
    return _json.dumps(obj)


def best_approx(scheme, element, n, seed=1):
    return _json.loads(_core.best_approx(_dump(scheme), _dump(element), n, seed))


def error_profile(scheme, element, n_max):
    return _json.loads(_core.error_profile(_dump(scheme), _dump(element), n_max))


def lethargy_majorant(eps, h):
    return _core.lethargy_majorant(list(eps), list(h))


def convex_majorant(eps):
    return _core.convex_majorant(list(eps))


def witness(params):
    return _json.loads(_core.witness(_dump(params)))


def verify_witness(bundle):
    return _json.loads(_core.verify_witness(_dump(bundle)))


def shapiro_check(scheme, n_max, probes=16, seed=1):
    return _json.loads(_core.shapiro_check(_dump(scheme), n_max, probes, seed))


def run(config, out_dir=""):
    code, report = _core.run(_dump(config), out_dir)
    return code, _json.loads(report)


def replay(report):
    return _core.replay(_dump(report))


def list_schemes():
    return _json.loads(_core.list_schemes())


__all__ = [
    "IncompatibleVersion",
    "LethargyError",
    "UsageError",
    "ValidationError",
    "best_approx",
    "convex_majorant",
    "error_profile",
    "lethargy_majorant",
    "list_schemes",
    "replay",
    "run",
    "shapiro_check",
    "verify_witness",
    "witness",
]
