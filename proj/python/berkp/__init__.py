"""Exact potential theory and dynamics on the Berkovich line over Q_p.

Every call goes through the same JSON documents as the berkp command line.
Points are dicts {"chart": "z" | "inf", "center": "a/b", "logr": "a/b" | "-inf"}.
"""

import json

from . import _core

__all__ = [
    "BerkpError",
    "run",
    "point",
    "infinity",
    "kernel",
    "hull",
    "c_E",
    "capacity",
    "equilibrium",
    "green",
    "image",
    "reduction",
    "julia_cylinders",
    "selftest",
]


class BerkpError(Exception):
    def __init__(self, status, doc):
        self.status = status
        self.code = doc.get("error")
        self.context = doc.get("context")
        super().__init__(f"{self.code}: {self.context}")


def run(subcommand, doc=None, *, p=5, precision=64, seed=0, natural=False):
    status, out = _core.run(subcommand, json.dumps({} if doc is None else doc), p, precision, seed, natural)
    parsed = json.loads(out) if out.strip() else {}
    if status != 0 and subcommand != "selftest":
        raise BerkpError(status, parsed)
    return parsed


def _q(x):
    return x if isinstance(x, str) else str(x)


def point(center, logr):
    """zeta(center, p^logr); logr=None gives the classical point."""
    return {"chart": "z", "center": _q(center), "logr": "-inf" if logr is None else _q(logr)}


def infinity():
    return {"chart": "inf", "center": "0", "logr": "-inf"}


def kernel(s, t, kind="inf", base=None, **kw):
    doc = {"S": s, "S'": t, "kind": kind}
    if base is not None:
        doc["S0"] = base
    return run("kernel", doc, **kw)


def hull(points, **kw):
    return run("hull", {"points": points}, **kw)


def c_E(points, **kw):
    return run("cE", {"E": points}, **kw)["c_E"]


def capacity(points, **kw):
    return run("capacity", {"E": points}, **kw)["log_cap"]


def equilibrium(points, base=None, **kw):
    doc = {"E": points}
    if base is not None:
        doc["S0"] = base
    return run("equilibrium", doc, **kw)


def green(points, s, base=None, **kw):
    doc = {"E": points, "S": s}
    if base is not None:
        doc["S0"] = base
    return run("green", doc, **kw)["green"]


def image(num, den, s, **kw):
    return run("map-image", {"map": {"num": [_q(c) for c in num], "den": [_q(c) for c in den]}, "S": s}, **kw)["image"]


def reduction(num, den, s, **kw):
    return run("map-reduce-check", {"map": {"num": [_q(c) for c in num], "den": [_q(c) for c in den]}, "S": s}, **kw)


def julia_cylinders(c, depth, **kw):
    return run("julia-cylinders", {"c": _q(c), "depth": depth}, **kw)


def selftest(seed=0):
    return run("selftest", {}, seed=seed)
