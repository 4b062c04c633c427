"""Module JSON: sparse ``[row, col, "p/q"]`` triplets, exact and round-trippable."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .. import linalg as la
from ..qnum import QParam
from .module import GENERATORS, Module


def module_to_dict(V: Module) -> dict:
    out = {"dim": V.dim, "q": str(V.q.q), "weights": list(V.weights)}
    for g in GENERATORS:
        m = getattr(V, g)
        out[g] = [[int(i), int(j), str(x)] for (i, j), x in np.ndenumerate(m) if x != 0]
    out["label"] = V.label
    return out


def module_from_dict(data: dict) -> Module:
    n = int(data["dim"])
    weights = tuple(int(w) for w in data["weights"])
    if len(weights) != n:
        raise ValueError(f"dim {n} but {len(weights)} weights")
    mats = {}
    for g in GENERATORS:
        m = la.zeros(n)
        for i, j, x in data.get(g, []):
            m[int(i), int(j)] = Fraction(x)
        mats[g] = m
    return Module(weights, q=QParam(Fraction(data["q"])), label=data.get("label", ""), **mats)


def dumps(V: Module) -> str:
    return json.dumps(module_to_dict(V), indent=1) + "\n"


def loads(text: str) -> Module:
    return module_from_dict(json.loads(text))


def save_module(V: Module, path) -> None:
    Path(path).write_text(dumps(V))


def load_module(path) -> Module:
    return loads(Path(path).read_text())
