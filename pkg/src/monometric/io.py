"""JSON formats shared by the CLI: matrices, weights, kernels, channels.

Complex matrices travel as nested arrays of [re, im] pairs. All loaders
raise DomainError on malformed structure so the CLI can map every input
problem to one exit code.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .channels import KrausChannel
from .chentsov import BridgeMC, CanonicalMC, FromMonotone, MCFunction, normalize_C0
from .errors import DomainError
from .monotone import (
    CanonicalMonotone,
    ConstantOne,
    GammaFamily,
    Identity,
    MonotoneFunction,
    WeightFunction,
    normalize_beta,
)
from .quadrature import DEFAULT_QUAD, QuadratureConfig

_FAMILY_BUILDERS = {
    "min": lambda: GammaFamily(1.0),
    "max": lambda: GammaFamily(0.0),
    "sqrt": lambda: GammaFamily(0.5),
    "identity": Identity,
    "constant-one": ConstantOne,
}


def load_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise DomainError("matrix must be a non-empty list of rows")
    rows = len(obj)
    cols = None
    out = None
    for i, row in enumerate(obj):
        if not isinstance(row, list) or not row:
            raise DomainError(f"matrix row {i} must be a non-empty list")
        if cols is None:
            cols = len(row)
            out = np.zeros((rows, cols), dtype=np.complex128)
        elif len(row) != cols:
            raise DomainError(f"matrix row {i} has {len(row)} entries, expected {cols}")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)
            ):
                raise DomainError(
                    f"matrix entry ({i},{j}) must be a [re, im] pair of numbers"
                )
            out[i, j] = complex(entry[0], entry[1])
    return out


def matrix_to_json(m: np.ndarray) -> list:
    a = np.asarray(m, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def weight_from_json(obj) -> WeightFunction:
    if not isinstance(obj, dict):
        raise DomainError("weight must be an object")
    try:
        bp = obj["breakpoints"]
        vals = obj["values"]
    except KeyError as exc:
        raise DomainError(f"weight is missing field {exc}") from exc
    if not isinstance(bp, list) or not isinstance(vals, list):
        raise DomainError("weight fields must be lists")
    return WeightFunction(breakpoints=tuple(bp), values=tuple(vals))


def weight_to_json(h: WeightFunction) -> dict:
    return {"breakpoints": list(h.breakpoints), "values": list(h.values)}


def monotone_from_json(
    obj, quad: QuadratureConfig = DEFAULT_QUAD
) -> MonotoneFunction:
    """f-spec: {"family": name [, "gamma": g]} or {"h": weight, "beta": ...}."""
    if not isinstance(obj, dict):
        raise DomainError("function spec must be an object")
    if "family" in obj:
        family = obj["family"]
        if family == "gamma":
            if "gamma" not in obj:
                raise DomainError("gamma family needs a 'gamma' field")
            return GammaFamily(float(obj["gamma"]))
        builder = _FAMILY_BUILDERS.get(family)
        if builder is None:
            raise DomainError(f"unknown family {family!r}")
        return builder()
    if "h" in obj:
        h = weight_from_json(obj["h"])
        beta = obj.get("beta", "auto")
        if beta == "auto":
            return CanonicalMonotone.normalized(h, quad)
        return CanonicalMonotone(beta=float(beta), h=h, quad=quad)
    raise DomainError("function spec needs 'family' or 'h'")


def mc_from_json(obj, quad: QuadratureConfig = DEFAULT_QUAD) -> MCFunction:
    """Kernel spec: kind bridge | canonical | from_f."""
    if not isinstance(obj, dict):
        raise DomainError("kernel spec must be an object")
    kind = obj.get("kind")
    if kind == "bridge":
        if "gamma" not in obj:
            raise DomainError("bridge kernel needs a 'gamma' field")
        return BridgeMC(gamma=float(obj["gamma"]))
    if kind == "canonical":
        if "h" not in obj:
            raise DomainError("canonical kernel needs an 'h' field")
        h = weight_from_json(obj["h"])
        c0 = obj.get("c0", "auto")
        if c0 == "auto":
            return CanonicalMC(c0=normalize_C0(h, quad), h=h, quad=quad)
        c0 = float(c0)
        if not c0 > 0.0:
            raise DomainError(f"scale constant {c0} not positive")
        return CanonicalMC(c0=c0, h=h, quad=quad)
    if kind == "from_f":
        if "f" not in obj:
            raise DomainError("from_f kernel needs an 'f' field")
        return FromMonotone(f=monotone_from_json(obj["f"], quad))
    raise DomainError(f"unknown kernel kind {kind!r}")


def channel_from_json(obj) -> KrausChannel:
    if not isinstance(obj, dict) or "kraus" not in obj:
        raise DomainError("channel spec needs a 'kraus' field")
    ops = obj["kraus"]
    if not isinstance(ops, list) or not ops:
        raise DomainError("'kraus' must be a non-empty list of matrices")
    return KrausChannel(operators=tuple(matrix_from_json(k) for k in ops))


def channel_to_json(channel: KrausChannel) -> dict:
    return {"kraus": [matrix_to_json(k) for k in channel.operators]}
