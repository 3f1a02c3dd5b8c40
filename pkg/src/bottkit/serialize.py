"""JSON encoding of results (schema ``bott-kit/1``).

Every encoded object carries a ``"type"`` tag so :func:`decode` can rebuild it;
top-level CLI documents also carry ``"schema": "bott-kit/1"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bott import CohomologyResult
from .oracle import SweepReport
from .rootsys import Root, Weight
from .vanishing import SignificanceWitness, VanishingRange

SCHEMA = "bott-kit/1"

__all__ = ["SCHEMA", "encode", "decode", "dumps", "loads"]


def _num(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _frac(x) -> Fraction:
    return Fraction(x)


def encode(obj: Any) -> Any:
    """Convert library objects into JSON-ready values."""
    if isinstance(obj, Weight):
        return [_num(x) for x in obj.fcoords]
    if isinstance(obj, Root):
        return list(obj.coeffs)
    if isinstance(obj, Fraction):
        return _num(obj)
    if isinstance(obj, CohomologyResult):
        if obj.all_zero:
            return {"type": "cohomology", "kind": "AllZero"}
        return {"type": "cohomology", "kind": "Concentrated", "degree": obj.degree,
                "weight": encode(obj.highest_weight), "dim": obj.dimension}
    if isinstance(obj, SignificanceWitness):
        return {"type": "witness", "root": encode(obj.root), "sigma": encode(obj.sigma_root),
                "fastpath": obj.fastpath}
    if isinstance(obj, VanishingRange):
        return {"type": "range", "lo": obj.lo, "hi": obj.hi}
    if isinstance(obj, SweepReport):
        out = {"type": "sweep"}
        out.update({k: encode(v) for k, v in vars(obj).items()})
        return out
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(encode(v) for v in obj)
    return obj


def decode(data: Any) -> Any:
    """Inverse of :func:`encode` for tagged objects; other values pass through."""
    if isinstance(data, list):
        return [decode(v) for v in data]
    if not isinstance(data, dict):
        return data
    tag = data.get("type")
    if tag == "cohomology":
        if data["kind"] == "AllZero":
            return CohomologyResult()
        return CohomologyResult(data["degree"], Weight(tuple(_frac(x) for x in data["weight"])),
                                data["dim"])
    if tag == "witness":
        return SignificanceWitness(Root(data["root"]), Root(data["sigma"]), data["fastpath"])
    if tag == "range":
        return VanishingRange(data["lo"], data["hi"])
    if tag == "sweep":
        fields = {k: v for k, v in data.items() if k != "type"}
        return SweepReport(**fields)
    return {k: decode(v) for k, v in data.items()}


def dumps(payload: dict, indent: int | None = 2) -> str:
    doc = {"schema": SCHEMA}
    doc.update(encode(payload))
    return json.dumps(doc, indent=indent)


def loads(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return decode(doc)
