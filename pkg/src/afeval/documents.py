"""Instance documents (JSON) and result/CSV emission.

Complex numbers are always ``{"re": float, "im": float}`` objects. Floats
are written with ``repr`` precision, so parse -> serialize -> parse is exact.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable

import numpy as np

from .errors import NumericalFailure, SchemaError
from .evaluator import CentralValueResult
from .fixtures import builtin
from .model import CoefficientSource, LFunctionInstance, make_instance

REQUIRED = ("label", "m", "d", "N", "kappa", "mu", "coefficients")
OPTIONAL = ("period", "tempered", "twist_t")
BUILTIN_KEYS = ("builtin", "length", "twist")


def complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: expected a number, got {type(value).__name__}")
    return float(value)


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def complex_from_json(obj: Any, where: str) -> complex:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: complex numbers are {{re, im}} objects")
    extra = set(obj) - {"re", "im"}
    if extra:
        raise SchemaError(f"{where}: unknown field(s) {sorted(extra)}")
    if "re" not in obj or "im" not in obj:
        raise SchemaError(f"{where}: both 're' and 'im' are required")
    return complex(_number(obj["re"], where + ".re"), _number(obj["im"], where + ".im"))


def _complex_list(obj: Any, where: str) -> list[complex]:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected an array")
    return [complex_from_json(v, f"{where}[{i}]") for i, v in enumerate(obj)]


def instance_from_dict(doc: Any) -> LFunctionInstance:
    if not isinstance(doc, dict):
        raise SchemaError("instance document must be a JSON object")
    if "builtin" in doc:
        extra = set(doc) - set(BUILTIN_KEYS)
        if extra:
            raise SchemaError(f"unknown field(s) {sorted(extra)} next to 'builtin'")
        name = doc["builtin"]
        if not isinstance(name, str):
            raise SchemaError("'builtin' must be a fixture name")
        length = doc.get("length")
        if length is not None:
            length = _integer(length, "length")
            if length < 1:
                raise SchemaError("length must be positive")
        t = _number(doc.get("twist", 0.0), "twist")
        return builtin(name, length, t)

    extra = set(doc) - set(REQUIRED) - set(OPTIONAL)
    if extra:
        raise SchemaError(f"unknown field(s) {sorted(extra)}")
    missing = [k for k in REQUIRED if k not in doc]
    if missing:
        raise SchemaError(f"missing field(s) {missing}")
    if not isinstance(doc["label"], str):
        raise SchemaError("label must be a string")
    period = doc.get("period")
    if period is not None:
        period = _integer(period, "period")
    tempered = doc.get("tempered", False)
    if not isinstance(tempered, bool):
        raise SchemaError("tempered must be a boolean")
    return make_instance(
        doc["label"],
        _integer(doc["m"], "m"),
        _integer(doc["d"], "d"),
        _integer(doc["N"], "N"),
        complex_from_json(doc["kappa"], "kappa"),
        _complex_list(doc["mu"], "mu"),
        CoefficientSource(np.array(_complex_list(doc["coefficients"], "coefficients"), dtype=complex), period),
        tempered=tempered,
        twist_t=_number(doc.get("twist_t", 0.0), "twist_t"),
    )


def parse_instance(text: bytes | str) -> LFunctionInstance:
    """Validated instance from a JSON document, or a named error."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"instance document is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from None
    return instance_from_dict(doc)


def _reject_constant(name: str):
    raise SchemaError(f"non-finite number {name} is not allowed")


def instance_to_dict(inst: LFunctionInstance) -> dict:
    doc = {
        "label": inst.label,
        "m": inst.m,
        "d": inst.d,
        "N": inst.conductor_N,
        "kappa": complex_to_json(inst.root_number_kappa),
        "mu": [complex_to_json(z) for z in inst.arch.mu],
        "coefficients": [complex_to_json(z) for z in inst.coefficients.a],
    }
    if inst.coefficients.period is not None:
        doc["period"] = inst.coefficients.period
    if inst.tempered:
        doc["tempered"] = True
    if inst.twist_t:
        doc["twist_t"] = inst.twist_t
    return doc


def serialize_instance(inst: LFunctionInstance) -> str:
    return dumps(instance_to_dict(inst))


def same_instance(a: LFunctionInstance, b: LFunctionInstance) -> bool:
    """Field-by-field equality, coefficients included."""
    return (
        a.label == b.label and a.m == b.m and a.d == b.d and a.conductor_N == b.conductor_N
        and a.root_number_kappa == b.root_number_kappa and a.arch == b.arch
        and a.coefficients.same_as(b.coefficients) and a.twist_t == b.twist_t
        and a.tempered == b.tempered
    )


def result_to_dict(res: CentralValueResult) -> dict:
    c = res.constants
    return {
        "value": complex_to_json(res.value),
        "method": res.method,
        "terms_used": res.terms_used,
        "error_estimate": res.error_estimate,
        "C": c.C,
        "eta": c.eta,
        "lambda": complex_to_json(c.lam),
        "kappa_lambda": complex_to_json(c.kappa_lambda),
    }


def _finite(obj):
    if isinstance(obj, (float, np.floating)) and not math.isfinite(obj):
        raise NumericalFailure(f"refusing to emit non-finite number {obj!r}")
    if isinstance(obj, dict):
        for v in obj.values():
            _finite(v)
    elif isinstance(obj, list):
        for v in obj:
            _finite(v)


def _plain(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    _finite(obj)
    return json.dumps(obj, indent=2, allow_nan=False, default=_plain) + "\n"


def csv_text(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()
