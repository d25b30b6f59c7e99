"""JSON documents for algebras, alpha forms and computed tensors.

Algebra file::

    {"name": "abdo4", "dim": 4,
     "brackets": [{"a": 1, "b": 2, "c": 2, "value": "1"}, ...]}

Alpha file::

    {"n": 2, "components": [{"a": 1, "b": 2, "c": 1, "value": "1"}, ...]}

Both list only entries with ``a < b``; the skew partner is implied. Indices
are 1-based and values are rational strings ``"p"`` or ``"p/q"``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .connections import AlphaForm
from .errors import ValidationError
from .lie_core import LieAlgebra, build_lie_algebra
from .rational import format_rational, nonzero_items, parse_rational, zeros
from .tensors import ExactTensor, ThreeForm, VectorTwoForm

_AXES = ("a", "b", "c", "d")


def read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top-level JSON value must be an object")
    return doc


def _field(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise ValidationError(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ValidationError(f"{where}: field {key!r} must be an integer")
    if kind is not int and not isinstance(value, kind):
        raise ValidationError(f"{where}: field {key!r} has the wrong type")
    return value


def _entries(items, where: str):
    """``(a, b, c, value)`` tuples from a list of component objects, requiring ``a < b``."""
    out = []
    for pos, item in enumerate(items):
        here = f"{where}[{pos}]"
        if not isinstance(item, dict):
            raise ValidationError(f"{here}: expected an object")
        a, b, c = (_field(item, k, int, here) for k in "abc")
        value = parse_rational(_field(item, "value", str, here))
        if not a < b:
            raise ValidationError(f"{here}: entries must have a < b, got a={a}, b={b}")
        out.append((a, b, c, value))
    return out


def algebra_from_doc(doc: dict) -> LieAlgebra:
    dim = _field(doc, "dim", int, "algebra")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("algebra: field 'name' must be a string")
    entries = _entries(_field(doc, "brackets", list, "algebra"), "brackets")
    return build_lie_algebra(dim, entries, name=name)


def algebra_to_doc(L: LieAlgebra) -> dict:
    return {
        "name": L.name or "",
        "dim": L.dim,
        "brackets": [{"a": a, "b": b, "c": c, "value": format_rational(v)}
                     for a, b, c, v in L.entries()],
    }


def load_algebra(path) -> LieAlgebra:
    return algebra_from_doc(read_json(path))


def alpha_from_doc(doc: dict) -> AlphaForm:
    n = _field(doc, "n", int, "alpha")
    if n < 1:
        raise ValidationError(f"alpha: n must be positive, got {n}")
    al = zeros((2 * n,) * 3)
    seen = set()
    for a, b, c, v in _entries(_field(doc, "components", list, "alpha"), "components"):
        if max(a, b, c) > 2 * n or min(a, b, c) < 1:
            raise ValidationError(f"alpha: index outside 1..{2 * n} in ({a},{b},{c})")
        if (a, b, c) in seen:
            raise ValidationError(f"alpha: component ({a},{b},{c}) listed twice")
        seen.add((a, b, c))
        al[a - 1, b - 1, c - 1] = v
        al[b - 1, a - 1, c - 1] = -v
    return AlphaForm(al)


def load_alpha(path) -> AlphaForm:
    return alpha_from_doc(read_json(path))


def alpha_to_doc(alpha: AlphaForm) -> dict:
    return {"n": alpha.n, "components": components(alpha)}


def components(tensor) -> list[dict]:
    """Nonzero components in lexicographic order.

    Skew tensors list only their canonical representatives: ``a < b`` for
    2-forms and ``a < b < c`` for 3-forms.
    """
    arr = tensor.components if isinstance(tensor, ExactTensor) else tensor
    out = []
    for idx, v in nonzero_items(arr):
        if isinstance(tensor, ThreeForm) and not idx[0] < idx[1] < idx[2]:
            continue
        if isinstance(tensor, VectorTwoForm) and not idx[0] < idx[1]:
            continue
        entry = dict(zip(_AXES, idx))
        entry["value"] = format_rational(v)
        out.append(entry)
    return out


def poly_components(poly) -> list[dict]:
    out = []
    for idx, p in poly.nonzero():
        entry = dict(zip(_AXES, idx))
        entry["coefficients"] = [format_rational(c) for c in p.coefficients]
        out.append(entry)
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
