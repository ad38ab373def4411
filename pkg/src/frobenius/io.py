"""JSON forms of algebra specs, functionals, edge sets, elements and tensors.

Rationals are written as strings ``"p/q"`` (``"p"`` when ``q == 1``) and
every index is 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import lie
from .errors import FrobeniusError, ParseError, ValidationError
from .index import Functional
from .trees import EdgeSet

__all__ = [
    "AlgebraSpec",
    "KINDS",
    "frac_str",
    "parse_rational",
    "parse_spec",
    "spec_from_dict",
    "serialize_spec",
    "spec_to_dict",
    "seaweed_compositions",
    "build_algebra",
    "label_to_json",
    "label_from_json",
    "functional_to_json",
    "parse_functional",
    "element_to_json",
    "parse_edge_set",
    "edge_set_to_json",
    "dumps",
]

KINDS = ("seaweed", "max_parabolic", "rais", "sl", "custom_span")


def frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value, field="c"):
    if isinstance(value, bool):
        raise ValidationError(field, f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError(field, f"expected an integer or a 'p/q' string, got {value!r}")


def dumps(payload, compact=False):
    """Deterministic JSON text (sorted keys, LF line endings)."""
    if compact:
        return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


# -- labels and functionals ---------------------------------------------------


def label_to_json(label):
    if isinstance(label, lie.MatrixUnit):
        return {"i": label.i, "j": label.j}
    if isinstance(label, lie.Cartan):
        return {"h": label.k}
    if isinstance(label, lie.Translation):
        return {"row": label.r, "col": label.c}
    if isinstance(label, lie.BasisVector):
        return {"k": label.k}
    raise TypeError(label)


def _int_field(obj, key, where):
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValidationError(f"{where}.{key}", f"expected an integer, got {v!r}")
    return v


def label_from_json(obj, where="term"):
    if not isinstance(obj, dict):
        raise ValidationError(where, "expected an object")
    if "i" in obj or "j" in obj:
        return lie.MatrixUnit(_int_field(obj, "i", where), _int_field(obj, "j", where))
    if "h" in obj:
        return lie.Cartan(_int_field(obj, "h", where))
    if "row" in obj or "col" in obj:
        return lie.Translation(_int_field(obj, "row", where), _int_field(obj, "col", where))
    if "k" in obj:
        return lie.BasisVector(_int_field(obj, "k", where))
    raise ValidationError(where, "needs one of i/j, h, row/col or k")


def _terms_to_json(pairs):
    out = []
    for label, c in pairs:
        item = label_to_json(label)
        item["c"] = frac_str(c)
        out.append(item)
    return out


def _parse_terms(obj, where):
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ValidationError(f"{where}.terms", "expected an object with a 'terms' list")
    pairs = []
    for k, item in enumerate(obj["terms"]):
        at = f"{where}.terms[{k}]"
        label = label_from_json(item, at)
        pairs.append((label, parse_rational(item.get("c", "1"), f"{at}.c")))
    return pairs


def functional_to_json(F, L=None):
    pairs = list(F.terms)
    if L is not None:
        pairs.sort(key=lambda t: L.index_of[t[0]])
    return {"terms": _terms_to_json(pairs)}


def parse_functional(obj, L=None):
    if isinstance(obj, str):
        obj = _loads(obj)
    F = Functional.from_terms(_parse_terms(obj, "functional"))
    if L is not None:
        for label, _ in F.terms:
            if label not in L.index_of:
                raise ValidationError("functional.terms", f"{label} is not a basis vector of {L.name}")
    return F


def element_to_json(L, x):
    payload = {"terms": _terms_to_json((L.basis[a], c) for a, c in enumerate(x) if c)}
    if L.realization is not None:
        mat = L.to_matrix(x)
        if all(i == j for i, j in mat):
            payload["diagonal"] = [frac_str(mat.get((k, k), 0)) for k in range(1, L.ambient_n + 1)]
    return payload


def _matrix_from_terms(pairs, n, where):
    mat = {}
    for label, c in pairs:
        if isinstance(label, lie.MatrixUnit):
            if not (1 <= label.i <= n and 1 <= label.j <= n):
                raise ValidationError(where, f"{label} outside {n}x{n}")
            mat[(label.i, label.j)] = mat.get((label.i, label.j), 0) + c
        elif isinstance(label, lie.Cartan):
            if not 1 <= label.k <= n - 1:
                raise ValidationError(where, f"{label} outside sl_{n}")
            for key, v in lie._label_matrix(label).items():
                mat[key] = mat.get(key, 0) + c * v
        else:
            raise ValidationError(where, f"{label} is not an sl_n basis label")
    return {k: v for k, v in mat.items() if v}


# -- edge sets ---------------------------------------------------------------


def parse_edge_set(obj):
    if isinstance(obj, str):
        obj = _loads(obj)
    if not isinstance(obj, dict):
        raise ValidationError("edge_set", "expected an object")
    n = _int_field(obj, "n", "edge_set")
    edges = obj.get("edges")
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or any(isinstance(v, bool) or not isinstance(v, int) for v in e)
        for e in edges
    ):
        raise ValidationError("edge_set.edges", "expected a list of [i, j] integer pairs")
    return EdgeSet(n, tuple(tuple(e) for e in edges))


def edge_set_to_json(S):
    return {"n": S.n, "edges": [list(e) for e in S.edges]}


# -- algebra specs -----------------------------------------------------------


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str
    n: int
    top: tuple = ()
    bottom: tuple = ()
    i: int = 0
    p: int = 0
    elements: tuple = ()  # tuples of (label, Fraction) pairs


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def _composition(obj, key):
    v = obj.get(key)
    if not isinstance(v, list) or not v or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in v):
        raise ValidationError(key, f"expected a nonempty list of positive integers, got {v!r}")
    return tuple(v)


def spec_from_dict(obj):
    if not isinstance(obj, dict):
        raise ValidationError("spec", "expected a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ValidationError("kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    n = _int_field(obj, "n", "spec")
    if n < 1:
        raise ValidationError("n", f"must be positive, got {n}")
    if kind == "seaweed":
        top, bottom = _composition(obj, "top"), _composition(obj, "bottom")
        if sum(top) != n:
            raise ValidationError("top", f"sums to {sum(top)}, expected n={n}")
        if sum(bottom) != n:
            raise ValidationError("bottom", f"sums to {sum(bottom)}, expected n={n}")
        spec = AlgebraSpec(kind, n, top=top, bottom=bottom)
    elif kind == "max_parabolic":
        i = _int_field(obj, "i", "spec")
        if not 1 <= i <= n - 1:
            raise ValidationError("i", f"must satisfy 1 <= i <= n-1, got i={i}, n={n}")
        spec = AlgebraSpec(kind, n, i=i)
    elif kind == "rais":
        p = _int_field(obj, "p", "spec")
        if p < 1:
            raise ValidationError("p", f"must be positive, got {p}")
        spec = AlgebraSpec(kind, n, p=p)
    elif kind == "sl":
        if n < 2:
            raise ValidationError("n", "sl needs n >= 2")
        spec = AlgebraSpec(kind, n)
    else:
        raw = obj.get("elements")
        if not isinstance(raw, list) or not raw:
            raise ValidationError("elements", "expected a nonempty list of elements")
        elements = []
        for k, el in enumerate(raw):
            pairs = _parse_terms(el, f"elements[{k}]")
            _matrix_from_terms(pairs, n, f"elements[{k}]")
            elements.append(tuple(pairs))
        spec = AlgebraSpec(kind, n, elements=tuple(elements))
        try:
            build_algebra(spec)
        except FrobeniusError as exc:
            raise ValidationError("elements", str(exc)) from None
    return spec


def parse_spec(text):
    """Validated :class:`AlgebraSpec` from UTF-8 JSON text (or bytes)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"spec is not UTF-8: {exc}") from None
    return spec_from_dict(_loads(text))


def spec_to_dict(spec):
    out = {"kind": spec.kind, "n": spec.n}
    if spec.kind == "seaweed":
        out.update(top=list(spec.top), bottom=list(spec.bottom))
    elif spec.kind == "max_parabolic":
        out["i"] = spec.i
    elif spec.kind == "rais":
        out["p"] = spec.p
    elif spec.kind == "custom_span":
        out["elements"] = [{"terms": _terms_to_json(el)} for el in spec.elements]
    return out


def serialize_spec(spec):
    return dumps(spec_to_dict(spec), compact=True)


def build_algebra(spec):
    if spec.kind == "seaweed":
        return lie.seaweed(spec.top, spec.bottom)
    if spec.kind == "max_parabolic":
        return lie.maximal_parabolic(spec.n, spec.i)
    if spec.kind == "rais":
        return lie.rais_algebra(spec.n, spec.p)
    if spec.kind == "sl":
        return lie.sl(spec.n)
    mats = [_matrix_from_terms(el, spec.n, "elements") for el in spec.elements]
    return lie.span(spec.n, mats)


def seaweed_compositions(spec):
    """``(top, bottom)`` for specs that describe a seaweed, else None."""
    if spec.kind == "seaweed":
        return spec.top, spec.bottom
    if spec.kind == "max_parabolic":
        return (spec.i, spec.n - spec.i), (spec.n,)
    if spec.kind == "sl":
        return (spec.n,), (spec.n,)
    return None

