"""JSON and command-line text formats for algebras, elements and submodules.

Scalars are decimal strings (rationals as "p/q").  An algebra is either a
builtin name (optionally prefixed ``builtin:``) or a JSON object

    {"base_ring": {"kind": "Q" | "Fp" | "Zn", "p"/"n": int}, "dim": d,
     "one": [...], "structure_constants": [[[...]]]}

and a submodule is ``{"generators": [[...], ...]}``, a named submodule
(``zero``, ``all``, ``trace-zero``) or generator rows separated by ``;``.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .algebra import Algebra, Element, make_algebra
from .builtins import builtin_algebra, matrix
from .errors import BadParameter, MathieuError, SchemaError
from .rings import RingSpec
from .subspace import Subspace

ALGEBRA_FIELDS = {"base_ring", "dim", "one", "structure_constants", "name"}


def _scalar(ring: RingSpec, value) -> Any:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"scalar must be a string or integer, got {value!r}")
    try:
        return ring.parse(str(value))
    except (ValueError, ZeroDivisionError, MathieuError) as exc:
        raise SchemaError(f"bad scalar {value!r}: {exc}") from None


def algebra_from_json(data: dict) -> Algebra:
    if not isinstance(data, dict):
        raise SchemaError("algebra must be a JSON object")
    missing = {"base_ring", "dim", "one", "structure_constants"} - set(data)
    if missing:
        raise SchemaError(f"algebra is missing fields {sorted(missing)}")
    extra = set(data) - ALGEBRA_FIELDS
    if extra:
        raise SchemaError(f"unknown algebra fields {sorted(extra)}")
    try:
        ring = RingSpec.from_json(data["base_ring"])
    except (KeyError, TypeError, ValueError, MathieuError) as exc:
        raise SchemaError(f"bad base_ring: {exc}") from None
    d = data["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise SchemaError("dim must be a non-negative integer")
    one, consts = data["one"], data["structure_constants"]
    if not isinstance(one, list) or len(one) != d:
        raise SchemaError(f"one must list {d} scalars")
    if (not isinstance(consts, list) or len(consts) != d
            or any(not isinstance(p, list) or len(p) != d for p in consts)
            or any(not isinstance(r, list) or len(r) != d for p in consts for r in p)):
        raise SchemaError(f"structure_constants must be a {d}x{d}x{d} array")
    cube = [[[_scalar(ring, v) for v in r] for r in p] for p in consts]
    return make_algebra(ring, cube, [_scalar(ring, v) for v in one], name=data.get("name", ""))


def algebra_to_json(A: Algebra) -> dict:
    fmt = A.ring.format
    d = A.dim
    return {
        "base_ring": A.ring.to_json(),
        "dim": d,
        "one": [fmt(v) for v in A.one],
        "structure_constants": [[[fmt(A.structure_constants[i][j][k]) for k in range(d)]
                                 for j in range(d)] for i in range(d)],
    }


def parse_algebra(spec: Union[str, dict, Algebra]) -> Algebra:
    """A builtin name, a JSON object, or a JSON document in a string."""
    if isinstance(spec, Algebra):
        return spec
    if isinstance(spec, dict):
        return algebra_from_json(spec)
    if not isinstance(spec, str):
        raise SchemaError("algebra must be a builtin name or a JSON object")
    text = spec.strip()
    if text.startswith("{"):
        try:
            return algebra_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"algebra JSON does not parse: {exc}") from None
    try:
        return builtin_algebra(text)
    except BadParameter as exc:
        raise SchemaError(str(exc)) from None


def parse_element(A: Algebra, spec) -> Element:
    """Coordinates as "1,0,2", a list of scalars, or a single scalar when dim = 1."""
    if isinstance(spec, Element):
        return spec
    if isinstance(spec, str):
        parts = [p.strip() for p in spec.split(",")] if spec.strip() else []
    elif isinstance(spec, (list, tuple)):
        parts = list(spec)
    elif isinstance(spec, int) and not isinstance(spec, bool):
        parts = [spec]
    else:
        raise SchemaError(f"cannot read an element from {spec!r}")
    if len(parts) != A.dim:
        raise SchemaError(f"element needs {A.dim} coordinates, got {len(parts)}")
    return Element(A, tuple(_scalar(A.ring, p) for p in parts))


def element_to_json(x: Element) -> list[str]:
    return [x.algebra.ring.format(v) for v in x.coords]


def trace_zero(A: Algebra) -> Subspace:
    """Trace-zero matrices; only defined for a builtin matrix algebra."""
    k = int(round(A.dim ** 0.5))
    if k * k != A.dim or A != matrix(k, A.ring):
        raise SchemaError("trace-zero needs a full matrix algebra")
    ring = A.ring
    gens = []
    for i in range(k):
        for j in range(k):
            if i != j:
                gens.append(A.basis_vector(i * k + j))
    for i in range(1, k):
        v = [ring.zero] * A.dim
        v[0] = ring.one
        v[i * k + i] = ring.neg(ring.one)
        gens.append(tuple(v))
    return Subspace.from_rows(A, gens)


NAMED_SUBSPACES = {
    "zero": Subspace.zero,
    "all": Subspace.whole,
    "whole": Subspace.whole,
    "trace-zero": trace_zero,
}


def parse_subspace(A: Algebra, spec) -> Subspace:
    if isinstance(spec, Subspace):
        return spec
    if isinstance(spec, dict):
        if set(spec) != {"generators"}:
            raise SchemaError('subspace object must have exactly the field "generators"')
        rows = spec["generators"]
        if not isinstance(rows, list):
            raise SchemaError("generators must be a list of coordinate lists")
        return Subspace.from_rows(A, [parse_element(A, r).coords for r in rows])
    if isinstance(spec, list):
        return Subspace.from_rows(A, [parse_element(A, r).coords for r in spec])
    if not isinstance(spec, str):
        raise SchemaError(f"cannot read a subspace from {spec!r}")
    text = spec.strip()
    if text in NAMED_SUBSPACES:
        return NAMED_SUBSPACES[text](A)
    if text.startswith("{") or text.startswith("["):
        try:
            return parse_subspace(A, json.loads(text))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"subspace JSON does not parse: {exc}") from None
    rows = [r for r in text.split(";") if r.strip()]
    return Subspace.from_rows(A, [parse_element(A, r).coords for r in rows])


def subspace_to_json(V: Subspace) -> dict:
    return {"generators": V.to_json()}
