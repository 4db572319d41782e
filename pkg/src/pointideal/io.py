"""JSON file formats for point sets, bases and verification reports.

Point set files::

    {"field": {"type": "rational"} | {"type": "prime", "p": 7919},
     "dimension": 2,
     "points": [["1", "0"], ["3/2", "-4"], ...]}

Basis files (also the output of the ``gb`` command)::

    {"staircase": [[0, 0], [1, 0], ...],
     "corners": [[2, 0], [0, 2]],
     "basis": [{"leading": [2, 0],
                "terms": [{"exp": [2, 0], "coeff": "1"}, ...]}, ...]}

Scalars travel as strings so that exactness survives the trip.  Cell and
corner lists ascend in the lex order; term lists descend, leading term
first.  Serialization is canonical, so equal objects produce identical
bytes.
"""

from __future__ import annotations

import json

from .core import GroebnerBasis, PointSet
from .field import PrimeField, QQ, RationalField
from .poly import Polynomial
from .staircase import Staircase


def field_to_dict(field) -> dict:
    if isinstance(field, RationalField):
        return {"type": "rational"}
    if isinstance(field, PrimeField):
        return {"type": "prime", "p": field.p}
    raise TypeError(f"unknown field {field!r}")


def field_from_dict(obj) -> object:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("field: expected an object with a 'type' key")
    kind = obj["type"]
    if kind == "rational":
        return QQ
    if kind == "prime":
        if "p" not in obj:
            raise ValueError("field: prime field needs a 'p' value")
        return PrimeField(obj["p"])
    raise ValueError(f"field: unknown type {kind!r}")


def pointset_from_dict(obj) -> PointSet:
    for key in ("field", "dimension", "points"):
        if key not in obj:
            raise ValueError(f"point set: missing key {key!r}")
    fld = field_from_dict(obj["field"])
    n = obj["dimension"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension: expected a positive integer, got {n!r}")
    points = []
    for i, raw in enumerate(obj["points"]):
        if len(raw) != n:
            raise ValueError(f"points[{i}]: expected {n} coordinates, got {len(raw)}")
        coords = []
        for j, text in enumerate(raw):
            if not isinstance(text, str):
                raise ValueError(f"points[{i}][{j}]: coordinates must be strings")
            try:
                coords.append(fld.parse(text))
            except ValueError as exc:
                raise ValueError(f"points[{i}][{j}]: {exc}") from exc
        points.append(tuple(coords))
    return PointSet(fld, n, points)


def pointset_to_dict(ps: PointSet) -> dict:
    return {
        "field": field_to_dict(ps.field),
        "dimension": ps.n,
        "points": [[ps.field.format(x) for x in pt] for pt in ps.points],
    }


def load_pointset(path) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: {exc}") from exc
    return pointset_from_dict(obj)


def basis_to_dict(gb: GroebnerBasis) -> dict:
    fld = gb.field
    return {
        "staircase": [list(c) for c in gb.staircase.sorted_cells()],
        "corners": [list(c) for c in gb.staircase.sorted_corners()],
        "basis": [
            {
                "leading": list(f.leading_exponent()),
                "terms": [
                    {"exp": list(e), "coeff": fld.format(c)} for e, c in f.terms.items()
                ],
            }
            for f in gb.elements
        ],
    }


def basis_from_dict(obj, field) -> GroebnerBasis:
    for key in ("staircase", "basis"):
        if key not in obj:
            raise ValueError(f"basis: missing key {key!r}")
    cells = [tuple(c) for c in obj["staircase"]]
    dims = {len(c) for c in cells} | {
        len(t["exp"]) for f in obj["basis"] for t in f["terms"]
    }
    if len(dims) != 1:
        raise ValueError(f"basis: inconsistent exponent dimensions {sorted(dims)}")
    n = dims.pop()
    stairs = Staircase(n, cells)
    elements = []
    for i, raw in enumerate(obj["basis"]):
        terms = {}
        for t in raw["terms"]:
            exp = tuple(t["exp"])
            if exp in terms:
                raise ValueError(f"basis[{i}]: duplicate exponent {exp}")
            terms[exp] = field.parse(t["coeff"])
        f = Polynomial(field, n, terms)
        if f.is_zero or list(f.leading_exponent()) != list(raw["leading"]):
            raise ValueError(
                f"basis[{i}]: declared leading exponent {raw['leading']} "
                f"does not lead the terms"
            )
        elements.append(f)
    return GroebnerBasis(stairs, tuple(elements))


def load_basis(path, field) -> GroebnerBasis:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: {exc}") from exc
    return basis_from_dict(obj, field)


def canonical_dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, one newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
