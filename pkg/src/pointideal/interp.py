"""Univariate interpolation tools over an exact field.

Characteristic polynomials: for a finite set T of pairwise-distinct
values and a node a in T, chi(T, a) is the unique polynomial of degree
#T - 1 with chi(T, a)(b) = 1 if b == a else 0 for b in T.  Vanishing
polynomials: the monic polynomial of degree #V with root set exactly V.

Polynomials are returned in ambient dimension 1; callers embed them into
more variables as needed.
"""

from __future__ import annotations

from typing import Sequence

from .poly import Polynomial


def _check_distinct(values: Sequence) -> None:
    seen = set()
    for v in values:
        if v in seen:
            raise ValueError(f"values are not pairwise distinct: {v} repeats")
        seen.add(v)


def _from_dense(field, coeffs) -> Polynomial:
    return Polynomial(field, 1, {(k,): c for k, c in enumerate(coeffs) if c != field.zero})


def _mul_linear(field, coeffs, root):
    """coeffs * (X - root), dense ascending-degree lists."""
    out = [field.zero] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k + 1] = field.add(out[k + 1], c)
        out[k] = field.sub(out[k], field.mul(root, c))
    return out


def vanishing_coeffs(field, values: Sequence) -> list:
    """Dense coefficients of the monic polynomial with root set `values`."""
    _check_distinct(values)
    coeffs = [field.one]
    for v in values:
        coeffs = _mul_linear(field, coeffs, v)
    return coeffs


def univariate_vanishing(field, values: Sequence) -> Polynomial:
    """Monic polynomial of degree #values vanishing exactly on `values`."""
    return _from_dense(field, vanishing_coeffs(field, values))


def char_poly(field, values: Sequence, node) -> Polynomial:
    """Characteristic polynomial of `node` within `values`, by direct
    product accumulation of (X - b) / (node - b) over b != node."""
    _check_distinct(values)
    if node not in set(values):
        raise ValueError(f"node {node} is not among the values")
    coeffs = [field.one]
    denom = field.one
    for b in values:
        if b == node:
            continue
        coeffs = _mul_linear(field, coeffs, b)
        denom = field.mul(denom, field.sub(node, b))
    inv = field.inv(denom)
    return _from_dense(field, [field.mul(inv, c) for c in coeffs])


def char_poly_family(field, values: Sequence) -> dict:
    """All characteristic polynomials over `values` at once.

    Builds the master product prod (X - b) once and deflates it by each
    node with synthetic division, which is quadratic overall instead of
    cubic.  Agrees with char_poly node for node.
    """
    master = vanishing_coeffs(field, values)
    m = len(values)
    family = {}
    for node in values:
        quotient = [field.zero] * m
        acc = field.one  # running Horner value; master is monic
        for k in range(m - 1, -1, -1):
            quotient[k] = acc
            acc = field.add(master[k], field.mul(node, acc))
        denom = field.zero
        for k in range(m - 1, -1, -1):
            denom = field.add(field.mul(denom, node), quotient[k])
        inv = field.inv(denom)
        family[node] = _from_dense(field, [field.mul(inv, c) for c in quotient])
    return family
