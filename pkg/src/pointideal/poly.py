"""Sparse multivariate polynomials under the lexicographic order.

Variables are positional: X1, ..., Xn with X1 < X2 < ... < Xn.  Two
exponent vectors are compared by scanning coordinates from n down to 1;
the first coordinate where they differ decides, so Xn is the most
significant variable.

Coefficients are exact field scalars (see :mod:`pointideal.field`).
Terms are stored with no zero coefficients and no duplicate exponents,
ordered descending, so the leading term is always the first one.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


def lex_key(e: Exponent) -> Exponent:
    """Sort key realizing the lex order (ascending)."""
    return e[::-1]


def lex_compare(a: Exponent, b: Exponent) -> int:
    """-1, 0 or 1 as a <, =, > b in the lex order."""
    if len(a) != len(b):
        raise ValueError(f"exponent dimensions differ: {len(a)} vs {len(b)}")
    ka, kb = a[::-1], b[::-1]
    return (ka > kb) - (ka < kb)


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    """a - b; requires b to divide a."""
    if not exp_divides(b, a):
        raise ValueError(f"{b} does not divide {a}")
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_divides(d: Exponent, e: Exponent) -> bool:
    """True when X^d divides X^e, i.e. d <= e coordinatewise."""
    return len(d) == len(e) and all(x <= y for x, y in zip(d, e))


class Polynomial:
    """Immutable sparse polynomial over an exact field."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field, n: int, terms: Mapping | Iterable = ()):
        if n < 1:
            raise ValueError("ambient dimension must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Exponent, object] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != n or any(x < 0 or not isinstance(x, int) for x in exp):
                raise ValueError(f"bad exponent {exp} for dimension {n}")
            if exp in collected:
                raise ValueError(f"duplicate exponent {exp}")
            if coeff != field.zero:
                collected[exp] = coeff
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self,
            "terms",
            dict(sorted(collected.items(), key=lambda kv: lex_key(kv[0]), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, field, n: int, value) -> "Polynomial":
        return cls(field, n, {(0,) * n: value})

    @classmethod
    def one(cls, field, n: int) -> "Polynomial":
        return cls.constant(field, n, field.one)

    @classmethod
    def monomial(cls, field, n: int, exp: Exponent, coeff=None) -> "Polynomial":
        return cls(field, n, {tuple(exp): field.one if coeff is None else coeff})

    @classmethod
    def variable(cls, field, n: int, index: int) -> "Polynomial":
        """X_index, with index in 1..n."""
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        exp = tuple(1 if i == index - 1 else 0 for i in range(n))
        return cls(field, n, {exp: field.one})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return next(iter(self.terms))

    def leading_coefficient(self):
        return self.terms[self.leading_exponent()]

    def coefficient(self, exp: Exponent):
        return self.terms.get(tuple(exp), self.field.zero)

    def tail(self) -> "Polynomial":
        """The polynomial minus its leading term."""
        if not self.terms:
            return self
        it = iter(self.terms.items())
        next(it)
        return Polynomial(self.field, self.n, dict(it))

    def is_monic(self) -> bool:
        return bool(self.terms) and self.leading_coefficient() == self.field.one

    def monic(self) -> "Polynomial":
        c = self.leading_coefficient()
        if c == self.field.one:
            return self
        inv = self.field.inv(c)
        f = self.field
        return Polynomial(f, self.n, {e: f.mul(inv, v) for e, v in self.terms.items()})

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        if self.field != other.field:
            raise ValueError("coefficient field mismatch")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = f.add(out.get(e, f.zero), c)
        return Polynomial(f, self.n, out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = f.sub(out.get(e, f.zero), c)
        return Polynomial(f, self.n, out)

    def __neg__(self):
        f = self.field
        return Polynomial(f, self.n, {e: f.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        f = self.field
        if not isinstance(other, Polynomial):
            return Polynomial(f, self.n, {e: f.mul(c, other) for e, c in self.terms.items()})
        self._check_compatible(other)
        out: dict[Exponent, object] = {}
        zero = f.zero
        mul, add = f.mul, f.add
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = add(out.get(e, zero), mul(ca, cb))
        return Polynomial(f, self.n, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def evaluate(self, point):
        """Exact value at a point given as a tuple of field scalars."""
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.n}")
        f = self.field
        total = f.zero
        for e, c in self.terms.items():
            v = c
            for a, k in zip(point, e):
                if k:
                    v = f.mul(v, f.pow(a, k))
            total = f.add(total, v)
        return total

    # -- variable embedding ------------------------------------------------

    def prepend_variables(self, k: int) -> "Polynomial":
        """View in k more variables inserted before X1 (exponents padded left)."""
        pad = (0,) * k
        return Polynomial(self.field, self.n + k, {pad + e: c for e, c in self.terms.items()})

    def append_variables(self, k: int) -> "Polynomial":
        """View in k more variables appended after Xn (exponents padded right)."""
        pad = (0,) * k
        return Polynomial(self.field, self.n + k, {e + pad: c for e, c in self.terms.items()})

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None

    def _render_term(self, exp, coeff, lead: bool) -> str:
        f = self.field
        mono = "*".join(
            f"X{i + 1}" if k == 1 else f"X{i + 1}^{k}" for i, k in enumerate(exp) if k
        )
        neg = f.is_negative(coeff)
        mag = f.neg(coeff) if neg else coeff
        body = f.format(mag) if not mono else (mono if mag == f.one else f"{f.format(mag)}*{mono}")
        if lead:
            return f"-{body}" if neg else body
        return f" - {body}" if neg else f" + {body}"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms.items()):
            parts.append(self._render_term(e, c, lead=(i == 0)))
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _heap_key(e: Exponent):
    # min-heap on this key pops the lex-greatest exponent first
    return tuple(-x for x in reversed(e))


def _check_reducers(basis):
    seen = set()
    for b in basis:
        if b.is_zero or not b.is_monic():
            raise ValueError("normal form requires monic basis elements")
        le = b.leading_exponent()
        if le in seen:
            raise ValueError(f"duplicate leading exponent {le} in basis")
        seen.add(le)


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of multivariate division of f by a monic basis.

    Deterministic: always cancels the lex-greatest reducible term, using
    the basis element with the lex-smallest leading exponent among those
    whose leading exponent divides the term.  The result has no term
    divisible by any basis leading exponent, and f minus the result lies
    in the ideal generated by the basis.
    """
    basis = list(basis)
    _check_reducers(basis)
    for b in basis:
        f._check_compatible(b)
    reducers = sorted(
        ((b.leading_exponent(), b) for b in basis), key=lambda kv: lex_key(kv[0])
    )
    fld = f.field
    zero, sub, mul = fld.zero, fld.sub, fld.mul
    work = dict(f.terms)
    heap = [(_heap_key(e), e) for e in work]
    heapq.heapify(heap)
    done: set[Exponent] = set()
    remainder: dict[Exponent, object] = {}
    while heap:
        _, e = heapq.heappop(heap)
        if e in done or e not in work:
            continue
        done.add(e)
        c = work.pop(e)
        for le, b in reducers:
            if exp_divides(le, e):
                shift = tuple(x - y for x, y in zip(e, le))
                tail_items = iter(b.terms.items())
                next(tail_items)  # leading term cancels c exactly (b is monic)
                for te, tc in tail_items:
                    ne = tuple(x + y for x, y in zip(te, shift))
                    nv = sub(work.get(ne, zero), mul(c, tc))
                    if nv == zero:
                        work.pop(ne, None)
                    else:
                        if ne not in work:
                            heapq.heappush(heap, (_heap_key(ne), ne))
                        work[ne] = nv
                break
        else:
            remainder[e] = c
    return Polynomial(fld, f.n, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = X^(lcm - lt f) * f - X^(lcm - lt g) * g for monic f, g."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of zero is undefined")
    if not (f.is_monic() and g.is_monic()):
        raise ValueError("S-polynomial requires monic inputs")
    f._check_compatible(g)
    lf, lg = f.leading_exponent(), g.leading_exponent()
    lcm = exp_lcm(lf, lg)
    mf = Polynomial.monomial(f.field, f.n, exp_sub(lcm, lf))
    mg = Polynomial.monomial(g.field, g.n, exp_sub(lcm, lg))
    return mf * f - mg * g
