"""Point sets in affine space and the staircase-induction construction
of the reduced lexicographic basis of their vanishing ideal.

The construction works by induction over the number of variables.  A
point set is sliced by its first coordinate; each slice, viewed in one
variable fewer, contributes a staircase, and these stack into the
staircase of the whole set.  For every corner of that staircase a basis
element is produced: representatives taken from the slice bases have
their coefficients interpolated across slices by univariate
characteristic polynomials in X1, the result is multiplied by the linear
factors of the slices whose staircase already contains the corner's
projection, and finally the lex-greatest-first division by the
previously finished elements reduces every tail into the staircase.
"""

from __future__ import annotations

from dataclasses import dataclass

from .interp import char_poly_family, univariate_vanishing
from .poly import Exponent, Polynomial, lex_key, normal_form
from .staircase import Staircase, staircase_sum


class DuplicatePointError(ValueError):
    def __init__(self, first_index: int, second_index: int, point):
        self.first_index = first_index
        self.second_index = second_index
        super().__init__(
            f"duplicate point {point} at indices {first_index} and {second_index}"
        )


class PointSet:
    """A finite set of pairwise-distinct points with exact coordinates.

    Points are stored sorted, so equal sets compare equal regardless of
    input order and every downstream computation is deterministic.
    """

    __slots__ = ("field", "n", "points")

    def __init__(self, field, n: int, points=()):
        if n < 1:
            raise ValueError("ambient dimension must be >= 1")
        coerced = []
        for idx, pt in enumerate(points):
            pt = tuple(pt)
            if len(pt) != n:
                raise ValueError(f"point {idx} has {len(pt)} coordinates, expected {n}")
            coerced.append(tuple(field.coerce(x) for x in pt))
        seen: dict = {}
        for idx, pt in enumerate(coerced):
            if pt in seen:
                raise DuplicatePointError(seen[pt], idx, pt)
            seen[pt] = idx
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "points", tuple(sorted(coerced)))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt):
        return tuple(pt) in self.points

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.field == other.field
            and self.n == other.n
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.field, self.n, self.points))

    def __repr__(self):
        return f"PointSet(n={self.n}, {list(self.points)})"

    def first_coordinate_values(self) -> list:
        """Distinct first coordinates, ascending."""
        return sorted({pt[0] for pt in self.points})


def slice_decompose(ps: PointSet) -> list[tuple[object, PointSet]]:
    """Group the points by first coordinate; each slice is re-expressed in
    the remaining coordinates.  Keys ascend in the field's natural order."""
    if ps.n < 2:
        raise ValueError("slicing needs dimension >= 2")
    if not ps.points:
        raise ValueError("cannot slice an empty point set")
    groups: dict = {}
    for pt in ps.points:
        groups.setdefault(pt[0], []).append(pt[1:])
    return [
        (a1, PointSet(ps.field, ps.n - 1, groups[a1])) for a1 in sorted(groups)
    ]


def compute_staircase(ps: PointSet) -> Staircase:
    """The staircase of a point set, by induction over the dimension.

    One variable: {0, ..., #A - 1}.  More variables: the slices'
    staircases, each lifted by a leading zero coordinate, are stacked
    along the first axis.  The size always equals the number of points.
    """
    if not ps.points:
        return Staircase(ps.n)
    if ps.n == 1:
        return Staircase(1, {(i,) for i in range(len(ps.points))})
    blocks = [
        compute_staircase(part).prepend_zero() for _, part in slice_decompose(ps)
    ]
    return staircase_sum(blocks, ps.n)


@dataclass(frozen=True)
class GroebnerBasis:
    """A staircase together with one monic polynomial per corner.

    Construction keeps elements sorted by leading exponent but performs
    no deeper validation; see :mod:`pointideal.verify` for the full
    certification, which must also be able to examine broken bases.
    """

    staircase: Staircase
    elements: tuple[Polynomial, ...]

    def __post_init__(self):
        elems = tuple(
            sorted(self.elements, key=lambda f: lex_key(f.leading_exponent()))
        )
        object.__setattr__(self, "elements", elems)

    @property
    def n(self) -> int:
        return self.staircase.n

    @property
    def field(self):
        return self.elements[0].field

    def by_corner(self) -> dict[Exponent, Polynomial]:
        return {f.leading_exponent(): f for f in self.elements}

    def quotient_dimension(self) -> int:
        """Vector-space dimension of the quotient ring: one monomial per
        staircase cell."""
        return len(self.staircase)


def slice_representative(beta_hat: Exponent, slice_gb: GroebnerBasis) -> Polynomial:
    """The unique monic polynomial with leading exponent beta_hat, tail
    supported on the slice staircase, vanishing on the slice: the
    monomial minus its normal form."""
    beta_hat = tuple(beta_hat)
    if beta_hat in slice_gb.staircase:
        raise ValueError(f"{beta_hat} lies inside the staircase")
    mono = Polynomial.monomial(slice_gb.field, slice_gb.n, beta_hat)
    return mono - normal_form(mono, slice_gb.elements)


def split_first_coordinates(beta: Exponent, slice_gbs) -> tuple[list, list]:
    """Split the slice keys by whether the corner's projection lies in the
    slice staircase.  For a corner, the first group has exactly beta[0]
    keys."""
    beta_hat = tuple(beta)[1:]
    inside, outside = [], []
    for a1, gb in slice_gbs:
        (inside if beta_hat in gb.staircase else outside).append(a1)
    return inside, outside


def build_phi(field, beta: Exponent, slice_gbs) -> Polynomial:
    """The interpolation-lifted element of the ideal for a corner beta.

    slice_gbs is the ordered list of (first coordinate, basis of the
    slice ideal) pairs.  Coefficients of the slice representatives are
    interpolated across the slices whose staircase misses the projected
    corner; the lift is then multiplied by (X1 - a1) over the remaining
    slices.  The result has leading exponent beta and vanishes on every
    point of the set.
    """
    beta = tuple(beta)
    n = len(beta)
    if n < 2:
        raise ValueError("the lifted construction needs dimension >= 2")
    beta_hat = beta[1:]
    blocks = [gb.staircase.prepend_zero() for _, gb in slice_gbs]
    total = staircase_sum(blocks, n)
    if beta not in total.corners():
        raise ValueError(f"{beta} is not a corner of the staircase")
    inside, outside = split_first_coordinates(beta, slice_gbs)
    gb_of = dict(slice_gbs)
    chi = char_poly_family(field, outside)
    theta_terms: dict[Exponent, object] = {(0,) + beta_hat: field.one}
    for a1 in outside:
        rep_tail = slice_representative(beta_hat, gb_of[a1]).tail()
        for (k,), c in chi[a1].terms.items():
            for gamma_hat, coeff in rep_tail.terms.items():
                e = (k,) + gamma_hat
                v = field.add(theta_terms.get(e, field.zero), field.mul(c, coeff))
                if v == field.zero:
                    theta_terms.pop(e, None)
                else:
                    theta_terms[e] = v
    phi = Polynomial(field, n, theta_terms)
    x1 = Polynomial.variable(field, n, 1)
    for a1 in inside:
        phi = phi * (x1 - Polynomial.constant(field, n, a1))
    return phi


def staircase_gb(ps: PointSet) -> GroebnerBasis:
    """The reduced lexicographic basis of the vanishing ideal of ps.

    One variable: the single monic vanishing polynomial.  More
    variables: recurse into the slices, lift one element per corner of
    the stacked staircase, and reduce each lift by the elements already
    finished (corners are processed in increasing lex order, so the
    reduction never needs a later element).  A final pass re-derives each
    element from its corner monomial against the full basis, pinning
    every tail inside the staircase.
    """
    fld = ps.field
    if not ps.points:
        return GroebnerBasis(Staircase(ps.n), (Polynomial.one(fld, ps.n),))
    if ps.n == 1:
        f = univariate_vanishing(fld, [pt[0] for pt in ps.points])
        return GroebnerBasis(compute_staircase(ps), (f,))
    slice_gbs = [(a1, staircase_gb(part)) for a1, part in slice_decompose(ps)]
    stairs = staircase_sum(
        [gb.staircase.prepend_zero() for _, gb in slice_gbs], ps.n
    )
    built: list[Polynomial] = []
    for corner in stairs.sorted_corners():
        f = normal_form(build_phi(fld, corner, slice_gbs), built)
        if f.is_zero or f.leading_exponent() != corner:
            raise AssertionError(f"reduced lift lost its leading exponent {corner}")
        stray = [e for e in f.tail().terms if e not in stairs.cells]
        if stray:
            raise AssertionError(
                f"tail exponents {stray} escaped the staircase at corner {corner}"
            )
        built.append(f)
    reduced = tuple(
        Polynomial.monomial(fld, ps.n, corner)
        - normal_form(Polynomial.monomial(fld, ps.n, corner), built)
        for corner in stairs.sorted_corners()
    )
    return GroebnerBasis(stairs, reduced)
