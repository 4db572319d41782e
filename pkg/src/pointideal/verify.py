"""Independent certification that a claimed basis is the reduced
lexicographic basis of the vanishing ideal of a point set.

Four checks: every element vanishes on every point; the basis has the
reduced shape (monic, leading exponents exactly the staircase corners,
tails inside the staircase); every S-polynomial reduces to zero; and the
staircase size equals the number of points.  Together they are
equivalent to "this is the reduced basis": the first three make it a
Groebner basis of an ideal containing the vanishing ideal, and the
dimension count forces equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GroebnerBasis, PointSet
from .poly import lex_key, normal_form, s_polynomial


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"overall": self.overall, "checks": [c.as_dict() for c in self.checks]}

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" ({c.witness})" if c.witness else ""
            lines.append(f"{c.name}: {status}{suffix}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return lines


def check_vanishing(gb: GroebnerBasis, ps: PointSet) -> CheckResult:
    """Every element evaluates to zero at every point."""
    for f in gb.elements:
        if f.n != ps.n:
            raise ValueError("basis and points have different dimensions")
        if f.field != ps.field:
            raise ValueError("basis and points have different fields")
        for pt in ps.points:
            value = f.evaluate(pt)
            if value != ps.field.zero:
                witness = (
                    f"element with leading exponent {f.leading_exponent()} "
                    f"evaluates to {ps.field.format(value)} at {pt}"
                )
                return CheckResult("vanishing", False, witness)
    return CheckResult("vanishing", True)


def check_reduced_shape(gb: GroebnerBasis) -> CheckResult:
    """Monic elements, leading exponents exactly the staircase corners,
    all tail exponents inside the staircase."""
    leading = []
    for f in gb.elements:
        if f.is_zero or not f.is_monic():
            return CheckResult("reduced_shape", False, "non-monic element")
        le = f.leading_exponent()
        leading.append(le)
        for e in f.tail().terms:
            if e not in gb.staircase:
                return CheckResult(
                    "reduced_shape",
                    False,
                    f"tail exponent {e} of the element at {le} is outside the staircase",
                )
    if len(set(leading)) != len(leading):
        return CheckResult("reduced_shape", False, "duplicate leading exponents")
    corners = gb.staircase.corners()
    if set(leading) != corners:
        missing = sorted(corners - set(leading), key=lex_key)
        extra = sorted(set(leading) - corners, key=lex_key)
        return CheckResult(
            "reduced_shape",
            False,
            f"leading exponents and corners differ (missing {missing}, extra {extra})",
        )
    return CheckResult("reduced_shape", True)


def check_buchberger(gb: GroebnerBasis) -> CheckResult:
    """All S-polynomials reduce to zero against the basis.  Runs every
    pair; this is the oracle of last resort, so no pair is skipped."""
    elems = gb.elements
    leading = set()
    for f in elems:
        if f.is_zero or not f.is_monic():
            return CheckResult("buchberger", False, "non-monic element cannot reduce")
        leading.add(f.leading_exponent())
    if len(leading) != len(elems):
        return CheckResult("buchberger", False, "duplicate leading exponents")
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = s_polynomial(elems[i], elems[j])
            if not normal_form(s, elems).is_zero:
                witness = (
                    f"S-polynomial of the pair {elems[i].leading_exponent()}, "
                    f"{elems[j].leading_exponent()} does not reduce to zero"
                )
                return CheckResult("buchberger", False, witness)
    return CheckResult("buchberger", True)


def check_dimension(gb: GroebnerBasis, ps: PointSet) -> CheckResult:
    """Staircase size equals the number of points.  This is the check
    that exposes a basis generating a strictly larger ideal."""
    dim = gb.quotient_dimension()
    if dim != len(ps.points):
        return CheckResult(
            "dimension", False, f"quotient dimension {dim} != {len(ps.points)} points"
        )
    return CheckResult("dimension", True)


def verify_basis(gb: GroebnerBasis, ps: PointSet) -> VerificationReport:
    """Run all four checks."""
    return VerificationReport(
        (
            check_vanishing(gb, ps),
            check_reduced_shape(gb),
            check_buchberger(gb),
            check_dimension(gb, ps),
        )
    )
