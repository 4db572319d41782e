from fractions import Fraction as F

import pytest
from hypothesis import given

from pointideal import (
    PointSet,
    Polynomial,
    QQ,
    lex_compare,
    normal_form,
    s_polynomial,
    staircase_gb,
)

from strategies import F13, exponents, polynomials

BASIS_A = staircase_gb(PointSet(QQ, 2, [(1, 0), (1, 2), (3, 1), (3, 4)])).elements


def poly(terms, n=2, field=QQ):
    return Polynomial(field, n, {e: F(c) for e, c in terms.items()})


def x_power(k, n=2, field=QQ):
    exp = (k,) + (0,) * (n - 1)
    return Polynomial.monomial(field, n, exp)


@pytest.fixture
def basis_a(example_a):
    return staircase_gb(example_a).elements


class TestLexOrder:
    def test_second_variable_dominates(self):
        assert lex_compare((2, 1), (0, 2)) == -1
        assert lex_compare((2, 0), (0, 2)) == -1

    def test_equal(self):
        assert lex_compare((3, 1, 2), (3, 1, 2)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            lex_compare((1, 2), (1, 2, 3))

    @given(exponents(3), exponents(3))
    def test_trichotomy(self, a, b):
        signs = [lex_compare(a, b), lex_compare(b, a)]
        assert sorted(signs) in ([-1, 1], [0, 0])

    @given(exponents(3), exponents(3), exponents(3))
    def test_translation_invariant(self, a, b, c):
        shift = lambda e: tuple(x + y for x, y in zip(e, c))
        assert lex_compare(a, b) == lex_compare(shift(a), shift(b))


class TestArithmetic:
    def test_product_of_linear_factors(self):
        f = (x_power(1) - poly({(0, 0): 1})) * (x_power(1) - poly({(0, 0): 3}))
        assert f == poly({(2, 0): 1, (1, 0): -4, (0, 0): 3})

    def test_cubic_product(self):
        x = x_power(1)
        f = (x - poly({(0, 0): 1})) * (x - poly({(0, 0): 2})) * (x - poly({(0, 0): 3}))
        assert f == poly({(3, 0): 1, (2, 0): -6, (1, 0): 11, (0, 0): -6})

    def test_difference_with_self(self):
        f = poly({(2, 1): F(3, 2), (0, 0): -5})
        assert (f - f).is_zero

    def test_scalar_multiplication(self):
        f = poly({(1, 0): 2})
        assert f * F(1, 2) == poly({(1, 0): 1})

    def test_field_mismatch(self):
        with pytest.raises(ValueError):
            poly({(0, 0): 1}) + Polynomial(F13, 2, {(0, 0): 1})

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            poly({(0, 0): 1}) * poly({(0, 0, 0): 1}, n=3)

    @given(polynomials(), polynomials())
    def test_leading_exponent_of_product(self, f, g):
        if f.is_zero or g.is_zero:
            return
        expected = tuple(
            a + b for a, b in zip(f.leading_exponent(), g.leading_exponent())
        )
        assert (f * g).leading_exponent() == expected

    @given(polynomials(field=F13), polynomials(field=F13))
    def test_leading_exponent_of_product_mod_p(self, f, g):
        if f.is_zero or g.is_zero:
            return
        expected = tuple(
            a + b for a, b in zip(f.leading_exponent(), g.leading_exponent())
        )
        assert (f * g).leading_exponent() == expected


class TestEvaluate:
    def test_root(self):
        f = poly({(2, 0): 1, (1, 0): -4, (0, 0): 3})
        assert f.evaluate((F(1), F(0))) == 0

    def test_plain_value(self):
        f = poly({(2, 0): 1, (1, 0): -4, (0, 0): 3})
        assert f.evaluate((F(2), F(3))) == -1  # 4 - 8 + 3

    def test_constant(self):
        assert poly({(0, 0): 5}).evaluate((F(17), F(-3))) == 5

    @given(polynomials(n=2), polynomials(n=2))
    def test_ring_homomorphism(self, f, g):
        pt = (F(2), F(-3))
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


class TestNormalForm:
    def test_square_of_first_variable(self, basis_a):
        f1 = basis_a[0]
        expected = x_power(2) - f1  # 4*X1 - 3
        assert normal_form(x_power(2), basis_a) == expected

    def test_univariate_substitution(self):
        b = Polynomial(QQ, 1, {(1,): F(1), (0,): F(-3)})
        sq = Polynomial.monomial(QQ, 1, (2,))
        assert normal_form(sq, [b]) == Polynomial.constant(QQ, 1, F(9))

    def test_zero(self, basis_a):
        assert normal_form(Polynomial(QQ, 2), basis_a).is_zero

    def test_requires_monic(self):
        b = poly({(1, 0): 2})
        with pytest.raises(ValueError, match="monic"):
            normal_form(poly({(2, 0): 1}), [b])

    def test_rejects_duplicate_leading_exponents(self):
        b1 = poly({(1, 0): 1})
        b2 = poly({(1, 0): 1, (0, 0): 1})
        with pytest.raises(ValueError, match="duplicate"):
            normal_form(poly({(2, 0): 1}), [b1, b2])

    @given(polynomials())
    def test_idempotent(self, f):
        r = normal_form(f, BASIS_A)
        assert normal_form(r, BASIS_A) == r

    @given(polynomials())
    def test_multiples_reduce_to_zero(self, f):
        for b in BASIS_A:
            assert normal_form(f * b, BASIS_A).is_zero

    @given(polynomials())
    def test_difference_in_ideal(self, f):
        # f - NF(f) must vanish on the points the basis came from
        r = normal_form(f, BASIS_A)
        for pt in [(F(1), F(0)), (F(1), F(2)), (F(3), F(1)), (F(3), F(4))]:
            assert (f - r).evaluate(pt) == 0


class TestSPolynomial:
    def test_self_cancels(self, basis_a):
        assert s_polynomial(basis_a[0], basis_a[0]).is_zero

    def test_coprime_monomials(self):
        assert s_polynomial(poly({(2, 0): 1}), poly({(0, 2): 1})).is_zero

    def test_buchberger_criterion_on_known_basis(self, basis_a):
        s = s_polynomial(basis_a[0], basis_a[1])
        assert normal_form(s, basis_a).is_zero

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            s_polynomial(Polynomial(QQ, 2), poly({(1, 0): 1}))


class TestEmbedding:
    def test_prepend(self):
        f = poly({(2, 1): 3, (0, 0): -1})
        g = f.prepend_variables(1)
        assert g.n == 3
        assert g.terms == {(0, 2, 1): F(3), (0, 0, 0): F(-1)}

    def test_append(self):
        f = poly({(2, 1): 3})
        g = f.append_variables(2)
        assert g.terms == {(2, 1, 0, 0): F(3)}


class TestDisplay:
    def test_canonical_text(self, example_a):
        second = staircase_gb(example_a).elements[1]
        assert str(second) == "X2^2 - 3/2*X1*X2 - 1/2*X2 + 2*X1 - 2"

    def test_zero(self):
        assert str(Polynomial(QQ, 2)) == "0"

    def test_leading_minus(self):
        assert str(poly({(1, 0): -1, (0, 0): 1})) == "-X1 + 1"

    def test_prime_field_display(self):
        f = Polynomial(F13, 2, {(0, 1): 12, (0, 0): 5})
        assert str(f) == "12*X2 + 5"
