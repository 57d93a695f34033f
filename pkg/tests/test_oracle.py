"""
Test cases for the independent verification paths.
"""

import pytest

from newt.algebra import BPoly, parse_ideal, parse_poly
from newt.closure import format_factorization
from newt.interfaces import (
    CommonFactorError,
    NotFiniteCodimError,
    NotMonomialError,
    NotVanishingAtOriginError,
    TrivialIdealError,
)
from newt.oracle import (
    RandomSource,
    e_oracle,
    intersection_mult,
    monomial_closure,
    mult_oracle,
    random_finite_codim_ideal,
    random_monomial_ideal,
)


class TestRandomSource:
    """Test cases for the seeded random source."""

    def test_reproducible(self):
        """Test that equal seeds give equal draws."""
        first, second = RandomSource(7), RandomSource(7)
        assert [first.coefficient() for _ in range(10)] == [
            second.coefficient() for _ in range(10)
        ]

    def test_nonzero_bounded(self):
        """Test the range of coefficients."""
        rnd = RandomSource(0)
        for _ in range(200):
            c = rnd.coefficient(bound=2)
            assert c != 0
            assert -2 <= c <= 2

    def test_combination_in_span(self):
        """Test that a combination of monomials keeps their support."""
        rnd = RandomSource(3)
        combination = rnd.combination(parse_ideal("x^2\ny^3\n"))
        assert combination.support() == frozenset({(2, 0), (0, 3)})


class TestIntersectionMultiplicity:
    """Test cases for intersection numbers through resultants."""

    @pytest.fixture
    def rnd(self):
        return RandomSource(11)

    @pytest.mark.parametrize(
        "f,g,expected",
        [
            ("x", "y", 1),
            ("y^2-x^3", "y", 3),
            ("y^2-x^3", "x", 2),
            ("y-x^2", "y+x^2", 2),
            ("y^2-x^3", "y^3-x^2", 4),
        ],
    )
    def test_known_values(self, rnd, f, g, expected):
        """Test intersection numbers of small curves."""
        assert intersection_mult(parse_poly(f), parse_poly(g), rnd) == expected

    def test_ignores_other_points(self, rnd):
        """Test that common zeros away from the origin are not counted."""
        assert intersection_mult(parse_poly("y-x^2"), parse_poly("y-x"), rnd) == 1

    def test_not_through_origin(self, rnd):
        """Test that both curves must pass through the origin."""
        with pytest.raises(NotVanishingAtOriginError):
            intersection_mult(parse_poly("1+x"), BPoly.y(), rnd)

    def test_common_factor(self, rnd):
        """Test that curves sharing a component are refused."""
        with pytest.raises(CommonFactorError):
            intersection_mult(parse_poly("x*(y-x)"), parse_poly("y*(y-x)"), rnd)


class TestMultiplicityOracles:
    """Test cases for the oracle multiplicities."""

    @pytest.fixture
    def rnd(self):
        return RandomSource(5)

    @pytest.mark.parametrize(
        "text,e", [("x\ny\n", 1), ("x^3*y\nx^6+y^4\n", 18), ("x^4\ny^6\n", 24)]
    )
    def test_e_oracle(self, rnd, text, e):
        """Test e(I) as the intersection number of two generic elements."""
        assert e_oracle(parse_ideal(text), rnd) == e

    def test_e_oracle_trivial(self, rnd):
        """Test that an ideal containing a unit is refused."""
        with pytest.raises(TrivialIdealError):
            e_oracle(parse_ideal("1\nx\n"), rnd)

    def test_e_oracle_not_finite(self, rnd):
        """Test that a common factor is refused."""
        with pytest.raises(NotFiniteCodimError):
            e_oracle(parse_ideal("(x-y)*x\n(x-y)*y\n"), rnd)

    def test_mult_oracle(self, rnd):
        """Test m(I) as the order of a generic element."""
        assert mult_oracle(parse_ideal("x^3*y\nx^6+y^4\n"), rnd) == 4
        assert mult_oracle(
            parse_ideal("y^2*((x^2+y^3)^2+x*y^5)*(x^2-y^3)\nx^8*y+x^12\n"), rnd
        ) == 8


class TestMonomialClosure:
    """Test cases for closures of monomial ideals."""

    def test_two_faces(self):
        """Test (x^3*y, x^6, y^4)."""
        factors, e = monomial_closure(parse_ideal("x^3*y\nx^6\ny^4\n"))
        assert format_factorization(factors) == "(x,y)^3(x^3,y)"
        assert e == 18

    def test_power_of_simple_ideal(self):
        """Test (x^4, y^6), the square of (x^2, x*y^2, y^3)."""
        factors, e = monomial_closure(parse_ideal("x^4\ny^6\n"))
        assert format_factorization(factors) == "(x^2,x*y^2,y^3)^2"
        assert e == 24

    def test_product_of_simple_ideals(self):
        """Test (x^3, x*y, y^3) = (x^2, y)(x, y^2)."""
        factors, e = monomial_closure(parse_ideal("x^3\nx*y\ny^3\n"))
        assert format_factorization(factors) == "(x,y^2)(x^2,y)"
        assert e == 6

    def test_content(self):
        """Test that content is listed as a curve factor."""
        factors, e = monomial_closure(parse_ideal("x^3\nx*y\n"))
        assert format_factorization(factors) == "x(x^2,y)"
        assert e == 2

    def test_point_on_face(self):
        """Test that a monomial in the middle of a face is not a corner."""
        factors, e = monomial_closure(parse_ideal("x^4\nx^2*y^3\ny^6\nx^3*y^4\n"))
        assert format_factorization(factors) == "(x^2,x*y^2,y^3)^2"
        assert e == 24

    def test_principal_monomial(self):
        """Test a principal monomial ideal, which has no simple factors."""
        factors, e = monomial_closure(parse_ideal("x^2*y\n"))
        assert format_factorization(factors) == "x^2y"
        assert e == 0

    def test_not_monomial(self):
        """Test that a binomial generator is refused."""
        with pytest.raises(NotMonomialError):
            monomial_closure(parse_ideal("x^6+y^4\nx^3*y\n"))


class TestRandomCorpus:
    """Test cases for the random ideal generators."""

    @pytest.mark.parametrize("seed", range(20))
    def test_finite_codim(self, seed):
        """Test that random ideals are of finite codimension."""
        ideal = random_finite_codim_ideal(RandomSource(seed))
        assert ideal.content == (0, 0)
        assert ideal.gcd().is_constant
        assert not ideal.is_unit()

    @pytest.mark.parametrize("seed", range(20))
    def test_monomial(self, seed):
        """Test that random monomial ideals are monomial and proper."""
        ideal = random_monomial_ideal(RandomSource(seed))
        assert ideal.is_monomial()
        assert not ideal.is_unit()
