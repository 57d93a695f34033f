"""
Test cases for invariants and the integral closure.
"""

from fractions import Fraction

import pytest

from newt.algebra import BPoly, parse_ideal, parse_poly
from newt.analyzer import IdealAnalyzer
from newt.closure import format_factorization, same_integral_closure, zariski_factorization
from newt.interfaces import InputError, NotFiniteCodimError, NotVanishingAtOriginError
from newt.invariants import (
    degree_function,
    first_polygon_area2,
    hs_multiplicity,
    hs_via_areas,
    invariants_report,
    j_multiplicity,
    lojasiewicz,
    mult_m,
    rees_valuations,
    valuation_Nv,
)
from newt.models import RunConfig

EXAMPLE_1 = "y^4*(y+x)*(y^2-3*x)\n((y+x)^3+x^8)*(y^2-3*x)\n"
EXAMPLE_2 = "x^3*y\nx^6+y^4\n"
EXAMPLE_3 = "y^2*((x^2+y^3)^2+x*y^5)*(x^2-y^3)\nx^8*y+x^12\n"
EXAMPLE_4 = "(x-y)^2*x^3\n(x-y)^2*y^3\n(x-y)*x^6\n"


@pytest.fixture
def analyze():
    analyzer = IdealAnalyzer(RunConfig())
    return lambda text: analyzer.run(parse_ideal(text))


class TestMultiplicities:
    """Test cases for m(I), e(I) and j(I)."""

    def test_example2(self, analyze):
        """Test the multiplicities of (x^3*y, x^6 + y^4)."""
        result = analyze(EXAMPLE_2)
        assert mult_m(result) == 4
        assert hs_multiplicity(result) == 18
        assert hs_via_areas(result) == 18
        assert first_polygon_area2(result) == 18
        assert j_multiplicity(result) == 18

    def test_example3(self, analyze):
        """Test the deep example, where the first polygon is only part of the area."""
        result = analyze(EXAMPLE_3)
        assert mult_m(result) == 8
        assert hs_multiplicity(result) == 102
        assert hs_via_areas(result) == 102
        assert first_polygon_area2(result) == 88

    @pytest.mark.parametrize(
        "text,e",
        [("x+x^3+y^8\nx^2-y^101\n", 16), ("x^3+y^8\nx^2-y^101\n", 16), ("x\ny\n", 1)],
    )
    def test_hs_multiplicity(self, analyze, text, e):
        """Test e(I) on families with known values."""
        assert hs_multiplicity(analyze(text)) == e

    def test_monomial(self, analyze):
        """Test e of (x^4, y^6)."""
        assert hs_multiplicity(analyze("x^4\ny^6\n")) == 24

    def test_not_finite_codim(self, analyze):
        """Test that e(I) needs finite codimension."""
        with pytest.raises(NotFiniteCodimError):
            hs_multiplicity(analyze(EXAMPLE_1))
        with pytest.raises(NotFiniteCodimError):
            mult_m(analyze("x*y\nx^2\n"))

    def test_j_with_common_factor(self, analyze):
        """Test j(I) = e(I1) + d_I1(x - y)."""
        assert j_multiplicity(analyze(EXAMPLE_4)) == 24

    def test_j_with_content(self, analyze):
        """Test j((x^2, x*y)) = e((x, y)) + d_(x,y)(x)."""
        assert j_multiplicity(analyze("x^2\nx*y\n")) == 2


class TestValuations:
    """Test cases for valuations and degree functions."""

    def test_valuation_at_dicriticals(self, analyze):
        """Test N_v on the vertices of the first example."""
        result = analyze(EXAMPLE_1)
        first, second = result.tree.dicriticals
        assert valuation_Nv(result, first, parse_poly("y^2-3*x")) == 1
        assert valuation_Nv(result, second, BPoly.x()) == 1
        assert valuation_Nv(result, second, parse_poly("x+y")) == 4

    def test_unit_valuation(self, analyze):
        """Test that units have valuation 0."""
        result = analyze(EXAMPLE_2)
        assert valuation_Nv(result, result.tree.vertices[0], parse_poly("1+x")) == 0

    def test_zero_refused(self, analyze):
        """Test that N_v(0) is refused."""
        result = analyze(EXAMPLE_2)
        with pytest.raises(InputError):
            valuation_Nv(result, result.tree.vertices[0], BPoly.zero())

    def test_degree_function(self, analyze):
        """Test d_I on x and y for (x^3*y, x^6 + y^4)."""
        result = analyze(EXAMPLE_2)
        assert degree_function(result, BPoly.x()) == 4
        assert degree_function(result, BPoly.y()) == 6

    def test_degree_function_needs_origin(self, analyze):
        """Test that d_I is refused on units and on 0."""
        result = analyze(EXAMPLE_2)
        with pytest.raises(NotVanishingAtOriginError):
            degree_function(result, parse_poly("1+x"))
        with pytest.raises(InputError):
            degree_function(result, BPoly.zero())

    def test_degree_of_maximal_ideal(self, analyze):
        """Test d_(x,y)(x) = 1."""
        assert degree_function(analyze("x\ny\n"), BPoly.x()) == 1


class TestReesAndLojasiewicz:
    """Test cases for Rees valuations and the Lojasiewicz exponent."""

    def test_rees_records(self, analyze):
        """Test one record per dicritical vertex."""
        report = rees_valuations(analyze(EXAMPLE_2))
        assert [(r.N, r.d, r.rho) for r in report.records] == [(4, 3, 1), (6, 1, 1)]

    def test_deep_rees(self, analyze):
        """Test the four Rees valuations of the deep example."""
        records = rees_valuations(analyze(EXAMPLE_3)).records
        assert sorted((r.N, r.rho) for r in records) == [(10, 1), (14, 1), (26, 2), (52, 4)]

    @pytest.mark.parametrize(
        "text,exponent",
        [
            ("x+x^3+y^8\nx^2-y^101\n", Fraction(16)),
            ("x^3+y^8\nx^2-y^101\n", Fraction(8)),
            (EXAMPLE_2, Fraction(6)),
            (EXAMPLE_3, Fraction(14)),
        ],
    )
    def test_lojasiewicz(self, analyze, text, exponent):
        """Test L0 as the largest N_v / rho(v)."""
        assert lojasiewicz(analyze(text)) == exponent

    def test_report(self, analyze):
        """Test the combined report."""
        report = invariants_report(analyze(EXAMPLE_2))
        assert report.depth == 1
        assert report.nondegenerate
        assert (report.mult_m, report.e, report.e_area, report.j) == (4, 18, 18, 18)
        assert (report.lojasiewicz.num, report.lojasiewicz.den) == (6, 1)
        assert [str(m) for m in report.rees[1].maps] == ["σ(1,3,GENERIC)"]

    def test_report_without_finite_codim(self, analyze):
        """Test that finite-codimension data is left empty."""
        report = invariants_report(analyze(EXAMPLE_1))
        assert report.depth == 2
        assert not report.nondegenerate
        assert report.e is None
        assert report.rees == []


class TestIntegralClosure:
    """Test cases for closure equality and the Zariski factorization."""

    def test_same_closure(self):
        """Test two monomial ideals with the same closure."""
        first = parse_ideal("x^2\nx*y^4\ny^5\n")
        second = parse_ideal("x^2\nx*y^3\ny^5\n")
        assert same_integral_closure(first, second)

    def test_different_closure(self):
        """Test ideals whose trees agree but whose roots differ."""
        first = parse_ideal("2*x^4-x^2*y^3+x^5\nx*y^5+x^2*y^6\ny^7+x*y^6\n")
        second = parse_ideal("3*x^4-x^2*y^3\nx^3*y^2\ny^7\n")
        assert not same_integral_closure(first, second)

    def test_power_and_generic_elements(self):
        """Test that adding an integral element does not change the closure."""
        first = parse_ideal("x^2\ny^2\n")
        second = parse_ideal("x^2\nx*y\ny^2\n")
        assert same_integral_closure(first, second)

    def test_factorization(self, analyze):
        """Test (x^3*y, x^6 + y^4) closing to (x,y)^3(x^3,y)."""
        factors = zariski_factorization(analyze(EXAMPLE_2).process)
        assert format_factorization(factors) == "(x,y)^3(x^3,y)"

    def test_simple_factor(self, analyze):
        """Test a simple ideal of finite codimension."""
        factors = zariski_factorization(analyze("x^2\nx*y^3\ny^5\n").process)
        assert format_factorization(factors) == "(x^2,x*y^3,y^5)"

    def test_content_and_curves(self, analyze):
        """Test content factors and an explicit curve factor."""
        factors = zariski_factorization(analyze("x^2*(y-x^2)\nx^2*y*(y-x^2)\n").process)
        labels = [(descriptor.label(), exponent) for descriptor, exponent in factors]
        assert labels[0] == ("x", 2)
        assert ("x^2 - y", 1) in labels

    def test_deeper_factor_is_symbolic(self, analyze):
        """Test that factors past the first polygon are described by their maps."""
        factors = zariski_factorization(
            analyze("2*x^4-x^2*y^3+x^5\nx*y^5+x^2*y^6\ny^7+x*y^6\n").process
        )
        labels = [descriptor.label() for descriptor, _ in factors]
        assert labels[0] == "(x,y^2)"
        assert labels[1] == "{(σ(3,2,2), σ(1,1,GENERIC))}"

    def test_empty_factorization(self):
        """Test the rendering of no factors."""
        assert format_factorization([]) == "(1)"
