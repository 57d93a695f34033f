"""
Test cases for Newton diagrams, faces and initial ideals.
"""

from fractions import Fraction

import pytest

from newt.algebra import UPoly, parse_ideal, parse_poly
from newt.geometry import (
    check_height_formula,
    diagram,
    diagram_of_points,
    diagram_report,
    face_roots,
    faces,
    height,
    initial_ideal,
    polygon_area2,
    polygon_area2_anchored,
    shift_diagram,
    simple_monomial_generators,
)
from newt.interfaces import (
    FaceMismatchError,
    GroundFieldInsufficientError,
    UnboundedRegionError,
)
from newt.models import Face

EXAMPLE_1 = "y^4*(y+x)*(y^2-3*x)\n((y+x)^3+x^8)*(y^2-3*x)\n"
EXAMPLE_2 = "x^3*y\nx^6+y^4\n"


class TestDiagram:
    """Test cases for diagrams and faces."""

    @pytest.fixture
    def example1(self):
        return parse_ideal(EXAMPLE_1)

    def test_vertices(self, example1):
        """Test that collinear points of the staircase are not vertices."""
        assert diagram(example1).vertices == ((0, 5), (1, 3), (4, 0))

    def test_faces(self, example1):
        """Test face normals, levels and lattice counts."""
        first, second = faces(diagram(example1))
        assert (first.p, first.q, first.N, first.delta) == (2, 1, 5, 2)
        assert (second.p, second.q, second.N, second.delta) == (1, 1, 4, 4)

    def test_height(self, example1):
        """Test the height of the polygon."""
        assert height(diagram(example1)) == 5

    def test_single_point(self):
        """Test a diagram without faces."""
        diag = diagram_of_points([(2, 3), (4, 5)])
        assert diag.vertices == ((2, 3),)
        assert faces(diag) == []

    def test_shift(self):
        """Test moving a diagram along the alpha axis."""
        diag = diagram_of_points([(0, 2), (1, 0)])
        assert shift_diagram(diag, 3).vertices == ((3, 2), (4, 0))


class TestInitialIdeal:
    """Test cases for initial ideals and face polynomials."""

    @pytest.fixture
    def example1(self):
        return parse_ideal(EXAMPLE_1)

    def test_simple_root(self, example1):
        """Test the face 2*alpha + beta = 5, whose polynomial is X - 3."""
        face = faces(diagram(example1))[0]
        decomposition = initial_ideal(example1, face)
        assert decomposition.d == 0
        assert decomposition.face_polynomial() == UPoly.from_coeffs([-3, 1])
        assert face_roots(decomposition) == [(Fraction(3), 1)]

    def test_triple_root(self, example1):
        """Test the face alpha + beta = 4, whose polynomial is (X + 1)^3."""
        face = faces(diagram(example1))[1]
        decomposition = initial_ideal(example1, face)
        assert decomposition.d == 0
        assert face_roots(decomposition) == [(Fraction(-1), 3)]
        assert decomposition.a == 1
        assert decomposition.b == 0

    def test_dicritical_faces(self):
        """Test the dicritical degrees of (x^3*y, x^6 + y^4)."""
        ideal = parse_ideal(EXAMPLE_2)
        first, second = (initial_ideal(ideal, face) for face in faces(diagram(ideal)))
        assert (first.face.p, first.face.q, first.d) == (1, 1, 3)
        assert (second.face.p, second.face.q, second.d) == (1, 3, 1)
        assert first.face_polynomial().is_constant
        assert second.face_polynomial().is_constant
        assert first.is_dicritical

    def test_foreign_face(self):
        """Test that a face of another polygon is refused."""
        ideal = parse_ideal(EXAMPLE_2)
        face = Face(p=1, q=1, N=2, origin=(0, 2), end=(2, 0), delta=3)
        with pytest.raises(FaceMismatchError):
            initial_ideal(ideal, face)

    def test_irrational_root(self):
        """Test that X^2 - 2 needs a larger ground field."""
        ideal = parse_ideal("y^2-2*x^2\nx^3\n")
        decomposition = initial_ideal(ideal, faces(diagram(ideal))[0])
        with pytest.raises(GroundFieldInsufficientError) as exc_info:
            face_roots(decomposition)
        assert exc_info.value.residual == UPoly.from_coeffs([-2, 0, 1])


class TestHeightFormula:
    """Test cases for the height identity."""

    @pytest.mark.parametrize("text", [EXAMPLE_1, EXAMPLE_2, "x^2\nx*y^4\ny^5\n"])
    def test_holds(self, text):
        """Test the height identity on rational examples."""
        assert check_height_formula(parse_ideal(text))

    def test_residual_counts(self):
        """Test that an irrational factor counts with its degree."""
        assert check_height_formula(parse_ideal("y^2-2*x^2\nx^3\n"))

    def test_strict_mode(self):
        """Test that strict mode refuses irrational factors."""
        with pytest.raises(GroundFieldInsufficientError):
            check_height_formula(parse_ideal("y^2-2*x^2\nx^3\n"), strict=True)


class TestAreas:
    """Test cases for polygon areas."""

    def test_area_under_polygon(self):
        """Test twice the area under the polygon of (x^3*y, x^6 + y^4)."""
        assert polygon_area2(diagram(parse_ideal(EXAMPLE_2))) == 18

    def test_monomial_area(self):
        """Test twice the area under the polygon of (x^4, y^6)."""
        assert polygon_area2(diagram(parse_ideal("x^4\ny^6\n"))) == 24

    def test_unbounded(self):
        """Test that a polygon missing an axis has no finite area."""
        with pytest.raises(UnboundedRegionError):
            polygon_area2(diagram(parse_ideal("x^2*y\nx*y^2\n")))

    def test_anchored(self):
        """Test the area between {x = anchor} and a shifted polygon."""
        diag = diagram_of_points([(0, 1), (2, 0)])
        assert polygon_area2_anchored(shift_diagram(diag, 3), 3) == polygon_area2(diag)

    def test_anchored_mismatch(self):
        """Test that a polygon off its anchor line is refused."""
        diag = diagram_of_points([(0, 1), (2, 0)])
        with pytest.raises(UnboundedRegionError):
            polygon_area2_anchored(diag, 1)


class TestSimpleMonomialIdeals:
    """Test cases for generators of simple monomial ideals."""

    @pytest.mark.parametrize(
        "p,q,expected",
        [
            (1, 1, ["x", "y"]),
            (1, 3, ["x^3", "y"]),
            (3, 2, ["x^2", "x*y^2", "y^3"]),
            (5, 2, ["x^2", "x*y^3", "y^5"]),
        ],
    )
    def test_generators(self, p, q, expected):
        """Test minimal monomials above p*alpha + q*beta = p*q."""
        assert [str(g) for g in simple_monomial_generators(p, q)] == expected

    def test_generators_reach_the_line(self):
        """Test that every generator lies on or above the line."""
        for g in simple_monomial_generators(7, 3):
            (a, b), = g.support()
            assert 7 * a + 3 * b >= 21


class TestDiagramReport:
    """Test cases for the JSON polygon report."""

    def test_report(self):
        """Test vertices and face data."""
        report = diagram_report(parse_ideal(EXAMPLE_2))
        assert report["vertices"] == [[0, 4], [3, 1], [6, 0]]
        assert report["faces"] == [
            {"p": 1, "q": 1, "N": 4, "delta": 4, "d": 3},
            {"p": 1, "q": 3, "N": 6, "delta": 2, "d": 1},
        ]

    def test_poly_terms_on_face(self):
        """Test that generators off the face do not contribute."""
        ideal = parse_ideal("x^2\nx*y^4\ny^5\n")
        (face,) = faces(diagram(ideal))
        assert (face.p, face.q, face.N) == (5, 2, 10)
        assert initial_ideal(ideal, face).d == 1
        assert parse_poly("x*y^4").weighted_order(5, 2) > face.N
