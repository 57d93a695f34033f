"""
Newton diagrams, faces and initial ideals.

The diagram of an ideal is the convex hull of the union of the supports of
its generators plus the positive quadrant; its compact boundary is the
Newton polygon. Faces carry their primitive normal (p, q), level N and the
number of lattice points delta. Initial ideals are computed from the face
terms of the generators through the univariate shadows F(1, X).
"""

import logging
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from .algebra import BPoly, IdealGens, UPoly, rational_roots
from .interfaces import FaceMismatchError, GroundFieldInsufficientError, UnboundedRegionError
from .models import Face, InitialDecomposition, NewtonDiagram, Point

logger = logging.getLogger(__name__)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def diagram_of_points(points: Iterable[Point]) -> NewtonDiagram:
    """
    Newton diagram generated by a finite set of exponents.

    Args:
        points: Exponents (alpha, beta); must be nonempty

    Returns:
        The diagram with its vertices ordered by increasing alpha
    """
    # Staircase-minimal points first: increasing alpha, strictly decreasing beta.
    staircase: List[Point] = []
    for point in sorted(set(points)):
        if not staircase or point[1] < staircase[-1][1]:
            staircase.append(point)
    if not staircase:
        raise ValueError("A Newton diagram needs at least one point")

    hull: List[Point] = []
    for point in staircase:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return NewtonDiagram(vertices=tuple(hull))


def diagram(ideal: IdealGens) -> NewtonDiagram:
    """Newton diagram of the union of the supports of the generators."""
    return diagram_of_points(ideal.supports())


def diagram_of_poly(f: BPoly) -> NewtonDiagram:
    return diagram_of_points(f.support())


def faces(diag: NewtonDiagram) -> List[Face]:
    """Faces of the Newton polygon, top to bottom."""
    out = []
    for origin, end in zip(diag.vertices, diag.vertices[1:]):
        d_alpha = end[0] - origin[0]
        d_beta = origin[1] - end[1]
        g = gcd(d_alpha, d_beta)
        p, q = d_beta // g, d_alpha // g
        out.append(
            Face(p=p, q=q, N=p * origin[0] + q * origin[1], origin=origin, end=end, delta=g + 1)
        )
    return out


def height(diag: NewtonDiagram) -> int:
    return diag.vertices[0][1] - diag.vertices[-1][1]


def _face_shadows(ideal: IdealGens, face: Face) -> List[UPoly]:
    """Univariate shadows u_i(X) of the face terms of each generator."""
    beta_end = face.end[1]
    shadows = []
    for g in ideal:
        coeffs: Dict[int, object] = {}
        for (a, b), c in g.items():
            if face.p * a + face.q * b == face.N:
                coeffs[(b - beta_end) // face.p] = c
        if coeffs:
            shadows.append(UPoly._from_qq_terms(coeffs))
    return shadows


def _homogenize(u: UPoly, degree: int) -> BPoly:
    """Sum of c_t * x^(degree - t) * y^t for u = sum of c_t * X^t."""
    return BPoly.from_terms({(degree - t, t): c for t, c in enumerate(u.coeffs()) if c})


def initial_ideal(ideal: IdealGens, face: Face) -> InitialDecomposition:
    """
    Decompose the initial ideal of an ideal on one of its faces.

    Args:
        ideal: The ideal
        face: A face of ``diagram(ideal)``

    Returns:
        The decomposition (a, b, F, k_list, d)

    Raises:
        FaceMismatchError: If the face is not a face of the diagram
    """
    if face not in faces(diagram(ideal)):
        raise FaceMismatchError(f"{face} is not a face of the Newton polygon of {ideal}")

    total = face.delta - 1
    shadows = _face_shadows(ideal, face)
    common = UPoly._from_qq_terms({})
    for u in shadows:
        common = common.gcd(u)
    f_degree = common.degree()
    d = total - f_degree

    k_list: List[BPoly] = []
    for u in shadows:
        k = _homogenize(u.exquo(common), d).normalized()
        if k not in k_list:
            k_list.append(k)

    decomposition = InitialDecomposition(
        face=face,
        a=face.origin[0],
        b=face.end[1],
        F=_homogenize(common, f_degree),
        k_list=tuple(k_list),
        d=d,
    )
    logger.debug(f"Initial ideal on {face}: F(1,X) = {common}, d = {d}")
    return decomposition


def face_roots(decomposition: InitialDecomposition) -> List[Tuple[object, int]]:
    """
    Rational roots of the face polynomial with their multiplicities.

    Raises:
        GroundFieldInsufficientError: If F(1, X) has a factor without rational roots
    """
    roots, residual = rational_roots(decomposition.face_polynomial())
    if not residual.is_constant:
        raise GroundFieldInsufficientError(
            f"Face {decomposition.face} has face polynomial F(1,X) with irrational "
            f"factor {residual}",
            face=decomposition.face,
            residual=residual,
        )
    return roots


def check_height_formula(ideal: IdealGens, strict: bool = False) -> bool:
    """
    Check h = sum over faces of p_S * (d_S + sum of root multiplicities).

    The residual factor of F(1, X) without rational roots contributes its
    degree to the multiplicity sum.

    Raises:
        GroundFieldInsufficientError: In strict mode, if a residual factor is not constant
    """
    diag = diagram(ideal)
    total = 0
    for face in faces(diag):
        decomposition = initial_ideal(ideal, face)
        roots, residual = rational_roots(decomposition.face_polynomial())
        if strict and not residual.is_constant:
            raise GroundFieldInsufficientError(
                f"Face {face} needs the roots of {residual}", face=face, residual=residual
            )
        mass = sum(nu for _, nu in roots) + residual.degree()
        total += face.p * (decomposition.d + mass)
    return total == height(diag)


def polygon_area2(diag: NewtonDiagram) -> int:
    """
    Twice the area of the region between the axes and the Newton polygon.

    Raises:
        UnboundedRegionError: If the polygon does not meet both axes
    """
    polygon = faces(diag)
    if not polygon:
        return 0
    first, last = diag.vertices[0], diag.vertices[-1]
    if first[0] != 0 or last[1] != 0:
        raise UnboundedRegionError(
            f"Polygon from {first} to {last} does not meet both axes"
        )
    return sum(face.N * (face.delta - 1) for face in polygon)


def polygon_area2_anchored(diag: NewtonDiagram, anchor: int) -> int:
    """
    Twice the area between the line {x = anchor}, the x-axis and the polygon.

    Equal to ``polygon_area2`` of the diagram shifted back by ``anchor``.

    Args:
        diag: Diagram whose first vertex lies on {x = anchor} and last on the x-axis
        anchor: The x-content N of the transformed ideal

    Raises:
        UnboundedRegionError: If the polygon is not anchored as described
    """
    polygon = faces(diag)
    if not polygon:
        return 0
    first, last = diag.vertices[0], diag.vertices[-1]
    if first[0] != anchor or last[1] != 0:
        raise UnboundedRegionError(
            f"Polygon from {first} to {last} is not anchored on x = {anchor}"
        )
    return sum((face.N - anchor * face.p) * (face.delta - 1) for face in polygon)


def shift_diagram(diag: NewtonDiagram, alpha: int) -> NewtonDiagram:
    return NewtonDiagram(vertices=tuple((a + alpha, b) for a, b in diag.vertices))


def simple_monomial_generators(p: int, q: int) -> List[BPoly]:
    """Minimal monomials x^a y^b with p*a + q*b >= p*q, by increasing power of y."""
    gens = []
    last_alpha = None
    for beta in range(p + 1):
        alpha = max(0, -(-(p * q - q * beta) // p))
        if alpha != last_alpha:
            gens.append(BPoly.monomial(alpha, beta))
            last_alpha = alpha
        if alpha == 0:
            break
    return gens


def diagram_report(ideal: IdealGens, diag: Optional[NewtonDiagram] = None) -> dict:
    """JSON form {"vertices": [...], "faces": [{"p","q","N","delta","d"}]}."""
    diag = diag or diagram(ideal)
    return {
        "vertices": [list(v) for v in diag.vertices],
        "faces": [
            {
                "p": face.p,
                "q": face.q,
                "N": face.N,
                "delta": face.delta,
                "d": initial_ideal(ideal, face).d,
            }
            for face in faces(diag)
        ],
    }
