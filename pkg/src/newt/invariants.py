"""
Invariants read off the Newton tree and process.

Valuations N_v(f), the order multiplicity m(I), the Hilbert-Samuel
multiplicity e(I) (from the dicritical vertices and from the iterated
polygon areas), j(I), degree functions, Rees valuations and the
Lojasiewicz exponent.
"""

import logging
from fractions import Fraction
from typing import Optional

from .algebra import BPoly, IdealGens
from .analyzer import AnalysisResult, IdealAnalyzer
from .interfaces import AgreementError, CrossCheckError, InputError, NotVanishingAtOriginError
from .maps import generic_valuation, make_map
from .models import (
    GENERIC,
    DicriticalRecord,
    DicriticalReport,
    InvariantsReport,
    Lojasiewicz,
    ReesEntry,
    RunConfig,
    Vertex,
)
from .process import merge_processes
from .tree import NewtonTree, reconstruct_tree, rho0

logger = logging.getLogger(__name__)


def direct_valuation(f: BPoly, v: Vertex) -> int:
    """N_v(f) by substituting f through the maps of v and the generic map of its face."""
    return generic_valuation(f, v.maps, v.p, v.pre_glue_m)


def combinatorial_valuation(
    analysis: AnalysisResult, v: Vertex, f: BPoly, config: Optional[RunConfig] = None
) -> int:
    """
    N_v(f) from the product rule: the decoration of v in the tree of (f)*I minus N_v.
    """
    if not f.vanishes_at_origin():
        return 0
    curve = IdealAnalyzer(config or analysis.config).run(IdealGens([f]))
    merged = reconstruct_tree(merge_processes(curve.process, analysis.process))
    image = merged.find_vertex(v.maps, v.p, v.pre_glue_m)
    if image is None:
        raise AgreementError(f"Vertex {v.id} has no image in the tree of (f)*I")
    return image.N - v.N


def valuation_Nv(analysis: AnalysisResult, v: Vertex, f: BPoly) -> int:
    """
    N_v(f), computed combinatorially and directly.

    Raises:
        AgreementError: If the two computations differ
    """
    if f.is_zero:
        raise InputError("N_v of the zero polynomial is infinite")
    direct = direct_valuation(f, v)
    combinatorial = combinatorial_valuation(analysis, v, f)
    if direct != combinatorial:
        raise AgreementError(
            f"N_{v.id}({f}): substitution gives {direct}, product rule gives {combinatorial}"
        )
    return direct


def mult_m(analysis: AnalysisResult) -> int:
    """m(I) = sum of rho(v) * d_v over dicritical vertices."""
    analysis.require_finite_codim()
    tree = analysis.tree
    return sum(rho0(tree, v) * v.d for v in tree.dicriticals)


def hs_multiplicity(analysis: AnalysisResult) -> int:
    """e(I) = sum of N_v * d_v over dicritical vertices."""
    analysis.require_finite_codim()
    return sum(v.N * v.d for v in analysis.tree.dicriticals)


def hs_via_areas(analysis: AnalysisResult) -> int:
    """
    e(I) as twice the sum of the areas of every polygon met by the algorithm.

    Raises:
        CrossCheckError: If the result differs from ``hs_multiplicity``
    """
    analysis.require_finite_codim()
    total = sum(record.area2 for record in analysis.polygons)
    expected = hs_multiplicity(analysis)
    if total != expected:
        raise CrossCheckError(f"Area sum {total} != sum of N_v d_v = {expected}")
    return total


def first_polygon_area2(analysis: AnalysisResult) -> int:
    """Twice the area under the Newton polygon of I itself."""
    analysis.require_finite_codim()
    return analysis.polygons[0].area2 if analysis.polygons else 0


def _degree_on(tree: NewtonTree, f: BPoly) -> int:
    return sum(direct_valuation(f, v) * v.d for v in tree.dicriticals)


def degree_function(analysis: AnalysisResult, f: BPoly) -> int:
    """d_I(f) = sum of N_v(f) * d_v over dicritical vertices."""
    analysis.require_finite_codim()
    if f.is_zero:
        raise InputError("The degree function is not defined on 0")
    if not f.vanishes_at_origin():
        raise NotVanishingAtOriginError(f"d_I({f}) needs f(0,0) = 0")
    return sum(valuation_Nv(analysis, v, f) * v.d for v in analysis.tree.dicriticals)


def j_multiplicity(analysis: AnalysisResult) -> int:
    """
    j(I) = e(I1) + d_I1(x^a y^b g) for I = (x^a y^b g) * I1 with I1 of finite codimension.

    The degree of the principal part is summed factor by factor.
    """
    cofactor_tree = analysis.cofactor_tree()
    e1 = sum(v.N * v.d for v in cofactor_tree.dicriticals)
    a, b = analysis.content
    degree = a * _degree_on(cofactor_tree, BPoly.x()) + b * _degree_on(cofactor_tree, BPoly.y())
    for factor, multiplicity in analysis.principal_part:
        degree += multiplicity * _degree_on(cofactor_tree, factor)
    return e1 + degree


def rees_valuations(analysis: AnalysisResult) -> DicriticalReport:
    analysis.require_finite_codim()
    tree = analysis.tree
    records = []
    for v in tree.dicriticals:
        records.append(
            DicriticalRecord(
                vertex=v.id, maps=v.maps, N=v.N, d=v.d, rho=rho0(tree, v), chain=v.chain
            )
        )
    return DicriticalReport(records=tuple(records))


def lojasiewicz(analysis: AnalysisResult) -> Fraction:
    """L0(I) = max of N_v / rho(v) over dicritical vertices."""
    analysis.require_finite_codim()
    tree = analysis.tree
    return max(Fraction(v.N, rho0(tree, v)) for v in tree.dicriticals)


def invariants_report(analysis: AnalysisResult) -> InvariantsReport:
    """All invariants; finite-codimension data is left empty for other ideals."""
    report = InvariantsReport(
        depth=analysis.depth,
        nondegenerate=analysis.depth <= 1,
        j=j_multiplicity(analysis),
    )
    if not analysis.finite_codim:
        return report
    exponent = lojasiewicz(analysis)
    rees = []
    for record in rees_valuations(analysis).records:
        v = analysis.tree.vertex(record.vertex)
        generic = v.maps + (make_map(v.p, v.pre_glue_m, GENERIC),)
        rees.append(ReesEntry(maps=list(generic), N=record.N, d=record.d, rho=record.rho))
    return report.model_copy(
        update={
            "mult_m": mult_m(analysis),
            "e": hs_multiplicity(analysis),
            "e_area": hs_via_areas(analysis),
            "lojasiewicz": Lojasiewicz(num=exponent.numerator, den=exponent.denominator),
            "rees": rees,
        }
    )