"""
Newton algorithm on a reduced curve.

Follows every root of every face polynomial of a squarefree polynomial
until each local branch is smooth and transverse to {x = 0}; the branches
are emitted as Branch terminals carrying the exponent of the factor.
"""

import logging
from typing import List

from ..algebra import BPoly, IdealGens
from ..geometry import diagram_of_poly, face_roots, faces, initial_ideal
from ..interfaces import InputError, NewtonDriver
from ..maps import apply_map_poly, make_map
from ..models import Branch, MapSequence, ProcessEntry
from .base import assert_height_drop, assert_height_formula

logger = logging.getLogger(__name__)


def branch_certificate(w: BPoly) -> BPoly:
    """Normal form of a certificate: ``y`` for the branch y = 0, else the primitive form."""
    if BPoly.y().divides(w):
        return BPoly.y()
    return w.normalized()


class CurveDriver(NewtonDriver):
    """
    Driver for principal ideals (f) with f squarefree.

    The recursion stops at smooth branches: once the transform f1 has a
    nonzero coefficient of y, its unique branch through the origin is y + h(x).
    """

    def explore(self, ideal: IdealGens, weight: int = 1) -> List[ProcessEntry]:
        """
        Run the Newton algorithm on a principal ideal.

        Args:
            ideal: Principal ideal (f) with f squarefree and without monomial content
            weight: Exponent of f in the ideal being analyzed

        Returns:
            Branch entries, one per local branch of f at the origin

        Raises:
            InputError: If the ideal is not principal or f has monomial content
        """
        if not ideal.is_principal():
            raise InputError(f"The curve driver needs a principal ideal, got {ideal}")
        if ideal.content != (0, 0):
            raise InputError(f"Monomial content {ideal.content} must be split off first")
        entries: List[ProcessEntry] = []
        self._walk(ideal.generators[0], (), weight, entries)
        logger.debug(f"Curve {ideal} gave {len(entries)} branch(es)")
        return entries

    def _emit(self, entries: List[ProcessEntry], maps: MapSequence, w: BPoly, nu: int) -> None:
        entry = ProcessEntry(maps=maps, terminal=Branch(nu=nu, certificate=branch_certificate(w)))
        self.callback.on_terminal(entry)
        entries.append(entry)

    def _walk(self, f: BPoly, maps: MapSequence, weight: int, entries: List[ProcessEntry]) -> None:
        self._check_depth(len(maps))
        f = f.strip_monomial(f.x_order(), 0)
        y_order = f.y_order()
        if y_order:
            # Only reachable after a map: the content-free input has y_order 0.
            self._emit(entries, maps, BPoly.y(), weight * y_order)
            f = f.strip_monomial(0, y_order)
        if not f.vanishes_at_origin():
            return
        if f.coeff(0, 1) != 0:
            self._emit(entries, maps, f, weight)
            return

        principal = IdealGens([f])
        diag = diagram_of_poly(f)
        self.callback.on_polygon(maps, principal, diag, 0)
        if self.config.cross_check:
            assert_height_formula(principal, self.config.strict_field)

        for face in faces(diag):
            decomposition = initial_ideal(principal, face)
            for mu, nu in face_roots(decomposition):
                new_map = make_map(face.p, face.q, mu)
                self.callback.on_map(maps, face, new_map, nu)
                _, transform = apply_map_poly(f, new_map)
                if self.config.cross_check:
                    assert_height_drop(IdealGens([transform]), new_map, nu)
                self._walk(transform, maps + (new_map,), weight, entries)
