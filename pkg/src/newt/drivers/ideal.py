"""
Newton algorithm on an ideal of finite codimension.
"""

import logging
from typing import List, Optional

from ..algebra import BPoly, IdealGens
from ..geometry import diagram, face_roots, faces, initial_ideal
from ..interfaces import NewtonDriver, NotFiniteCodimError
from ..maps import apply_map_ideal, make_map
from ..models import GENERIC, Dicritical, MapSequence, ProcessEntry
from .base import assert_height_drop, assert_height_formula

logger = logging.getLogger(__name__)


def pure_x_power(ideal: IdealGens) -> Optional[int]:
    """Smallest m such that some generator is x^m times a unit at the origin."""
    powers = []
    for g in ideal:
        m = g.x_order()
        if g.y_order() == 0 and g.coeff(m, 0) != 0:
            powers.append(m)
    return min(powers) if powers else None


def truncate_ideal(ideal: IdealGens) -> IdealGens:
    """
    Replace a generator x^m * unit by x^m and drop terms of x-degree >= m elsewhere.

    The result generates the same ideal of C[[x, y]].
    """
    m = pure_x_power(ideal)
    if m is None:
        return ideal
    kept = [BPoly.monomial(m, 0)]
    for g in ideal:
        t = g.truncate_x(m)
        if not t.is_zero and t not in kept:
            kept.append(t)
    return IdealGens(kept)


class IdealDriver(NewtonDriver):
    """
    Driver for ideals of finite codimension.

    Every rational root of every face polynomial is followed; dicritical faces
    emit a Dicritical terminal ending with the GENERIC map of the face. The
    recursion stops on the unit ideal.
    """

    def explore(self, ideal: IdealGens, weight: int = 1) -> List[ProcessEntry]:
        """
        Run the Newton algorithm on an ideal of finite codimension.

        Args:
            ideal: Ideal without monomial content whose generators have no common factor
            weight: Exponent of the ideal

        Returns:
            Dicritical entries in the order they were reached

        Raises:
            NotFiniteCodimError: If the ideal has monomial content or a common factor
        """
        if ideal.content != (0, 0) or not ideal.gcd().is_constant:
            raise NotFiniteCodimError(f"{ideal} is not of finite codimension")
        entries: List[ProcessEntry] = []
        self._walk(ideal, (), 0, weight, entries)
        logger.debug(f"Ideal {ideal} gave {len(entries)} dicritical entr(ies)")
        return entries

    def _walk(
        self,
        ideal: IdealGens,
        maps: MapSequence,
        anchor: int,
        weight: int,
        entries: List[ProcessEntry],
    ) -> None:
        self._check_depth(len(maps))
        if ideal.is_unit():
            return
        if self.config.truncate:
            ideal = truncate_ideal(ideal)
        diag = diagram(ideal)
        self.callback.on_polygon(maps, ideal, diag, anchor)
        if self.config.cross_check:
            assert_height_formula(ideal, self.config.strict_field)

        for face in faces(diag):
            decomposition = initial_ideal(ideal, face)
            if decomposition.is_dicritical:
                entry = ProcessEntry(
                    maps=maps + (make_map(face.p, face.q, GENERIC),),
                    terminal=Dicritical(d=decomposition.d * weight),
                )
                self.callback.on_terminal(entry)
                entries.append(entry)
            for mu, nu in face_roots(decomposition):
                new_map = make_map(face.p, face.q, mu)
                self.callback.on_map(maps, face, new_map, nu)
                n0, transform = apply_map_ideal(ideal, new_map)
                if self.config.cross_check:
                    assert_height_drop(transform, new_map, nu)
                self._walk(transform, maps + (new_map,), face.p * anchor + n0, weight, entries)
