"""
Observers of the Newton algorithm.

Drivers report every polygon they meet, every map they apply and every
terminal they emit to an ``AlgorithmCallback``. The base class ignores all
events; subclasses record or log them.
"""

import logging
from typing import List

from .algebra import IdealGens
from .geometry import polygon_area2
from .models import Face, MapSequence, NewtonDiagram, NewtonMap, PolygonRecord, ProcessEntry

logger = logging.getLogger(__name__)


class AlgorithmCallback:
    """Base observer; every hook is a no-op."""

    def on_polygon(
        self, maps: MapSequence, ideal: IdealGens, diag: NewtonDiagram, anchor: int
    ) -> None:
        """
        Called when a driver meets a Newton polygon.

        Args:
            maps: Maps applied so far
            ideal: Transform with its x-content removed
            diag: Diagram of ``ideal``
            anchor: The removed x-content
        """
        pass

    def on_map(self, maps: MapSequence, face: Face, new_map: NewtonMap, multiplicity: int) -> None:
        """Called before a driver follows a root of a face polynomial."""
        pass

    def on_terminal(self, entry: ProcessEntry) -> None:
        """Called when a driver emits a process entry."""
        pass


class StepLogger(AlgorithmCallback):
    """Logs every step at DEBUG level."""

    def on_polygon(self, maps, ideal, diag, anchor):
        logger.debug(f"Polygon after {len(maps)} map(s): vertices {list(diag.vertices)}")

    def on_map(self, maps, face, new_map, multiplicity):
        logger.debug(f"Following {new_map} on face {face} (multiplicity {multiplicity})")

    def on_terminal(self, entry):
        logger.debug(f"Terminal {entry}")


class PolygonRecorder(StepLogger):
    """
    Records the polygons met by the ideal driver.

    Each record keeps the diagram of the transform with its x-content
    removed; ``anchor`` is that x-content. The sum of the recorded ``area2``
    values is the iterated-area form of e(I).
    """

    def __init__(self):
        self.records: List[PolygonRecord] = []

    def on_polygon(self, maps, ideal, diag, anchor):
        super().on_polygon(maps, ideal, diag, anchor)
        self.records.append(
            PolygonRecord(maps=maps, diagram=diag, anchor=anchor, area2=polygon_area2(diag))
        )

    @property
    def total_area2(self) -> int:
        return sum(record.area2 for record in self.records)

    def areas(self) -> List[int]:
        return [record.area2 for record in self.records]


class CallbackChain(AlgorithmCallback):
    """Forwards every event to several observers in order."""

    def __init__(self, *callbacks: AlgorithmCallback):
        self.callbacks = [c for c in callbacks if c is not None]

    def on_polygon(self, maps, ideal, diag, anchor):
        for callback in self.callbacks:
            callback.on_polygon(maps, ideal, diag, anchor)

    def on_map(self, maps, face, new_map, multiplicity):
        for callback in self.callbacks:
            callback.on_map(maps, face, new_map, multiplicity)

    def on_terminal(self, entry):
        for callback in self.callbacks:
            callback.on_terminal(entry)
