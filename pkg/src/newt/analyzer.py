"""
Main analyzer that runs the Newton algorithm on an ideal.

This is the primary interface of the library: it splits off the monomial
content and the common factor of the generators, runs the curve driver on
each squarefree factor and the ideal driver on the finite-codimension
cofactor, merges their processes and reconstructs the decorated tree.
"""

import logging
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .algebra import BPoly, IdealGens
from .callback import AlgorithmCallback, CallbackChain, PolygonRecorder
from .drivers import CurveDriver, IdealDriver
from .geometry import diagram, faces, initial_ideal
from .interfaces import CrossCheckError, NotFiniteCodimError, TrivialIdealError
from .maps import generic_valuation
from .models import PolygonRecord, RunConfig
from .process import NewtonProcess
from .tree import NewtonTree, check_N_decorations, reconstruct_tree

logger = logging.getLogger(__name__)


class AnalysisResult(BaseModel):
    """
    Everything one run of the Newton algorithm produces.

    ``principal_part`` lists the squarefree factors of the common factor of
    the generators with their multiplicities; ``cofactor`` is the
    finite-codimension ideal left after dividing it out. ``polygons`` are the
    polygons met by the ideal driver.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ideal: IdealGens
    content: Tuple[int, int]
    principal_part: Tuple[Tuple[BPoly, int], ...]
    cofactor: IdealGens
    process: NewtonProcess
    tree: NewtonTree
    depth: int
    polygons: Tuple[PolygonRecord, ...]
    config: RunConfig

    @property
    def finite_codim(self) -> bool:
        return self.content == (0, 0) and not self.principal_part

    def require_finite_codim(self) -> None:
        if not self.finite_codim:
            raise NotFiniteCodimError(f"{self.ideal} is not of finite codimension")

    def cofactor_tree(self) -> NewtonTree:
        """Tree of the finite-codimension cofactor (the dicritical entries alone)."""
        return reconstruct_tree(self.process.dicritical_part())


class IdealAnalyzer:
    """
    Coordinator of the Newton algorithm.

    Owns the run configuration and an optional observer that sees every
    step of both drivers.
    """

    def __init__(
        self,
        config: Optional[RunConfig] = None,
        callback: Optional[AlgorithmCallback] = None,
    ):
        """
        Initialize the analyzer.

        Args:
            config: Run configuration (defaults to RunConfig())
            callback: Observer of the drivers
        """
        self.config = config or RunConfig()
        self.callback = callback

    def run(self, ideal: IdealGens) -> AnalysisResult:
        """
        Run the Newton algorithm.

        Args:
            ideal: Non-trivial ideal

        Returns:
            Content, process, tree and depth of the ideal

        Raises:
            TrivialIdealError: If a generator is a unit at the origin
            GroundFieldInsufficientError: If an irrational root is needed
            DepthGuardExceededError: If the recursion exceeds ``config.max_depth``
            CrossCheckError: If a decoration fails its independent check
        """
        if ideal.is_unit():
            raise TrivialIdealError(f"{ideal} contains a unit at the origin")
        logger.info(f"Analyzing ideal {ideal}")

        a, b = ideal.content
        stripped = ideal.stripped()
        common = stripped.gcd()
        if common.is_constant:
            principal: Tuple[Tuple[BPoly, int], ...] = ()
            cofactor = stripped
        else:
            principal = tuple(common.squarefree_decompose())
            cofactor = IdealGens(g.exquo(common) for g in stripped)

        entries = []
        curve = CurveDriver(self.config, self.callback)
        for factor, multiplicity in principal:
            if factor.vanishes_at_origin():
                entries.extend(curve.explore(IdealGens([factor]), multiplicity))

        recorder = PolygonRecorder()
        if not cofactor.is_unit():
            driver = IdealDriver(self.config, CallbackChain(recorder, self.callback))
            entries.extend(driver.explore(cofactor))

        process = NewtonProcess.build(entries, x_content=a, y_content=b)
        tree = reconstruct_tree(process)
        if tree.depth != process.depth:
            raise CrossCheckError(f"Tree width {tree.depth} != process depth {process.depth}")
        if self.config.cross_check:
            self._check_decorations(ideal, tree)
            if not check_N_decorations(tree):
                raise CrossCheckError("N decorations fail the path-product formula")

        logger.info(
            f"Depth {tree.depth}, {len(process.entries)} process entries, "
            f"{len(tree.vertices)} vertices"
        )
        return AnalysisResult(
            ideal=ideal,
            content=(a, b),
            principal_part=principal,
            cofactor=cofactor,
            process=process,
            tree=tree,
            depth=tree.depth,
            polygons=tuple(recorder.records),
            config=self.config,
        )

    def _check_decorations(self, ideal: IdealGens, tree: NewtonTree) -> None:
        """Recompute every N_v by substituting the generators through the maps of v."""
        for v in tree.vertices:
            values = [
                generic_valuation(g, v.maps, v.p, v.pre_glue_m, bound=v.N) for g in ideal
            ]
            found = min((value for value in values if value is not None), default=None)
            if found != v.N:
                raise CrossCheckError(
                    f"Vertex {v.id}: tree gives N={v.N}, substitution gives "
                    f"{'more' if found is None else found}"
                )

    def depth(self, ideal: IdealGens) -> int:
        return self.run(ideal).depth

    def is_nondegenerate(self, ideal: IdealGens) -> bool:
        """
        Depth at most one.

        For ideals of finite codimension the face-polynomial test must agree.

        Raises:
            CrossCheckError: If the two tests disagree
        """
        result = self.run(ideal)
        nondegenerate = result.depth <= 1
        if result.finite_codim:
            fast = self.nondegenerate_finite_codim_fast(ideal)
            if fast != nondegenerate:
                raise CrossCheckError(
                    f"Depth {result.depth} disagrees with the face polynomial test ({fast})"
                )
        return nondegenerate

    def nondegenerate_finite_codim_fast(self, ideal: IdealGens) -> bool:
        """
        True iff every face polynomial of the ideal is constant.

        Raises:
            TrivialIdealError: If a generator is a unit at the origin
            NotFiniteCodimError: If the generators have a common factor
        """
        if ideal.is_unit():
            raise TrivialIdealError(f"{ideal} contains a unit at the origin")
        if not ideal.gcd().is_constant:
            raise NotFiniteCodimError(f"{ideal} is not of finite codimension")
        return all(
            initial_ideal(ideal, face).face_polynomial().is_constant
            for face in faces(diagram(ideal))
        )
