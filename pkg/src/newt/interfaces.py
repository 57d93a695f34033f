"""
Abstract interfaces and exceptions for the Newton algorithm.

The drivers that walk Newton polygons implement ``NewtonDriver`` so the
analyzer can combine them without knowing which part of an ideal (curve or
finite-codimension cofactor) each one handles.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Dict, List, Optional

if TYPE_CHECKING:
    from .algebra import IdealGens, UPoly
    from .callback import AlgorithmCallback
    from .models import Face, ProcessEntry, RunConfig


class NewtonDriver(ABC):
    """
    Abstract interface for Newton algorithm drivers.

    A driver takes an ideal, applies Newton maps along the roots of its face
    polynomials and reports the terminal data it reaches as process entries.
    """

    def __init__(
        self,
        config: Optional["RunConfig"] = None,
        callback: Optional["AlgorithmCallback"] = None,
    ):
        from .callback import AlgorithmCallback
        from .models import RunConfig

        self.config = config or RunConfig()
        self.callback = callback or AlgorithmCallback()

    @abstractmethod
    def explore(self, ideal: "IdealGens", weight: int = 1) -> List["ProcessEntry"]:
        """
        Run the driver on an ideal.

        Args:
            ideal: Ideal to resolve; the driver strips its monomial content
            weight: Exponent applied to every terminal (the ideal is taken to
                this power)

        Returns:
            Process entries in the order they were reached

        Raises:
            GroundFieldInsufficientError: If a face polynomial has a root outside Q
            DepthGuardExceededError: If the recursion passes ``config.max_depth``
        """
        pass

    def _check_depth(self, level: int) -> None:
        if level > self.config.max_depth:
            raise DepthGuardExceededError(
                f"Newton recursion exceeded max_depth={self.config.max_depth}"
            )


class ReportStorage(ABC):
    """
    Abstract interface for report storage.

    Stores the JSON reports produced by the CLI under a name and keeps an
    index of what was stored.
    """

    @abstractmethod
    async def save_report(
        self, name: str, command: str, report: Dict[str, Any], source: str, seed: int
    ) -> None:
        """
        Save a report.

        Args:
            name: Report name (the stem of the stored file)
            command: CLI command that produced the report
            report: JSON-serializable report
            source: Text of the input the report was computed from
            seed: Seed of the run

        Raises:
            StorageError: If the report cannot be written
        """
        pass

    @abstractmethod
    async def load_report(self, name: str) -> Optional[Dict[str, Any]]:
        """
        Load a report by name.

        Returns:
            The report if found, None otherwise
        """
        pass

    @abstractmethod
    async def list_reports(self, command: Optional[str] = None) -> List[Dict[str, Any]]:
        """
        List index entries, optionally only those of one command.
        """
        pass

    @abstractmethod
    async def delete_report(self, name: str) -> bool:
        """
        Delete a report.

        Returns:
            True if the report existed
        """
        pass


class NewtonError(Exception):
    """Base exception for Newton algorithm operations."""

    pass


class InputError(NewtonError):
    """Exception for invalid user input."""

    pass


class PolynomialSyntaxError(InputError, ValueError):
    """Exception raised when a polynomial expression cannot be parsed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class ZeroPolynomialError(InputError):
    """Exception raised when an operation needs a nonzero polynomial."""

    pass


class TrivialIdealError(InputError):
    """Exception raised when a generator is a unit at the origin."""

    pass


class NotFiniteCodimError(InputError):
    """Exception raised when an ideal is not of finite codimension."""

    pass


class NotMonomialError(InputError):
    """Exception raised when a monomial ideal is required."""

    pass


class NotCoprimeError(InputError):
    """Exception raised when the slope data (p, q) of a Newton map is not coprime."""

    pass


class ZeroMuError(InputError):
    """Exception raised when a Newton map is given mu = 0."""

    pass


class FaceMismatchError(InputError):
    """Exception raised when a face does not belong to the diagram of an ideal."""

    pass


class PrincipalIdealError(InputError):
    """Exception raised when an operation needs a non-principal ideal."""

    pass


class CommonFactorError(InputError):
    """Exception raised when two curves share a branch through the origin."""

    pass


class NotVanishingAtOriginError(InputError):
    """Exception raised when a curve does not pass through the origin."""

    pass


class BothConstantInYError(InputError):
    """Exception raised when a resultant in y is asked of two y-free polynomials."""

    pass


class UnboundedRegionError(InputError):
    """Exception raised when the region under a polygon is not bounded."""

    pass


class InconsistentProcessError(InputError):
    """Exception raised when process entries imply contradictory tree data."""

    pass


class DepthGuardExceededError(InputError):
    """Exception raised when the Newton recursion exceeds the configured depth."""

    pass


class GroundFieldInsufficientError(NewtonError):
    """Exception raised when following the algorithm needs an irrational root."""

    def __init__(
        self,
        message: str,
        face: Optional["Face"] = None,
        residual: Optional["UPoly"] = None,
    ):
        super().__init__(message)
        self.face = face
        self.residual = residual


class StorageError(NewtonError):
    """Exception raised when reports or ideal files cannot be read or written."""

    pass


class CrossCheckError(NewtonError):
    """Exception raised when two independent computations of an invariant disagree."""

    pass


class AgreementError(CrossCheckError):
    """Exception raised when the combinatorial and direct valuations differ."""

    pass
