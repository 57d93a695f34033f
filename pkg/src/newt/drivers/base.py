"""
Checks shared by the drivers.
"""

from ..algebra import IdealGens
from ..geometry import check_height_formula, diagram, height
from ..interfaces import CrossCheckError
from ..models import NewtonMap


def assert_height_formula(ideal: IdealGens, strict: bool) -> None:
    """Raise CrossCheckError if the height of the polygon disagrees with its face data."""
    if not check_height_formula(ideal, strict=strict):
        raise CrossCheckError(f"Height formula fails on the polygon of {ideal}")


def assert_height_drop(transform: IdealGens, new_map: NewtonMap, multiplicity: int) -> None:
    """Raise CrossCheckError if a transform along a root is higher than the root multiplicity."""
    if transform.is_unit():
        return
    h = height(diagram(transform))
    if h > multiplicity:
        raise CrossCheckError(
            f"Transform by {new_map} has height {h} > root multiplicity {multiplicity}"
        )
