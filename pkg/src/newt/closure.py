"""
Integral closure: equality test and Zariski factorization.

Two ideals have the same integral closure iff their canonical Newton
processes agree. The process also gives the factorization of the closure
into irreducible curves and simple integrally closed ideals.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import BPoly, IdealGens
from .analyzer import IdealAnalyzer
from .geometry import simple_monomial_generators
from .models import GENERIC, FactorDescriptor, NewtonMap, ProcessEntry, RunConfig
from .process import NewtonProcess

logger = logging.getLogger(__name__)

Factor = Tuple[FactorDescriptor, int]


def same_integral_closure(
    first: IdealGens, second: IdealGens, config: Optional[RunConfig] = None
) -> bool:
    """
    Decide whether two ideals have the same integral closure.

    Args:
        first: Non-trivial ideal
        second: Non-trivial ideal
        config: Run configuration shared by both analyses

    Returns:
        True iff the canonical processes (contents included) are equal
    """
    analyzer = IdealAnalyzer(config)
    p1 = analyzer.run(first).process
    p2 = analyzer.run(second).process
    equal = p1 == p2
    logger.info(f"Processes {p1} and {p2} are {'equal' if equal else 'different'}")
    return equal


def _curve_polynomial(maps: Tuple[NewtonMap, ...]) -> BPoly:
    """The curve y = mu_1 x^{q_1} + mu_2 x^{q_1+q_2} + ... followed by maps with p = 1."""
    series = BPoly.zero()
    power = 0
    for m in maps:
        power += m.q
        series = series + BPoly.monomial(power, 0, m.mu)
    return BPoly.y() - series


def _descriptor(entry: ProcessEntry) -> FactorDescriptor:
    maps = entry.maps
    if entry.is_dicritical:
        if len(maps) == 1:
            gens = simple_monomial_generators(maps[0].p, maps[0].q)
            return FactorDescriptor(kind="simple", maps=maps, generators=tuple(map(str, gens)))
        return FactorDescriptor(kind="simple", maps=maps)
    certificate = entry.terminal.certificate
    if not maps:
        return FactorDescriptor(kind="curve", generators=(str(certificate),))
    if entry.terminal.is_y_branch and all(m.p == 1 for m in maps):
        return FactorDescriptor(kind="curve", maps=maps, generators=(str(_curve_polynomial(maps)),))
    return FactorDescriptor(kind="curve", maps=maps)


def _tree_order(entry: ProcessEntry) -> Tuple:
    """Top-to-bottom order of the tree: p/q descending, then mu ascending, GENERIC last."""
    key = []
    for m in entry.maps:
        mu = Fraction(0) if m.is_generic else m.mu
        key.append((m.slope, 1 if m.is_generic else 0, mu))
    return (tuple(key), 0 if entry.is_dicritical else 1)


def zariski_factorization(process: NewtonProcess) -> List[Factor]:
    """
    Factor the integral closure of an ideal from its process.

    Each dicritical entry (Sigma; k) gives the simple integrally closed ideal
    with process {(Sigma; 1)} to the power k; each branch gives an irreducible
    curve to the power nu. The content x^a y^b is listed first and last.

    Args:
        process: Canonical process of a non-trivial ideal

    Returns:
        Factors with their exponents, in tree order
    """
    factors: List[Factor] = []
    if process.x_content:
        factors.append((FactorDescriptor(kind="curve", generators=("x",)), process.x_content))
    for entry in sorted(process.entries, key=_tree_order):
        factors.append((_descriptor(entry), entry.exponent))
    if process.y_content:
        factors.append((FactorDescriptor(kind="curve", generators=("y",)), process.y_content))
    logger.debug(f"Zariski factorization of {process}: {len(factors)} factor(s)")
    return factors


def format_factorization(factors: List[Factor]) -> str:
    """Render factors as a product, e.g. (x,y)^3(x^3,y)."""
    pieces = []
    for descriptor, exponent in factors:
        label = descriptor.label()
        if descriptor.kind == "curve" and descriptor.generators and len(label) > 1:
            label = f"({label})"
        pieces.append(label if exponent == 1 else f"{label}^{exponent}")
    return "".join(pieces) or "(1)"
