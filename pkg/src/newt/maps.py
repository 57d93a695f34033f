"""
Newton maps and their action on polynomials and ideals.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from .algebra import BPoly, IdealGens
from .interfaces import NotCoprimeError, ZeroMuError
from .models import GENERIC, NewtonMap

logger = logging.getLogger(__name__)


def make_map(p: int, q: int, mu: Union[int, Fraction, str]) -> NewtonMap:
    """
    Build the canonical Newton map sigma(p, q, mu).

    Args:
        p: Positive integer coprime to q
        q: Positive integer
        mu: Nonzero rational, or ``GENERIC``

    Returns:
        The map with the unique (p', q') such that p*p' - q*q' = 1, p' <= q, q' < p

    Raises:
        NotCoprimeError: If p or q is not positive or gcd(p, q) != 1
        ZeroMuError: If mu == 0
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprimeError(f"(p, q) = ({p}, {q}) must be coprime positive integers")
    if mu != GENERIC and Fraction(mu) == 0:
        raise ZeroMuError("A Newton map needs mu != 0")
    for p_prime in range(q + 1):
        numerator = p * p_prime - 1
        if numerator % q == 0 and 0 <= numerator // q < p:
            return NewtonMap(p=p, q=q, p_prime=p_prime, q_prime=numerator // q, mu=mu)
    raise AssertionError(f"No canonical (p', q') for ({p}, {q})")


def compose(f: BPoly, m: NewtonMap, x_limit: Optional[int] = None) -> BPoly:
    """f composed with a concrete Newton map, without removing x-content."""
    x_scale, y_shift = m.substitution()
    return f.newton_substitute(m.p, m.q, x_scale, y_shift, x_limit=x_limit)


def apply_map_poly(f: BPoly, m: NewtonMap) -> Tuple[int, BPoly]:
    """
    Apply a concrete Newton map to a polynomial.

    Returns:
        (k, f1) with f composed with the map equal to x1^k * f1 and x1 not dividing f1
    """
    composed = compose(f, m)
    k = composed.x_order()
    return k, composed.strip_monomial(k, 0)


def apply_map_poly_generic(f: BPoly, p: int, q: int) -> int:
    """x-order of f composed with sigma(p, q, mu) for a generic mu."""
    return f.weighted_order(p, q)


def apply_map_ideal(
    ideal: IdealGens, m: NewtonMap, x_limit: Optional[int] = None
) -> Tuple[int, IdealGens]:
    """
    Apply a Newton map to an ideal.

    Args:
        ideal: The ideal
        m: Newton map; a GENERIC map sends the ideal to x1^N0 times the unit ideal
        x_limit: Terms of x-degree >= x_limit are dropped from the transforms

    Returns:
        (N0, I1) with the transformed ideal equal to x1^N0 * I1, I1 without x-content
    """
    if m.is_generic:
        return min(apply_map_poly_generic(g, m.p, m.q) for g in ideal), IdealGens([BPoly.one()])

    transforms = [t for t in (compose(g, m, x_limit) for g in ideal) if not t.is_zero]
    n0 = min(t.x_order() for t in transforms)
    stripped = IdealGens(t.strip_monomial(n0, 0) for t in transforms)
    if stripped.is_unit():
        stripped = IdealGens([BPoly.one()])
    logger.debug(f"Applied {m}: x-content {n0}, transform {stripped}")
    return n0, stripped


def generic_valuation(
    f: BPoly, maps: Sequence[NewtonMap], p: int, q: int, bound: Optional[int] = None
) -> Optional[int]:
    """
    x-order of f composed with ``maps`` and then sigma(p, q, GENERIC).

    Args:
        f: Nonzero polynomial
        maps: Concrete maps applied first, in order
        p: Normal data of the final generic map
        q: Normal data of the final generic map
        bound: If given, terms that can only contribute values above it are
            dropped; None is returned when the value exceeds the bound

    Returns:
        The valuation, or None if it exceeds ``bound``
    """
    current = f
    limit = None if bound is None else bound + 1
    for m in maps:
        current = compose(current, m, x_limit=limit)
        if current.is_zero:
            return None
    value = apply_map_poly_generic(current, p, q)
    if bound is not None and value > bound:
        return None
    return value
