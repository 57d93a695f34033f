"""
Independent verification paths.

Intersection numbers through resultants, the multiplicity of an ideal as
the intersection number of two generic elements, the order of a generic
element, and the closed formulas for monomial ideals. Nothing here uses
the Newton drivers, processes, trees or the polygon code; only the
algebra layer.
"""

import logging
import random
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .algebra import BPoly, IdealGens, resultant_y
from .interfaces import (
    CommonFactorError,
    CrossCheckError,
    NotFiniteCodimError,
    NotMonomialError,
    NotVanishingAtOriginError,
    TrivialIdealError,
)
from .models import GENERIC, FactorDescriptor, NewtonMap

logger = logging.getLogger(__name__)

COEFF_BOUND = 10**6
DRAWS = 5
SHEARS = 3


class RandomSource:
    """
    Seeded source of generic coefficients.

    Identical seeds give identical draws. Coefficients are nonzero integers
    in [-10^6, 10^6].
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._random = random.Random(seed)

    def coefficient(self, bound: int = COEFF_BOUND) -> int:
        value = 0
        while value == 0:
            value = self._random.randint(-bound, bound)
        return value

    def randint(self, low: int, high: int) -> int:
        return self._random.randint(low, high)

    def choice(self, items):
        return self._random.choice(items)

    def combination(self, ideal: IdealGens) -> BPoly:
        """A random Q-linear combination of the generators."""
        result = BPoly.zero()
        for g in ideal:
            result = result + g.scale(self.coefficient())
        return result


def intersection_mult(f: BPoly, g: BPoly, rnd: RandomSource) -> int:
    """
    Intersection multiplicity (f, g) at the origin.

    Computed as the x-order of Res_y(f o L, g o L) for three random shears
    L: x -> x + c*y, which make both polynomials regular in y and move the
    other common zeros off the line x = 0.

    Raises:
        NotVanishingAtOriginError: If f or g does not vanish at the origin
        CommonFactorError: If f and g share a factor
        CrossCheckError: If the three shears disagree
    """
    if not f.vanishes_at_origin() or not g.vanishes_at_origin():
        raise NotVanishingAtOriginError(f"{f} and {g} must both vanish at the origin")
    if not f.gcd(g).is_constant:
        raise CommonFactorError(f"{f} and {g} have the common factor {f.gcd(g)}")
    values = []
    for _ in range(SHEARS):
        c = rnd.coefficient()
        values.append(resultant_y(f.shear_x(c), g.shear_x(c)).order())
    if len(set(values)) != 1:
        raise CrossCheckError(
            f"Shears of ({f}, {g}) give different intersection numbers {values}"
        )
    return values[0]


def e_oracle(ideal: IdealGens, rnd: RandomSource) -> int:
    """
    Hilbert-Samuel multiplicity as the minimum intersection number of pairs
    of random combinations of the generators.

    Raises:
        NotFiniteCodimError: If the ideal is not of finite codimension
    """
    if ideal.is_unit():
        raise TrivialIdealError(f"{ideal} contains a unit at the origin")
    if ideal.content != (0, 0) or not ideal.gcd().is_constant:
        raise NotFiniteCodimError(f"{ideal} is not of finite codimension")
    best: Optional[int] = None
    for _ in range(DRAWS):
        g1, g2 = rnd.combination(ideal), rnd.combination(ideal)
        if g1.is_zero or g2.is_zero or not g1.gcd(g2).is_constant:
            logger.warning(f"Discarding a non-generic draw for {ideal} (seed {rnd.seed})")
            continue
        value = intersection_mult(g1, g2, rnd)
        best = value if best is None else min(best, value)
    if best is None:
        raise CrossCheckError(f"No generic pair found for {ideal} (seed {rnd.seed})")
    return best


def mult_oracle(ideal: IdealGens, rnd: RandomSource) -> int:
    """Order multiplicity as the minimum order of random combinations of the generators."""
    if ideal.is_unit():
        raise TrivialIdealError(f"{ideal} contains a unit at the origin")
    orders = []
    for _ in range(DRAWS):
        combination = rnd.combination(ideal)
        if not combination.is_zero:
            orders.append(combination.order())
    return min(orders) if orders else min(g.order() for g in ideal)


def _staircase_hull(exponents: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """
    Corners of the lower convex hull of exponents + R^2_+, from the y-axis to the x-axis.

    Gift wrapping: from each corner take the steepest drop to a point further
    right, the farthest one on ties.
    """
    start = min((e for e in exponents if e[0] == 0), key=lambda e: e[1])
    hull = [start]
    a0, b0 = start
    while b0 > 0:
        best = None
        for a, b in exponents:
            if a <= a0 or b >= b0:
                continue
            drop = Fraction(b0 - b, a - a0)
            if best is None or drop > best[0] or (drop == best[0] and a > best[1][0]):
                best = (drop, (a, b))
        a0, b0 = best[1]
        hull.append((a0, b0))
    return hull


def _minimal_monomials(p: int, q: int) -> List[BPoly]:
    """Minimal x^a y^b with p*a + q*b >= p*q, by increasing power of y."""
    region = [(a, b) for a in range(q + 1) for b in range(p + 1) if p * a + q * b >= p * q]
    minimal = [
        (a, b)
        for a, b in region
        if not any((c, d) != (a, b) and c <= a and d <= b for c, d in region)
    ]
    return [BPoly.monomial(a, b) for a, b in sorted(minimal, key=lambda e: e[1])]


def _generic_map(p: int, q: int) -> NewtonMap:
    """sigma(p, q, GENERIC) with p' in (0, q] the inverse of p modulo q."""
    p_prime = pow(p, -1, q) or q
    return NewtonMap(p=p, q=q, p_prime=p_prime, q_prime=(p * p_prime - 1) // q, mu=GENERIC)


def monomial_closure(ideal: IdealGens) -> Tuple[List[Tuple[FactorDescriptor, int]], int]:
    """
    Closure of a monomial ideal as x^k y^l times a product of I_(p,q)^s over its faces.

    Faces come from the staircase hull of the exponents, s is the number of
    lattice segments of a face. The multiplicity is read off the colength c
    of the closure of the stripped ideal, the lattice points strictly under
    the hull: by Pick's formula e = 2c - A - B + S, where (0, B) and (A, 0)
    are the ends of the hull and S is the total number of segments.

    Returns:
        The factors from the y-axis to the x-axis, and e(I)

    Raises:
        NotMonomialError: If a generator is not a monomial
    """
    if not ideal.is_monomial():
        raise NotMonomialError(f"{ideal} is not a monomial ideal")
    k, l = ideal.content
    exponents = [(a - k, b - l) for g in ideal for a, b in g.support()]
    hull = _staircase_hull(exponents)

    factors: List[Tuple[FactorDescriptor, int]] = []
    if k:
        factors.append((FactorDescriptor(kind="curve", generators=("x",)), k))
    inequalities = []
    segments_total = 0
    for (a1, b1), (a2, b2) in zip(hull, hull[1:]):
        segments = gcd(a2 - a1, b1 - b2)
        p, q = (b1 - b2) // segments, (a2 - a1) // segments
        inequalities.append((p, q, p * a1 + q * b1))
        segments_total += segments
        gens = tuple(str(g) for g in _minimal_monomials(p, q))
        descriptor = FactorDescriptor(kind="simple", maps=(_generic_map(p, q),), generators=gens)
        factors.append((descriptor, segments))
    if l:
        factors.append((FactorDescriptor(kind="curve", generators=("y",)), l))

    big_b, big_a = hull[0][1], hull[-1][0]
    colength = sum(
        1
        for a in range(big_a)
        for b in range(big_b)
        if any(p * a + q * b < n for p, q, n in inequalities)
    )
    e = 2 * colength - big_a - big_b + segments_total
    logger.debug(f"Monomial closure of {ideal}: colength {colength}, e = {e}")
    return factors, e


# Random corpus


def random_form(rnd: RandomSource) -> BPoly:
    """One of x^b, y^a or (y^p - c x^q)^r with small exponents and coprime p, q."""
    kind = rnd.randint(0, 2)
    if kind == 0:
        return BPoly.monomial(rnd.randint(1, 3), 0)
    if kind == 1:
        return BPoly.monomial(0, rnd.randint(1, 3))
    p, q = rnd.randint(1, 3), rnd.randint(1, 3)
    while gcd(p, q) != 1:
        p, q = rnd.randint(1, 3), rnd.randint(1, 3)
    c = rnd.coefficient(bound=3)
    curve = BPoly.monomial(0, p) - BPoly.monomial(q, 0, c)
    return curve ** rnd.randint(1, 2)


def random_generator(rnd: RandomSource) -> BPoly:
    result = BPoly.one()
    for _ in range(rnd.randint(1, 2)):
        result = result * random_form(rnd)
    return result


def random_finite_codim_ideal(rnd: RandomSource, generators: int = 2) -> IdealGens:
    """
    Random ideal of finite codimension: products of random forms plus pure powers of x and y.
    """
    gens = [random_generator(rnd) for _ in range(generators)]
    gens.append(BPoly.monomial(rnd.randint(2, 7), 0))
    gens.append(BPoly.monomial(0, rnd.randint(2, 7)))
    return IdealGens(gens)


def random_curve(rnd: RandomSource) -> BPoly:
    """Random polynomial through the origin, built from random forms."""
    return random_generator(rnd)


def random_monomial_ideal(rnd: RandomSource) -> IdealGens:
    gens = [
        BPoly.monomial(rnd.randint(0, 6), rnd.randint(0, 6)) for _ in range(rnd.randint(1, 3))
    ]
    gens.append(BPoly.monomial(rnd.randint(1, 8), 0))
    gens.append(BPoly.monomial(0, rnd.randint(1, 8)))
    return IdealGens(g for g in gens if g.vanishes_at_origin())
