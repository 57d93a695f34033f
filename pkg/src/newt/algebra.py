"""
Exact polynomial algebra over the rationals.

Bivariate polynomials are immutable wrappers around sympy's sparse
``PolyElement`` in ``QQ[x,y]`` (lex order, x > y); univariate face
polynomials live in ``QQ[X]``. Coefficients cross the public API as
``fractions.Fraction``.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from functools import reduce
from math import comb, gcd as int_gcd, lcm as int_lcm
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic_core import core_schema
from sympy import Poly, symbols
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from .interfaces import (
    BothConstantInYError,
    InputError,
    PolynomialSyntaxError,
    ZeroPolynomialError,
)

logger = logging.getLogger(__name__)

Rat = Fraction
Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]

_RING, _X, _Y = ring("x,y", QQ)
_URING, _U = ring("X", QQ)
_SYM_X, _SYM_Y = symbols("x y")


def to_qq(value: Scalar):
    """Convert an int or Fraction to a QQ domain element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_rat(value) -> Fraction:
    """Convert a QQ domain element (or int) to a Fraction."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def format_rat(value: Fraction) -> str:
    """Render a rational as ``a`` or ``a/b``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` (optionally signed) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Not a rational number: {text!r}") from e


class BPoly:
    """
    Sparse polynomial in Q[x,y].

    Values are immutable; every operation returns a fresh polynomial. The
    support is exactly the set of stored monomials (no zero coefficients).
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, element: PolyElement):
        self._p = element
        self._hash: Optional[int] = None

    # Construction

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Scalar]) -> "BPoly":
        data = {}
        for (a, b), c in terms.items():
            if a < 0 or b < 0:
                raise ValueError(f"Negative exponent in monomial {(a, b)}")
            c = to_qq(c)
            if c:
                data[(int(a), int(b))] = c
        return cls(_RING.from_dict(data))

    @classmethod
    def _from_qq_terms(cls, terms: Mapping[Monomial, object]) -> "BPoly":
        return cls(_RING.from_dict({m: c for m, c in terms.items() if c}))

    @classmethod
    def zero(cls) -> "BPoly":
        return cls(_RING.zero)

    @classmethod
    def one(cls) -> "BPoly":
        return cls(_RING.one)

    @classmethod
    def const(cls, value: Scalar) -> "BPoly":
        return cls.from_terms({(0, 0): value})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Scalar = 1) -> "BPoly":
        return cls.from_terms({(a, b): coeff})

    @classmethod
    def x(cls) -> "BPoly":
        return cls(_X)

    @classmethod
    def y(cls) -> "BPoly":
        return cls(_Y)

    @classmethod
    def parse(cls, text: str) -> "BPoly":
        return parse_poly(text)

    # Pydantic integration: polynomials serialize as their canonical text.

    @classmethod
    def __get_pydantic_core_schema__(cls, source, handler):
        return core_schema.no_info_plain_validator_function(
            cls._validate,
            serialization=core_schema.plain_serializer_function_ser_schema(str),
        )

    @classmethod
    def _validate(cls, value) -> "BPoly":
        if isinstance(value, BPoly):
            return value
        if isinstance(value, str):
            return parse_poly(value)
        raise ValueError(f"Cannot interpret {value!r} as a polynomial")

    # Inspection

    @property
    def element(self) -> PolyElement:
        """The underlying sympy ring element (do not mutate)."""
        return self._p

    def terms(self) -> Dict[Monomial, Fraction]:
        return {m: to_rat(c) for m, c in self._p.items()}

    def items(self) -> Iterator[Tuple[Monomial, object]]:
        return iter(self._p.items())

    def support(self) -> frozenset:
        return frozenset(self._p.keys())

    def coeff(self, a: int, b: int) -> Fraction:
        c = self._p.get((a, b))
        return to_rat(c) if c is not None else Fraction(0)

    def __len__(self) -> int:
        return len(self._p)

    @property
    def is_zero(self) -> bool:
        return not self._p

    @property
    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._p.keys())

    @property
    def is_monomial(self) -> bool:
        return len(self._p) == 1

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def vanishes_at_origin(self) -> bool:
        return (0, 0) not in self._p

    def _require_nonzero(self) -> None:
        if self.is_zero:
            raise ZeroPolynomialError("Operation needs a nonzero polynomial")

    def order(self) -> int:
        """Minimal total degree over the support."""
        self._require_nonzero()
        return min(a + b for a, b in self._p.keys())

    def x_order(self) -> int:
        self._require_nonzero()
        return min(a for a, _ in self._p.keys())

    def y_order(self) -> int:
        self._require_nonzero()
        return min(b for _, b in self._p.keys())

    def x_degree(self) -> int:
        self._require_nonzero()
        return max(a for a, _ in self._p.keys())

    def y_degree(self) -> int:
        self._require_nonzero()
        return max(b for _, b in self._p.keys())

    def weighted_order(self, p: int, q: int) -> int:
        """Minimum of p*alpha + q*beta over the support."""
        self._require_nonzero()
        return min(p * a + q * b for a, b in self._p.keys())

    def lead_monomial(self) -> Monomial:
        """Lexicographically greatest monomial (x before y)."""
        self._require_nonzero()
        return max(self._p.keys())

    # Arithmetic

    def _coerce(self, other) -> Optional["BPoly"]:
        if isinstance(other, BPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BPoly.const(other)
        return None

    def __add__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BPoly(self._p + other._p)

    __radd__ = __add__

    def __sub__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BPoly(self._p - other._p)

    def __rsub__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BPoly(other._p - self._p)

    def __mul__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BPoly(self._p * other._p)

    __rmul__ = __mul__

    def __neg__(self) -> "BPoly":
        return BPoly(-self._p)

    def __pow__(self, exponent: int) -> "BPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        return BPoly(self._p**exponent)

    def scale(self, factor: Scalar) -> "BPoly":
        return BPoly(self._p * to_qq(factor))

    def exquo(self, other: "BPoly") -> "BPoly":
        """Exact division; raises if ``other`` does not divide ``self``."""
        quotient, remainder = self._p.div(other._p)
        if remainder:
            raise ArithmeticError(f"{other} does not divide {self}")
        return BPoly(quotient)

    def divides(self, other: "BPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        _, remainder = other._p.div(self._p)
        return not remainder

    def strip_monomial(self, a: int, b: int) -> "BPoly":
        """Divide by x^a y^b, which must divide every term."""
        out = {}
        for (alpha, beta), c in self._p.items():
            if alpha < a or beta < b:
                raise ArithmeticError(f"x^{a}*y^{b} does not divide {self}")
            out[(alpha - a, beta - b)] = c
        return BPoly._from_qq_terms(out)

    def truncate_x(self, limit: int) -> "BPoly":
        """Drop every term of x-degree >= limit."""
        return BPoly._from_qq_terms({m: c for m, c in self._p.items() if m[0] < limit})

    def restrict_y0(self) -> "UPoly":
        """The univariate polynomial f(X, 0)."""
        return UPoly._from_qq_terms({a: c for (a, b), c in self._p.items() if b == 0})

    def restrict_x0(self) -> "UPoly":
        """The univariate polynomial f(0, X)."""
        return UPoly._from_qq_terms({b: c for (a, b), c in self._p.items() if a == 0})

    # Substitutions

    def newton_substitute(
        self, p: int, q: int, x_scale: Scalar, y_shift: Scalar, x_limit: Optional[int] = None
    ) -> "BPoly":
        """
        Compose with x = x_scale * x^p, y = x^q * (y + y_shift).

        Args:
            p: Exponent of x in the image of x
            q: Exponent of x in the image of y
            x_scale: Coefficient in the image of x
            y_shift: Translation of y
            x_limit: If given, terms of x-degree >= x_limit are not produced

        Returns:
            The composed polynomial (no x-content removed)
        """
        cx = to_qq(x_scale)
        cy = to_qq(y_shift)
        out: Dict[Monomial, object] = {}
        for (a, b), c in self._p.items():
            xexp = p * a + q * b
            if x_limit is not None and xexp >= x_limit:
                continue
            base = c * cx**a
            for j in range(b + 1):
                key = (xexp, j)
                out[key] = out.get(key, QQ.zero) + base * comb(b, j) * cy ** (b - j)
        return BPoly._from_qq_terms(out)

    def shear_x(self, c: Scalar) -> "BPoly":
        """Compose with x = x + c*y."""
        cq = to_qq(c)
        out: Dict[Monomial, object] = {}
        for (a, b), coeff in self._p.items():
            for i in range(a + 1):
                key = (i, a - i + b)
                out[key] = out.get(key, QQ.zero) + coeff * comb(a, i) * cq ** (a - i)
        return BPoly._from_qq_terms(out)

    # Normal forms

    def normalized(self) -> "BPoly":
        """Primitive integer form with a positive coefficient on the lex-greatest monomial."""
        if self.is_zero:
            return self
        coeffs = [to_rat(c) for c in self._p.values()]
        num_gcd = reduce(int_gcd, (abs(c.numerator) for c in coeffs))
        den_lcm = reduce(int_lcm, (c.denominator for c in coeffs))
        factor = Fraction(den_lcm, num_gcd)
        if self.coeff(*self.lead_monomial()) < 0:
            factor = -factor
        return self.scale(factor)

    def gcd(self, other: "BPoly") -> "BPoly":
        if self.is_zero:
            return other.normalized()
        if other.is_zero:
            return self.normalized()
        return BPoly(self._p.gcd(other._p)).normalized()

    def squarefree_decompose(self) -> List[Tuple["BPoly", int]]:
        self._require_nonzero()
        _, factors = self._p.sqf_list()
        result = []
        for factor, multiplicity in factors:
            poly = BPoly(factor)
            if poly.is_constant:
                continue
            result.append((poly.normalized(), multiplicity))
        result.sort(key=lambda item: (item[1], item[0].lead_monomial()))
        return result

    # Protocol

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BPoly.const(other)
        if not isinstance(other, BPoly):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms().items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BPoly({str(self)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        ordered = sorted(self.terms().items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][1]))
        pieces = []
        for index, ((a, b), c) in enumerate(ordered):
            sign = "-" if c < 0 else "+"
            body = _format_term(abs(c), a, b)
            if index == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)


def _format_term(c: Fraction, a: int, b: int) -> str:
    factors = []
    if a:
        factors.append("x" if a == 1 else f"x^{a}")
    if b:
        factors.append("y" if b == 1 else f"y^{b}")
    if not factors:
        return format_rat(c)
    if c != 1:
        factors.insert(0, format_rat(c))
    return "*".join(factors)


class UPoly:
    """Univariate polynomial over Q, used for face polynomials F(1,X) and resultants."""

    __slots__ = ("_p",)

    def __init__(self, element: PolyElement):
        self._p = element

    @property
    def element(self) -> PolyElement:
        return self._p

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "UPoly":
        """Build from coefficients listed by increasing degree."""
        return cls._from_qq_terms({k: to_qq(c) for k, c in enumerate(coeffs)})

    @classmethod
    def _from_qq_terms(cls, terms: Mapping[int, object]) -> "UPoly":
        return cls(_URING.from_dict({(k,): c for k, c in terms.items() if c}))

    @classmethod
    def one(cls) -> "UPoly":
        return cls(_URING.one)

    def coeffs(self) -> List[Fraction]:
        """Coefficients by increasing degree."""
        if self.is_zero:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for (k,), c in self._p.items():
            out[k] = to_rat(c)
        return out

    @property
    def is_zero(self) -> bool:
        return not self._p

    @property
    def is_constant(self) -> bool:
        return all(m == (0,) for m in self._p.keys())

    def degree(self) -> int:
        if self.is_zero:
            return -1
        return max(k for (k,) in self._p.keys())

    def order(self) -> int:
        """Lowest degree with a nonzero coefficient."""
        if self.is_zero:
            raise ZeroPolynomialError("Order of the zero polynomial")
        return min(k for (k,) in self._p.keys())

    def leading_coeff(self) -> Fraction:
        return self.coeffs()[-1]

    def evaluate(self, value: Scalar) -> Fraction:
        point = Fraction(value)
        return sum((c * point**k for k, c in enumerate(self.coeffs())), Fraction(0))

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        return UPoly(self._p.monic())

    def gcd(self, other: "UPoly") -> "UPoly":
        if self.is_zero:
            return other.monic()
        if other.is_zero:
            return self.monic()
        return UPoly(self._p.gcd(other._p)).monic()

    def exquo(self, other: "UPoly") -> "UPoly":
        quotient, remainder = self._p.div(other._p)
        if remainder:
            raise ArithmeticError(f"{other} does not divide {self}")
        return UPoly(quotient)

    def __mul__(self, other: "UPoly") -> "UPoly":
        return UPoly(self._p * other._p)

    def __pow__(self, exponent: int) -> "UPoly":
        return UPoly(self._p**exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs()))

    def __repr__(self) -> str:
        return f"UPoly({str(self)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for k, c in sorted(((k, c) for k, c in enumerate(self.coeffs()) if c), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rat(mag)
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if mag == 1 else f"{format_rat(mag)}*{var}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)


class IdealGens:
    """
    A finite generating set of an ideal of Q[x,y], regarded in C[[x,y]].

    The monomial content x^a y^b (the largest monomial dividing every
    generator) is computed once; ``stripped()`` returns the generators with
    it divided out.
    """

    __slots__ = ("_generators", "_content")

    def __init__(self, generators: Iterable[BPoly]):
        gens = tuple(generators)
        if not gens:
            raise InputError("An ideal needs at least one generator")
        for g in gens:
            if g.is_zero:
                raise ZeroPolynomialError("Zero polynomial given as an ideal generator")
        self._generators = gens
        self._content = (min(g.x_order() for g in gens), min(g.y_order() for g in gens))

    @classmethod
    def parse(cls, text: str) -> "IdealGens":
        return parse_ideal(text)

    @property
    def generators(self) -> Tuple[BPoly, ...]:
        return self._generators

    @property
    def content(self) -> Monomial:
        return self._content

    def stripped(self) -> "IdealGens":
        a, b = self._content
        if (a, b) == (0, 0):
            return self
        return IdealGens(g.strip_monomial(a, b) for g in self._generators)

    def is_unit(self) -> bool:
        """True if some generator does not vanish at the origin."""
        return any(not g.vanishes_at_origin() for g in self._generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self._generators)

    def is_principal(self) -> bool:
        return len(self._generators) == 1

    def gcd(self) -> BPoly:
        return gcd_many(self._generators)

    def supports(self) -> frozenset:
        out = set()
        for g in self._generators:
            out.update(g.support())
        return frozenset(out)

    def __mul__(self, other: "IdealGens") -> "IdealGens":
        return IdealGens(f * g for f in self._generators for g in other._generators)

    def __iter__(self) -> Iterator[BPoly]:
        return iter(self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealGens):
            return NotImplemented
        return self._generators == other._generators

    def __hash__(self) -> int:
        return hash(self._generators)

    def __repr__(self) -> str:
        return f"IdealGens({', '.join(str(g) for g in self._generators)})"

    def __str__(self) -> str:
        return f"({', '.join(str(g) for g in self._generators)})"


# Parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|([-+*^/()]))")


class _Parser:
    """Recursive-descent parser; ^ binds tighter than *, which binds tighter than +/-."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if not match:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise PolynomialSyntaxError(
                    f"Unexpected character {text[start]!r}", self._offset(start)
                )
            start = match.start(match.lastindex)
            kind = ("int", "var", "op")[match.lastindex - 1]
            self.tokens.append((kind, match.group(match.lastindex), start))
            pos = match.end()
        self.index = 0

    def _offset(self, char_pos: int) -> int:
        return len(self.text[:char_pos].encode("utf-8"))

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _error(self, message: str) -> PolynomialSyntaxError:
        token = self._peek()
        char_pos = token[2] if token else len(self.text)
        return PolynomialSyntaxError(message, self._offset(char_pos))

    def _take(self, kind: str, value: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            raise self._error(f"Expected {expected}")
        self.index += 1
        return token[1]

    def _at_op(self, *ops: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "op" and token[1] in ops

    def parse(self) -> PolyElement:
        if not self.tokens:
            raise self._error("Empty expression")
        result = self._expr()
        if self._peek() is not None:
            raise self._error("Unexpected token")
        return result

    def _expr(self) -> PolyElement:
        result = self._term()
        while self._at_op("+", "-"):
            op = self._take("op")
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> PolyElement:
        negate = False
        if self._at_op("+", "-"):
            negate = self._take("op") == "-"
        result = self._power()
        while self._at_op("*"):
            self._take("op", "*")
            result = result * self._power()
        return -result if negate else result

    def _power(self) -> PolyElement:
        base = self._atom()
        if self._at_op("^"):
            self._take("op", "^")
            exponent = int(self._take("int"))
            return base**exponent
        return base

    def _atom(self) -> PolyElement:
        token = self._peek()
        if token is None:
            raise self._error("Unexpected end of expression")
        kind, value, _ = token
        if kind == "int":
            self.index += 1
            numerator = int(value)
            if self._at_op("/"):
                self._take("op", "/")
                denominator_token = self._peek()
                denominator = int(self._take("int"))
                if denominator == 0:
                    raise PolynomialSyntaxError(
                        "Zero denominator", self._offset(denominator_token[2])
                    )
                return _RING(QQ(numerator, denominator))
            return _RING(QQ(numerator))
        if kind == "var":
            self.index += 1
            return _X if value == "x" else _Y
        if kind == "op" and value == "(":
            self.index += 1
            inner = self._expr()
            self._take("op", ")")
            return inner
        raise self._error(f"Unexpected token {value!r}")


def parse_poly(text: str) -> BPoly:
    """
    Parse a polynomial in x and y.

    Integers, rationals ``a/b``, ``+ - * ^`` and parentheses are accepted;
    multiplication must be explicit.

    Raises:
        PolynomialSyntaxError: With the byte offset of the offending token
    """
    return BPoly(_Parser(text).parse())


def parse_ideal(text: str) -> IdealGens:
    """Parse an ideal file: one generator per line, blank lines and ``#`` comments ignored."""
    generators = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            generators.append(parse_poly(body))
        except PolynomialSyntaxError as e:
            raise PolynomialSyntaxError(f"Line {lineno}: {e.message}", e.offset) from e
    logger.debug(f"Parsed ideal with {len(generators)} generator(s)")
    return IdealGens(generators)


# Module-level operations


def order(f: BPoly) -> int:
    return f.order()


def gcd(f: BPoly, g: BPoly) -> BPoly:
    return f.gcd(g)


def gcd_many(gens: Iterable[BPoly]) -> BPoly:
    result = BPoly.zero()
    for g in gens:
        result = result.gcd(g)
        if result.is_constant:
            return BPoly.one()
    return result


def squarefree_decompose(f: BPoly) -> List[Tuple[BPoly, int]]:
    return f.squarefree_decompose()


def resultant_y(f: BPoly, g: BPoly) -> UPoly:
    """
    Resultant of f and g with respect to y, as a polynomial in x.

    Sylvester convention with the f-block above the g-block, so
    Res_y(f, g) = lc(f)^deg(g) * prod g(roots of f).
    """
    f_deg = 0 if f.is_zero else f.y_degree()
    g_deg = 0 if g.is_zero else g.y_degree()
    if f_deg == 0 and g_deg == 0:
        raise BothConstantInYError("Both polynomials are constant in y")
    if g_deg == 0:
        return _as_x_poly(g) ** f_deg
    if f_deg == 0:
        return _as_x_poly(f) ** g_deg
    pf = Poly(f.element.as_expr(), _SYM_Y, _SYM_X, domain=QQ)
    pg = Poly(g.element.as_expr(), _SYM_Y, _SYM_X, domain=QQ)
    res = pf.resultant(pg)
    if not isinstance(res, Poly):
        res = Poly(res, _SYM_X, domain=QQ)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(res.all_coeffs())]
    return UPoly.from_coeffs(coeffs)


def _as_x_poly(f: BPoly) -> UPoly:
    return UPoly._from_qq_terms({a: c for (a, _), c in f.items()})


def rational_roots(u: UPoly) -> Tuple[List[Tuple[Fraction, int]], UPoly]:
    """
    Split off the rational roots of u.

    Returns:
        Roots with multiplicities sorted ascending, and the monic residual
        factor that has no rational roots (1 if none)
    """
    if u.is_zero:
        raise ZeroPolynomialError("Rational roots of the zero polynomial")
    _, factors = u.element.factor_list()
    roots: List[Tuple[Fraction, int]] = []
    residual = _URING.one
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            a = to_rat(factor.get((1,), QQ.zero))
            b = to_rat(factor.get((0,), QQ.zero))
            roots.append((-b / a, multiplicity))
        elif factor.degree() > 1:
            residual = residual * factor**multiplicity
    roots.sort()
    return roots, UPoly(residual).monic()
