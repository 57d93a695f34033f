"""
Data models for the Newton algorithm.

Newton maps, faces, process entries, tree parts, run configuration and
reports. All models are immutable pydantic models; their JSON form is the
wire format used by the CLI and the report storage.
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Tuple, Union

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from .algebra import BPoly, UPoly, format_rat, parse_rat
from .interfaces import InputError

GENERIC = "GENERIC"

Point = Tuple[int, int]


class NewtonMap(BaseModel):
    """
    Canonical Newton map sigma(p, q, mu).

    The substitution is x = mu^q' * x1^p, y = x1^q * (y1 + mu^p'), with
    p*p' - q*q' = 1, p' <= q and q' < p. ``mu`` is a nonzero rational or the
    marker ``GENERIC`` standing for a generic value.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    p: int = Field(..., ge=1, description="Exponent of x1 in the image of x")
    q: int = Field(..., ge=1, description="Exponent of x1 in the image of y")
    p_prime: int = Field(..., ge=0, description="Exponent of mu in the translation of y1")
    q_prime: int = Field(..., ge=0, description="Exponent of mu in the image of x")
    mu: Union[Fraction, Literal["GENERIC"]] = Field(..., description="Root followed, or GENERIC")

    @field_validator("mu", mode="before")
    @classmethod
    def _coerce_mu(cls, value):
        if isinstance(value, str):
            if value.strip() == GENERIC:
                return GENERIC
            return parse_rat(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        raise ValueError(f"mu must be a rational or {GENERIC}, got {value!r}")

    @field_serializer("mu")
    def _dump_mu(self, mu) -> str:
        return GENERIC if mu == GENERIC else format_rat(mu)

    @property
    def is_generic(self) -> bool:
        return self.mu == GENERIC

    @property
    def slope(self) -> Fraction:
        """q/p, the key faces are ordered by (descending)."""
        return Fraction(self.q, self.p)

    def sort_key(self) -> Tuple:
        if self.is_generic:
            return (-self.slope, 1, Fraction(0))
        return (-self.slope, 0, self.mu)

    def substitution(self) -> Tuple[Fraction, Fraction]:
        """Return (x_scale, y_shift) = (mu^q', mu^p') for a concrete map."""
        if self.is_generic:
            raise ValueError("A GENERIC map has no concrete substitution")
        return self.mu**self.q_prime, self.mu**self.p_prime

    def __str__(self) -> str:
        mu = GENERIC if self.is_generic else format_rat(self.mu)
        return f"σ({self.p},{self.q},{mu})"


MapSequence = Tuple[NewtonMap, ...]


def format_maps(maps: MapSequence) -> str:
    return "(" + ", ".join(str(m) for m in maps) + ")"


class Face(BaseModel):
    """A face of a Newton polygon: the segment on p*alpha + q*beta = N."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=1)
    q: int = Field(..., ge=1)
    N: int = Field(..., ge=0, description="Level of the supporting line")
    origin: Point = Field(..., description="Upper-left endpoint")
    end: Point = Field(..., description="Lower-right endpoint")
    delta: int = Field(..., ge=2, description="Number of lattice points on the closed segment")

    def level(self, point: Point) -> int:
        return self.p * point[0] + self.q * point[1]

    def __str__(self) -> str:
        return f"{self.p}α+{self.q}β={self.N}"


class NewtonDiagram(BaseModel):
    """Vertices of a Newton diagram, increasing in alpha and decreasing in beta."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Point, ...]


class InitialDecomposition(BaseModel):
    """
    Decomposition of the initial ideal of an ideal on a face.

    ti(I, S) = x^a y^b F(x^q, y^p) (k_1(x^q, y^p), ..., k_s(x^q, y^p)); F and
    the k_i are stored as homogeneous polynomials in (x, y) standing for
    (x^q, y^p).
    """

    model_config = ConfigDict(frozen=True)

    face: Face
    a: int
    b: int
    F: BPoly
    k_list: Tuple[BPoly, ...]
    d: int = Field(..., ge=0, description="Dicritical degree")

    def face_polynomial(self) -> UPoly:
        """F(1, X)."""
        return UPoly.from_coeffs(
            [self.F.coeff(self.F_degree - t, t) for t in range(self.F_degree + 1)]
        )

    @property
    def F_degree(self) -> int:
        return self.F.y_degree() if not self.F.is_constant else 0

    @property
    def is_dicritical(self) -> bool:
        return self.d >= 1


class Dicritical(BaseModel):
    """Terminal of a process entry ending at a dicritical face."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["dicritical"] = "dicritical"
    d: int = Field(..., ge=1)


class Branch(BaseModel):
    """
    Terminal of a process entry ending with a curve branch (y + h(x))^nu.

    The certificate is a polynomial whose only local branch through the
    origin is the branch itself; ``y`` stands for the branch y = 0.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["branch"] = "branch"
    nu: int = Field(..., ge=1)
    certificate: BPoly

    @property
    def is_y_branch(self) -> bool:
        return self.certificate == BPoly.y()


Terminal = Annotated[Union[Dicritical, Branch], Field(discriminator="kind")]


class ProcessEntry(BaseModel):
    """One element (Sigma; Z) of a Newton process."""

    model_config = ConfigDict(frozen=True)

    maps: MapSequence
    terminal: Terminal

    @property
    def is_dicritical(self) -> bool:
        return isinstance(self.terminal, Dicritical)

    @property
    def exponent(self) -> int:
        return self.terminal.d if self.is_dicritical else self.terminal.nu

    def __str__(self) -> str:
        maps = ", ".join(str(m) for m in self.maps) or "∅"
        if self.is_dicritical:
            return f"({maps}; {self.terminal.d})"
        certificate = self.terminal.certificate
        power = "" if self.terminal.nu == 1 else f"^{self.terminal.nu}"
        return f"({maps}; ({certificate}){power})"


class Vertex(BaseModel):
    """A vertex of a Newton tree with its decorations."""

    model_config = ConfigDict(frozen=True)

    id: int
    N: int = Field(..., ge=0)
    d: int = Field(..., ge=0)
    q: int = Field(..., ge=1, description="Decoration of the edge end above the vertex")
    p: int = Field(..., ge=1, description="Decoration of the edge end below the vertex")
    pre_glue_m: int = Field(..., ge=1, description="Decoration above the vertex before gluing")
    preceding: Optional[int] = None
    chain: Tuple[int, ...] = Field(default=(), description="S(v), from the first polygon to v")
    maps: MapSequence = Field(default=(), description="Maps leading to the polygon of v")


class Arrow(BaseModel):
    """An arrow of a Newton tree; ``at`` is None only on the tree without vertices."""

    model_config = ConfigDict(frozen=True)

    at: Optional[int]
    mult: int = Field(..., ge=0)
    decoration: Optional[int] = None
    kind: Literal["top", "bottom", "branch", "generic"]


class Edge(BaseModel):
    """An edge between two vertices of a Newton tree."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    from_: int = Field(..., alias="from")
    to: int
    kind: Literal["vertical", "horizontal"]


class RunConfig(BaseModel):
    """Configuration of a Newton algorithm run."""

    model_config = ConfigDict(frozen=True)

    max_depth: int = Field(default=10000, ge=1, description="Bound on the recursion depth")
    strict_field: bool = Field(
        default=False, description="Refuse irrational face roots even in height checks"
    )
    seed: int = Field(default=0, ge=0, description="Seed of the oracle random source")
    truncate: bool = Field(
        default=True, description="Truncate generators at a pure x-power inside the ideal driver"
    )
    cross_check: bool = Field(
        default=True, description="Recompute every N decoration by direct substitution"
    )

    @classmethod
    def from_env(cls, env_file: Optional[str] = None, **overrides) -> "RunConfig":
        """
        Build a configuration from ``NEWT_*`` environment variables.

        Args:
            env_file: Optional .env file loaded before reading the environment
            **overrides: Values taking precedence over the environment

        Returns:
            The resulting configuration
        """
        load_dotenv(env_file)
        values = {}
        for field, var in (
            ("max_depth", "NEWT_MAX_DEPTH"),
            ("strict_field", "NEWT_STRICT_FIELD"),
            ("seed", "NEWT_SEED"),
        ):
            if os.environ.get(var):
                values[field] = os.environ[var]
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)

    @classmethod
    def from_file(cls, path: str, **overrides) -> "RunConfig":
        """Build a configuration from a JSON file layered over the environment."""
        try:
            data = cls.model_validate_json(Path(path).read_text()).model_dump(exclude_unset=True)
        except OSError as e:
            raise InputError(f"Cannot read config file {path}: {e}")
        base = cls.from_env().model_dump()
        base.update(data)
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(base)


class PolygonRecord(BaseModel):
    """A Newton polygon met by the ideal driver, with the x-content it was stripped of."""

    model_config = ConfigDict(frozen=True)

    maps: MapSequence
    diagram: NewtonDiagram
    anchor: int = Field(..., ge=0, description="x-content N of the transform I_Sigma")
    area2: int = Field(..., ge=0)


class DicriticalRecord(BaseModel):
    """Rees valuation data carried by one dicritical vertex."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    maps: MapSequence
    N: int
    d: int
    rho: int
    chain: Tuple[int, ...]


class DicriticalReport(BaseModel):
    """One record per dicritical vertex, in tree order."""

    model_config = ConfigDict(frozen=True)

    records: Tuple[DicriticalRecord, ...] = ()


class Lojasiewicz(BaseModel):
    num: int
    den: int


class ReesEntry(BaseModel):
    maps: List[NewtonMap]
    N: int
    d: int
    rho: int


class InvariantsReport(BaseModel):
    """Invariants of an ideal; finite-codimension data is None otherwise."""

    depth: int
    nondegenerate: bool
    mult_m: Optional[int] = None
    e: Optional[int] = None
    e_area: Optional[int] = None
    j: int
    lojasiewicz: Optional[Lojasiewicz] = None
    rees: List[ReesEntry] = Field(default_factory=list)


class FactorDescriptor(BaseModel):
    """
    A factor of the Zariski factorization of the integral closure.

    ``curve`` factors are irreducible curves (or the content monomials x and
    y); ``simple`` factors are simple integrally closed ideals of finite
    codimension with process {(maps; 1)}. ``generators`` is filled in when
    the factor can be written down explicitly.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["curve", "simple"]
    maps: MapSequence = ()
    generators: Optional[Tuple[str, ...]] = None

    def label(self) -> str:
        if self.generators is not None:
            if self.kind == "curve":
                return self.generators[0]
            return "(" + ",".join(self.generators) + ")"
        return "{" + format_maps(self.maps) + "}"
