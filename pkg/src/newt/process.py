"""
Newton processes.

A process is the multiset of entries (Sigma; Z) reached by the Newton
algorithm together with the monomial content of the ideal. Processes are
kept canonical: equal keys are merged by adding exponents, and a branch
that sits where the algorithm continues (or next to another branch) is
pushed one Newton map deeper along its own face, until a fixpoint.
"""

import json
import logging
from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict

from .drivers.curve import branch_certificate
from .maps import apply_map_poly, make_map
from .models import Branch, Dicritical, ProcessEntry

logger = logging.getLogger(__name__)


def branches_equal(first: ProcessEntry, second: ProcessEntry) -> bool:
    """
    True if two branch entries with equal maps certify the same branch.

    Each certificate has a unique local branch through the origin, so they
    agree iff their gcd vanishes at the origin.
    """
    c1, c2 = first.terminal.certificate, second.terminal.certificate
    return c1.gcd(c2).vanishes_at_origin()


def entry_key(entry: ProcessEntry) -> Tuple:
    """Canonical order: maps by (q/p descending, mu ascending, GENERIC last), dicritical first."""
    return (tuple(m.sort_key() for m in entry.maps), 0 if entry.is_dicritical else 1)


def push_branch(entry: ProcessEntry) -> ProcessEntry:
    """
    Move a non-y branch one Newton map deeper.

    For a certificate w = c01*y + c_r0*x^r + ..., the branch y = -c_r0/c01*x^r + ...
    is followed by sigma(1, r, -c_r0/c01).
    """
    w = entry.terminal.certificate
    r = w.restrict_y0().order()
    mu = -w.coeff(r, 0) / w.coeff(0, 1)
    new_map = make_map(1, r, mu)
    _, transform = apply_map_poly(w, new_map)
    logger.debug(f"Pushing branch {w} at {len(entry.maps)} map(s) along {new_map}")
    return ProcessEntry(
        maps=entry.maps + (new_map,),
        terminal=Branch(nu=entry.terminal.nu, certificate=branch_certificate(transform)),
    )


def _combine(entries: List[ProcessEntry]) -> List[ProcessEntry]:
    """Merge entries with equal keys by adding their exponents."""
    out: List[ProcessEntry] = []
    for entry in entries:
        for index, seen in enumerate(out):
            if seen.maps != entry.maps or seen.is_dicritical != entry.is_dicritical:
                continue
            if seen.is_dicritical:
                merged = Dicritical(d=seen.terminal.d + entry.terminal.d)
            elif branches_equal(seen, entry):
                merged = Branch(
                    nu=seen.terminal.nu + entry.terminal.nu,
                    certificate=min(
                        seen.terminal.certificate, entry.terminal.certificate, key=str
                    ),
                )
            else:
                continue
            out[index] = ProcessEntry(maps=seen.maps, terminal=merged)
            break
        else:
            out.append(entry)
    return out


def _needs_push(entry: ProcessEntry, entries: List[ProcessEntry], y_content: int) -> bool:
    if entry.is_dicritical or entry.terminal.is_y_branch:
        return False
    maps = entry.maps
    if not maps and y_content > 0:
        return True
    for other in entries:
        if other is entry:
            continue
        if len(other.maps) > len(maps) and other.maps[: len(maps)] == maps:
            return True
        if not other.is_dicritical and other.maps == maps:
            return True
    return False


def canonicalize(entries: Iterable[ProcessEntry], y_content: int = 0) -> Tuple[ProcessEntry, ...]:
    """Merge equal keys and push conflicting branches down to a fixpoint, then sort."""
    current = _combine(list(entries))
    while True:
        pushed = False
        for index, entry in enumerate(current):
            if _needs_push(entry, current, y_content):
                current[index] = push_branch(entry)
                pushed = True
                break
        if not pushed:
            break
        current = _combine(current)
    return tuple(sorted(current, key=entry_key))


class NewtonProcess(BaseModel):
    """
    Canonical Newton process of an ideal.

    ``x_content`` and ``y_content`` are the exponents of the monomial content
    x^a y^b; ``entries`` is sorted in canonical order. Equality is structural
    with branches compared through ``branches_equal``.
    """

    model_config = ConfigDict(frozen=True)

    x_content: int = 0
    y_content: int = 0
    entries: Tuple[ProcessEntry, ...] = ()

    @classmethod
    def build(
        cls, entries: Iterable[ProcessEntry] = (), x_content: int = 0, y_content: int = 0
    ) -> "NewtonProcess":
        kept = []
        for entry in entries:
            if not entry.maps and not entry.is_dicritical and entry.terminal.is_y_branch:
                y_content += entry.terminal.nu
            else:
                kept.append(entry)
        entries = kept
        return cls(
            x_content=x_content,
            y_content=y_content,
            entries=canonicalize(entries, y_content),
        )

    @classmethod
    def from_json(cls, text: str) -> "NewtonProcess":
        process = cls.model_validate_json(text)
        return cls.build(process.entries, process.x_content, process.y_content)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2)

    @property
    def dicriticals(self) -> List[ProcessEntry]:
        return [e for e in self.entries if e.is_dicritical]

    @property
    def branches(self) -> List[ProcessEntry]:
        return [e for e in self.entries if not e.is_dicritical]

    @property
    def depth(self) -> int:
        return max((len(e.maps) for e in self.entries), default=0)

    def dicritical_part(self) -> "NewtonProcess":
        """The process of the finite-codimension cofactor: dicritical entries only."""
        return NewtonProcess(entries=tuple(self.dicriticals))

    def _signature(self) -> Tuple:
        return (
            self.x_content,
            self.y_content,
            tuple((e.maps, e.is_dicritical, e.exponent) for e in self.entries),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, NewtonProcess):
            return NotImplemented
        if self._signature() != other._signature():
            return False
        return all(
            a.is_dicritical or branches_equal(a, b) for a, b in zip(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash(self._signature())

    def __str__(self) -> str:
        parts = [str(e) for e in self.entries]
        if self.x_content:
            parts.insert(0, f"x^{self.x_content}")
        if self.y_content:
            parts.append(f"(∅; y^{self.y_content})")
        return "{" + ", ".join(parts) + "}"


def merge_processes(first: NewtonProcess, second: NewtonProcess) -> NewtonProcess:
    """Process of the product of two ideals: union with exponents added on matching keys."""
    return NewtonProcess.build(
        first.entries + second.entries,
        x_content=first.x_content + second.x_content,
        y_content=first.y_content + second.y_content,
    )
