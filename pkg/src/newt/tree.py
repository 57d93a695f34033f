"""
Newton trees.

A Newton tree is built from a canonical Newton process: every map sequence
prefix Sigma that the algorithm continues from contributes a polygon whose
vertices are the faces met there, ordered top to bottom. The polygon of
Sigma hangs by a horizontal edge from the vertex of the face that led to it.
Vertex decorations N are recomputed from the arrows and the dicritical
degrees through the path products rho.
"""

import json
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict

from .interfaces import InconsistentProcessError
from .models import Arrow, Edge, MapSequence, Vertex
from .process import NewtonProcess

logger = logging.getLogger(__name__)

VertexKey = Tuple[MapSequence, int, int]


class NewtonTree(BaseModel):
    """
    Decorated Newton tree.

    Vertices are numbered in depth-first pre-order starting from the top of
    the first polygon. Each vertex carries (N, d), the decoration q of the edge
    end above it (after gluing), the decoration p below it and its
    pre-gluing decoration.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()
    arrows: Tuple[Arrow, ...] = ()

    @property
    def depth(self) -> int:
        """Width of the tree: the largest number of polygons on a chain."""
        return max((len(v.maps) + 1 for v in self.vertices), default=0)

    @property
    def dicriticals(self) -> List[Vertex]:
        return [v for v in self.vertices if v.d > 0]

    def vertex(self, vertex_id: int) -> Vertex:
        return self.vertices[vertex_id]

    def find_vertex(self, maps: MapSequence, p: int, m: int) -> Optional[Vertex]:
        """The vertex of the face (p, m) in the polygon reached by ``maps``."""
        for v in self.vertices:
            if v.maps == maps and v.p == p and v.pre_glue_m == m:
                return v
        return None

    def rho0(self, v: Vertex) -> int:
        return rho0(self, v)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "NewtonTree":
        return cls.model_validate_json(text)

    def isomorphic(self, other: "NewtonTree") -> bool:
        """Equality of decorated trees up to relabelling of the vertices."""
        return _tree_signature(self) == _tree_signature(other)


# Reconstruction


def _validate(process: NewtonProcess) -> None:
    for entry in process.entries:
        concrete = entry.maps[:-1] if entry.is_dicritical else entry.maps
        if any(m.is_generic for m in concrete):
            raise InconsistentProcessError(f"Entry {entry} has a GENERIC map before its end")
        if entry.is_dicritical and (not entry.maps or not entry.maps[-1].is_generic):
            raise InconsistentProcessError(f"Dicritical entry {entry} must end with a GENERIC map")
    root_branches = [e for e in process.branches if not e.maps]
    if root_branches and (len(process.entries) > 1 or process.y_content):
        raise InconsistentProcessError("A branch at the root must be the only entry")


def _polygons(process: NewtonProcess) -> Dict[MapSequence, List[Tuple[int, int]]]:
    """Faces (p, m) met at every prefix, ordered top to bottom."""
    found: Dict[MapSequence, set] = defaultdict(set)
    for entry in process.entries:
        for index, m in enumerate(entry.maps):
            found[entry.maps[:index]].add((m.p, m.q))
    return {
        prefix: sorted(pairs, key=lambda pm: Fraction(pm[0], pm[1]), reverse=True)
        for prefix, pairs in found.items()
    }


def _parent_key(prefix: MapSequence) -> VertexKey:
    last = prefix[-1]
    return (prefix[:-1], last.p, last.q)


def _child_prefixes(
    polygons: Dict[MapSequence, list], prefix: MapSequence, p: int, m: int
) -> List[MapSequence]:
    children = [
        sigma
        for sigma in polygons
        if len(sigma) == len(prefix) + 1
        and sigma[:-1] == prefix
        and (sigma[-1].p, sigma[-1].q) == (p, m)
    ]
    return sorted(children, key=lambda sigma: sigma[-1].mu)


class _Builder:
    """Mutable state while a tree is assembled."""

    def __init__(self, process: NewtonProcess):
        self.process = process
        self.polygons = _polygons(process)
        self.ids: Dict[VertexKey, int] = {}
        self.rows: List[dict] = []
        self.edges: List[Edge] = []

    def add_polygon(self, prefix: MapSequence, parent: Optional[int]) -> None:
        previous = None
        for p, m in self.polygons[prefix]:
            if parent is None:
                q = m
                chain: Tuple[int, ...] = ()
            else:
                glued = self.rows[parent]
                q = glued["p"] * glued["q"] * p + m
                chain = glued["chain"]
            vertex_id = len(self.rows)
            self.ids[(prefix, p, m)] = vertex_id
            self.rows.append(
                {
                    "id": vertex_id,
                    "q": q,
                    "p": p,
                    "pre_glue_m": m,
                    "preceding": parent,
                    "chain": chain + (vertex_id,),
                    "maps": prefix,
                    "d": 0,
                }
            )
            if previous is None:
                if parent is not None:
                    self.edges.append(Edge(from_=parent, to=vertex_id, kind="horizontal"))
            else:
                self.edges.append(Edge(from_=previous, to=vertex_id, kind="vertical"))
            previous = vertex_id
            for child in _child_prefixes(self.polygons, prefix, p, m):
                self.add_polygon(child, vertex_id)

    def top_of(self, prefix: MapSequence) -> int:
        p, m = self.polygons[prefix][0]
        return self.ids[(prefix, p, m)]

    def bottom_of(self, prefix: MapSequence) -> int:
        p, m = self.polygons[prefix][-1]
        return self.ids[(prefix, p, m)]


def reconstruct_tree(
    process: NewtonProcess, supplied_n: Optional[Dict[int, int]] = None
) -> NewtonTree:
    """
    Build the decorated Newton tree of a canonical process.

    Args:
        process: Canonical Newton process
        supplied_n: Optional N decorations by vertex id, checked against the
            recomputed ones

    Returns:
        The tree with N recomputed from arrows and dicritical degrees

    Raises:
        InconsistentProcessError: If the entries are malformed or contradict supplied_n
    """
    _validate(process)
    builder = _Builder(process)

    if () not in builder.polygons:
        nu = sum(e.terminal.nu for e in process.branches)
        bottom = process.y_content + nu
        arrows = (
            Arrow(at=None, mult=process.x_content, decoration=process.x_content, kind="top"),
            Arrow(at=None, mult=bottom, decoration=bottom, kind="bottom"),
        )
        return NewtonTree(arrows=arrows)

    builder.add_polygon((), None)
    for entry in process.dicriticals:
        key = (entry.maps[:-1], entry.maps[-1].p, entry.maps[-1].q)
        builder.rows[builder.ids[key]]["d"] += entry.terminal.d

    arrows = [
        Arrow(
            at=builder.top_of(()),
            mult=process.x_content,
            decoration=process.x_content,
            kind="top",
        )
    ]
    y_branches = {e.maps: e.terminal.nu for e in process.branches if e.terminal.is_y_branch}
    for prefix in builder.polygons:
        mult = process.y_content if not prefix else y_branches.get(prefix, 0)
        arrows.append(
            Arrow(at=builder.bottom_of(prefix), mult=mult, decoration=mult, kind="bottom")
        )
    for entry in process.branches:
        if entry.maps in builder.polygons:
            if not entry.terminal.is_y_branch:
                raise InconsistentProcessError(f"Branch {entry} sits on a polygon")
            continue
        at = builder.ids.get(_parent_key(entry.maps))
        if at is None:
            raise InconsistentProcessError(f"Branch {entry} hangs from no vertex")
        arrows.append(Arrow(at=at, mult=entry.terminal.nu, kind="branch"))
    arrows.sort(key=lambda a: (a.at, ("top", "bottom", "branch", "generic").index(a.kind)))

    partial = NewtonTree(
        vertices=tuple(Vertex(N=0, **row) for row in builder.rows),
        edges=tuple(builder.edges),
        arrows=tuple(arrows),
    )
    decorations = compute_N(partial)
    if supplied_n:
        for vertex_id, value in supplied_n.items():
            if decorations.get(vertex_id) != value:
                raise InconsistentProcessError(
                    f"Vertex {vertex_id}: supplied N={value}, computed {decorations.get(vertex_id)}"
                )
    decorated = tuple(v.model_copy(update={"N": decorations[v.id]}) for v in partial.vertices)
    tree = partial.model_copy(update={"vertices": decorated})
    logger.debug(f"Reconstructed tree with {len(tree.vertices)} vertices, depth {tree.depth}")
    return tree


# Path products


def _graph(tree: NewtonTree) -> nx.Graph:
    """Undirected graph with, on every edge, the decoration at each vertex end."""
    graph = nx.Graph()
    by_id = {v.id: v for v in tree.vertices}
    for v in tree.vertices:
        graph.add_node(("v", v.id))
    for edge in tree.edges:
        upper, lower = by_id[edge.from_], by_id[edge.to]
        if edge.kind == "vertical":
            ends = {("v", upper.id): upper.p, ("v", lower.id): lower.q}
        else:
            ends = {("v", upper.id): 1, ("v", lower.id): lower.q}
        graph.add_edge(("v", upper.id), ("v", lower.id), ends=ends)
    for index, arrow in enumerate(tree.arrows):
        if arrow.at is None:
            continue
        vertex = by_id[arrow.at]
        decoration = {"top": vertex.q, "bottom": vertex.p}.get(arrow.kind, 1)
        graph.add_edge(("v", arrow.at), ("a", index), ends={("v", arrow.at): decoration})
    return graph


def _path_product(graph: nx.Graph, source, target) -> int:
    path = nx.shortest_path(graph, source, target)
    on_path = set(path)
    product = 1
    for node in path:
        if node[0] != "v":
            continue
        for neighbor in graph.neighbors(node):
            if neighbor in on_path:
                continue
            product *= graph.edges[node, neighbor]["ends"][node]
    return product


def rho_path(tree: NewtonTree, v: Vertex, target: Union[Vertex, Arrow]) -> int:
    """
    Product of the decorations adjacent to the path from v to target.

    The decorations counted are those at path vertices on edges leaving the
    path; for target == v this is p*q.
    """
    graph = _graph(tree)
    if isinstance(target, Vertex):
        node = ("v", target.id)
    else:
        node = ("a", tree.arrows.index(target))
    return _path_product(graph, ("v", v.id), node)


def compute_N(tree: NewtonTree) -> Dict[int, int]:
    """N_v = sum of rho(v, f) * m(f) over arrows plus rho(v, w) * d_w over dicriticals."""
    graph = _graph(tree)
    out = {}
    for v in tree.vertices:
        source = ("v", v.id)
        total = 0
        for index, arrow in enumerate(tree.arrows):
            if arrow.mult and arrow.kind != "generic":
                total += _path_product(graph, source, ("a", index)) * arrow.mult
        for w in tree.dicriticals:
            total += _path_product(graph, source, ("v", w.id)) * w.d
        out[v.id] = total
    return out


def failing_vertex(tree: NewtonTree) -> Optional[Vertex]:
    """First vertex whose N decoration disagrees with the path-product formula."""
    expected = compute_N(tree)
    for v in tree.vertices:
        if expected[v.id] != v.N:
            return v
    return None


def check_N_decorations(tree: NewtonTree) -> bool:
    vertex = failing_vertex(tree)
    if vertex is not None:
        logger.warning(f"N decoration of vertex {vertex.id} fails the path-product formula")
    return vertex is None


def check_edge_relation(tree: NewtonTree) -> bool:
    """q = p0*q0*p + m for every vertex with a preceding vertex (p0, q0)."""
    for v in tree.vertices:
        if v.preceding is None:
            if v.q != v.pre_glue_m:
                return False
            continue
        v0 = tree.vertex(v.preceding)
        if v.q != v0.p * v0.q * v.p + v.pre_glue_m:
            return False
    return True


def rho0(tree: NewtonTree, v: Vertex) -> int:
    """min(p_i, q_i) * p_(i-1) ... p_1 * p along the chain S(v) = [v_i, ..., v_1, v]."""
    first = tree.vertex(v.chain[0])
    value = min(first.p, first.q)
    for vertex_id in v.chain[1:]:
        value *= tree.vertex(vertex_id).p
    return value


def generic_curve_tree(tree: NewtonTree) -> NewtonTree:
    """Copy of the tree with d_v arrows of multiplicity one at every dicritical vertex."""
    extra = [
        Arrow(at=v.id, mult=1, kind="generic") for v in tree.dicriticals for _ in range(v.d)
    ]
    return tree.model_copy(update={"arrows": tree.arrows + tuple(extra)})


# Isomorphism


def _tree_signature(tree: NewtonTree) -> Tuple:
    arrows_at: Dict[Optional[int], List[Tuple[str, int]]] = defaultdict(list)
    for arrow in tree.arrows:
        arrows_at[arrow.at].append((arrow.kind, arrow.mult))
    children: Dict[int, List[int]] = defaultdict(list)
    below: Dict[int, int] = {}
    for edge in tree.edges:
        if edge.kind == "horizontal":
            children[edge.from_].append(edge.to)
        else:
            below[edge.from_] = edge.to

    def polygon(top: int) -> Tuple:
        out = []
        current: Optional[int] = top
        while current is not None:
            v = tree.vertex(current)
            out.append(
                (
                    v.N,
                    v.d,
                    v.q,
                    v.p,
                    tuple(sorted(arrows_at[current])),
                    tuple(sorted(polygon(child) for child in children[current])),
                )
            )
            current = below.get(current)
        return tuple(out)

    if not tree.vertices:
        return (tuple(sorted(arrows_at[None])),)
    return polygon(tree.vertices[0].id)


# Rendering


def to_dot(tree: NewtonTree) -> str:
    """Graphviz rendering: vertices labelled (N,d), edge-end decorations as tail/head labels."""
    lines = ["graph newton_tree {", "  node [shape=circle];"]
    for v in tree.vertices:
        lines.append(f'  v{v.id} [label="({v.N},{v.d})"];')
    by_id = {v.id: v for v in tree.vertices}
    for edge in tree.edges:
        upper, lower = by_id[edge.from_], by_id[edge.to]
        tail = upper.p if edge.kind == "vertical" else 1
        style = "" if edge.kind == "vertical" else ", style=bold"
        lines.append(
            f'  v{upper.id} -- v{lower.id} [taillabel="{tail}", headlabel="{lower.q}"{style}];'
        )
    for index, arrow in enumerate(tree.arrows):
        label = f"({arrow.decoration})" if arrow.decoration is not None else str(arrow.mult)
        lines.append(f'  a{index} [shape=none, label="{label}"];')
    if not tree.vertices:
        lines.append("  a0 -- a1;")
    for index, arrow in enumerate(tree.arrows):
        if arrow.at is None:
            continue
        vertex = by_id[arrow.at]
        if arrow.kind == "top":
            lines.append(f'  a{index} -- v{arrow.at} [headlabel="{vertex.q}", dir=back];')
        else:
            decoration = vertex.p if arrow.kind == "bottom" else 1
            lines.append(f'  v{arrow.at} -- a{index} [taillabel="{decoration}", dir=forward];')
    lines.append("}")
    return "\n".join(lines) + "\n"
