"""
Weighted plumbing graphs of circle bundles over surfaces.

A vertex carries the Euler number ``euler`` of its circle bundle and the genus
of the base surface. Edges are unordered vertex pairs with a multiplicity, so
two bundles may be plumbed together more than once; self-plumbing is not
modelled.

Text format (one declaration per line, ``#`` starts a comment)::

    vertex <id> e=<int> g=<uint>
    edge <id> <id> [x<multiplicity>]
"""
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from . import linalg
from .errors import GraphSyntaxError, GraphValidationError

ID_RE = re.compile(r"[A-Za-z0-9_.]+")


@dataclass(frozen=True)
class VertexData:
    id: str
    euler: int
    genus: int = 0

    def __post_init__(self):
        if not ID_RE.fullmatch(self.id):
            raise GraphValidationError(f"invalid vertex id {self.id!r}")
        if self.genus < 0:
            raise GraphValidationError(f"vertex {self.id}: genus must be non-negative")


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    multiplicity: int = 1

    @property
    def label(self) -> str:
        return f"{self.u}-{self.v}"

    @property
    def ends(self) -> FrozenSet[str]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class PlumbingGraph:
    """
    Validated plumbing graph. Vertex order is declaration order and fixes the
    indexing of every matrix and vector derived from the graph.

    Repeated edge declarations between the same pair are merged into the
    first one, adding multiplicities.
    """

    vertices: Tuple[VertexData, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise GraphValidationError("graph has no vertices")
        counts = Counter(v.id for v in vertices)
        dupes = sorted(k for k, c in counts.items() if c > 1)
        if dupes:
            raise GraphValidationError(f"duplicate vertex id {dupes[0]!r}")
        merged: Dict[FrozenSet[str], Edge] = {}
        for e in self.edges:
            for end in (e.u, e.v):
                if end not in counts:
                    raise GraphValidationError(f"edge {e.u} {e.v}: unknown vertex {end!r}")
            if e.u == e.v:
                raise GraphValidationError(f"self-loop at vertex {e.u!r} is not allowed")
            if e.multiplicity < 1:
                raise GraphValidationError(f"edge {e.u} {e.v}: multiplicity must be >= 1")
            if e.ends in merged:
                old = merged[e.ends]
                merged[e.ends] = Edge(old.u, old.v, old.multiplicity + e.multiplicity)
            else:
                merged[e.ends] = e
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(merged.values()))
        if len(vertices) > 1 and not nx.is_connected(self.to_networkx()):
            raise GraphValidationError("graph is disconnected")

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex(self, vid: str) -> VertexData:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(f"unknown vertex {vid!r}")

    def index(self, vid: str) -> int:
        try:
            return self.ids.index(vid)
        except ValueError:
            raise KeyError(f"unknown vertex {vid!r}") from None

    def edge_between(self, u: str, v: str) -> Edge:
        for e in self.edges:
            if e.ends == {u, v}:
                return e
        raise KeyError(f"no edge between {u!r} and {v!r}")

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.edges)

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        for v in self.vertices:
            G.add_node(v.id, euler=v.euler, genus=v.genus)
        for e in self.edges:
            for _ in range(e.multiplicity):
                G.add_edge(e.u, e.v)
        return G


def _parse_int(token, key, lineno, column, allow_negative=True):
    pattern = r"-?\d+" if allow_negative else r"\d+"
    prefix = f"{key}="
    if not token.startswith(prefix) or not re.fullmatch(pattern, token[len(prefix):]):
        kind = "integer" if allow_negative else "non-negative integer"
        raise GraphSyntaxError(f"expected {prefix}<{kind}>, got {token!r}", lineno, column)
    return int(token[len(prefix):])


def parse_graph(text: str) -> PlumbingGraph:
    vertices: List[VertexData] = []
    edges: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        (word, col0), rest = tokens[0], tokens[1:]
        if word == "vertex":
            if len(rest) != 3:
                raise GraphSyntaxError("expected 'vertex <id> e=<int> g=<uint>'", lineno, col0)
            (vid, cid), (etok, ecol), (gtok, gcol) = rest
            if not ID_RE.fullmatch(vid):
                raise GraphSyntaxError(f"invalid vertex id {vid!r}", lineno, cid)
            euler = _parse_int(etok, "e", lineno, ecol)
            genus = _parse_int(gtok, "g", lineno, gcol, allow_negative=False)
            vertices.append(VertexData(vid, euler, genus))
        elif word == "edge":
            if len(rest) not in (2, 3):
                raise GraphSyntaxError("expected 'edge <id> <id> [x<mult>]'", lineno, col0)
            mult = 1
            if len(rest) == 3:
                mtok, mcol = rest[2]
                if not re.fullmatch(r"x\d+", mtok) or int(mtok[1:]) < 1:
                    raise GraphSyntaxError(f"bad multiplicity {mtok!r}", lineno, mcol)
                mult = int(mtok[1:])
            for tok, col in rest[:2]:
                if not ID_RE.fullmatch(tok):
                    raise GraphSyntaxError(f"invalid vertex id {tok!r}", lineno, col)
            edges.append(Edge(rest[0][0], rest[1][0], mult))
        else:
            raise GraphSyntaxError(f"unknown declaration {word!r}", lineno, col0)
    return PlumbingGraph(tuple(vertices), tuple(edges))


def format_graph(graph: PlumbingGraph) -> str:
    lines = [f"vertex {v.id} e={v.euler} g={v.genus}" for v in graph.vertices]
    for e in graph.edges:
        suffix = f" x{e.multiplicity}" if e.multiplicity > 1 else ""
        lines.append(f"edge {e.u} {e.v}{suffix}")
    return "\n".join(lines) + "\n"


def degree(graph: PlumbingGraph, vertex: str) -> int:
    """Sum of the multiplicities of edges incident to ``vertex``."""
    graph.index(vertex)
    return sum(e.multiplicity for e in graph.edges if vertex in e.ends)


def degrees(graph: PlumbingGraph) -> Tuple[int, ...]:
    return tuple(degree(graph, v) for v in graph.ids)


def slacks(graph: PlumbingGraph) -> Tuple[int, ...]:
    """e_i + d_i for every vertex, in vertex order."""
    return tuple(v.euler + d for v, d in zip(graph.vertices, degrees(graph)))


def intersection_matrix(graph: PlumbingGraph) -> linalg.Matrix:
    n = len(graph.vertices)
    M = [[0] * n for _ in range(n)]
    for i, v in enumerate(graph.vertices):
        M[i][i] = v.euler
    for e in graph.edges:
        i, j = graph.index(e.u), graph.index(e.v)
        M[i][j] += e.multiplicity
        M[j][i] += e.multiplicity
    return linalg.as_matrix(M)


def is_non_positive(graph: PlumbingGraph) -> Tuple[bool, Tuple[int, ...]]:
    s = slacks(graph)
    return all(x <= 0 for x in s), s


def bridges(graph: PlumbingGraph) -> FrozenSet[Edge]:
    """Edges whose removal disconnects the graph. Multi-edges never qualify."""
    simple = nx.Graph(graph.to_networkx())
    cut = {frozenset(pair) for pair in nx.bridges(simple)}
    return frozenset(e for e in graph.edges if e.multiplicity == 1 and e.ends in cut)


def cycle_rank(graph: PlumbingGraph) -> int:
    return graph.total_multiplicity - len(graph.vertices) + 1


def is_simple_tree(graph: PlumbingGraph) -> bool:
    return cycle_rank(graph) == 0


def first_homology(graph: PlumbingGraph) -> Tuple[List[int], int]:
    """
    H_1 of the plumbed 3-manifold as the cokernel of the intersection matrix.

    Returns ``(factors, rank)``: invariant factors greater than one (a
    divisibility chain) and the free rank.
    """
    diag = linalg.smith_normal_form(intersection_matrix(graph)).diagonal
    return [d for d in diag if d > 1], sum(1 for d in diag if d == 0)
