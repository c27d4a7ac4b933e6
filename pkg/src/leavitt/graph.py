"""Finite directed multigraphs, their paths, and the vertex-pair product.

A path is read left to right: ``f1 f2`` needs ``r(f1) == s(f2)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian

from .errors import MalformedGraph, ParseError, UnknownId


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    rng: str


@dataclass(frozen=True)
class Path:
    """A path given by its source, edge sequence and range.

    A length-0 path is a vertex (``source == target``, no edges).
    """

    source: str
    edges: tuple[str, ...] = ()
    target: str | None = None

    def __post_init__(self):
        if self.target is None:
            if self.edges:
                raise ValueError("a path with edges needs its target; build it with Graph.path")
            object.__setattr__(self, "target", self.source)

    def __len__(self):
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def is_prefix_of(self, other: "Path") -> bool:
        n = len(self.edges)
        return self.source == other.source and other.edges[:n] == self.edges

    def __str__(self):
        return " ".join(self.edges) if self.edges else self.source


@dataclass(frozen=True)
class GraphReport:
    row_finite: bool
    sinks: frozenset
    regular_vertices: frozenset
    acyclic: bool

    def to_json(self) -> dict:
        return {
            "row_finite": self.row_finite,
            "sinks": sorted(self.sinks),
            "regular_vertices": sorted(self.regular_vertices),
            "acyclic": self.acyclic,
        }


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    # for product graphs: id -> (left id, right id); not part of identity
    factors: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedGraph("duplicate vertex id")
        if len({e.id for e in self.edges}) != len(self.edges):
            raise MalformedGraph("duplicate edge id")
        vs = set(self.vertices)
        for e in self.edges:
            if e.src not in vs or e.rng not in vs:
                raise MalformedGraph(f"edge {e.id} has an undeclared endpoint")

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.vertices, self.edges))

    @cached_property
    def _edge(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def emitted(self) -> dict[str, tuple[str, ...]]:
        """Edges leaving each vertex, in file order."""
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.id)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def special(self) -> dict[str, str]:
        """The distinguished edge of each regular vertex: its first emitted edge."""
        return {v: es[0] for v, es in self.emitted.items() if es}

    @cached_property
    def factor_of(self) -> dict:
        return dict(self.factors)

    @cached_property
    def id_of_pair(self) -> dict:
        return {pair: i for i, pair in self.factors}

    def has_vertex(self, v) -> bool:
        return v in self._vertex_set

    def has_edge(self, e) -> bool:
        return e in self._edge

    def edge(self, e: str) -> Edge:
        try:
            return self._edge[e]
        except KeyError:
            raise UnknownId(f"no edge {e!r}") from None

    def s(self, e: str) -> str:
        return self.edge(e).src

    def r(self, e: str) -> str:
        return self.edge(e).rng

    @cached_property
    def sinks(self) -> frozenset:
        return frozenset(v for v, es in self.emitted.items() if not es)

    @cached_property
    def is_acyclic(self) -> bool:
        WHITE, GREY, BLACK = 0, 1, 2
        colour = {v: WHITE for v in self.vertices}
        for root in self.vertices:
            if colour[root] != WHITE:
                continue
            colour[root] = GREY
            stack = [(root, iter(self.emitted[root]))]
            while stack:
                v, it = stack[-1]
                e = next(it, None)
                if e is None:
                    colour[v] = BLACK
                    stack.pop()
                    continue
                w = self._edge[e].rng
                if colour[w] == GREY:
                    return False
                if colour[w] == WHITE:
                    colour[w] = GREY
                    stack.append((w, iter(self.emitted[w])))
        return True

    def vertex_path(self, v: str) -> Path:
        if v not in self._vertex_set:
            raise UnknownId(f"no vertex {v!r}")
        return Path(v)

    def path(self, edges, source: str | None = None) -> Path:
        """Validated path through ``edges``; ``source`` is needed when empty."""
        edges = tuple(edges)
        if not edges:
            if source is None:
                raise ValueError("an empty path needs its vertex")
            return self.vertex_path(source)
        for a, b in zip(edges, edges[1:]):
            if self.r(a) != self.s(b):
                raise MalformedGraph(f"edges {a} and {b} do not compose")
        start = self.s(edges[0])
        if source is not None and source != start:
            raise MalformedGraph(f"path {' '.join(edges)} does not start at {source}")
        return Path(start, edges, self.r(edges[-1]))

    def extend(self, p: Path, more) -> Path:
        """Concatenate ``p`` with a compatible sequence of edges."""
        more = tuple(more)
        if not more:
            return p
        return Path(p.source, p.edges + more, self.r(more[-1]))

    def truncate(self, p: Path, k: int) -> tuple[Path, Path]:
        """Split ``p`` into its first ``k`` edges and the rest."""
        head, tail = p.edges[:k], p.edges[k:]
        mid = self.r(head[-1]) if head else p.source
        return (Path(p.source, head, mid) if head else Path(mid),
                Path(mid, tail, p.target) if tail else Path(mid))

    # file format ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "rng": e.rng} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "Graph":
        if not isinstance(data, dict):
            raise MalformedGraph("graph must be a JSON object")
        extra = set(data) - {"vertices", "edges"}
        if extra:
            raise MalformedGraph(f"unknown keys {sorted(extra)}")
        if "vertices" not in data:
            raise MalformedGraph("missing 'vertices'")
        verts = data["vertices"]
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise MalformedGraph("'vertices' must be a list of strings")
        edges = []
        for item in data.get("edges", []):
            if not isinstance(item, dict) or set(item) != {"id", "src", "rng"}:
                raise MalformedGraph(f"bad edge record {item!r}")
            if not all(isinstance(item[k], str) for k in ("id", "src", "rng")):
                raise MalformedGraph(f"bad edge record {item!r}")
            edges.append(Edge(item["id"], item["src"], item["rng"]))
        return cls(tuple(verts), tuple(edges))

    @classmethod
    def loads(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return cls.from_json(data)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def validate(g: Graph) -> GraphReport:
    sinks = g.sinks
    return GraphReport(
        row_finite=True,
        sinks=sinks,
        regular_vertices=frozenset(g.vertices) - sinks,
        acyclic=g.is_acyclic,
    )


def product_graph(e: Graph, f: Graph) -> Graph:
    """Vertex set E0 x F0, edge set E1 x F1, componentwise source and range."""

    def pid(a, b):
        return f"({a},{b})"

    vertices = [pid(u, v) for u, v in cartesian(e.vertices, f.vertices)]
    edges = [
        Edge(pid(a.id, b.id), pid(a.src, b.src), pid(a.rng, b.rng))
        for a, b in cartesian(e.edges, f.edges)
    ]
    factors = tuple((pid(u, v), (u, v)) for u, v in cartesian(e.vertices, f.vertices))
    factors += tuple((pid(a.id, b.id), (a.id, b.id)) for a, b in cartesian(e.edges, f.edges))
    if len(set(vertices)) != len(vertices) or len(set(x.id for x in edges)) != len(edges):
        raise MalformedGraph("product ids collide; avoid ',' and parentheses in ids")
    return Graph(tuple(vertices), tuple(edges), factors)


def enumerate_paths(g: Graph, max_length: int) -> list[Path]:
    """All paths of length <= max_length, ordered by (length, edge ids)."""
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    level = [Path(v) for v in sorted(g.vertices)]
    out = list(level)
    for _ in range(max_length):
        nxt = []
        for p in level:
            for e in g.emitted[p.target]:
                nxt.append(g.extend(p, (e,)) if p.edges else Path(p.source, (e,), g.r(e)))
        nxt.sort(key=lambda p: p.edges)
        if not nxt:
            break
        out += nxt
        level = nxt
    return out


def line_graph() -> Graph:
    """u1 --f--> u2."""
    return Graph(("u1", "u2"), (Edge("f", "u1", "u2"),))


def loop_graph() -> Graph:
    """One vertex v with one loop e; its Leavitt path algebra is K[x, 1/x]."""
    return Graph(("v",), (Edge("e", "v", "v"),))


def point_graph() -> Graph:
    return Graph(("v",), ())
