"""Finite simple graphs, the standard families, joins and elimination orderings.

Vertices are labelled by hashable, mutually comparable values.  Everything
built from the graph mini-language uses positive integers, with the labelling
of the usual figures: consecutive labels on paths and cycles, the star centre
is vertex 1.  The join construction labels its vertices ``(i, copy)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import GraphError

Vertex = Hashable


def _edge(u, v) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple graph.

    ``edges`` holds each unordered pair once, stored as ``(min, max)``.
    """

    vertices: tuple
    edges: frozenset = frozenset()
    _adj: Mapping = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            raise GraphError(f"duplicate vertex labels in {self.vertices!r}")
        vset = set(verts)
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop edge ({u!r}, {v!r})")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            edges.add(_edge(u, v))
        adj = {x: set() for x in verts}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "_adj", {x: frozenset(n) for x, n in adj.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def adjacent(self, u, v) -> bool:
        return v in self.neighbors(u)

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def is_independent(self, s: Iterable) -> bool:
        s = list(s)
        return not any(self.adjacent(u, v) for u, v in itertools.combinations(s, 2))

    def is_clique(self, s: Iterable) -> bool:
        s = list(s)
        return all(self.adjacent(u, v) for u, v in itertools.combinations(s, 2))

    def independent_sets(self, max_size: int | None = None) -> list[tuple]:
        """All independent sets as sorted tuples, the empty set first."""
        out: list[tuple] = []
        verts = self.vertices
        limit = len(verts) if max_size is None else max_size

        def grow(start: int, current: list, banned: frozenset):
            out.append(tuple(current))
            if len(current) == limit:
                return
            for k in range(start, len(verts)):
                v = verts[k]
                if v in banned:
                    continue
                current.append(v)
                grow(k + 1, current, banned | self._adj[v])
                current.pop()

        grow(0, [], frozenset())
        return out

    def relabel(self, mapping: Mapping) -> "Graph":
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            frozenset((mapping[u], mapping[v]) for u, v in self.edges),
        )

    def edge_list(self) -> list[tuple]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self.vertices)}, edges={self.edge_list()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on labels ``1..n``; duplicate and reversed pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    pairs = []
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        for x in (u, v):
            if not isinstance(x, int) or not 1 <= x <= n:
                raise GraphError(f"label {x!r} in pair ({u}, {v}) is outside 1..{n}")
        pairs.append((u, v))
    return Graph(tuple(range(1, n + 1)), frozenset(pairs))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


# ----------------------------------------------------------------------------
# families
# ----------------------------------------------------------------------------


class Kind(str, Enum):
    PATH = "P"
    CYCLE = "C"
    STAR = "S"
    COMPLETE = "K"
    PATH_INF = "Pinf"
    STAR_INF = "Sinf"
    EXPLICIT = "explicit"


INFINITE_KINDS = (Kind.PATH_INF, Kind.STAR_INF)


def _family_adjacent(kind: Kind, u: int, v: int) -> bool:
    if kind in (Kind.PATH, Kind.PATH_INF):
        return abs(u - v) == 1
    if kind in (Kind.STAR, Kind.STAR_INF):
        return (u == 1) != (v == 1)
    if kind is Kind.COMPLETE:
        return u != v
    raise GraphError(f"no implicit adjacency for {kind}")


def family_graph(kind: Kind | str, n: int) -> Graph:
    """The finite member of size ``n`` of a standard family."""
    kind = Kind(kind)
    if kind in INFINITE_KINDS or kind is Kind.EXPLICIT:
        raise GraphError(f"{kind.value} has no finite member of size n")
    if n < 1:
        raise GraphError(f"family size must be at least 1, got {n}")
    if kind is Kind.CYCLE:
        if n < 3:
            raise GraphError(f"cycle needs at least 3 vertices, got {n}")
        edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
        return build_graph(n, edges)
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if _family_adjacent(kind, u, v)
    ]
    return build_graph(n, edges)


@dataclass(frozen=True)
class GraphFamily:
    """A graph given either explicitly or as a (possibly infinite) family.

    Infinite families have vertex set ``{1, 2, 3, ...}`` ordered as the
    natural numbers and are only ever handled through finite induced
    subgraphs.
    """

    kind: Kind
    n: int | None = None
    graph: Graph | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.EXPLICIT:
            if self.graph is None:
                raise GraphError("explicit family needs a graph")
        elif self.kind not in INFINITE_KINDS:
            g = family_graph(self.kind, self.n)
            object.__setattr__(self, "graph", g)

    @classmethod
    def of(cls, g: Graph) -> "GraphFamily":
        return cls(Kind.EXPLICIT, graph=g)

    @property
    def is_infinite(self) -> bool:
        return self.kind in INFINITE_KINDS

    def materialize(self, vertices: Iterable | None = None) -> Graph:
        """Induced subgraph on ``vertices`` (the whole graph when finite and omitted)."""
        if not self.is_infinite:
            return self.graph if vertices is None else induced_subgraph(self.graph, vertices)
        if vertices is None:
            raise GraphError(f"{self.kind.value} is infinite: a finite vertex window is required")
        vs = sorted(set(vertices))
        for v in vs:
            if not isinstance(v, int) or v < 1:
                raise GraphError(f"label {v!r} is not a vertex of {self.kind.value}")
        edges = [(u, v) for u, v in itertools.combinations(vs, 2) if _family_adjacent(self.kind, u, v)]
        return Graph(tuple(vs), frozenset(edges))

    def label(self) -> str:
        if self.kind is Kind.EXPLICIT:
            return f"explicit:{self.graph.n}"
        if self.is_infinite:
            return self.kind.value
        return f"{self.kind.value}:{self.n}"


def as_graph(g: Graph | GraphFamily, vertices: Iterable | None = None) -> Graph:
    if isinstance(g, GraphFamily):
        return g.materialize(vertices)
    return g if vertices is None else induced_subgraph(g, vertices)


def parse_graph_spec(spec: str) -> GraphFamily:
    """Parse ``P:n``, ``C:n``, ``S:n``, ``K:n``, ``Pinf``, ``Sinf`` or ``file:<path>``."""
    spec = spec.strip()
    if spec in ("Pinf", "Sinf"):
        return GraphFamily(Kind(spec))
    if spec.startswith("file:"):
        return GraphFamily.of(read_edge_file(spec[5:]))
    head, sep, tail = spec.partition(":")
    if not sep or head not in ("P", "C", "S", "K"):
        raise GraphError(f"unrecognised graph spec {spec!r}")
    try:
        n = int(tail)
    except ValueError:
        raise GraphError(f"bad size in graph spec {spec!r}") from None
    return GraphFamily(Kind(head), n)


def read_edge_file(path: str) -> Graph:
    with open(path) as fh:
        lines = [ln.split() for ln in fh if ln.strip()]
    if not lines:
        raise GraphError(f"{path}: empty graph file")
    try:
        n = int(lines[0][0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"{path}: {exc}") from None
    return build_graph(n, edges)


# ----------------------------------------------------------------------------
# subgraphs and joins
# ----------------------------------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable) -> Graph:
    s = set(s)
    unknown = s.difference(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)!r}")
    return Graph(tuple(s), frozenset(e for e in g.edges if e[0] in s and e[1] in s))


def join_graph(g: Graph, m: Mapping) -> Graph:
    """Blow-up replacing vertex ``i`` by a clique on ``(i, 1) .. (i, m_i)``.

    Blocks of adjacent vertices are completely joined.
    """
    mult = {v: int(k) for v, k in dict(m).items() if k}
    for v, k in mult.items():
        if v not in g._adj:
            raise GraphError(f"multiplicity given for unknown vertex {v!r}")
        if k < 0:
            raise GraphError(f"negative multiplicity at {v!r}")
    verts = [(v, c) for v in sorted(mult) for c in range(1, mult[v] + 1)]
    edges = []
    for a, b in itertools.combinations(verts, 2):
        if a[0] == b[0] or g.adjacent(a[0], b[0]):
            edges.append((a, b))
    return Graph(tuple(verts), frozenset(edges))


# ----------------------------------------------------------------------------
# perfect elimination orderings
# ----------------------------------------------------------------------------


class PEOViolation(NamedTuple):
    vertex: Vertex
    pair: tuple


class PEOCheck(NamedTuple):
    ok: bool
    violation: PEOViolation | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PEOrdering:
    """An ordering whose earlier-neighbour sets are all cliques."""

    order: tuple
    earlier_neighbors: Mapping

    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.order)}


def earlier_neighbor_sets(g: Graph, order: Sequence) -> dict:
    pos = {v: i for i, v in enumerate(order)}
    return {v: frozenset(u for u in g.neighbors(v) if pos[u] < pos[v]) for v in order}


def verify_peo(g: Graph, order: Sequence) -> PEOCheck:
    """Check that every vertex's earlier neighbours form a clique."""
    order = tuple(order)
    if len(order) != g.n or set(order) != set(g.vertices):
        raise GraphError(f"{list(order)!r} is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = sorted((u for u in g.neighbors(v) if pos[u] < pos[v]), key=pos.__getitem__)
        for a, b in itertools.combinations(earlier, 2):
            if not g.adjacent(a, b):
                return PEOCheck(False, PEOViolation(v, (a, b)))
    return PEOCheck(True)


def find_peo(g: Graph) -> PEOrdering | None:
    """Maximum-cardinality search; ``None`` when the graph is not chordal.

    MCS visits, at each step, an unvisited vertex with the most visited
    neighbours (lowest label on ties).  For a chordal graph the visited
    neighbours of each vertex form a clique, which is exactly the ordering
    convention used here.
    """
    weight = {v: 0 for v in g.vertices}
    remaining = set(g.vertices)
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (-weight[x], x))
        remaining.remove(v)
        order.append(v)
        for u in g.neighbors(v):
            if u in remaining:
                weight[u] += 1
    if not verify_peo(g, order):
        return None
    return PEOrdering(tuple(order), earlier_neighbor_sets(g, order))


def peo_from_order(g: Graph, order: Sequence) -> PEOrdering:
    check = verify_peo(g, order)
    if not check:
        v, (a, b) = check.violation
        raise GraphError(f"not a perfect elimination ordering: at {v!r}, {a!r} and {b!r} are not adjacent")
    return PEOrdering(tuple(order), earlier_neighbor_sets(g, order))


def all_peos(g: Graph) -> Iterator[PEOrdering]:
    """Every perfect elimination ordering, by exhaustive permutation (small graphs)."""
    for perm in itertools.permutations(g.vertices):
        if verify_peo(g, perm):
            yield PEOrdering(perm, earlier_neighbor_sets(g, perm))


def _induces_cycle(g: Graph, s: tuple) -> bool:
    if any(len(g.neighbors(v) & set(s)) != 2 for v in s):
        return False
    # 2-regular: a single cycle iff connected
    seen = {s[0]}
    stack = [s[0]]
    sset = set(s)
    while stack:
        v = stack.pop()
        for u in g.neighbors(v) & sset:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(s)


def is_chordal_bruteforce(g: Graph) -> bool:
    """True iff no vertex subset of size >= 4 induces a cycle."""
    for k in range(4, g.n + 1):
        for s in itertools.combinations(g.vertices, k):
            if _induces_cycle(g, s):
                return False
    return True


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n,2)`` graphs on labels ``1..n``."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
