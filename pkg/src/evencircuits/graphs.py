"""Graph and digraph data model: parsing, bipartite lifts, closed walks.

Vertices are indexed 0..n-1 and carry string names; edges are indexed
1..r in input order.  Edge i corresponds to the quadratic generator
x_u*x_v of the edge ideal and to the algebra variable T_i, so the input
order of the edges fixes the T-labelling used by every certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed input text or structurally invalid graph data."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ordered, 1-based edge indices."""

    names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]  # 0-based endpoint pairs, u < v

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise GraphError("duplicate vertex name")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphError(f"loop edge at vertex {self.names[u]}")
            if u > v:
                raise GraphError("edge endpoints must be stored as (min, max)")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {self.names[u]} {self.names[v]}")
            seen.add((u, v))

    @classmethod
    def build(cls, names: Iterable[str], pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalising each endpoint pair to (min, max)."""
        return cls(tuple(names), tuple((min(u, v), max(u, v)) for u, v in pairs))

    @property
    def vertex_count(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def name(self, v: int) -> str:
        return self.names[v]

    def edge_endpoints(self, i: int) -> tuple[int, int]:
        """Endpoints of edge i (1-based edge index)."""
        if not 1 <= i <= len(self.edges):
            raise GraphError(f"edge index {i} out of range")
        return self.edges[i - 1]

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def incident_edges(self, v: int) -> list[int]:
        return [i for i, (u, w) in enumerate(self.edges, start=1) if v in (u, w)]

    def edge_between(self, u: int, v: int) -> int | None:
        key = (min(u, v), max(u, v))
        for i, pair in enumerate(self.edges, start=1):
            if pair == key:
                return i
        return None

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (edge index, other endpoint), edge-index order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(len(self.names))]
        for i, (u, v) in enumerate(self.edges, start=1):
            adj[u].append((i, v))
            adj[v].append((i, u))
        return adj

    def to_edge_list(self) -> str:
        return "".join(f"{self.names[u]} {self.names[v]}\n" for u, v in self.edges)

    def to_json(self) -> str:
        obj = {
            "vertices": list(self.names),
            "edges": [[self.names[u], self.names[v]] for u, v in self.edges],
        }
        return json.dumps(obj, indent=2) + "\n"


@dataclass(frozen=True)
class Digraph:
    """Simple digraph: no loops, no repeated arcs; antiparallel arcs allowed."""

    names: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...]  # ordered (tail, head) pairs, 0-based

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise GraphError("duplicate vertex name")
        seen = set()
        for t, h in self.arcs:
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"arc endpoint out of range: ({t}, {h})")
            if t == h:
                raise GraphError(f"loop arc at vertex {self.names[t]}")
            if (t, h) in seen:
                raise GraphError(f"duplicate arc {self.names[t]} {self.names[h]}")
            seen.add((t, h))

    @property
    def vertex_count(self) -> int:
        return len(self.names)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def name(self, v: int) -> str:
        return self.names[v]

    def out_neighbors(self, v: int) -> list[int]:
        return [h for t, h in self.arcs if t == v]

    def outdegrees(self) -> list[int]:
        degs = [0] * len(self.names)
        for t, _ in self.arcs:
            degs[t] += 1
        return degs

    def to_edge_list(self) -> str:
        return "".join(f"{self.names[t]} {self.names[h]}\n" for t, h in self.arcs)

    def to_json(self) -> str:
        obj = {
            "vertices": list(self.names),
            "edges": [[self.names[t], self.names[h]] for t, h in self.arcs],
        }
        return json.dumps(obj, indent=2) + "\n"


def _parse_pairs(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    """Shared tokenizer: returns the name table and 0-based token pairs."""
    names: list[str] = []
    index: dict[str, int] = {}

    def intern(token: str) -> int:
        if token not in index:
            index[token] = len(names)
            names.append(token)
        return index[token]

    pairs: list[tuple[int, int]] = []
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON input: {exc}") from exc
        if not isinstance(obj, dict) or "edges" not in obj:
            raise GraphError('JSON input must be an object with an "edges" list')
        declared = obj.get("vertices")
        if declared is not None:
            if not isinstance(declared, list):
                raise GraphError('"vertices" must be a list')
            for tok in declared:
                name = str(tok)
                if name in index:
                    raise GraphError(f"duplicate vertex name {name!r}")
                intern(name)
        if not isinstance(obj["edges"], list):
            raise GraphError('"edges" must be a list')
        for k, pair in enumerate(obj["edges"], start=1):
            if not isinstance(pair, list) or len(pair) != 2:
                raise GraphError(f"edge {k}: expected a pair of vertex names")
            u, v = (str(tok) for tok in pair)
            if declared is not None and (u not in index or v not in index):
                missing = u if u not in index else v
                raise GraphError(f"edge {k}: unknown vertex {missing!r}")
            pairs.append((intern(u), intern(v)))
        return names, pairs

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphError(f"line {ln}: expected two vertex tokens, found {len(tokens)}")
        pairs.append((intern(tokens[0]), intern(tokens[1])))
    return names, pairs


def parse_graph(text: str) -> Graph:
    """Parse an undirected graph from edge-list text or a JSON document.

    Edge order is input order; vertex names register in first-seen order.
    """
    names, pairs = _parse_pairs(text)
    seen = set()
    edges = []
    for k, (u, v) in enumerate(pairs, start=1):
        if u == v:
            raise GraphError(f"edge {k}: loop edge {names[u]} {names[v]}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"edge {k}: duplicate edge {names[u]} {names[v]}")
        seen.add(key)
        edges.append(key)
    return Graph(tuple(names), tuple(edges))


def parse_digraph(text: str) -> Digraph:
    """Parse a digraph; each input pair is read as tail -> head."""
    names, pairs = _parse_pairs(text)
    seen = set()
    for k, (t, h) in enumerate(pairs, start=1):
        if t == h:
            raise GraphError(f"arc {k}: loop arc {names[t]} {names[h]}")
        if (t, h) in seen:
            raise GraphError(f"arc {k}: duplicate arc {names[t]} {names[h]}")
        seen.add((t, h))
    return Digraph(tuple(names), tuple(pairs))


@dataclass(frozen=True, eq=False)
class BipartiteLift:
    """Bipartite graph of a digraph: vertices x_i, y_i, matching edges x_i y_i
    and one edge {x_i, y_j} per arc i -> j."""

    digraph: Digraph
    graph: Graph
    matching: tuple[int, ...]  # edge indices of the perfect matching
    arc_map: dict[int, tuple[int, int]]  # non-matching edge index -> (tail, head)

    @property
    def matching_set(self) -> frozenset[int]:
        return frozenset(self.matching)


def build_lift(d: Digraph) -> BipartiteLift:
    """Build the bipartite lift; the matching occupies edge indices 1..m."""
    m = d.vertex_count
    names = tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{i + 1}" for i in range(m))
    edges = [(i, m + i) for i in range(m)]
    arc_map: dict[int, tuple[int, int]] = {}
    for k, (t, h) in enumerate(d.arcs):
        edges.append((t, m + h))  # t < m + h always
        arc_map[m + k + 1] = (t, h)
    graph = Graph(names, tuple(edges))
    return BipartiteLift(d, graph, tuple(range(1, m + 1)), arc_map)


@dataclass(frozen=True)
class Circuit:
    """A closed walk stored in canonical form.

    The walk visits vertices[k] -edges[k]-> vertices[k+1] and closes with
    edges[-1] back to vertices[0].  The canonical form is the
    lexicographically least (edges, vertices) pair over all rotations and
    both orientations, so equal values mean equal traversals.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    @property
    def is_circuit(self) -> bool:
        """True when no edge repeats (the walk is a closed trail)."""
        return len(set(self.edges)) == len(self.edges)

    def _parity_vertex_classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.vertices[0::2], self.vertices[1::2]

    @property
    def has_distinct_parity_classes(self) -> bool:
        """Vertices at even positions pairwise distinct, same at odd positions."""
        if not self.is_even:
            return False
        a, b = self._parity_vertex_classes()
        return len(set(a)) == len(a) and len(set(b)) == len(b)

    @property
    def is_indecomposable(self) -> bool:
        """Even circuit that is not an edge-disjoint union of smaller even
        circuits; equivalent to both parity vertex classes being distinct."""
        return self.is_circuit and self.has_distinct_parity_classes

    @property
    def is_primitive_walk(self) -> bool:
        """Even closed walk with no even closed subwalk and a nonzero
        alternating-product binomial (the walk-type Rees generator)."""
        if not self.has_distinct_parity_classes:
            return False
        a, b = self.alternating_edge_classes()
        return a != b

    def alternating_edge_classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The two alternating edge multisets, each sorted with multiplicity."""
        if not self.is_even:
            raise ValueError("alternating classes need an even closed walk")
        return tuple(sorted(self.edges[0::2])), tuple(sorted(self.edges[1::2]))

    @property
    def signature(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Orientation-free identity of the walk: the unordered pair of
        alternating edge multisets (equivalently, its binomial up to sign)."""
        a, b = self.alternating_edge_classes()
        return (a, b) if a <= b else (b, a)

    @property
    def sort_key(self) -> tuple:
        return (self.length, self.edges, self.vertices)

    def vertex_names(self, graph: Graph) -> tuple[str, ...]:
        return tuple(graph.name(v) for v in self.vertices)


def canonicalize_circuit(
    graph: Graph, edge_seq: Sequence[int], vertex_seq: Sequence[int]
) -> Circuit:
    """Validate a closed walk and return its canonical Circuit value."""
    edges = tuple(edge_seq)
    verts = tuple(vertex_seq)
    length = len(edges)
    if length == 0 or len(verts) != length:
        raise GraphError("closed walk needs equal, nonempty edge and vertex sequences")
    for k in range(length):
        u, v = verts[k], verts[(k + 1) % length]
        endpoints = graph.edge_endpoints(edges[k])
        if {u, v} != set(endpoints):
            raise GraphError(
                f"edge T{edges[k]} does not join {graph.name(u)} and {graph.name(v)}"
            )
    reflected_edges = tuple(reversed(edges))
    reflected_verts = (verts[0],) + tuple(reversed(verts[1:]))
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for er, vr in ((edges, verts), (reflected_edges, reflected_verts)):
        for s in range(length):
            cand = (er[s:] + er[:s], vr[s:] + vr[:s])
            if best is None or cand < best:
                best = cand
    return Circuit(edges=best[0], vertices=best[1])
