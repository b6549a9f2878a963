"""Independent brute-force references for cross-validating the engine.

These searches share only the data model with the engine: circuits and
cycles come from direct trail/path DFS, directed cycles from digraph DFS,
and the submatrix sweep is the literal enumerate-every-submatrix
algorithm.  Hard size guards refuse inputs where brute force would crawl.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

from .algebra import (
    LinearColumn,
    TMonomial,
    TPolynomial,
    reduced_jacobian_dual,
)
from .dicycles import DirectedCycle
from .graphs import Circuit, Digraph, Graph, canonicalize_circuit
from .minors import MinorCertificate, certify_circuit_minor, certify_cycle_minor

MAX_ORACLE_EDGES = 12
MAX_SWEEP_COLUMNS = 12


class OracleSizeError(RuntimeError):
    """Input too large for the brute-force reference."""


def _guard_edges(graph: Graph) -> None:
    if graph.edge_count > MAX_ORACLE_EDGES:
        raise OracleSizeError(
            f"oracle refuses graphs with more than {MAX_ORACLE_EDGES} edges"
        )


def _keep_min(best: dict, circuit: Circuit) -> None:
    key = circuit.signature
    held = best.get(key)
    if held is None or circuit.sort_key < held.sort_key:
        best[key] = circuit


def _closed_walk_search(
    graph: Graph, *, distinct_edges: bool, max_len: int
) -> list[Circuit]:
    """Closed walks with both parity vertex classes distinct, anchored at
    their least vertex; trails when distinct_edges is set."""
    best: dict[tuple, Circuit] = {}
    adjacency = graph.adjacency()
    for anchor in range(graph.vertex_count):
        path_vertices = [anchor]
        path_edges: list[int] = []
        used_edges: set[int] = set()
        classes: tuple[set[int], set[int]] = ({anchor}, set())

        def dfs(cur: int) -> None:
            walked = len(path_edges)
            for edge, nxt in adjacency[cur]:
                if distinct_edges and edge in used_edges:
                    continue
                if nxt < anchor:
                    continue
                length = walked + 1
                if length > max_len:
                    continue
                if nxt == anchor and length % 2 == 0:
                    circuit = canonicalize_circuit(
                        graph, path_edges + [edge], path_vertices
                    )
                    _keep_min(best, circuit)
                    # fall through: the walk may also pass through the anchor
                parity = length % 2
                if nxt in classes[parity]:
                    continue
                if length == max_len:
                    continue
                classes[parity].add(nxt)
                path_vertices.append(nxt)
                path_edges.append(edge)
                if distinct_edges:
                    used_edges.add(edge)
                dfs(nxt)
                classes[parity].discard(nxt)
                path_vertices.pop()
                path_edges.pop()
                if distinct_edges:
                    used_edges.discard(edge)

        dfs(anchor)
    return sorted(best.values(), key=lambda c: c.sort_key)


def oracle_even_circuits(graph: Graph) -> list[Circuit]:
    """Indecomposable even circuits by direct closed-trail search."""
    _guard_edges(graph)
    found = _closed_walk_search(
        graph, distinct_edges=True, max_len=2 * graph.vertex_count
    )
    return [c for c in found if c.is_indecomposable]


def oracle_primitive_even_walks(graph: Graph, max_len: int) -> list[Circuit]:
    """Primitive even closed walks of length at most max_len."""
    _guard_edges(graph)
    if max_len is None or max_len < 2 or max_len % 2 != 0:
        raise ValueError("walk search requires a positive even length bound")
    found = _closed_walk_search(graph, distinct_edges=False, max_len=max_len)
    return [c for c in found if c.is_primitive_walk]


def oracle_even_cycles(graph: Graph) -> list[Circuit]:
    """Even cycles by direct simple-path search."""
    _guard_edges(graph)
    best: dict[tuple, Circuit] = {}
    adjacency = graph.adjacency()
    for anchor in range(graph.vertex_count):
        path_vertices = [anchor]
        path_edges: list[int] = []
        on_path = {anchor}

        def dfs(cur: int) -> None:
            for edge, nxt in adjacency[cur]:
                if nxt == anchor and len(path_edges) >= 2:
                    if (len(path_edges) + 1) % 2 == 0:
                        circuit = canonicalize_circuit(
                            graph, path_edges + [edge], path_vertices
                        )
                        _keep_min(best, circuit)
                    continue
                if nxt in on_path or nxt < anchor:
                    continue
                on_path.add(nxt)
                path_vertices.append(nxt)
                path_edges.append(edge)
                dfs(nxt)
                on_path.discard(nxt)
                path_vertices.pop()
                path_edges.pop()

        dfs(anchor)
    return sorted(best.values(), key=lambda c: c.sort_key)


def oracle_directed_cycles(d: Digraph) -> list[DirectedCycle]:
    """Directed cycles by plain DFS over arcs, least vertex first."""
    if d.arc_count > 2 * MAX_ORACLE_EDGES:
        raise OracleSizeError("oracle refuses digraphs with more than "
                              f"{2 * MAX_ORACLE_EDGES} arcs")
    out: list[DirectedCycle] = []
    succ: dict[int, list[int]] = {v: [] for v in range(d.vertex_count)}
    for t, h in d.arcs:
        succ[t].append(h)
    for v in succ:
        succ[v].sort()
    for anchor in range(d.vertex_count):
        path = [anchor]
        on_path = {anchor}

        def dfs(cur: int) -> None:
            for nxt in succ[cur]:
                if nxt == anchor:
                    out.append(DirectedCycle(tuple(path)))
                    continue
                if nxt in on_path or nxt < anchor:
                    continue
                on_path.add(nxt)
                path.append(nxt)
                dfs(nxt)
                on_path.discard(nxt)
                path.pop()

        dfs(anchor)
    return sorted(out, key=lambda c: c.sort_key)


def oracle_submatrix_sweep(
    graph: Graph,
    t_max: int | None = None,
    kind: str = "circuit",
    fast: bool = True,
) -> list[MinorCertificate]:
    """The literal algorithm: iterate every square submatrix of the dual
    and certify it, deduplicating accepted certificates by signature.

    With fast=True, selections that provably cannot certify (a selected
    column or row with fewer than two usable entries) are skipped before
    computing the determinant; the accepted set is unchanged either way.
    """
    dual = reduced_jacobian_dual(graph)
    columns = dual.columns
    if len(columns) > MAX_SWEEP_COLUMNS:
        raise OracleSizeError(
            f"sweep refuses duals with more than {MAX_SWEEP_COLUMNS} columns"
        )
    certify = certify_circuit_minor if kind == "circuit" else certify_cycle_minor
    bound = min(graph.vertex_count, len(columns))
    if t_max is not None:
        bound = min(bound, t_max)
    best: dict[tuple, MinorCertificate] = {}
    for t in range(1, bound + 1):
        for cols in combinations(columns, t):
            for rows in combinations(range(graph.vertex_count), t):
                if fast:
                    rowset = set(rows)
                    if any(
                        c.row_a not in rowset or c.row_b not in rowset for c in cols
                    ):
                        continue
                    degree = {r: 0 for r in rows}
                    for c in cols:
                        degree[c.row_a] += 1
                        degree[c.row_b] += 1
                    if any(v != 2 for v in degree.values()):
                        continue
                cert = certify(graph, rows, cols)
                if not isinstance(cert, MinorCertificate):
                    continue
                key = cert.circuit.signature
                held = best.get(key)
                if held is None or cert.sort_key < held.sort_key:
                    best[key] = cert
    return sorted(best.values(), key=lambda c: c.sort_key)


def oracle_binomial_minors(
    graph: Graph, t_max: int
) -> list[tuple[tuple[int, ...], tuple[int, ...], TPolynomial]]:
    """Every (rows, cols, determinant) whose determinant is a binomial,
    up to order t_max, with no shape filtering."""
    dual = reduced_jacobian_dual(graph)
    columns = dual.columns
    if len(columns) > MAX_SWEEP_COLUMNS:
        raise OracleSizeError(
            f"sweep refuses duals with more than {MAX_SWEEP_COLUMNS} columns"
        )
    out = []
    bound = min(graph.vertex_count, len(columns), t_max)
    for t in range(1, bound + 1):
        for cols in combinations(columns, t):
            for rows in combinations(range(graph.vertex_count), t):
                det = naive_minor_determinant(rows, cols)
                if det.is_binomial:
                    out.append((rows, tuple(c.index for c in cols), det))
    return out


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def naive_minor_determinant(
    rows: Sequence[int], cols: Sequence[LinearColumn]
) -> TPolynomial:
    """Determinant by summing over all permutations; reference only."""
    t = len(rows)
    if len(cols) != t:
        raise ValueError("determinant needs a square selection")
    total = TPolynomial.zero()
    for perm in permutations(range(t)):
        coeff = _permutation_sign(perm)
        edges = []
        for j, col in enumerate(cols):
            entry = col.entry_at(rows[perm[j]])
            if entry is None:
                break
            edge, sign = entry
            edges.append(edge)
            coeff *= sign
        else:
            total = total + TPolynomial.term(TMonomial.from_edges(edges), coeff)
    return total
