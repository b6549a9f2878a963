"""Enumeration engine over the column multigraph.

Instead of iterating every square submatrix, valid certificates are (up to
permutation) single closed chains of linear columns, so the search walks
simple cycles in the multigraph whose nodes are vertices and whose edges
are the columns.  Each closed chain is then certified by the minors
module, and results are deduplicated by the walk's alternating-class
signature: all submatrix selections of one circuit collapse to a single
certificate, the one with the least canonical form.

Search roots are independent, so they can be fanned out to worker threads;
the merged output is sorted canonically and does not depend on scheduling.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from .algebra import LinearColumn, reduced_jacobian_dual
from .graphs import BipartiteLift, Graph
from .minors import (
    MinorCertificate,
    certify_circuit_minor,
    certify_cycle_minor,
    certify_directed_minor,
    certify_walk_minor,
)

_CIRCUIT = "circuit"
_CYCLE = "cycle"
_WALK = "walk"
_DIRECTED = "directed"

Candidate = tuple[tuple[int, ...], tuple[LinearColumn, ...]]


def _even_bound(max_len: int | None, what: str) -> int | None:
    if max_len is None:
        return None
    if max_len < 2 or max_len % 2 != 0:
        raise ValueError(f"{what} length bound must be a positive even number")
    return max_len


def _collect_chains(
    graph: Graph,
    columns: Sequence[LinearColumn],
    mode: str,
    max_t: int,
    matching: frozenset[int] | None,
    workers: int,
) -> list[Candidate]:
    adjacency: dict[int, list[tuple[int, LinearColumn]]] = defaultdict(list)
    for col in columns:
        adjacency[col.row_a].append((col.row_b, col))
        adjacency[col.row_b].append((col.row_a, col))
    for entries in adjacency.values():
        entries.sort(key=lambda p: p[1].index)
    anchors = sorted(adjacency)
    track_edges = mode in (_CIRCUIT, _DIRECTED)

    def run(anchor: int) -> list[Candidate]:
        found: list[Candidate] = []
        path = [anchor]
        chain: list[LinearColumn] = []
        on_path = {anchor}
        used_mids: set[int] = set()
        used_edges: set[int] = set()

        def dfs(cur: int, odd_in_matching: bool, even_in_matching: bool) -> None:
            for nxt, col in adjacency[cur]:
                mid = col.midpoint
                if mid in used_mids:
                    continue
                if track_edges and (col.edge_a in used_edges or col.edge_b in used_edges):
                    continue
                if mode == _CYCLE and (mid in on_path or (nxt != anchor and nxt in used_mids)):
                    continue
                if mode == _DIRECTED:
                    # one alternating class must stay inside the matching
                    e_in = col.edge_incident_to(cur)
                    e_out = col.edge_incident_to(nxt)
                    odd_ok = odd_in_matching and e_in in matching
                    even_ok = even_in_matching and e_out in matching
                    if not odd_ok and not even_ok:
                        continue
                else:
                    odd_ok = even_ok = True
                if nxt == anchor:
                    if chain and chain[0].index < col.index:
                        found.append((tuple(path), tuple(chain) + (col,)))
                    continue
                if nxt in on_path or nxt < anchor:
                    continue
                if len(chain) + 2 > max_t:
                    continue
                path.append(nxt)
                chain.append(col)
                on_path.add(nxt)
                used_mids.add(mid)
                if track_edges:
                    used_edges.update(col.edge_pair)
                dfs(nxt, odd_ok, even_ok)
                path.pop()
                chain.pop()
                on_path.discard(nxt)
                used_mids.discard(mid)
                if track_edges:
                    used_edges.difference_update(col.edge_pair)

        if max_t >= 2:
            dfs(anchor, True, True)
        return found

    if workers > 1 and len(anchors) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, anchors))
    else:
        chunks = [run(a) for a in anchors]
    return [cand for chunk in chunks for cand in chunk]


def _search(
    graph: Graph,
    mode: str,
    max_t: int,
    lift: BipartiteLift | None = None,
    workers: int = 1,
) -> list[MinorCertificate]:
    dual = reduced_jacobian_dual(graph)
    matching = lift.matching_set if lift is not None else None
    certify: Callable[..., MinorCertificate | object]
    if mode == _CIRCUIT:
        certify = lambda rows, cols: certify_circuit_minor(graph, rows, cols)
    elif mode == _CYCLE:
        certify = lambda rows, cols: certify_cycle_minor(graph, rows, cols)
    elif mode == _WALK:
        certify = lambda rows, cols: certify_walk_minor(graph, rows, cols)
    elif mode == _DIRECTED:
        certify = lambda rows, cols: certify_directed_minor(lift, rows, cols)
    else:  # pragma: no cover
        raise ValueError(f"unknown mode {mode}")
    best: dict[tuple, MinorCertificate] = {}
    for rows, cols in _collect_chains(graph, dual.columns, mode, max_t, matching, workers):
        cert = certify(rows, cols)
        if not isinstance(cert, MinorCertificate):
            continue
        key = cert.circuit.signature
        held = best.get(key)
        if held is None or cert.sort_key < held.sort_key:
            best[key] = cert
    return sorted(best.values(), key=lambda c: c.sort_key)


def enumerate_indecomposable_even_circuits(
    graph: Graph, max_len: int | None = None, workers: int = 1
) -> list[MinorCertificate]:
    """All indecomposable even circuits, one certificate each.

    `max_len`, when given, bounds the circuit length and must be even; the
    search is otherwise bounded by the vertex and edge counts.
    """
    bound = _even_bound(max_len, "circuit")
    max_t = min(graph.vertex_count, graph.edge_count // 2)
    if bound is not None:
        max_t = min(max_t, bound // 2)
    return _search(graph, _CIRCUIT, max_t, workers=workers)


def enumerate_even_cycles(
    graph: Graph, max_len: int | None = None, workers: int = 1
) -> list[MinorCertificate]:
    """All even cycles, one certificate each."""
    bound = _even_bound(max_len, "cycle")
    max_t = min(graph.vertex_count // 2, graph.edge_count // 2)
    if bound is not None:
        max_t = min(max_t, bound // 2)
    return _search(graph, _CYCLE, max_t, workers=workers)


def enumerate_primitive_even_walks(
    graph: Graph, max_len: int, workers: int = 1
) -> list[MinorCertificate]:
    """All primitive even closed walks of length at most `max_len`.

    The bound is mandatory: edges may repeat, so walk counts have no
    natural cap.
    """
    if max_len is None:
        raise ValueError("primitive walk enumeration requires an even length bound")
    bound = _even_bound(max_len, "walk")
    max_t = min(graph.vertex_count, bound // 2)
    return _search(graph, _WALK, max_t, workers=workers)


def enumerate_directed_minor_certificates(
    lift: BipartiteLift, max_cycle_len: int | None = None, workers: int = 1
) -> list[MinorCertificate]:
    """Directed-cycle certificates of a lift; `max_cycle_len` bounds the
    directed cycle length (t), i.e. the minor order."""
    m = lift.digraph.vertex_count
    max_t = m if max_cycle_len is None else min(m, max_cycle_len)
    return _search(lift.graph, _DIRECTED, max_t, lift=lift, workers=workers)
