"""Certification of square submatrices of the reduced Jacobian dual.

A selection of rows and columns certifies a structure when its determinant
is a binomial with the right shape:

* indecomposable even circuit: monomials square-free and relatively prime,
  columns pairwise center-distinct;
* even cycle: additionally the row vertices and column midpoints are all
  pairwise distinct;
* directed cycle (on a bipartite lift): additionally one monomial is a
  product of perfect-matching variables;
* primitive even closed walk: binomial in single-chain form with
  center-distinct columns, square-freeness not required.

A 1x1 selection is always a monomial, so it can never certify anything;
the smallest certificates are 2x2.  Rejections carry the first failed
condition as a reason string.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import LinearColumn, TPolynomial, minor_determinant
from .graphs import BipartiteLift, Circuit, Graph, canonicalize_circuit

NOT_BINOMIAL = "not_binomial"
NOT_SQUARE_FREE = "not_square_free"
NOT_COPRIME = "not_coprime"
NOT_CENTER_DISTINCT = "not_center_distinct"
ROW_MIDPOINT_COLLISION = "row_midpoint_collision"
NO_MATCHING_SIDE = "no_matching_side"
NOT_CHAIN_FORM = "not_chain_form"

KIND_CIRCUIT = "indecomposable_even_circuit"
KIND_CYCLE = "even_cycle"
KIND_DIRECTED = "directed_cycle"
KIND_WALK = "primitive_even_walk"


@dataclass(frozen=True)
class Rejection:
    """A failed certification together with the first violated condition."""

    reason: str
    detail: str = ""


@dataclass(frozen=True)
class BinomialShape:
    square_free: bool
    coprime: bool


def classify_binomial(p: TPolynomial) -> BinomialShape | None:
    """Shape of a binomial: None unless p has exactly two terms."""
    if not p.is_binomial:
        return None
    (m1, _), (m2, _) = p.binomial_terms()
    square_free = m1.is_squarefree and m2.is_squarefree
    coprime = not (m1.support & m2.support)
    return BinomialShape(square_free=square_free, coprime=coprime)


def is_center_distinct(cols: Sequence[LinearColumn]) -> bool:
    mids = [c.midpoint for c in cols]
    return len(set(mids)) == len(mids)


@dataclass(frozen=True)
class MinorCertificate:
    """An accepted submatrix together with the structure it certifies."""

    kind: str
    rows: tuple[int, ...]  # vertex indices, ascending
    cols: tuple[int, ...]  # column indices, ascending
    midpoints: tuple[int, ...]  # aligned with cols
    determinant: TPolynomial = field(compare=False)
    circuit: Circuit
    directed_cycle: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def sort_key(self) -> tuple:
        return (self.circuit.sort_key, self.rows, self.cols)


def _normalize_selection(
    rows: Sequence[int], cols: Sequence[LinearColumn]
) -> tuple[tuple[int, ...], tuple[LinearColumn, ...]]:
    rows_t = tuple(sorted(rows))
    cols_t = tuple(sorted(cols, key=lambda c: c.index))
    if len(rows_t) != len(cols_t):
        raise ValueError("certification needs a square selection")
    if not rows_t:
        raise ValueError("certification needs at least one row and column")
    if len(set(rows_t)) != len(rows_t):
        raise ValueError("repeated row in selection")
    if len({c.index for c in cols_t}) != len(cols_t):
        raise ValueError("repeated column in selection")
    return rows_t, cols_t


def _chain_walk(
    graph: Graph, rows: tuple[int, ...], cols: tuple[LinearColumn, ...]
) -> Circuit | None:
    """Reconstruct the closed walk of a single-chain selection.

    Accepted selections have exactly two entries per row and column and a
    single connected cycle through them; returns None when the selection is
    not of that form.  Traversal starts at the least row vertex toward the
    incident column with the smaller index; the result is canonical anyway.
    """
    rowset = set(rows)
    incident: dict[int, list[LinearColumn]] = {r: [] for r in rows}
    for col in cols:
        if col.row_a not in rowset or col.row_b not in rowset:
            return None
        incident[col.row_a].append(col)
        incident[col.row_b].append(col)
    if any(len(entry) != 2 for entry in incident.values()):
        return None
    for entry in incident.values():
        entry.sort(key=lambda c: c.index)
    start = rows[0]
    col = incident[start][0]
    verts: list[int] = []
    edges: list[int] = []
    cur = start
    seen: set[int] = set()
    for _ in range(len(cols)):
        if col.index in seen:
            return None
        seen.add(col.index)
        nxt = col.other_row(cur)
        verts.extend((cur, col.midpoint))
        edges.extend((col.edge_incident_to(cur), col.edge_incident_to(nxt)))
        first, second = incident[nxt]
        col = second if first is col else first
        cur = nxt
    if cur != start or len(seen) != len(cols):
        return None
    return canonicalize_circuit(graph, edges, verts)


def _certify_even_structure(
    graph: Graph,
    rows: Sequence[int],
    cols: Sequence[LinearColumn],
    *,
    rows_disjoint_from_midpoints: bool,
):
    rows_t, cols_t = _normalize_selection(rows, cols)
    det = minor_determinant(rows_t, cols_t)
    shape = classify_binomial(det)
    if shape is None:
        return Rejection(NOT_BINOMIAL, f"determinant is {det}")
    if not shape.square_free:
        return Rejection(NOT_SQUARE_FREE, f"determinant is {det}")
    if not shape.coprime:
        return Rejection(NOT_COPRIME, f"determinant is {det}")
    mids = tuple(c.midpoint for c in cols_t)
    if len(set(mids)) != len(mids):
        return Rejection(
            NOT_CENTER_DISTINCT,
            "midpoints " + ", ".join(graph.name(m) for m in mids),
        )
    if rows_disjoint_from_midpoints:
        shared = set(mids) & set(rows_t)
        if shared:
            names = ", ".join(graph.name(v) for v in sorted(shared))
            return Rejection(ROW_MIDPOINT_COLLISION, f"repeated vertex {names}")
    circuit = _chain_walk(graph, rows_t, cols_t)
    if circuit is None:
        # unreachable for binomial square-free coprime selections
        raise AssertionError("accepted selection is not a single chain")
    return rows_t, cols_t, mids, det, circuit


def certify_circuit_minor(
    graph: Graph, rows: Sequence[int], cols: Sequence[LinearColumn]
) -> MinorCertificate | Rejection:
    """Certify an indecomposable even circuit, or say which condition fails."""
    got = _certify_even_structure(graph, rows, cols, rows_disjoint_from_midpoints=False)
    if isinstance(got, Rejection):
        return got
    rows_t, cols_t, mids, det, circuit = got
    assert circuit.is_indecomposable
    return MinorCertificate(
        kind=KIND_CIRCUIT,
        rows=rows_t,
        cols=tuple(c.index for c in cols_t),
        midpoints=mids,
        determinant=det,
        circuit=circuit,
    )


def certify_cycle_minor(
    graph: Graph, rows: Sequence[int], cols: Sequence[LinearColumn]
) -> MinorCertificate | Rejection:
    """Certify an even cycle: rows and midpoints must be pairwise distinct."""
    got = _certify_even_structure(graph, rows, cols, rows_disjoint_from_midpoints=True)
    if isinstance(got, Rejection):
        return got
    rows_t, cols_t, mids, det, circuit = got
    assert circuit.is_cycle and circuit.is_even
    return MinorCertificate(
        kind=KIND_CYCLE,
        rows=rows_t,
        cols=tuple(c.index for c in cols_t),
        midpoints=mids,
        determinant=det,
        circuit=circuit,
    )


def matching_side_split(lift: BipartiteLift, det: TPolynomial):
    """Split a binomial into (matching monomial, arc monomial), or None."""
    (m_pos, _), (m_neg, _) = det.binomial_terms()
    matching = lift.matching_set
    if m_pos.support <= matching:
        return m_pos, m_neg
    if m_neg.support <= matching:
        return m_neg, m_pos
    return None


def directed_cycle_from_arcs(lift: BipartiteLift, arc_monomial) -> tuple[int, ...]:
    """Chain the arcs named by a square-free arc-side monomial into a cycle,
    rotated to start at the least digraph vertex."""
    arcs = [lift.arc_map[e] for e in arc_monomial.edge_list()]
    next_of = {t: h for t, h in arcs}
    heads = {h for _, h in arcs}
    if len(next_of) != len(arcs) or len(heads) != len(arcs):
        raise AssertionError("arc side does not chain into a single cycle")
    start = min(next_of)
    seq = [start]
    cur = next_of[start]
    while cur != start:
        seq.append(cur)
        cur = next_of[cur]
    if len(seq) != len(arcs):
        raise AssertionError("arc side does not chain into a single cycle")
    return tuple(seq)


def certify_directed_minor(
    lift: BipartiteLift, rows: Sequence[int], cols: Sequence[LinearColumn]
) -> MinorCertificate | Rejection:
    """Certify a directed cycle of the lifted digraph.

    On top of the circuit conditions, one monomial of the determinant must
    use only perfect-matching variables; the other monomial names the arcs
    of the directed cycle.
    """
    got = _certify_even_structure(
        lift.graph, rows, cols, rows_disjoint_from_midpoints=False
    )
    if isinstance(got, Rejection):
        return got
    rows_t, cols_t, mids, det, circuit = got
    split = matching_side_split(lift, det)
    if split is None:
        return Rejection(NO_MATCHING_SIDE, f"determinant is {det}")
    _, arc_side = split
    directed = directed_cycle_from_arcs(lift, arc_side)
    assert circuit.is_cycle and circuit.is_even
    return MinorCertificate(
        kind=KIND_DIRECTED,
        rows=rows_t,
        cols=tuple(c.index for c in cols_t),
        midpoints=mids,
        determinant=det,
        circuit=circuit,
        directed_cycle=directed,
    )


def certify_walk_minor(
    graph: Graph, rows: Sequence[int], cols: Sequence[LinearColumn]
) -> MinorCertificate | Rejection:
    """Certify a primitive even closed walk.

    The selection must be a single chain with center-distinct columns and a
    nonzero binomial determinant; edges may repeat, so square-freeness and
    coprimality are not required.
    """
    rows_t, cols_t = _normalize_selection(rows, cols)
    circuit = _chain_walk(graph, rows_t, cols_t)
    if circuit is None:
        return Rejection(NOT_CHAIN_FORM, "selection is not a single closed chain")
    det = minor_determinant(rows_t, cols_t)
    if not det.is_binomial:
        return Rejection(NOT_BINOMIAL, f"determinant is {det}")
    mids = tuple(c.midpoint for c in cols_t)
    if len(set(mids)) != len(mids):
        return Rejection(
            NOT_CENTER_DISTINCT,
            "midpoints " + ", ".join(graph.name(m) for m in mids),
        )
    assert circuit.is_primitive_walk
    return MinorCertificate(
        kind=KIND_WALK,
        rows=rows_t,
        cols=tuple(c.index for c in cols_t),
        midpoints=mids,
        determinant=det,
        circuit=circuit,
    )
