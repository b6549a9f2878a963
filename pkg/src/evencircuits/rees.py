"""Nonlinear defining equations of the Rees algebra of an edge ideal.

Every nonlinear generator is the alternating-product binomial of a
primitive even closed walk; enumeration therefore delegates to the walk
engine under a mandatory degree bound.  Binomial minors that are not
themselves walk binomials factor through a block decomposition into a
monomial part and chain-form binomial blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    LinearColumn,
    TPolynomial,
    minor_determinant,
    taylor_linear_columns,
    theta_image_is_zero,
)
from .engine import enumerate_primitive_even_walks
from .graphs import Circuit, Graph
from .minors import NOT_BINOMIAL, Rejection

ZERO_DETERMINANT = "zero_determinant"


@dataclass(frozen=True)
class ReesGenerator:
    """A walk-type binomial generator: product of the even-position edge
    variables minus the product of the odd-position ones."""

    binomial: TPolynomial = field(compare=False)
    walk: Circuit
    degree: int


def rees_nonlinear_generators(
    graph: Graph, max_degree: int, workers: int = 1
) -> list[ReesGenerator]:
    """Generators of T-degree 2..max_degree, one per primitive even walk."""
    if max_degree is None or max_degree < 2:
        raise ValueError("max_degree must be an integer >= 2")
    out = []
    for cert in enumerate_primitive_even_walks(graph, 2 * max_degree, workers=workers):
        gen = ReesGenerator(
            binomial=cert.determinant, walk=cert.circuit, degree=len(cert.cols)
        )
        out.append(gen)
    return out


def verify_in_J(p: TPolynomial, graph: Graph) -> bool:
    """Exact membership of p in the defining ideal: its image under
    T_i -> f_i * t must vanish."""
    return theta_image_is_zero(p, graph)


@dataclass(frozen=True)
class LinearSyzygy:
    """A linear generator x_plus*T_plus_edge - x_minus*T_minus_edge of the
    defining ideal, read off one column of the dual."""

    column: int
    plus_vertex: int
    plus_edge: int
    minus_vertex: int
    minus_edge: int


def linear_syzygies(graph: Graph) -> list[LinearSyzygy]:
    out = []
    for col in taylor_linear_columns(graph):
        if col.sign_a > 0:
            plus, minus = (col.row_a, col.edge_a), (col.row_b, col.edge_b)
        else:
            plus, minus = (col.row_b, col.edge_b), (col.row_a, col.edge_a)
        out.append(LinearSyzygy(col.index, plus[0], plus[1], minus[0], minus[1]))
    return out


@dataclass(frozen=True)
class Block:
    kind: str  # "monomial" | "binomial"
    rows: tuple[int, ...]
    cols: tuple[int, ...]  # column indices
    determinant: TPolynomial = field(compare=False)


@dataclass(frozen=True)
class BlockDecomposition:
    """Row/column rearrangement splitting a selection into diagonal blocks
    whose determinants multiply to the selection's determinant up to sign."""

    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    blocks: tuple[Block, ...]
    determinant: TPolynomial = field(compare=False)

    def block_product(self) -> TPolynomial:
        prod = TPolynomial.one()
        for b in self.blocks:
            prod = prod * b.determinant
        return prod


def block_decompose(
    rows: Sequence[int], cols: Sequence[LinearColumn]
) -> BlockDecomposition | Rejection:
    """Decompose a binomial-determinant selection per the rearrangement rule:
    repeatedly peel rows/columns with a single usable entry into 1x1
    monomial blocks, then read the 2-regular remainder as closed chains."""
    rows_t = tuple(sorted(rows))
    cols_t = tuple(sorted(cols, key=lambda c: c.index))
    det = minor_determinant(rows_t, cols_t)
    if det.is_zero:
        return Rejection(ZERO_DETERMINANT)
    if not det.is_binomial:
        return Rejection(NOT_BINOMIAL, f"determinant is {det}")

    active_rows = set(rows_t)
    active_cols: dict[int, LinearColumn] = {c.index: c for c in cols_t}
    blocks: list[Block] = []
    row_order: list[int] = []
    col_order: list[int] = []

    def entries_in_row(r: int) -> list[LinearColumn]:
        return [c for c in active_cols.values() if c.entry_at(r) is not None]

    def live_rows_of(c: LinearColumn) -> list[int]:
        return [r for r in (c.row_a, c.row_b) if r in active_rows]

    def peel(r: int, c: LinearColumn) -> None:
        edge, sign = c.entry_at(r)
        blocks.append(
            Block("monomial", (r,), (c.index,), TPolynomial.variable(edge, sign))
        )
        row_order.append(r)
        col_order.append(c.index)
        active_rows.discard(r)
        del active_cols[c.index]

    changed = True
    while changed:
        changed = False
        for r in sorted(active_rows):
            found = entries_in_row(r)
            if len(found) == 1:
                peel(r, found[0])
                changed = True
                break
        else:
            for idx in sorted(active_cols):
                c = active_cols[idx]
                live = live_rows_of(c)
                if len(live) == 1:
                    peel(live[0], c)
                    changed = True
                    break

    # remainder is 2-regular: disjoint closed chains
    remaining = sorted(active_rows)
    incident: dict[int, list[LinearColumn]] = {r: [] for r in remaining}
    for c in active_cols.values():
        for r in live_rows_of(c):
            incident[r].append(c)
    for r, found in incident.items():
        if len(found) != 2:
            raise AssertionError("nonzero-determinant remainder is not 2-regular")
        found.sort(key=lambda c: c.index)
    seen_rows: set[int] = set()
    for start in remaining:
        if start in seen_rows:
            continue
        chain_rows: list[int] = []
        chain_cols: list[LinearColumn] = []
        cur = start
        col = incident[start][0]
        while True:
            chain_rows.append(cur)
            chain_cols.append(col)
            seen_rows.add(cur)
            cur = col.other_row(cur)
            if cur == start:
                break
            first, second = incident[cur]
            col = second if first is col else first
        block_det = minor_determinant(chain_rows, chain_cols)
        blocks.append(
            Block(
                "binomial",
                tuple(chain_rows),
                tuple(c.index for c in chain_cols),
                block_det,
            )
        )
        row_order.extend(chain_rows)
        col_order.extend(c.index for c in chain_cols)

    decomposition = BlockDecomposition(
        tuple(row_order), tuple(col_order), tuple(blocks), det
    )
    if not decomposition.block_product().equal_up_to_sign(det):
        raise AssertionError("block determinants do not multiply to the minor")
    return decomposition
