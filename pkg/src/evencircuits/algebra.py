"""Exact algebra over the edge variables T_1..T_r.

Builds the linear syzygy columns of the edge ideal's Taylor presentation
matrix, assembles the reduced Jacobian dual, and computes exact minors as
integer-coefficient polynomials in the T variables.

Sign convention: for the edge pair (j, k) with j < k sharing a vertex, the
Taylor differential places -(lcm/f_j) on row j and +(lcm/f_k) on row k, so
the syzygy reads  x_a * T_k - x_b * T_j  where x_a, x_b are the endpoints
of the length-2 path away from edges j and k respectively.  Column signs in
the dual follow from this one rule; all binomial predicates downstream are
insensitive to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graphs import Graph


@dataclass(frozen=True)
class TMonomial:
    """Power product of T variables, stored as sorted (edge, exponent) pairs."""

    powers: tuple[tuple[int, int], ...]

    @classmethod
    def one(cls) -> "TMonomial":
        return cls(())

    @classmethod
    def from_edges(cls, edges: Iterable[int]) -> "TMonomial":
        counts: dict[int, int] = {}
        for e in edges:
            counts[e] = counts.get(e, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.powers)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.powers)

    @property
    def is_squarefree(self) -> bool:
        return all(k == 1 for _, k in self.powers)

    def edge_list(self) -> tuple[int, ...]:
        """Edges with multiplicity, ascending."""
        out: list[int] = []
        for e, k in self.powers:
            out.extend([e] * k)
        return tuple(out)

    def __mul__(self, other: "TMonomial") -> "TMonomial":
        counts = dict(self.powers)
        for e, k in other.powers:
            counts[e] = counts.get(e, 0) + k
        return TMonomial(tuple(sorted(counts.items())))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"T{e}" if k == 1 else f"T{e}^{k}" for e, k in self.powers)


class TPolynomial:
    """Polynomial in the T variables with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[TMonomial, int] | None = None):
        self._terms: dict[TMonomial, int] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "TPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "TPolynomial":
        return cls({TMonomial.one(): 1})

    @classmethod
    def term(cls, monomial: TMonomial, coeff: int = 1) -> "TPolynomial":
        return cls({monomial: coeff})

    @classmethod
    def variable(cls, edge: int, coeff: int = 1) -> "TPolynomial":
        return cls({TMonomial.from_edges([edge]): coeff})

    def terms(self) -> list[tuple[TMonomial, int]]:
        return sorted(self._terms.items(), key=lambda t: t[0].powers)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_binomial(self) -> bool:
        return len(self._terms) == 2

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return TPolynomial(out)

    def __neg__(self) -> "TPolynomial":
        return TPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        return self + (-other)

    def __mul__(self, other: "TPolynomial | int") -> "TPolynomial":
        if isinstance(other, int):
            return TPolynomial({m: c * other for m, c in self._terms.items()})
        out: dict[TMonomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return TPolynomial(out)

    __rmul__ = __mul__

    def times_term(self, monomial: TMonomial, coeff: int) -> "TPolynomial":
        return TPolynomial({m * monomial: c * coeff for m, c in self._terms.items()})

    def equal_up_to_sign(self, other: "TPolynomial") -> bool:
        return self == other or self == -other

    def binomial_terms(self) -> tuple[tuple[TMonomial, int], tuple[TMonomial, int]]:
        """The two terms of a binomial, positive-coefficient term first."""
        if len(self._terms) != 2:
            raise ValueError("not a binomial")
        (m1, c1), (m2, c2) = sorted(self._terms.items(), key=lambda t: t[0].powers)
        if c1 > 0 or (c2 > 0 and c1 < 0):
            return ((m1, c1), (m2, c2)) if c1 > 0 else ((m2, c2), (m1, c1))
        return (m1, c1), (m2, c2)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for m, c in self.terms():
            mono = str(m)
            if abs(c) != 1 or mono == "1":
                mono = f"{abs(c)}" if mono == "1" else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(parts)

    __repr__ = __str__


@dataclass(frozen=True)
class LinearColumn:
    """A column of the reduced Jacobian dual, i.e. a length-2 path.

    The two nonzero entries are sign_a*T_edge_a on row_a and
    sign_b*T_edge_b on row_b, with row_a < row_b.  The entry stored at a
    row is the variable of the edge on the *far* side of the path, so the
    edge of the pair actually incident to row_a is edge_b and vice versa.
    """

    index: int  # 1-based position in the dual
    row_a: int
    row_b: int
    midpoint: int
    edge_a: int
    sign_a: int
    edge_b: int
    sign_b: int

    @property
    def edge_pair(self) -> tuple[int, int]:
        return (min(self.edge_a, self.edge_b), max(self.edge_a, self.edge_b))

    @property
    def rows(self) -> tuple[int, int]:
        return (self.row_a, self.row_b)

    def entry_at(self, row: int) -> tuple[int, int] | None:
        """(edge, sign) of the entry on `row`, or None."""
        if row == self.row_a:
            return (self.edge_a, self.sign_a)
        if row == self.row_b:
            return (self.edge_b, self.sign_b)
        return None

    def other_row(self, row: int) -> int:
        if row == self.row_a:
            return self.row_b
        if row == self.row_b:
            return self.row_a
        raise ValueError(f"vertex {row} is not a row of column {self.index}")

    def edge_incident_to(self, row: int) -> int:
        """The edge of the pair containing `row` (and the midpoint)."""
        if row == self.row_a:
            return self.edge_b
        if row == self.row_b:
            return self.edge_a
        raise ValueError(f"vertex {row} is not a row of column {self.index}")


def taylor_linear_columns(graph: Graph) -> list[LinearColumn]:
    """One column per unordered pair of edges sharing a vertex.

    Columns are ordered lexicographically by (min edge index, max edge
    index); signs follow the Taylor differential with the generator order
    given by the edge indices.
    """
    incident: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        incident[v] = []
    for i, (u, v) in enumerate(graph.edges, start=1):
        incident[u].append(i)
        incident[v].append(i)
    pairs = sorted(
        {pair for edges in incident.values() for pair in combinations(edges, 2)}
    )
    columns: list[LinearColumn] = []
    for idx, (j, k) in enumerate(pairs, start=1):
        ju, jv = graph.edge_endpoints(j)
        ku, kv = graph.edge_endpoints(k)
        shared = {ju, jv} & {ku, kv}
        mid = shared.pop()
        far_j = ju + jv - mid
        far_k = ku + kv - mid
        # +T_k lands on far_j, -T_j on far_k
        if far_j < far_k:
            col = LinearColumn(idx, far_j, far_k, mid, k, 1, j, -1)
        else:
            col = LinearColumn(idx, far_k, far_j, mid, j, -1, k, 1)
        columns.append(col)
    return columns


@dataclass(frozen=True)
class ReducedJacobianDual:
    """The nonzero (linear) columns of the reduced Jacobian dual.

    Rows range over all vertices; zero rows are harmless for minors and are
    kept so row indices equal vertex indices.
    """

    n_rows: int
    columns: tuple[LinearColumn, ...]

    def column(self, index: int) -> LinearColumn:
        if not 1 <= index <= len(self.columns):
            raise ValueError(f"column index {index} out of range")
        return self.columns[index - 1]

    def column_by_pair(self, pair: tuple[int, int]) -> LinearColumn:
        key = (min(pair), max(pair))
        for col in self.columns:
            if col.edge_pair == key:
                return col
        raise ValueError(f"no column for edge pair {key}")


def reduced_jacobian_dual(graph: Graph) -> ReducedJacobianDual:
    return ReducedJacobianDual(graph.vertex_count, tuple(taylor_linear_columns(graph)))


def minor_determinant(
    rows: Sequence[int], cols: Sequence[LinearColumn]
) -> TPolynomial:
    """Exact determinant of the submatrix on `rows` x `cols`.

    Row and column order is as given (swapping entries flips the sign).
    Expansion runs column by column, memoised on the remaining row set,
    which is fast because every column has at most two usable entries.
    """
    row_tuple = tuple(rows)
    col_tuple = tuple(cols)
    if len(row_tuple) != len(col_tuple):
        raise ValueError("determinant needs a square selection")
    if len(set(row_tuple)) != len(row_tuple):
        raise ValueError("repeated row in selection")
    if len({c.index for c in col_tuple}) != len(col_tuple):
        raise ValueError("repeated column in selection")
    memo: dict[tuple[tuple[int, ...], int], TPolynomial] = {}

    def expand(remaining: tuple[int, ...], k: int) -> TPolynomial:
        if not remaining:
            return TPolynomial.one()
        key = (remaining, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        col = col_tuple[k]
        total = TPolynomial.zero()
        for row, edge, sign in (
            (col.row_a, col.edge_a, col.sign_a),
            (col.row_b, col.edge_b, col.sign_b),
        ):
            try:
                i = remaining.index(row)
            except ValueError:
                continue
            sub = expand(remaining[:i] + remaining[i + 1 :], k + 1)
            if sub:
                total = total + sub.times_term(
                    TMonomial.from_edges([edge]), sign if i % 2 == 0 else -sign
                )
        memo[key] = total
        return total

    return expand(row_tuple, 0)


def theta_image_is_zero(p: TPolynomial, graph: Graph) -> bool:
    """Whether p vanishes under T_i -> (edge monomial of i) * t.

    Terms are grouped by their image (x-exponent vector, t-degree); p maps
    to zero exactly when every group's coefficients cancel.  This is exact
    membership in the kernel of the Rees presentation.
    """
    acc: dict[tuple[tuple[int, ...], int], int] = {}
    for mono, coeff in p.terms():
        xvec = [0] * graph.vertex_count
        tdeg = 0
        for edge, k in mono.powers:
            u, v = graph.edge_endpoints(edge)
            xvec[u] += k
            xvec[v] += k
            tdeg += k
        key = (tuple(xvec), tdeg)
        acc[key] = acc.get(key, 0) + coeff
    return all(c == 0 for c in acc.values())
