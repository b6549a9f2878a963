"""Directed-cycle enumeration through the bipartite lift, and the
Caccetta-Haggkvist probe."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .engine import enumerate_directed_minor_certificates, enumerate_even_cycles
from .graphs import BipartiteLift, Digraph, build_lift
from .minors import (
    MinorCertificate,
    directed_cycle_from_arcs,
    matching_side_split,
)


@dataclass(frozen=True)
class DirectedCycle:
    """A directed cycle, canonical up to rotation (not reversal)."""

    vertices: tuple[int, ...]  # digraph vertex indices, least vertex first
    certificate: MinorCertificate | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def sort_key(self) -> tuple:
        return (len(self.vertices), self.vertices)

    def vertex_names(self, d: Digraph) -> tuple[str, ...]:
        return tuple(d.name(v) for v in self.vertices)


def enumerate_directed_cycles(
    d: Digraph, max_len: int | None = None, workers: int = 1
) -> list[DirectedCycle]:
    """All directed cycles of length at most `max_len` (default: all).

    Each directed cycle of length t is certified by a binomial t x t minor
    of the lift's reduced Jacobian dual whose matching-side monomial lies in
    the canonical perfect matching.
    """
    lift = build_lift(d)
    certs = enumerate_directed_minor_certificates(lift, max_len, workers=workers)
    cycles = [DirectedCycle(c.directed_cycle, c) for c in certs]
    return sorted(cycles, key=lambda c: c.sort_key)


def directed_cycles_from_even_cycles(
    lift: BipartiteLift, max_len: int | None = None
) -> list[DirectedCycle]:
    """Alternative pipeline: enumerate even cycles of the lift, keep those
    with an alternating class inside the matching.  Must agree with
    enumerate_directed_cycles; used as an internal cross-check."""
    m = lift.digraph.vertex_count
    max_t = m if max_len is None else min(m, max_len)
    if max_t < 2:
        return []
    cycles = []
    for cert in enumerate_even_cycles(lift.graph, max_len=2 * max_t):
        split = matching_side_split(lift, cert.determinant)
        if split is None:
            continue
        _, arc_side = split
        cycles.append(DirectedCycle(directed_cycle_from_arcs(lift, arc_side), cert))
    return sorted(cycles, key=lambda c: c.sort_key)


@dataclass(frozen=True)
class CHReport:
    """Outcome of one Caccetta-Haggkvist probe.

    premise_holds is the exact rational test min outdegree >= n/ell; the
    report is inconsistent when the premise holds but no directed cycle of
    length at most ell exists.
    """

    n: int
    ell: int
    min_outdegree: int | None
    premise_holds: bool
    witness: DirectedCycle | None
    conjecture_consistent: bool


def ch_probe(d: Digraph, ell: int, workers: int = 1) -> CHReport:
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    n = d.vertex_count
    if n == 0:
        # no vertices: the premise is vacuous and carries no content
        return CHReport(0, ell, None, False, None, True)
    min_out = min(d.outdegrees())
    premise = Fraction(min_out) >= Fraction(n, ell)
    cycles = enumerate_directed_cycles(d, max_len=ell, workers=workers)
    witness = cycles[0] if cycles else None
    return CHReport(
        n=n,
        ell=ell,
        min_outdegree=min_out,
        premise_holds=premise,
        witness=witness,
        conjecture_consistent=(not premise) or witness is not None,
    )


@dataclass(frozen=True)
class CHSweepReport:
    n: int
    ell: int
    mode: str  # "exhaustive" | "sampled"
    seed: int | None
    total: int
    premise_count: int
    witness_count: int
    inconsistent: tuple[tuple[tuple[int, int], ...], ...]  # arc sets of failures

    @property
    def consistent(self) -> bool:
        return not self.inconsistent


_EXHAUSTIVE_LIMIT = 4  # 2^(n(n-1)) digraphs; n=5 already needs sampling


def ch_sweep(
    n: int,
    ell: int,
    *,
    exhaustive: bool = False,
    samples: int = 200,
    seed: int = 0,
    workers: int = 1,
) -> CHSweepReport:
    """Probe every digraph on n vertices (exhaustive) or a random sample."""
    if n < 0 or ell < 1:
        raise ValueError("need n >= 0 and ell >= 1")
    names = tuple(f"z{i + 1}" for i in range(n))
    pairs = [(t, h) for t, h in permutations(range(n), 2)]

    def probe_arcs(arcs: tuple[tuple[int, int], ...]):
        return ch_probe(Digraph(names, arcs), ell, workers=workers)

    total = premise_count = witness_count = 0
    inconsistent: list[tuple[tuple[int, int], ...]] = []

    if exhaustive:
        if n > _EXHAUSTIVE_LIMIT:
            raise ValueError(
                f"exhaustive sweep is limited to n <= {_EXHAUSTIVE_LIMIT}; use sampling"
            )
        arc_sets = (
            tuple(p for p, keep in zip(pairs, mask) if keep)
            for mask in product((False, True), repeat=len(pairs))
        )
        mode = "exhaustive"
        used_seed = None
    else:
        rng = random.Random(seed)

        def sampled():
            for _ in range(samples):
                density = rng.random()
                yield tuple(p for p in pairs if rng.random() < density)

        arc_sets = sampled()
        mode = "sampled"
        used_seed = seed

    for arcs in arc_sets:
        report = probe_arcs(arcs)
        total += 1
        if report.premise_holds:
            premise_count += 1
        if report.witness is not None:
            witness_count += 1
        if not report.conjecture_consistent:
            inconsistent.append(arcs)
    return CHSweepReport(
        n=n,
        ell=ell,
        mode=mode,
        seed=used_seed,
        total=total,
        premise_count=premise_count,
        witness_count=witness_count,
        inconsistent=tuple(inconsistent),
    )
