"""Command-line front end with deterministic JSON output.

Exit codes: 0 success (including empty results), 1 usage error, 2 input
error.  JSON output is byte-stable across runs and worker counts: results
are sorted canonically and every object is built with a fixed field order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import TPolynomial, reduced_jacobian_dual
from .dicycles import CHReport, CHSweepReport, ch_probe, ch_sweep, enumerate_directed_cycles
from .engine import (
    enumerate_even_cycles,
    enumerate_indecomposable_even_circuits,
    enumerate_primitive_even_walks,
)
from .graphs import Digraph, Graph, GraphError, parse_digraph, parse_graph
from .minors import MinorCertificate, classify_binomial
from .oracle import (
    OracleSizeError,
    oracle_directed_cycles,
    oracle_even_circuits,
    oracle_even_cycles,
    oracle_submatrix_sweep,
)
from .rees import linear_syzygies, rees_nonlinear_generators


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _monomial_labels(mono) -> list[str]:
    return [f"T{e}" for e in mono.edge_list()]


def _binomial_obj(det: TPolynomial) -> dict:
    (m_plus, c_plus), (m_minus, c_minus) = det.binomial_terms()
    if {c_plus, c_minus} != {1, -1}:
        raise AssertionError("certified binomial must have unit coefficients")
    return {"plus": _monomial_labels(m_plus), "minus": _monomial_labels(m_minus)}


def _binomial_str(det: TPolynomial) -> str:
    (m_plus, _), (m_minus, _) = det.binomial_terms()
    return f"{m_plus} - {m_minus}"


def _cert_obj(graph: Graph, cert: MinorCertificate) -> dict:
    shape = classify_binomial(cert.determinant)
    obj = {
        "kind": cert.kind,
        "rows": [graph.name(v) for v in cert.rows],
        "cols": list(cert.cols),
        "midpoints": [graph.name(v) for v in cert.midpoints],
        "binomial": _binomial_obj(cert.determinant),
        "square_free": shape.square_free,
        "circuit": {
            "vertices": list(cert.circuit.vertex_names(graph)),
            "edges": list(cert.circuit.edges),
        },
    }
    if cert.directed_cycle is not None:
        obj["directed_cycle"] = [f"z{i + 1}" for i in cert.directed_cycle]
    return obj


def _cert_line(graph: Graph, cert: MinorCertificate) -> str:
    verts = ", ".join(cert.circuit.vertex_names(graph))
    return f"{verts}    {_binomial_str(cert.determinant)}"


def _probe_obj(d: Digraph, report: CHReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = [d.name(v) for v in report.witness.vertices]
    return {
        "n": report.n,
        "ell": report.ell,
        "min_outdegree": report.min_outdegree,
        "premise_holds": report.premise_holds,
        "witness": witness,
        "conjecture_consistent": report.conjecture_consistent,
    }


def _sweep_obj(report: CHSweepReport) -> dict:
    return {
        "n": report.n,
        "ell": report.ell,
        "mode": report.mode,
        "seed": report.seed,
        "total": report.total,
        "premise_count": report.premise_count,
        "witness_count": report.witness_count,
        "inconsistent": [
            [[t + 1, h + 1] for t, h in arcs] for arcs in report.inconsistent
        ],
        "consistent": report.consistent,
    }


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _even_or_usage(parser: _Parser, value: int | None, flag: str) -> int | None:
    if value is not None and (value < 2 or value % 2 != 0):
        parser.error(f"{flag} must be a positive even number")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="evencircuits",
        description=(
            "Detect indecomposable even circuits, even cycles and directed "
            "cycles through binomial minors of the reduced Jacobian dual, "
            "and extract Rees algebra equations of edge ideals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, max_len=False, workers=False):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if max_len:
            p.add_argument("--max-len", type=int, default=None, metavar="L")
        if workers:
            p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("jacobian", help="dump the reduced Jacobian dual")
    p.add_argument("graph_file")
    add_common(p)

    for name, help_text in (
        ("circuits", "enumerate indecomposable even circuits"),
        ("cycles", "enumerate even cycles"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph_file")
        add_common(p, max_len=True, workers=True)

    p = sub.add_parser("walks", help="enumerate primitive even closed walks")
    p.add_argument("graph_file")
    p.add_argument("--max-len", type=int, required=True, metavar="L")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("digraph-cycles", help="enumerate directed cycles")
    p.add_argument("digraph_file")
    p.add_argument("--max-len", type=int, default=None, metavar="L")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("ch-probe", help="Caccetta-Haggkvist probe of one digraph")
    p.add_argument("digraph_file")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("ch-sweep", help="Caccetta-Haggkvist sweep over digraphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int, default=None, metavar="S")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("rees", help="nonlinear Rees algebra generators")
    p.add_argument("graph_file")
    p.add_argument("--max-degree", type=int, required=True, metavar="K")
    p.add_argument("--with-linear", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, metavar="N")

    p = sub.add_parser("oracle", help="brute-force reference searches")
    p.add_argument("mode", choices=("circuits", "cycles", "dicycles", "sweep"))
    p.add_argument("input_file")
    p.add_argument("--json", action="store_true")
    return parser


def _run_jacobian(args) -> int:
    graph = parse_graph(_read_text(args.graph_file))
    dual = reduced_jacobian_dual(graph)
    if args.json:
        _emit_json(
            {
                "n_rows": dual.n_rows,
                "rows": list(graph.names),
                # only the uniquely determined linear syzygy columns are
                # dumped; quadratic Koszul columns vanish in the reduced dual
                # and admit more than one lift, so they are omitted
                "columns_note": "linear syzygy columns only",
                "columns": [
                    {
                        "index": c.index,
                        "row_a": graph.name(c.row_a),
                        "row_b": graph.name(c.row_b),
                        "midpoint": graph.name(c.midpoint),
                        "t_a": c.edge_a,
                        "sign_a": c.sign_a,
                        "t_b": c.edge_b,
                        "sign_b": c.sign_b,
                    }
                    for c in dual.columns
                ],
            }
        )
        return 0
    if not dual.columns:
        print("(no linear columns)")
        return 0
    width = max(
        5, max(len(f"-T{c.edge_a}") for c in dual.columns) + 1, len("col") + 3
    )
    header = "".join(f"c{c.index}".rjust(width) for c in dual.columns)
    name_pad = max((len(n) for n in graph.names), default=0) + 2
    print(" " * name_pad + header)
    for v in range(graph.vertex_count):
        cells = []
        for c in dual.columns:
            entry = c.entry_at(v)
            if entry is None:
                cells.append(".".rjust(width))
            else:
                edge, sign = entry
                cells.append(f"{'+' if sign > 0 else '-'}T{edge}".rjust(width))
        print(graph.name(v).ljust(name_pad) + "".join(cells))
    mids = " ".join(graph.name(c.midpoint) for c in dual.columns)
    print(f"midpoints: {mids}")
    print("(linear syzygy columns only)")
    return 0


def _run_enumeration(args, kind: str) -> int:
    graph = parse_graph(_read_text(args.graph_file))
    if kind == "circuits":
        certs = enumerate_indecomposable_even_circuits(
            graph, max_len=args.max_len, workers=args.workers
        )
    elif kind == "cycles":
        certs = enumerate_even_cycles(graph, max_len=args.max_len, workers=args.workers)
    else:
        certs = enumerate_primitive_even_walks(
            graph, max_len=args.max_len, workers=args.workers
        )
    if args.json:
        _emit_json([_cert_obj(graph, c) for c in certs])
    else:
        for cert in certs:
            print(_cert_line(graph, cert))
    return 0


def _run_digraph_cycles(args) -> int:
    d = parse_digraph(_read_text(args.digraph_file))
    cycles = enumerate_directed_cycles(d, max_len=args.max_len, workers=args.workers)
    if args.json:
        _emit_json(
            [
                {
                    "vertices": [d.name(v) for v in c.vertices],
                    "length": c.length,
                    "binomial": _binomial_obj(c.certificate.determinant),
                }
                for c in cycles
            ]
        )
    else:
        for c in cycles:
            chain = " -> ".join(d.name(v) for v in c.vertices)
            print(f"{chain} -> {d.name(c.vertices[0])}")
    return 0


def _run_ch_probe(args, parser: _Parser) -> int:
    if args.ell < 1:
        parser.error("--ell must be a positive integer")
    d = parse_digraph(_read_text(args.digraph_file))
    report = ch_probe(d, args.ell, workers=args.workers)
    if args.json:
        _emit_json(_probe_obj(d, report))
    else:
        witness = "none"
        if report.witness is not None:
            witness = "->".join(d.name(v) for v in report.witness.vertices)
        print(
            f"n={report.n} ell={report.ell} min_outdegree={report.min_outdegree} "
            f"premise={str(report.premise_holds).lower()} witness={witness} "
            f"consistent={str(report.conjecture_consistent).lower()}"
        )
    return 0


def _run_ch_sweep(args, parser: _Parser) -> int:
    if args.samples is not None and args.samples < 1:
        parser.error("--samples must be positive")
    try:
        report = ch_sweep(
            args.n,
            args.ell,
            exhaustive=args.exhaustive,
            samples=args.samples if args.samples is not None else 200,
            seed=args.seed,
            workers=args.workers,
        )
    except ValueError as exc:
        parser.error(str(exc))
    if args.json:
        _emit_json(_sweep_obj(report))
    else:
        print(
            f"n={report.n} ell={report.ell} mode={report.mode} total={report.total} "
            f"premise={report.premise_count} witnesses={report.witness_count} "
            f"inconsistent={len(report.inconsistent)}"
        )
    return 0


def _run_rees(args, parser: _Parser) -> int:
    if args.max_degree < 2:
        parser.error("--max-degree must be at least 2")
    graph = parse_graph(_read_text(args.graph_file))
    gens = rees_nonlinear_generators(graph, args.max_degree, workers=args.workers)
    gen_objs = [
        {
            "degree": g.degree,
            "binomial": _binomial_obj(g.binomial),
            "walk": {
                "vertices": list(g.walk.vertex_names(graph)),
                "edges": list(g.walk.edges),
            },
        }
        for g in gens
    ]
    if args.json:
        if args.with_linear:
            linear = [
                {
                    "column": s.column,
                    "plus_vertex": graph.name(s.plus_vertex),
                    "plus_edge": s.plus_edge,
                    "minus_vertex": graph.name(s.minus_vertex),
                    "minus_edge": s.minus_edge,
                }
                for s in linear_syzygies(graph)
            ]
            _emit_json({"generators": gen_objs, "linear": linear})
        else:
            _emit_json(gen_objs)
    else:
        for g in gens:
            verts = ", ".join(g.walk.vertex_names(graph))
            print(f"deg {g.degree}: {_binomial_str(g.binomial)}    (walk: {verts})")
        if args.with_linear:
            for s in linear_syzygies(graph):
                print(
                    f"linear c{s.column}: {graph.name(s.plus_vertex)}*T{s.plus_edge}"
                    f" - {graph.name(s.minus_vertex)}*T{s.minus_edge}"
                )
    return 0


def _run_oracle(args) -> int:
    text = _read_text(args.input_file)
    if args.mode == "dicycles":
        d = parse_digraph(text)
        cycles = oracle_directed_cycles(d)
        if args.json:
            _emit_json(
                [{"vertices": [d.name(v) for v in c.vertices]} for c in cycles]
            )
        else:
            for c in cycles:
                print(" -> ".join(d.name(v) for v in c.vertices))
        return 0
    graph = parse_graph(text)
    if args.mode == "sweep":
        certs = oracle_submatrix_sweep(graph)
        if args.json:
            _emit_json([_cert_obj(graph, c) for c in certs])
        else:
            for cert in certs:
                print(_cert_line(graph, cert))
        return 0
    finder = oracle_even_circuits if args.mode == "circuits" else oracle_even_cycles
    circuits = finder(graph)
    if args.json:
        _emit_json(
            [
                {
                    "vertices": list(c.vertex_names(graph)),
                    "edges": list(c.edges),
                }
                for c in circuits
            ]
        )
    else:
        for c in circuits:
            print(", ".join(c.vertex_names(graph)))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.command == "jacobian":
            return _run_jacobian(args)
        if args.command in ("circuits", "cycles", "walks"):
            if args.command != "walks":
                _even_or_usage(parser, args.max_len, "--max-len")
            elif args.max_len < 2 or args.max_len % 2 != 0:
                parser.error("--max-len must be a positive even number")
            return _run_enumeration(args, args.command)
        if args.command == "digraph-cycles":
            return _run_digraph_cycles(args)
        if args.command == "ch-probe":
            return _run_ch_probe(args, parser)
        if args.command == "ch-sweep":
            return _run_ch_sweep(args, parser)
        if args.command == "rees":
            return _run_rees(args, parser)
        if args.command == "oracle":
            return _run_oracle(args)
        parser.error(f"unknown command {args.command}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except (GraphError, OracleSizeError) as exc:
        print(f"evencircuits: input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"evencircuits: input error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
