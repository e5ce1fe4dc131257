"""Command-line surface.

Commands: check, certify (check plus witness re-verification), family
(emit H1/H2 as graph6), verify (single-instance theorem check), census.
Exit codes: 0 extendable / confirmed-or-vacuous, 1 not extendable /
counterexample, 2 usage or parse errors, 3 aborted by limits.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .census import (
    CorpusFilters,
    CorpusSpec,
    ExhaustiveSource,
    FileSource,
    ParamRanges,
    RandomSource,
    _aborted_report,
    run_census,
)
from .errors import (
    BudgetExceededError,
    InadmissibleParametersError,
    InvalidParametersError,
    MatchextError,
    NoOneFactorError,
)
from .extendability import Budget, is_nk_extendable, verify_failure_witness
from .families import resolve_family_ref
from .graph import Graph
from .graph_io import GraphFormat, load_graph_file, resolve_graph_argument, serialize_graph6
from .matching import SubsetMatchingOracle
from .reporting import (
    SCHEMA,
    census_document,
    graph_info,
    reports_document,
    to_json,
    verdict_document,
)
from . import theorems as th

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_ABORTED = 3

log = logging.getLogger("matchext.cli")


@dataclass(frozen=True)
class RunConfig:
    """One validated invocation; built from parsed flags before any work.

    Invalid combinations (two corpus sources, missing graph input, unknown
    theorem ids, a malformed vertex range) are rejected here with a usage
    error rather than surfacing mid-run.
    """

    command: str
    n: int | None = None
    k: int | None = None
    i: int | None = None
    graph: str | None = None
    graph_file: str | None = None
    format: GraphFormat = GraphFormat.GRAPH6
    theorems: tuple[str, ...] = ()
    max_vertices: int | None = None
    random_count: int | None = None
    vertex_min: int | None = None
    vertex_max: int | None = None
    edge_prob: float = 0.5
    seed: int = 0
    corpus_items: tuple[str, ...] = ()
    parity: str | None = None
    connected: bool | None = None
    n_max: int = 3
    k_max: int = 2
    jobs: int = 1
    full: bool = False
    parts: bool = False
    timeout: float | None = None
    pair_cap: int | None = None
    out: str | None = None

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        command = args.command
        theorems: tuple[str, ...] = ()
        if command in ("verify", "census"):
            ids = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
            unknown = [t for t in ids if t not in th.THEOREM_IDS]
            if unknown:
                raise MatchextError(f"unknown theorem ids: {unknown}")
            if not ids:
                raise MatchextError("--theorems must name at least one validator")
            theorems = ids
        if command in ("check", "certify", "verify"):
            if (args.graph is None) == (args.graph_file is None):
                raise MatchextError("provide exactly one of --graph / --graph-file")
            return RunConfig(
                command=command,
                n=args.n,
                k=args.k,
                i=getattr(args, "i", None),
                graph=args.graph,
                graph_file=args.graph_file,
                format=GraphFormat(args.format),
                theorems=theorems,
                timeout=args.timeout,
                pair_cap=args.pair_cap,
                out=args.out,
            )
        if command == "family":
            return RunConfig(command=command, graph=args.graph, parts=args.parts, out=args.out)
        # census
        sources = [
            args.max_vertices is not None,
            args.random is not None,
            bool(args.graph or args.graph_file),
        ]
        if sum(sources) != 1:
            raise MatchextError(
                "choose exactly one corpus: --max-vertices, --random, or --graph/--graph-file"
            )
        vertex_min = vertex_max = None
        if args.random is not None:
            vertex_min, vertex_max = _parse_vertex_range(args.vertices)
        return RunConfig(
            command=command,
            theorems=theorems,
            max_vertices=args.max_vertices,
            random_count=args.random,
            vertex_min=vertex_min,
            vertex_max=vertex_max,
            edge_prob=args.edge_prob,
            seed=args.seed,
            corpus_items=tuple(args.graph) + tuple(args.graph_file),
            parity=args.parity,
            connected=None if args.connected is None else args.connected == "yes",
            n_max=args.n_max,
            k_max=args.k_max,
            jobs=max(1, args.jobs),
            full=args.full,
            timeout=args.timeout,
            pair_cap=args.pair_cap,
            out=args.out,
        )

    def corpus_spec(self) -> CorpusSpec:
        if self.max_vertices is not None:
            source: object = ExhaustiveSource(self.max_vertices)
        elif self.random_count is not None:
            source = RandomSource(
                self.random_count, self.vertex_min, self.vertex_max, self.edge_prob, self.seed
            )
        else:
            source = FileSource(self.corpus_items)
        return CorpusSpec(source, CorpusFilters(parity=self.parity, connected=self.connected))


def _parse_vertex_range(text: str | None) -> tuple[int, int]:
    if text is None:
        raise MatchextError("--random needs --vertices MIN..MAX")
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise MatchextError(f"invalid vertex range {text!r}") from None


def _configure_logging() -> None:
    level_name = os.environ.get("MATCHEXT_LOG", "warning").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(name)s %(levelname)s %(message)s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchext", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", help="graph6 string or family ref h1:<n>:<k> / h2:<n>:<k>")
        p.add_argument("--graph-file", help="path to a graph file")
        p.add_argument(
            "--format",
            choices=[f.value for f in (GraphFormat.GRAPH6, GraphFormat.EDGE_LIST)],
            default=GraphFormat.GRAPH6.value,
            help="file format for --graph-file (default graph6)",
        )

    def add_limit_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--timeout", type=float, help="per-instance wall clock budget in seconds")
        p.add_argument("--pair-cap", type=int, help="per-instance cap on (S, M) pairs examined")

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write JSON here instead of stdout")

    for name in ("check", "certify"):
        p = sub.add_parser(name, help=f"{name} (n, k)-extendability of one graph")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        add_graph_args(p)
        add_limit_args(p)
        add_out(p)

    p = sub.add_parser("family", help="emit an H1/H2 instance as graph6")
    p.add_argument("--graph", required=True, help="family ref h1:<n>:<k> or h2:<n>:<k>")
    p.add_argument("--parts", action="store_true", help="emit JSON with the labeled part map")
    add_out(p)

    p = sub.add_parser("verify", help="run theorem validators on one graph")
    p.add_argument("--theorems", required=True, help="comma-separated ids from " + ",".join(th.THEOREM_IDS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int, help="matching size for TB (default: sweep 1..k)")
    add_graph_args(p)
    add_limit_args(p)
    add_out(p)

    p = sub.add_parser("census", help="run validators over a graph corpus")
    p.add_argument("--max-vertices", type=int, help="exhaustive isomorph-free corpus up to this size")
    p.add_argument("--random", type=int, metavar="N", help="random corpus of N seeded G(n,p) graphs")
    p.add_argument("--vertices", help="vertex range MIN..MAX (or single value) for --random")
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph", action="append", default=[], help="family ref corpus item (repeatable)")
    p.add_argument("--graph-file", action="append", default=[], help="graph6 corpus file (repeatable)")
    p.add_argument("--parity", choices=["even", "odd"], help="keep only this vertex parity")
    p.add_argument("--connected", choices=["yes", "no"], help="keep only (dis)connected graphs")
    p.add_argument("--theorems", default=",".join(th.THEOREM_IDS))
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--full", action="store_true", help="keep all report rows, not just abnormal ones")
    add_limit_args(p)
    add_out(p)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_single_graph(config: RunConfig) -> tuple[str, Graph]:
    if config.graph is not None:
        doc = resolve_graph_argument(config.graph)
        return doc.payload, doc.resolved
    graphs = load_graph_file(config.graph_file, config.format)
    if len(graphs) != 1:
        raise MatchextError(
            f"{config.graph_file} holds {len(graphs)} graphs; check/verify need exactly one"
        )
    return graphs[0]


def _run_check(config: RunConfig, with_certificate: bool) -> int:
    source, g = _load_single_graph(config)
    budget = Budget.from_limits(config.timeout, config.pair_cap)
    command = "certify" if with_certificate else "check"
    try:
        verdict = is_nk_extendable(g, config.n, config.k, budget=budget)
    except BudgetExceededError as exc:
        doc = {
            "schema": SCHEMA,
            "command": command,
            "graph": graph_info(g, source),
            "n": config.n,
            "k": config.k,
            "aborted": str(exc),
        }
        _emit(to_json(doc), config.out)
        return EXIT_ABORTED
    verification = None
    if with_certificate:
        if verdict.failure is not None:
            verification = {
                "witness_reverified": verify_failure_witness(g, config.n, config.k, verdict.failure)
            }
        else:
            verification = {
                "witness_reverified": None,
                "note": "positive verdicts certify by exhaustion over all (S, M) pairs",
            }
    doc = verdict_document(
        verdict,
        n=config.n,
        k=config.k,
        graph=graph_info(g, source),
        command=command,
        verification=verification,
    )
    _emit(to_json(doc), config.out)
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def _run_family(config: RunConfig) -> int:
    family = resolve_family_ref(config.graph)
    if family is None:
        raise MatchextError(f"{config.graph!r} is not a family ref (h1:<n>:<k> / h2:<n>:<k>)")
    if not config.parts:
        _emit(serialize_graph6(family.graph) + "\n", config.out)
        return EXIT_OK
    doc = {
        "schema": SCHEMA,
        "command": "family",
        "ref": family.ref,
        "graph6": serialize_graph6(family.graph),
        "vertices": family.graph.vertex_count,
        "edges": family.graph.edge_count,
        "parts": {
            "clique_blocks": [list(b.members) for b in family.clique_blocks],
            "core": list(family.core.members),
            "pendant_matching": [[u, v] for u, v in family.pendant_matching.edges],
        },
    }
    _emit(to_json(doc), config.out)
    return EXIT_OK


def _verify_reports(config: RunConfig, g: Graph, source: str) -> list[th.TheoremReport]:
    oracle = SubsetMatchingOracle(g)
    reports: list[th.TheoremReport] = []

    def need(flag: str, value):
        if value is None:
            raise MatchextError(f"--{flag} is required for {tid}")
        return value

    def run(validator, params: dict) -> None:
        budget = Budget.from_limits(config.timeout, config.pair_cap)
        try:
            reports.append(
                validator(g, oracle=oracle, budget=budget, source=source, **params)
            )
        except BudgetExceededError:
            reports.append(_aborted_report(tid, g, source, params))

    for tid in config.theorems:
        if tid == "T1":
            run(th.verify_theorem1, {"k": need("k", config.k)})
        elif tid == "T2":
            run(th.verify_theorem2, {"n": need("n", config.n), "k": need("k", config.k)})
        elif tid == "T3":
            run(th.verify_theorem3, {"n": need("n", config.n), "k": need("k", config.k)})
        elif tid == "T4":
            run(th.verify_theorem4, {"n": need("n", config.n), "k": need("k", config.k)})
        elif tid == "TA":
            run(th.verify_theoremA, {"k": need("k", config.k)})
        elif tid == "TB":
            k = need("k", config.k)
            splits = [config.i] if config.i is not None else list(range(1, k + 1))
            for i in splits:
                run(th.verify_theoremB, {"k": k, "i": i})
        elif tid == "TC":
            if config.k is None and config.n is None:
                raise MatchextError("TC needs --k (K_EXT mode) or --n (CRITICAL mode)")
            if config.k is not None:
                run(th.verify_theoremC, {"k": config.k})
            if config.n is not None:
                run(th.verify_theoremC, {"n": config.n})
        elif tid == "L1":
            run(th.verify_lemma1, {"n": need("n", config.n), "k": need("k", config.k)})
        elif tid == "L2":
            run(th.verify_lemma2, {"n": need("n", config.n), "k": need("k", config.k)})
    return reports


def _run_verify(config: RunConfig) -> int:
    source, g = _load_single_graph(config)
    reports = _verify_reports(config, g, source)
    _emit(to_json(reports_document(reports)), config.out)
    statuses = {r.status for r in reports}
    if th.TheoremStatus.COUNTEREXAMPLE in statuses:
        return EXIT_NEGATIVE
    if th.TheoremStatus.ABORTED in statuses:
        return EXIT_ABORTED
    return EXIT_OK


def _run_census(config: RunConfig) -> int:
    keep = None if config.full else (th.TheoremStatus.COUNTEREXAMPLE, th.TheoremStatus.ABORTED)
    result = run_census(
        config.corpus_spec(),
        theorems=config.theorems,
        ranges=ParamRanges(n_max=config.n_max, k_max=config.k_max),
        timeout=config.timeout,
        pair_cap=config.pair_cap,
        jobs=config.jobs,
        keep_statuses=keep,
    )
    _emit(to_json(census_document(result)), config.out)
    if result.count(th.TheoremStatus.COUNTEREXAMPLE):
        return EXIT_NEGATIVE
    if result.count(th.TheoremStatus.ABORTED):
        return EXIT_ABORTED
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed the diagnostic; exits 2 on usage errors.
        return int(exc.code or 0)
    try:
        config = RunConfig.from_args(args)
        if config.command == "check":
            return _run_check(config, with_certificate=False)
        if config.command == "certify":
            return _run_check(config, with_certificate=True)
        if config.command == "family":
            return _run_family(config)
        if config.command == "verify":
            return _run_verify(config)
        if config.command == "census":
            return _run_census(config)
        raise MatchextError(f"unknown command {config.command!r}")
    except BudgetExceededError as exc:
        print(f"matchext: {exc}", file=sys.stderr)
        return EXIT_ABORTED
    except (InvalidParametersError, InadmissibleParametersError, NoOneFactorError, MatchextError) as exc:
        print(f"matchext: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"matchext: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
