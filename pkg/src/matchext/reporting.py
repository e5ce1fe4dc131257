"""JSON documents for verdicts, theorem reports, and census summaries.

Every document carries schema "matchext/1". Keys are emitted in a fixed
construction order and no timing data is embedded, so equal inputs (and
seeds) produce byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .census import (
    CensusResult,
    CorpusSpec,
    ExhaustiveSource,
    FileSource,
    RandomSource,
)
from .extendability import ExtendabilityVerdict, Failure
from .graph import Graph, VertexSet
from .matching import Matching, TutteCertificate
from .theorems import TheoremReport

SCHEMA = "matchext/1"


def _vertexset(s: VertexSet) -> list[int]:
    return list(s.members)


def _matching(m: Matching) -> list[list[int]]:
    return [[u, v] for u, v in m.edges]


def _tutte(t: TutteCertificate) -> dict[str, Any]:
    return {
        "s_prime": _vertexset(t.s_prime),
        "excess": t.deficiency_excess,
        "odd_components": [_vertexset(c) for c in t.odd_components],
    }


def _failure(f: Failure) -> dict[str, Any]:
    return {
        "kind": f.kind.value,
        "s": _vertexset(f.s),
        "m": None if f.m is None else _matching(f.m),
        "tutte": None if f.tutte is None else _tutte(f.tutte),
    }


def _jsonable(value: Any) -> Any:
    if isinstance(value, Failure):
        return _failure(value)
    if isinstance(value, TutteCertificate):
        return _tutte(value)
    if isinstance(value, Matching):
        return _matching(value)
    if isinstance(value, VertexSet):
        return _vertexset(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def graph_info(g: Graph, source: str | None = None) -> dict[str, Any]:
    info: dict[str, Any] = {}
    if source is not None:
        info["source"] = source
    info["vertices"] = g.vertex_count
    info["edges"] = g.edge_count
    return info


def verdict_document(
    verdict: ExtendabilityVerdict,
    *,
    n: int,
    k: int,
    graph: dict[str, Any],
    command: str = "check",
    verification: dict[str, Any] | None = None,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "command": command,
        "graph": graph,
        "n": n,
        "k": k,
        "holds": verdict.holds,
        "failure": None if verdict.failure is None else _failure(verdict.failure),
        "stats": {
            "subsets_examined": verdict.stats.subsets_examined,
            "pairs_examined": verdict.stats.pairs_examined,
        },
    }
    if verification is not None:
        doc["verification"] = verification
    return doc


def report_to_dict(report: TheoremReport) -> dict[str, Any]:
    return {
        "theorem": report.theorem_id,
        "graph6": report.instance.graph6,
        "source": report.instance.source,
        "params": _jsonable(dict(report.instance.params)),
        "status": report.status.value,
        "hypothesis": _jsonable(dict(report.hypothesis_detail)),
        "counterexample": None
        if report.counterexample is None
        else _jsonable(dict(report.counterexample)),
    }


def reports_document(reports, command: str = "verify") -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": command,
        "reports": [report_to_dict(r) for r in reports],
    }


def _corpus_dict(spec: CorpusSpec) -> dict[str, Any]:
    source = spec.source
    if isinstance(source, ExhaustiveSource):
        src: dict[str, Any] = {"kind": "exhaustive", "max_vertices": source.max_vertices}
    elif isinstance(source, RandomSource):
        src = {
            "kind": "random",
            "count": source.count,
            "min_vertices": source.min_vertices,
            "max_vertices": source.max_vertices,
            "edge_probability": source.edge_probability,
            "seed": source.seed,
        }
    elif isinstance(source, FileSource):
        src = {"kind": "files", "items": list(source.items)}
    else:
        raise TypeError(f"unknown corpus source {source!r}")
    return {
        "source": src,
        "filters": {"parity": spec.filters.parity, "connected": spec.filters.connected},
    }


def census_document(result: CensusResult, *, include_reports: bool = True) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "census",
        "corpus": _corpus_dict(result.spec),
        "theorems": list(result.theorems),
        "params": {"n_max": result.ranges.n_max, "k_max": result.ranges.k_max},
        "summary": {tid: dict(per) for tid, per in result.summary.items()},
        "reports": [report_to_dict(r) for r in result.reports] if include_reports else [],
    }


def to_json(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


def emit_verdict_json(value: ExtendabilityVerdict | TheoremReport, **context: Any) -> str:
    """Stable JSON for a single verdict or theorem report.

    Verdicts need n, k, and graph info passed as context; reports are
    self-contained.
    """
    if isinstance(value, ExtendabilityVerdict):
        return to_json(verdict_document(value, **context))
    if isinstance(value, TheoremReport):
        return to_json(reports_document([value]))
    raise TypeError(f"cannot emit {type(value).__name__} as verdict JSON")
