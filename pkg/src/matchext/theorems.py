"""Executable hypothesis-to-conclusion checks for the extension theorems.

Each validator turns one named statement into a per-instance check:

  T1  every G-V(e) k-extendable and |V| >= 2k+4  =>  G (k+1)-extendable
  T2  every G-V(e) (n,k)-extendable             =>  G (n,k+1)-extendable
  TA  every G-V(e) (0,k)-extendable             =>  G (0,k)-extendable
  T3  T2 hypothesis, n > 1, |V| <= 2k+3n+4      =>  G (n+2,k)-extendable
  T4  some 1-factor F with every G-V(e), e in F,
      (n,k)-extendable                          =>  G (n,k)-extendable
  TB  G k-extendable  <=>  every i-matching M gives G-V(M) (k-i)-extendable
  TC  T4 specialized to (0,k) or (n,0)
  L1  G (n,k)-extendable  =>  G (n-2,k+1)-extendable
  L2  G (n,k)-extendable  =>  (n-2,k)- and (n,k-1)-extendable where defined

A COUNTEREXAMPLE status means the hypothesis clauses all verified true and
the conclusion failed with a re-verifiable witness; since the statements
are proved, any counterexample exposes an implementation bug. VACUOUS means
some hypothesis clause failed, and is never folded into CONFIRMED so census
statistics stay honest about coverage.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import InadmissibleParametersError, NoOneFactorError
from .extendability import (
    Budget,
    _holds_on_mask,
    _verdict_on_mask,
    admissible,
)
from .graph import Graph
from .graph_io import serialize_graph6
from .matching import (
    Matching,
    SubsetMatchingOracle,
    _matchings_in_mask,
    _one_factors_in_mask,
)

THEOREM_IDS = ("T1", "T2", "T3", "T4", "TA", "TB", "TC", "L1", "L2")


class TheoremStatus(Enum):
    CONFIRMED = "CONFIRMED"
    VACUOUS = "VACUOUS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    INADMISSIBLE = "INADMISSIBLE"
    ABORTED = "ABORTED"


@dataclass(frozen=True)
class InstanceRef:
    """What was checked: the graph (as graph6), its provenance, parameters."""

    graph6: str
    source: str | None
    params: Mapping[str, object]


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    instance: InstanceRef
    status: TheoremStatus
    hypothesis_detail: Mapping[str, object]
    counterexample: Mapping[str, object] | None = None


def _instance(g: Graph, source: str | None, params: dict) -> InstanceRef:
    return InstanceRef(graph6=serialize_graph6(g), source=source, params=params)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InadmissibleParametersError(message)


def _edge_bits(edge: tuple[int, int]) -> int:
    u, v = edge
    return (1 << u) | (1 << v)


def _all_edge_deletions_hold(
    g: Graph,
    oracle: SubsetMatchingOracle,
    n: int,
    k: int,
    budget: Budget | None,
) -> tuple[bool, tuple[int, int] | None]:
    """Is G - V(e) (n, k)-extendable for every edge? Returns first failure."""
    full = oracle.full_mask
    for edge in g.edges():
        if not _holds_on_mask(oracle, full ^ _edge_bits(edge), n, k, budget):
            return False, edge
    return True, None


def _conclusion_payload(
    oracle: SubsetMatchingOracle, mask: int, n: int, k: int
) -> dict:
    verdict = _verdict_on_mask(oracle, mask, n, k, None)
    return {"params": {"n": n, "k": k}, "conclusion_failure": verdict.failure}


# --- Lemmas ---------------------------------------------------------------


def lemma1_admissible(nv: int, n: int, k: int) -> bool:
    return n >= 2 and admissible(nv, n, k)


def verify_lemma1(
    g: Graph,
    n: int,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """(n, k)-extendable implies (n-2, k+1)-extendable."""
    nv = g.vertex_count
    _require(lemma1_admissible(nv, n, k), f"lemma 1 needs n >= 2 and admissible (n, k); got n={n}, k={k}, |V|={nv}")
    oracle = oracle or SubsetMatchingOracle(g)
    instance = _instance(g, source, {"n": n, "k": k})
    hyp = _holds_on_mask(oracle, oracle.full_mask, n, k, budget)
    detail = {"extendable_n_k": hyp}
    if not hyp:
        return TheoremReport("L1", instance, TheoremStatus.VACUOUS, detail)
    if _holds_on_mask(oracle, oracle.full_mask, n - 2, k + 1, budget):
        return TheoremReport("L1", instance, TheoremStatus.CONFIRMED, detail)
    payload = _conclusion_payload(oracle, oracle.full_mask, n - 2, k + 1)
    return TheoremReport("L1", instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)


def lemma2_admissible(nv: int, n: int, k: int) -> bool:
    return (n >= 2 or k >= 1) and admissible(nv, n, k)


def verify_lemma2(
    g: Graph,
    n: int,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """(n, k)-extendable implies (n-2, k)- and (n, k-1)-extendable.

    Each clause applies only where its parameter guard (n >= 2, k >= 1)
    holds; the conclusion is the conjunction of the applicable clauses.
    """
    nv = g.vertex_count
    _require(lemma2_admissible(nv, n, k), f"lemma 2 needs n >= 2 or k >= 1 and admissible (n, k); got n={n}, k={k}, |V|={nv}")
    oracle = oracle or SubsetMatchingOracle(g)
    full = oracle.full_mask
    instance = _instance(g, source, {"n": n, "k": k})
    hyp = _holds_on_mask(oracle, full, n, k, budget)
    detail: dict[str, object] = {"extendable_n_k": hyp}
    if not hyp:
        return TheoremReport("L2", instance, TheoremStatus.VACUOUS, detail)
    clause1 = _holds_on_mask(oracle, full, n - 2, k, budget) if n >= 2 else None
    clause2 = _holds_on_mask(oracle, full, n, k - 1, budget) if k >= 1 else None
    detail["clause_fewer_vertices"] = clause1
    detail["clause_smaller_matching"] = clause2
    if clause1 is False:
        payload = _conclusion_payload(oracle, full, n - 2, k)
        return TheoremReport("L2", instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)
    if clause2 is False:
        payload = _conclusion_payload(oracle, full, n, k - 1)
        return TheoremReport("L2", instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)
    return TheoremReport("L2", instance, TheoremStatus.CONFIRMED, detail)


# --- Edge-deletion theorems ------------------------------------------------


def theorem1_admissible(nv: int, has_factor: bool, k: int) -> bool:
    return has_factor and nv >= 2 * k + 4


def verify_theorem1(
    g: Graph,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """Every G - V(e) k-extendable (with |V| >= 2k+4) makes G (k+1)-extendable."""
    oracle = oracle or SubsetMatchingOracle(g)
    if not oracle.is_perfectable(oracle.full_mask):
        raise NoOneFactorError("theorem 1 requires a graph with a 1-factor")
    _require(g.vertex_count >= 2 * k + 4, f"theorem 1 needs |V| >= 2k + 4; got k={k}, |V|={g.vertex_count}")
    instance = _instance(g, source, {"k": k})
    holds, failing = _all_edge_deletions_hold(g, oracle, 0, k, budget)
    detail: dict[str, object] = {
        "has_one_factor": True,
        "all_edge_deletions_k_extendable": holds,
    }
    if not holds:
        detail["failing_edge"] = failing
        return TheoremReport("T1", instance, TheoremStatus.VACUOUS, detail)
    if _holds_on_mask(oracle, oracle.full_mask, 0, k + 1, budget):
        return TheoremReport("T1", instance, TheoremStatus.CONFIRMED, detail)
    payload = _conclusion_payload(oracle, oracle.full_mask, 0, k + 1)
    return TheoremReport("T1", instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)


def theorem2_admissible(nv: int, n: int, k: int) -> bool:
    # (n, k) must be admissible on every G - V(e); the conclusion (n, k+1)
    # on G reduces to the same inequality.
    return n + 2 * k <= nv - 4 and (nv - n) % 2 == 0


def _edge_deletion_report(
    theorem_id: str,
    g: Graph,
    oracle: SubsetMatchingOracle,
    hyp_n: int,
    hyp_k: int,
    concl_n: int,
    concl_k: int,
    budget: Budget | None,
    instance: InstanceRef,
    extra_detail: dict | None = None,
) -> TheoremReport:
    """Shared body of T2/TA/T3: all-edge-deletions hypothesis, one conclusion."""
    detail: dict[str, object] = dict(extra_detail or {})
    has_edges = g.edge_count > 0
    detail["has_edges"] = has_edges
    if not has_edges:
        detail["all_edge_deletions_extendable"] = None
        return TheoremReport(theorem_id, instance, TheoremStatus.VACUOUS, detail)
    holds, failing = _all_edge_deletions_hold(g, oracle, hyp_n, hyp_k, budget)
    detail["all_edge_deletions_extendable"] = holds
    if not holds:
        detail["failing_edge"] = failing
        return TheoremReport(theorem_id, instance, TheoremStatus.VACUOUS, detail)
    if _holds_on_mask(oracle, oracle.full_mask, concl_n, concl_k, budget):
        return TheoremReport(theorem_id, instance, TheoremStatus.CONFIRMED, detail)
    payload = _conclusion_payload(oracle, oracle.full_mask, concl_n, concl_k)
    return TheoremReport(theorem_id, instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)


def verify_theorem2(
    g: Graph,
    n: int,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """Every G - V(e) (n, k)-extendable makes G (n, k+1)-extendable."""
    _require(theorem2_admissible(g.vertex_count, n, k), f"theorem 2 needs n + 2k <= |V| - 4 and |V| - n even; got n={n}, k={k}, |V|={g.vertex_count}")
    oracle = oracle or SubsetMatchingOracle(g)
    instance = _instance(g, source, {"n": n, "k": k})
    return _edge_deletion_report("T2", g, oracle, n, k, n, k + 1, budget, instance)


def theoremA_admissible(nv: int, k: int) -> bool:
    return theorem2_admissible(nv, 0, k)


def verify_theoremA(
    g: Graph,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """T2 at n=0 with the conclusion weakened to (0, k)-extendability."""
    _require(theoremA_admissible(g.vertex_count, k), f"theorem A needs 2k <= |V| - 4 and |V| even; got k={k}, |V|={g.vertex_count}")
    oracle = oracle or SubsetMatchingOracle(g)
    instance = _instance(g, source, {"k": k})
    return _edge_deletion_report("TA", g, oracle, 0, k, 0, k, budget, instance)


def theorem3_admissible(nv: int, n: int, k: int) -> bool:
    return n >= 2 and theorem2_admissible(nv, n, k)


def verify_theorem3(
    g: Graph,
    n: int,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """T2 hypothesis plus |V| <= 2k + 3n + 4 gives (n+2, k)-extendability."""
    nv = g.vertex_count
    _require(theorem3_admissible(nv, n, k), f"theorem 3 needs n > 1, n + 2k <= |V| - 4, |V| - n even; got n={n}, k={k}, |V|={nv}")
    oracle = oracle or SubsetMatchingOracle(g)
    instance = _instance(g, source, {"n": n, "k": k})
    size_ok = nv <= 2 * k + 3 * n + 4
    if not size_ok:
        detail = {
            "size_bound_ok": False,
            "has_edges": g.edge_count > 0,
            "all_edge_deletions_extendable": None,
        }
        return TheoremReport("T3", instance, TheoremStatus.VACUOUS, detail)
    return _edge_deletion_report(
        "T3", g, oracle, n, k, n + 2, k, budget, instance,
        extra_detail={"size_bound_ok": True},
    )


# --- 1-factor restricted theorems ------------------------------------------


def theorem4_admissible(nv: int, has_factor: bool, n: int, k: int) -> bool:
    if not has_factor:
        return False
    if n == 0 and k == 0:
        return admissible(nv, 0, 0)
    return n + 2 * k <= nv - 4 and (nv - n) % 2 == 0


def _factor_restricted_report(
    theorem_id: str,
    g: Graph,
    oracle: SubsetMatchingOracle,
    n: int,
    k: int,
    budget: Budget | None,
    instance: InstanceRef,
    extra_detail: dict | None = None,
) -> TheoremReport:
    """Core of T4/TC: quantify the edge-deletion hypothesis over 1-factors."""
    if not oracle.is_perfectable(oracle.full_mask):
        raise NoOneFactorError(f"theorem {theorem_id} requires a graph with a 1-factor")
    detail: dict[str, object] = dict(extra_detail or {})
    detail["has_one_factor"] = True
    if n == 0 and k == 0:
        # The conclusion would restate the 1-factor precondition.
        _require(admissible(g.vertex_count, 0, 0), f"(0, 0) inadmissible on |V|={g.vertex_count}")
        detail["degenerate"] = True
        return TheoremReport(theorem_id, instance, TheoremStatus.CONFIRMED, detail)
    _require(
        n + 2 * k <= g.vertex_count - 4 and (g.vertex_count - n) % 2 == 0,
        f"theorem {theorem_id} needs n + 2k <= |V| - 4 and |V| - n even; got n={n}, k={k}, |V|={g.vertex_count}",
    )
    detail["degenerate"] = False
    full = oracle.full_mask
    conclusion = _holds_on_mask(oracle, full, n, k, budget)
    for factor in _one_factors_in_mask(oracle.masks, full):
        if budget is not None:
            budget.check_time()
        factor_ok = all(
            _holds_on_mask(oracle, full ^ _edge_bits(e), n, k, budget) for e in factor
        )
        if not factor_ok:
            continue
        detail["some_factor_hypothesis"] = True
        if conclusion:
            return TheoremReport(theorem_id, instance, TheoremStatus.CONFIRMED, detail)
        payload = _conclusion_payload(oracle, full, n, k)
        payload["factor"] = Matching(factor)
        return TheoremReport(theorem_id, instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)
    detail["some_factor_hypothesis"] = False
    return TheoremReport(theorem_id, instance, TheoremStatus.VACUOUS, detail)


def verify_theorem4(
    g: Graph,
    n: int,
    k: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """Some 1-factor whose edge deletions are all (n, k)-extendable forces G to be."""
    oracle = oracle or SubsetMatchingOracle(g)
    instance = _instance(g, source, {"n": n, "k": k})
    return _factor_restricted_report("T4", g, oracle, n, k, budget, instance)


def theoremC_admissible(nv: int, has_factor: bool, *, k: int | None = None, n: int | None = None) -> bool:
    if k is not None:
        return theorem4_admissible(nv, has_factor, 0, k)
    return theorem4_admissible(nv, has_factor, n or 0, 0)


def verify_theoremC(
    g: Graph,
    *,
    k: int | None = None,
    n: int | None = None,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """T4 specialized: mode K_EXT checks (0, k), mode CRITICAL checks (n, 0)."""
    if (k is None) == (n is None):
        raise InadmissibleParametersError("theorem C takes exactly one of k (K_EXT) or n (CRITICAL)")
    oracle = oracle or SubsetMatchingOracle(g)
    if k is not None:
        instance = _instance(g, source, {"mode": "K_EXT", "k": k})
        return _factor_restricted_report(
            "TC", g, oracle, 0, k, budget, instance, extra_detail={"mode": "K_EXT"}
        )
    instance = _instance(g, source, {"mode": "CRITICAL", "n": n})
    return _factor_restricted_report(
        "TC", g, oracle, n, 0, budget, instance, extra_detail={"mode": "CRITICAL"}
    )


# --- Theorem B --------------------------------------------------------------


def theoremB_admissible(nv: int, k: int, i: int) -> bool:
    return 1 <= i <= k and admissible(nv, 0, k)


def verify_theoremB(
    g: Graph,
    k: int,
    i: int,
    *,
    oracle: SubsetMatchingOracle | None = None,
    budget: Budget | None = None,
    source: str | None = None,
) -> TheoremReport:
    """k-extendable iff every i-matching deletion leaves a (k-i)-extendable graph.

    The right-hand side includes "an i-matching exists": the left side's own
    definition demands a k-matching, and without the existence clause an
    i-matching-free graph would fail the biconditional vacuously.
    """
    nv = g.vertex_count
    _require(theoremB_admissible(nv, k, i), f"theorem B needs 1 <= i <= k and admissible (0, k); got k={k}, i={i}, |V|={nv}")
    oracle = oracle or SubsetMatchingOracle(g)
    full = oracle.full_mask
    instance = _instance(g, source, {"k": k, "i": i})
    lhs = _holds_on_mask(oracle, full, 0, k, budget)
    has_i_matching = oracle.size(full) >= i
    detail: dict[str, object] = {
        "lhs_k_extendable": lhs,
        "has_i_matching": has_i_matching,
    }
    rhs = has_i_matching
    witness_m: tuple[tuple[int, int], ...] | None = None
    if has_i_matching:
        for chosen, used in _matchings_in_mask(oracle.masks, full, i):
            if budget is not None:
                budget.charge_pairs()
            if not _holds_on_mask(oracle, full ^ used, 0, k - i, budget):
                rhs = False
                witness_m = chosen
                break
    detail["rhs_all_deletions"] = rhs if has_i_matching else None
    if lhs == rhs:
        return TheoremReport("TB", instance, TheoremStatus.CONFIRMED, detail)
    if lhs and not rhs:
        payload: dict[str, object] = {"direction": "lhs_true_rhs_false"}
        if witness_m is not None:
            payload["witness_matching"] = Matching(witness_m)
            mask = full ^ Matching(witness_m).mask()
            payload["subgraph_failure"] = _verdict_on_mask(oracle, mask, 0, k - i, None).failure
    else:
        payload = {
            "direction": "lhs_false_rhs_true",
            "lhs_failure": _verdict_on_mask(oracle, full, 0, k, None).failure,
        }
    return TheoremReport("TB", instance, TheoremStatus.COUNTEREXAMPLE, detail, payload)
