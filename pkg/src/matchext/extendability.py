"""(n, k)-extendability decisions with re-verifiable certificates.

A graph is (n, k)-extendable when, after deleting any n vertices, the rest
still contains a k-matching and every k-matching extends to a 1-factor of
the rest. Parameters must satisfy n + 2k <= |V| - 2 with |V| - n even;
anything else is a hard error, not a false verdict.

The search iterates deletion sets S in lexicographic order and k-matchings
M of G - S in lexicographic canonical order, so a failing instance always
reports the lexicographically least witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import BudgetExceededError, InvalidParametersError
from .graph import Graph, VertexSet, _bits, components, delete_vertices
from .matching import (
    Matching,
    SubsetMatchingOracle,
    TutteCertificate,
    _gallai_edmonds_tutte,
    _matchings_in_mask,
    has_one_factor,
    maximum_matching,
    validate_matching_in,
)


class FailureKind(Enum):
    NO_K_MATCHING = "NO_K_MATCHING"
    STUCK_MATCHING = "STUCK_MATCHING"


@dataclass(frozen=True)
class ParameterCheck:
    """Admissibility of (n, k) for a host graph."""

    n: int
    k: int
    size_ok: bool
    parity_ok: bool

    @property
    def ok(self) -> bool:
        return self.size_ok and self.parity_ok


@dataclass
class SearchStats:
    subsets_examined: int = 0
    pairs_examined: int = 0


@dataclass(frozen=True)
class Failure:
    """Witness that the extendability definition fails.

    NO_K_MATCHING: G - s has maximum matching smaller than k (m, tutte unset).
    STUCK_MATCHING: m is a k-matching of G - s and tutte certifies that
    G - s - V(m) has no 1-factor. All indices are in the host graph's
    original numbering.
    """

    kind: FailureKind
    s: VertexSet
    m: Matching | None = None
    tutte: TutteCertificate | None = None


@dataclass(frozen=True)
class ExtendabilityVerdict:
    holds: bool
    failure: Failure | None
    stats: SearchStats


@dataclass
class Budget:
    """Work limits for one search instance.

    pair_cap bounds the number of (S, M) pairs examined; deadline is an
    absolute time.monotonic() cutoff checked coarsely during the search.
    """

    deadline: float | None = None
    pair_cap: int | None = None
    pairs_charged: int = field(default=0)

    @staticmethod
    def from_limits(timeout_seconds: float | None, pair_cap: int | None) -> "Budget | None":
        if timeout_seconds is None and pair_cap is None:
            return None
        deadline = None if timeout_seconds is None else time.monotonic() + timeout_seconds
        return Budget(deadline=deadline, pair_cap=pair_cap)

    def charge_pairs(self, count: int = 1) -> None:
        self.pairs_charged += count
        if self.pair_cap is not None and self.pairs_charged > self.pair_cap:
            raise BudgetExceededError(
                f"(S, M) pair cap {self.pair_cap} exceeded"
            )
        if self.deadline is not None and self.pairs_charged % 256 == 0:
            self.check_time()

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError("instance timeout exceeded")


def check_parameters(g: Graph, n: int, k: int) -> ParameterCheck:
    """Evaluate both admissibility conditions for (n, k) on g."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    nv = g.vertex_count
    return ParameterCheck(
        n=n,
        k=k,
        size_ok=n + 2 * k <= nv - 2,
        parity_ok=(nv - n) % 2 == 0,
    )


def admissible(vertex_count: int, n: int, k: int) -> bool:
    """n + 2k <= |V| - 2 and |V| - n even."""
    return n + 2 * k <= vertex_count - 2 and (vertex_count - n) % 2 == 0


def _search_failure(
    oracle: SubsetMatchingOracle,
    mask: int,
    n: int,
    k: int,
    budget: Budget | None,
    stats: SearchStats | None,
) -> tuple[FailureKind, tuple[int, ...], tuple[tuple[int, int], ...] | None] | None:
    """First failing (S, M) pair over G[mask], or None when (n, k) holds.

    S runs over size-n subsets of mask in lexicographic order; M over the
    k-matchings of G[mask] - S in lexicographic canonical order.
    """
    vert_list = list(_bits(mask))
    for s_tuple in combinations(vert_list, n):
        if budget is not None:
            budget.check_time()
        if stats is not None:
            stats.subsets_examined += 1
        smask = 0
        for v in s_tuple:
            smask |= 1 << v
        rem = mask ^ smask
        if oracle.size(rem) < k:
            return (FailureKind.NO_K_MATCHING, s_tuple, None)
        for chosen, used in _matchings_in_mask(oracle.masks, rem, k):
            if stats is not None:
                stats.pairs_examined += 1
            if budget is not None:
                budget.charge_pairs()
            if not oracle.is_perfectable(rem ^ used):
                return (FailureKind.STUCK_MATCHING, s_tuple, chosen)
    return None


def _holds_on_mask(
    oracle: SubsetMatchingOracle,
    mask: int,
    n: int,
    k: int,
    budget: Budget | None = None,
) -> bool:
    """Decision-only (n, k)-extendability of G[mask], cached on the oracle."""
    if not admissible(mask.bit_count(), n, k):
        raise InvalidParametersError(
            ParameterCheck(
                n,
                k,
                size_ok=n + 2 * k <= mask.bit_count() - 2,
                parity_ok=(mask.bit_count() - n) % 2 == 0,
            )
        )
    key = (mask, n, k)
    cached = oracle.nk_cache.get(key)
    if cached is not None:
        return cached
    result = _search_failure(oracle, mask, n, k, budget, None) is None
    oracle.nk_cache[key] = result
    return result


def _verdict_on_mask(
    oracle: SubsetMatchingOracle,
    mask: int,
    n: int,
    k: int,
    budget: Budget | None,
) -> ExtendabilityVerdict:
    """Full verdict for G[mask], witness indices in the host graph numbering."""
    stats = SearchStats()
    found = _search_failure(oracle, mask, n, k, budget, stats)
    if found is None:
        return ExtendabilityVerdict(holds=True, failure=None, stats=stats)
    kind, s_tuple, m_edges = found
    smask = 0
    for v in s_tuple:
        smask |= 1 << v
    if kind is FailureKind.NO_K_MATCHING:
        failure = Failure(kind=kind, s=VertexSet(s_tuple))
    else:
        matching = Matching(m_edges)
        left = mask ^ smask ^ matching.mask()
        tutte = _gallai_edmonds_tutte(oracle, left)
        failure = Failure(kind=kind, s=VertexSet(s_tuple), m=matching, tutte=tutte)
    return ExtendabilityVerdict(holds=False, failure=failure, stats=stats)


def is_nk_extendable(
    g: Graph,
    n: int,
    k: int,
    *,
    budget: Budget | None = None,
    oracle: SubsetMatchingOracle | None = None,
) -> ExtendabilityVerdict:
    """Decide (n, k)-extendability of g, with a witness on failure.

    Raises InvalidParametersError (carrying the ParameterCheck) when the
    admissibility conditions fail, and BudgetExceededError when a budget
    runs out mid-search.
    """
    check = check_parameters(g, n, k)
    if not check.ok:
        raise InvalidParametersError(check)
    if oracle is None:
        oracle = SubsetMatchingOracle(g)
    return _verdict_on_mask(oracle, oracle.full_mask, n, k, budget)


def is_k_extendable(g: Graph, k: int, **kwargs) -> ExtendabilityVerdict:
    """k-extendable == (0, k)-extendable."""
    return is_nk_extendable(g, 0, k, **kwargs)


def is_n_factor_critical(g: Graph, n: int, **kwargs) -> ExtendabilityVerdict:
    """n-factor-critical == (n, 0)-extendable."""
    return is_nk_extendable(g, n, 0, **kwargs)


def verify_failure_witness(g: Graph, n: int, k: int, failure: Failure) -> bool:
    """Re-check a failure witness from scratch.

    Deliberately avoids the subset oracle: only vertex deletion, the blossom
    engine, and component counting are used, so a verdict and its witness
    are established by two independent routes.
    """
    s = failure.s
    if len(s) != n:
        return False
    if s.members and (s.members[0] < 0 or s.members[-1] >= g.vertex_count):
        return False
    minus_s, _ = delete_vertices(g, s)
    if failure.kind is FailureKind.NO_K_MATCHING:
        return maximum_matching(minus_s).size < k
    m = failure.m
    if m is None or m.size != k:
        return False
    try:
        validate_matching_in(g, m)
    except Exception:
        return False
    if m.mask() & s.mask():
        return False
    remainder, remap = delete_vertices(g, VertexSet.of(set(s) | m.vertices))
    if has_one_factor(remainder):
        return False
    tutte = failure.tutte
    if tutte is None:
        return False
    try:
        s_prime_new = [remap.new_of(v) for v in tutte.s_prime]
    except KeyError:
        return False
    reduced, inner_remap = delete_vertices(remainder, VertexSet.of(s_prime_new))
    comps = components(reduced)
    reported = {c.members for c in tutte.odd_components}
    actual = {
        tuple(inner_remap.old_of(v) for v in c.members)
        for c in comps.components
        if len(c) % 2 == 1
    }
    actual_original = {
        tuple(remap.old_of(v) for v in comp) for comp in actual
    }
    if reported != actual_original:
        return False
    excess = comps.odd_count - len(tutte.s_prime)
    return excess == tutte.deficiency_excess and excess >= 2
