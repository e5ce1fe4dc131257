"""Maximum matchings, matching enumeration, and Tutte certificates.

The public engine is a deterministic blossom implementation: vertices are
scanned in ascending order and every tie breaks toward the smaller index,
so a fixed graph always yields the same matching. The extendability search
layers a per-graph subset oracle on top (see SubsetMatchingOracle), which
answers maximum-matching sizes for arbitrary induced subgraphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    NotAMatchingError,
    OddOrderError,
    OutOfRangeError,
    OverlapError,
)
from .graph import Graph, VertexSet, _bits, _mask_of, components_of_mask, delete_vertices


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges in canonical sorted order."""

    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = 0
        prev = None
        for u, v in self.edges:
            if u >= v:
                raise NotAMatchingError(f"edge ({u}, {v}) not in (min, max) order")
            if prev is not None and (u, v) <= prev:
                raise NotAMatchingError("edges not sorted lexicographically")
            prev = (u, v)
            bits = (1 << u) | (1 << v)
            if seen & bits:
                raise NotAMatchingError(f"edge ({u}, {v}) reuses a matched vertex")
            seen |= bits

    @staticmethod
    def of(edges: Iterable[tuple[int, int]]) -> "Matching":
        canon = sorted((min(u, v), max(u, v)) for u, v in edges)
        return Matching(tuple(canon))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def covers(self, v: int) -> bool:
        return v in self.vertices

    def mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TutteCertificate:
    """Vertex set S' whose removal leaves |S'| + excess odd components.

    A valid certificate has excess >= 2, which by Tutte's theorem rules out
    a 1-factor; everything here is recomputable from the host graph.
    """

    s_prime: VertexSet
    odd_components: tuple[VertexSet, ...]
    deficiency_excess: int


def validate_matching_in(g: Graph, m: Matching) -> None:
    """Raise NotAMatchingError unless every edge of m exists in g."""
    for u, v in m.edges:
        if u >= g.vertex_count or v >= g.vertex_count or not g.has_edge(u, v):
            raise NotAMatchingError(f"edge ({u}, {v}) not present in the graph")


def _blossom_mates(n: int, neighbors: Sequence[Sequence[int]]) -> list[int]:
    """Deterministic blossom search; returns the mate array (-1 = exposed)."""
    mate = [-1] * n
    if n == 0:
        return mate
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_blossom = [False] * n

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_end(root: int) -> int:
        for i in range(n):
            in_tree[i] = False
            parent[i] = -1
            base[i] = i
        in_tree[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in neighbors[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Odd cycle: contract the blossom around its base.
                    cur_base = lowest_common_base(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur_base, to)
                    mark_path(to, cur_base, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_augmenting_end(root)
        if end == -1:
            continue
        while end != -1:
            prev = parent[end]
            before = mate[prev]
            mate[end] = prev
            mate[prev] = end
            end = before
    return mate


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching, deterministic for a fixed graph."""
    neighbors = [g.neighbors(v) for v in g.vertices()]
    mate = _blossom_mates(g.vertex_count, neighbors)
    edges = [(v, mate[v]) for v in g.vertices() if mate[v] > v]
    return Matching(tuple(edges))


def has_one_factor(g: Graph) -> bool:
    """True iff a matching saturates every vertex (the empty graph counts)."""
    n = g.vertex_count
    return n % 2 == 0 and maximum_matching(g).size * 2 == n


def has_near_one_factor(g: Graph) -> bool:
    """True iff |V| is odd and a matching saturates all but one vertex."""
    n = g.vertex_count
    return n % 2 == 1 and maximum_matching(g).size * 2 == n - 1


def _matchings_in_mask(
    masks: Sequence[int], mask: int, k: int
) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """Exactly-k matchings inside the induced subgraph on ``mask``.

    Yields (canonical edge tuple, vertex mask) pairs in lexicographic order
    of the edge tuples.
    """
    edges: list[tuple[int, int, int]] = []
    for u in _bits(mask):
        above = mask & ~((1 << (u + 1)) - 1)
        for v in _bits(masks[u] & above):
            edges.append((u, v, (1 << u) | (1 << v)))
    total = len(edges)

    def rec(start: int, used: int, chosen: tuple) -> Iterator:
        if len(chosen) == k:
            yield chosen, used
            return
        need = k - len(chosen)
        for i in range(start, total - need + 1):
            u, v, bits = edges[i]
            if bits & used:
                continue
            yield from rec(i + 1, used | bits, chosen + ((u, v),))

    yield from rec(0, 0, ())


def enumerate_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """Every matching of exactly k edges, in lexicographic canonical order.

    k=0 yields exactly the empty matching. Validates eagerly; the returned
    stream is single-consumer but independent streams are safe.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    full = (1 << g.vertex_count) - 1
    return (
        Matching(chosen) for chosen, _ in _matchings_in_mask(g.adjacency_masks, full, k)
    )


def _one_factors_in_mask(
    masks: Sequence[int], mask: int
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of the induced subgraph, lexicographic order."""
    if mask == 0:
        yield ()
        return
    low = mask & -mask
    v = low.bit_length() - 1
    for u in _bits(masks[v] & mask & ~low):
        for rest in _one_factors_in_mask(masks, mask & ~low & ~(1 << u)):
            yield ((v, u),) + rest


def enumerate_one_factors(g: Graph) -> Iterator[Matching]:
    """All 1-factors in lexicographic canonical order; |V| must be even.

    Raises OddOrderError at call time, not on first consumption.
    """
    n = g.vertex_count
    if n % 2 == 1:
        raise OddOrderError(f"graph has odd order {n}")
    return (
        Matching(edges)
        for edges in _one_factors_in_mask(g.adjacency_masks, (1 << n) - 1)
    )


class SubsetMatchingOracle:
    """Maximum-matching sizes for every induced subgraph G[mask] of one graph.

    Graphs of at most DENSE_LIMIT vertices get a full bottom-up table over
    all vertex subsets (the recurrence branches on the lowest vertex of the
    subset: either it stays exposed or it is matched to a neighbor). Larger
    graphs fall back to a memoized blossom run per queried subset.

    Also carries the (mask, n, k)-extendability cache shared by the theorem
    validators; see extendability._holds_on_mask.
    """

    DENSE_LIMIT = 18

    def __init__(self, graph: Graph):
        self.graph = graph
        self.masks = graph.adjacency_masks
        self.n = graph.vertex_count
        self.full_mask = (1 << self.n) - 1
        self.nk_cache: dict[tuple[int, int, int], bool] = {}
        if self.n <= self.DENSE_LIMIT:
            self._table: bytearray | None = self._build_table()
            self._lazy: dict[int, int] | None = None
        else:
            self._table = None
            self._lazy = {}

    def _build_table(self) -> bytearray:
        masks = self.masks
        table = bytearray(1 << self.n)
        for mask in range(1, 1 << self.n):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            best = table[rest]
            nb = masks[v] & rest
            while nb:
                ub = nb & -nb
                nb ^= ub
                cand = table[rest ^ ub] + 1
                if cand > best:
                    best = cand
            table[mask] = best
        return table

    def size(self, mask: int) -> int:
        """Maximum matching size of G[mask]."""
        if self._table is not None:
            return self._table[mask]
        cached = self._lazy.get(mask)
        if cached is not None:
            return cached
        verts = list(_bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        neighbors = [
            [index[u] for u in _bits(self.masks[v] & mask)] for v in verts
        ]
        mate = _blossom_mates(len(verts), neighbors)
        value = sum(1 for m in mate if m != -1) // 2
        self._lazy[mask] = value
        return value

    def is_perfectable(self, mask: int) -> bool:
        """True iff G[mask] has a 1-factor."""
        count = mask.bit_count()
        return count % 2 == 0 and self.size(mask) * 2 == count


def _gallai_edmonds_tutte(
    oracle: SubsetMatchingOracle, mask: int
) -> TutteCertificate | None:
    """Tutte certificate for G[mask] via the Gallai-Edmonds A-set, or None.

    D = vertices missed by some maximum matching (nu(G - v) == nu(G)),
    A = N(D) \\ D; A attains the maximum deficiency, so the excess of the
    returned set equals |mask| - 2*nu and is >= 2 exactly when an even-order
    subgraph has no 1-factor.
    """
    count = mask.bit_count()
    if count % 2 == 1:
        return None
    nu = oracle.size(mask)
    if 2 * nu == count:
        return None
    d_mask = 0
    for v in _bits(mask):
        if oracle.size(mask & ~(1 << v)) == nu:
            d_mask |= 1 << v
    a_mask = 0
    for v in _bits(d_mask):
        a_mask |= oracle.masks[v] & mask
    a_mask &= ~d_mask
    comps = components_of_mask(oracle.masks, mask & ~a_mask)
    odd = [c for c in comps if c.bit_count() % 2 == 1]
    excess = len(odd) - a_mask.bit_count()
    return TutteCertificate(
        s_prime=VertexSet(tuple(_bits(a_mask))),
        odd_components=tuple(VertexSet(tuple(_bits(c))) for c in odd),
        deficiency_excess=excess,
    )


def find_tutte_certificate(g: Graph) -> TutteCertificate | None:
    """Certificate that g has no 1-factor, or None when one exists.

    Only even-order graphs without a 1-factor yield a certificate; parity
    makes the excess even, hence >= 2.
    """
    n = g.vertex_count
    if n % 2 == 1:
        return None
    base = maximum_matching(g).size
    if 2 * base == n:
        return None
    d_verts = []
    for v in range(n):
        reduced, _ = delete_vertices(g, VertexSet((v,)))
        if maximum_matching(reduced).size == base:
            d_verts.append(v)
    d_set = set(d_verts)
    a_set = sorted({u for v in d_verts for u in g.neighbors(v)} - d_set)
    a_mask = _mask_of(a_set)
    comps = components_of_mask(g.adjacency_masks, ((1 << n) - 1) & ~a_mask)
    odd = [c for c in comps if c.bit_count() % 2 == 1]
    return TutteCertificate(
        s_prime=VertexSet(tuple(a_set)),
        odd_components=tuple(VertexSet(tuple(_bits(c))) for c in odd),
        deficiency_excess=len(odd) - len(a_set),
    )


def has_extension(g: Graph, s: Iterable[int] | VertexSet, m: Matching) -> bool:
    """True iff g - s - V(m) has a 1-factor.

    s and V(m) must be disjoint and m must be a matching of g.
    """
    vs = s if isinstance(s, VertexSet) else VertexSet.of(s)
    if vs.members and vs.members[-1] >= g.vertex_count:
        raise OutOfRangeError(
            f"vertex {vs.members[-1]} outside 0..{g.vertex_count - 1}"
        )
    validate_matching_in(g, m)
    if vs.mask() & m.mask():
        raise OverlapError("S intersects V(M)")
    reduced, _ = delete_vertices(g, VertexSet.of(set(vs) | m.vertices))
    return has_one_factor(reduced)
