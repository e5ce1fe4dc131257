"""Graph corpora: isomorph-free exhaustive generation and seeded G(n, p).

Exhaustive generation works level by level: every canonical representative
on t-1 vertices is extended by one new vertex attached to each possible
neighborhood subset, and candidates are deduplicated by an exact canonical
form. Every t-vertex graph arises this way from some (t-1)-vertex graph,
so each level covers all isomorphism classes exactly once.

The canonical form is computed by individualization-refinement: iterated
degree refinement of an ordered partition, branching on the first
non-singleton cell, taking the minimum adjacency certificate over all
leaves. Cell selection depends only on colors, never on vertex labels, so
isomorphic graphs share a certificate. Fine for the <= 8 vertices the
census needs; beyond that the labeled space explodes and generation is
refused.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .graph import Graph, _bits

EXHAUSTIVE_LIMIT = 8

# Isomorphism class counts for n = 0..8, used as a generator self-check.
KNOWN_GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


def _refine(masks: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Stable coloring: split classes by multiset of neighbor colors."""
    while True:
        signatures = []
        for v in range(n):
            nb = sorted(colors[u] for u in _bits(masks[v]))
            signatures.append((colors[v], tuple(nb)))
        order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [order[signatures[v]] for v in range(n)]
        if new_colors == colors:
            return colors
        colors = new_colors


def _certificate(masks: tuple[int, ...], n: int, perm: list[int]) -> int:
    """Adjacency upper-triangle bits under ``perm``, packed into an int."""
    bits = 1  # sentinel high bit keeps leading zeros significant
    for i in range(n):
        mi = masks[perm[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (mi >> perm[j] & 1)
    return bits


def canonical_form(g: Graph) -> int:
    """Exact isomorphism invariant: equal iff the graphs are isomorphic."""
    n = g.vertex_count
    masks = g.adjacency_masks
    if n == 0:
        return 1
    best: int | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(masks, n, colors)
        count: dict[int, int] = {}
        for c in colors:
            count[c] = count.get(c, 0) + 1
        target = None
        for c in sorted(count):
            if count[c] > 1:
                target = c
                break
        if target is None:
            perm = sorted(range(n), key=colors.__getitem__)
            cert = _certificate(masks, n, perm)
            if best is None or cert < best:
                best = cert
            return
        for v in range(n):
            if colors[v] == target:
                child = [2 * c + 1 for c in colors]
                child[v] = 2 * target
                search(child)

    search([0] * n)
    assert best is not None
    return best


@lru_cache(maxsize=None)
def _exhaustive_level(t: int) -> tuple[Graph, ...]:
    """Canonical representatives of every t-vertex graph, discovery order."""
    if t == 0:
        return (Graph(0),)
    if t == 1:
        return (Graph(1),)
    reps: list[Graph] = []
    seen: set[int] = set()
    for parent in _exhaustive_level(t - 1):
        base_edges = parent.edges()
        for nbmask in range(1 << (t - 1)):
            edges = base_edges + [(u, t - 1) for u in _bits(nbmask)]
            candidate = Graph(t, edges)
            cert = canonical_form(candidate)
            if cert not in seen:
                seen.add(cert)
                reps.append(candidate)
    return tuple(reps)


def exhaustive_graphs(max_vertices: int) -> list[Graph]:
    """One representative per isomorphism class, 1..max_vertices vertices.

    Deterministic order: vertex count ascending, then discovery order.
    Refuses max_vertices > EXHAUSTIVE_LIMIT: isomorph-free generation at
    that size needs specialized tooling.
    """
    if max_vertices > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"exhaustive generation is limited to {EXHAUSTIVE_LIMIT} vertices"
        )
    out: list[Graph] = []
    for t in range(1, max_vertices + 1):
        out.extend(_exhaustive_level(t))
    return out


def random_graphs(
    count: int,
    min_vertices: int,
    max_vertices: int,
    edge_probability: float,
    seed: int,
) -> list[Graph]:
    """Seeded G(n, p) sample; n uniform in [min_vertices, max_vertices].

    Fully reproducible: the same arguments always produce the same list.
    """
    if min_vertices < 0 or max_vertices < min_vertices:
        raise ValueError("need 0 <= min_vertices <= max_vertices")
    if not (0.0 <= edge_probability <= 1.0):
        raise ValueError("edge_probability must be in [0, 1]")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nv = rng.randrange(min_vertices, max_vertices + 1)
        edges = [
            (u, v)
            for u in range(nv)
            for v in range(u + 1, nv)
            if rng.random() < edge_probability
        ]
        out.append(Graph(nv, edges))
    return out
