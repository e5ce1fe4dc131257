"""The H1/H2 sharpness families.

H1(n, k) = (2 K_{2n+1}) + (K_n u (k+2) K_2)
H2(n, k) = (2 K_{2n+1}) + (K_{n+2} u k K_2)

where "+" is the graph join and "u" disjoint union. Vertices are numbered
clique blocks first, then the core clique, then the pendant pairs, so the
canonical witnesses (core set, pendant matching) are stable across runs.

H1(n, k) is (n, k+1)-extendable but not (n, k+2)-extendable; H2(n, k) is
not (n+2, k)-extendable. Both keep (n, k)-extendability under deletion of
any edge's endpoints, which makes them sharpness examples for the
edge-deletion theorems.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, VertexSet, complete_graph, disjoint_union, join, with_labels
from .matching import Matching

_FAMILY_RE = re.compile(r"^(h1|h2):(\d+):(\d+)$")


@dataclass(frozen=True)
class FamilyInstance:
    """A constructed family member with its named parts.

    clique_blocks are the two (2n+1)-cliques, core is the K_n (H1) or
    K_{n+2} (H2) part, pendant_matching the (k+2) (H1) or k (H2) pendant
    edges. params is the defining (n, k).
    """

    graph: Graph
    clique_blocks: tuple[VertexSet, VertexSet]
    core: VertexSet
    pendant_matching: Matching
    params: tuple[int, int]
    ref: str

    @property
    def part_map(self) -> dict[str, object]:
        return {
            "clique_blocks": self.clique_blocks,
            "core": self.core,
            "pendant_matching": self.pendant_matching,
        }


def _build(family: str, n: int, k: int, core_size: int, pendant_count: int) -> FamilyInstance:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    block_size = 2 * n + 1
    blocks = disjoint_union([complete_graph(block_size), complete_graph(block_size)])
    right = disjoint_union(
        [complete_graph(core_size)] + [complete_graph(2)] * pendant_count
    )
    g = join(blocks, right)

    b0 = tuple(range(block_size))
    b1 = tuple(range(block_size, 2 * block_size))
    core_start = 2 * block_size
    core = tuple(range(core_start, core_start + core_size))
    pendant_start = core_start + core_size
    pendants = tuple(
        (pendant_start + 2 * i, pendant_start + 2 * i + 1) for i in range(pendant_count)
    )

    labels: dict[int, str] = {}
    for v in b0:
        labels[v] = f"{family}:block0"
    for v in b1:
        labels[v] = f"{family}:block1"
    for v in core:
        labels[v] = f"{family}:core"
    for i, (u, v) in enumerate(pendants):
        labels[u] = f"{family}:pendant{i}"
        labels[v] = f"{family}:pendant{i}"

    return FamilyInstance(
        graph=with_labels(g, labels),
        clique_blocks=(VertexSet(b0), VertexSet(b1)),
        core=VertexSet(core),
        pendant_matching=Matching(pendants),
        params=(n, k),
        ref=f"{family}:{n}:{k}",
    )


def build_h1(n: int, k: int) -> FamilyInstance:
    """H1(n, k): join of two (2n+1)-cliques with K_n plus (k+2) pendant edges."""
    return _build("h1", n, k, core_size=n, pendant_count=k + 2)


def build_h2(n: int, k: int) -> FamilyInstance:
    """H2(n, k): join of two (2n+1)-cliques with K_{n+2} plus k pendant edges."""
    return _build("h2", n, k, core_size=n + 2, pendant_count=k)


def resolve_family_ref(text: str) -> FamilyInstance | None:
    """Build the instance named by ``h1:<n>:<k>`` / ``h2:<n>:<k>``, else None."""
    m = _FAMILY_RE.match(text.strip())
    if m is None:
        return None
    family, n, k = m.group(1), int(m.group(2)), int(m.group(3))
    builder = build_h1 if family == "h1" else build_h2
    return builder(n, k)
