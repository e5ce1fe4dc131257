"""Immutable simple graphs plus the constructions the deciders build on.

Vertices are dense indices 0..vertex_count-1. Adjacency is kept as one int
bitmask per vertex, which makes induced-subgraph reasoning (everywhere in
this package phrased in terms of vertex-subset masks) cheap and keeps the
whole structure hashable and shareable across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import OutOfRangeError


@dataclass(frozen=True)
class VertexSet:
    """Sorted, duplicate-free vertex indices of some host graph."""

    members: tuple[int, ...] = ()

    @staticmethod
    def of(vertices: Iterable[int]) -> "VertexSet":
        members = tuple(sorted(set(vertices)))
        if members and members[0] < 0:
            raise OutOfRangeError(f"negative vertex index {members[0]}")
        return VertexSet(members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of a graph with odd/even tallies."""

    components: tuple[VertexSet, ...]
    odd_count: int
    even_count: int


class IndexRemap:
    """Old/new index translation produced by vertex deletion.

    ``kept`` lists surviving old indices in ascending order; position in the
    tuple is the new index. Certificates computed on the reduced graph are
    translated back through this table.
    """

    __slots__ = ("kept", "_old_to_new")

    def __init__(self, kept: Sequence[int]):
        self.kept = tuple(kept)
        self._old_to_new = {old: new for new, old in enumerate(self.kept)}

    def old_of(self, new: int) -> int:
        return self.kept[new]

    def new_of(self, old: int) -> int:
        return self._old_to_new[old]

    def __repr__(self) -> str:
        return f"IndexRemap(kept={self.kept!r})"


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Optional per-vertex labels are provenance metadata only: they are
    preserved by the constructions below but never influence structure,
    equality, or hashing.
    """

    __slots__ = ("_n", "_masks", "_labels")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        masks = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "_n", vertex_count)
        object.__setattr__(self, "_masks", tuple(masks))
        label_map = dict(labels) if labels else {}
        for v in label_map:
            if not (0 <= v < vertex_count):
                raise OutOfRangeError(f"label for vertex {v} outside 0..{vertex_count - 1}")
        object.__setattr__(self, "_labels", label_map)

    # Graphs are value-immutable; block accidental attribute writes.
    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self._masks[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._masks[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self._n):
            m = self._masks[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                out.append((u, v))
        return out

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise OutOfRangeError(f"vertex {v} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(vertices={self._n}, edges={self.edge_count})"

    def __getstate__(self):
        return (self._n, self._masks, self._labels)

    def __setstate__(self, state):
        n, masks, labels = state
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_masks", masks)
        object.__setattr__(self, "_labels", labels)


def _bits(mask: int) -> Iterator[int]:
    """Set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def complete_graph(m: int) -> Graph:
    """K_m: every pair of the m vertices adjacent."""
    return Graph(m, [(u, v) for u in range(m) for v in range(u + 1, m)])


def with_labels(g: Graph, labels: Mapping[int, str]) -> Graph:
    """Copy of ``g`` with ``labels`` merged over its existing labels."""
    merged = dict(g.labels)
    merged.update(labels)
    return Graph(g.vertex_count, g.edges(), merged)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Vertex-disjoint union; part i's indices are offset by the sizes before it."""
    total = sum(p.vertex_count for p in parts)
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    offset = 0
    for p in parts:
        edges.extend((u + offset, v + offset) for u, v in p.edges())
        labels.update({v + offset: s for v, s in p.labels.items()})
        offset += p.vertex_count
    return Graph(total, edges, labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two parts."""
    base = disjoint_union([g, h])
    gn = g.vertex_count
    cross = [(u, gn + v) for u in range(gn) for v in range(h.vertex_count)]
    return Graph(base.vertex_count, base.edges() + cross, dict(base.labels))


def _coerce_vertexset(g: Graph, s: Iterable[int] | VertexSet) -> VertexSet:
    vs = s if isinstance(s, VertexSet) else VertexSet.of(s)
    if vs.members and vs.members[-1] >= g.vertex_count:
        raise OutOfRangeError(
            f"vertex {vs.members[-1]} outside 0..{g.vertex_count - 1}"
        )
    return vs


def delete_vertices(g: Graph, s: Iterable[int] | VertexSet) -> tuple[Graph, IndexRemap]:
    """Induced subgraph on V(g) minus s, plus the old/new index table.

    The remap lets callers translate certificates computed on the reduced
    graph back into the original numbering.
    """
    vs = _coerce_vertexset(g, s)
    dropped = set(vs.members)
    kept = [v for v in range(g.vertex_count) if v not in dropped]
    remap = IndexRemap(kept)
    edges = [
        (remap.new_of(u), remap.new_of(v))
        for u, v in g.edges()
        if u not in dropped and v not in dropped
    ]
    labels = {remap.new_of(v): s for v, s in g.labels.items() if v not in dropped}
    return Graph(len(kept), edges, labels), remap


def edges_between(
    g: Graph, s: Iterable[int] | VertexSet, t: Iterable[int] | VertexSet
) -> list[tuple[int, int]]:
    """Edges with one end in s and the other in t, each reported once."""
    smask = _coerce_vertexset(g, s).mask()
    tmask = _coerce_vertexset(g, t).mask()
    out = []
    for u, v in g.edges():
        ub, vb = 1 << u, 1 << v
        if (ub & smask and vb & tmask) or (ub & tmask and vb & smask):
            out.append((u, v))
    return out


def components_of_mask(masks: Sequence[int], mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, as masks.

    Ordered by smallest contained vertex.
    """
    out = []
    todo = mask
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier ^= frontier & -frontier
            grow = masks[v] & mask & ~comp
            comp |= grow
            frontier |= grow
        out.append(comp)
        todo &= ~comp
    return out


def components(g: Graph) -> ComponentReport:
    """Connected components partitioning V(g); odd_count is the o(G) tally."""
    full = (1 << g.vertex_count) - 1
    comps = [
        VertexSet(tuple(_bits(c))) for c in components_of_mask(g.adjacency_masks, full)
    ]
    odd = sum(1 for c in comps if len(c) % 2 == 1)
    return ComponentReport(tuple(comps), odd, len(comps) - odd)
