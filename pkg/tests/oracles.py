"""Independent brute-force reference implementations.

Everything here deliberately avoids the package's search machinery: the
matching oracle enumerates instead of augmenting, deficiency is maximized
over all vertex subsets with its own component walk, and the extendability
oracle is the definition's double loop using only vertex deletion and
has_one_factor. Expected values frozen into tests were computed with these.
"""

from __future__ import annotations

from itertools import combinations

from matchext import Graph, VertexSet, delete_vertices, has_one_factor


def brute_max_matching_size(g: Graph) -> int:
    """Exhaustive branch over the lowest vertex: unmatched, or mated to each
    neighbor in turn. No memoization; every matching is explored."""
    masks = g.adjacency_masks

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = rec(rest)
        nb = masks[v] & rest
        while nb:
            ub = nb & -nb
            nb ^= ub
            cand = 1 + rec(rest ^ ub)
            if cand > best:
                best = cand
        return best

    return rec((1 << g.vertex_count) - 1)


def matchings_by_combinations(g: Graph, k: int) -> list[tuple[tuple[int, int], ...]]:
    """All k-matchings as sorted edge tuples, via k-subsets of the edge list."""
    out = []
    for combo in combinations(g.edges(), k):
        seen: set[int] = set()
        ok = True
        for u, v in combo:
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            out.append(tuple(combo))
    return out


def brute_has_one_factor(g: Graph) -> bool:
    n = g.vertex_count
    return n % 2 == 0 and brute_max_matching_size(g) * 2 == n


def brute_max_deficiency(g: Graph) -> int:
    """max over all U of (odd components of G - U) - |U|, own component walk."""
    n = g.vertex_count
    masks = g.adjacency_masks
    best: int | None = None
    for umask in range(1 << n):
        rem = ((1 << n) - 1) ^ umask
        odd = 0
        todo = rem
        while todo:
            comp = todo & -todo
            frontier = comp
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier ^= frontier & -frontier
                grow = masks[v] & rem & ~comp
                comp |= grow
                frontier |= grow
            if comp.bit_count() % 2 == 1:
                odd += 1
            todo &= ~comp
        value = odd - umask.bit_count()
        if best is None or value > best:
            best = value
    assert best is not None or n == 0
    return 0 if best is None else best


def naive_is_nk_extendable(g: Graph, n: int, k: int) -> bool:
    """The definition verbatim: every size-n deletion keeps a k-matching and
    every k-matching of the rest extends to a 1-factor."""
    for s in combinations(range(g.vertex_count), n):
        sub, _ = delete_vertices(g, VertexSet(s))
        k_matchings = matchings_by_combinations(sub, k)
        if not k_matchings:
            return False
        for m in k_matchings:
            used = {v for e in m for v in e}
            rest, _ = delete_vertices(sub, VertexSet.of(used))
            if not has_one_factor(rest):
                return False
    return True


def decode_graph6_reference(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Alternative graph6 decoder working over an explicit bit string."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    first = ord(s[0]) - 63
    if first < 63:
        n, data = first, s[1:]
    else:
        n = (ord(s[1]) - 63 << 12) | (ord(s[2]) - 63 << 6) | (ord(s[3]) - 63)
        data = s[4:]
    bit_string = "".join(format(ord(c) - 63, "06b") for c in data)
    edges = set()
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bit_string[pos] == "1":
                edges.add((i, j))
            pos += 1
    return n, edges
