"""Matchings: enumeration, exact maximum matching, perfect-matching checks.

A matching is a set of pairwise vertex-disjoint edges, held as sorted
edge indices into the host graph's canonical edge list.  Enumeration
order is lexicographic on those index tuples; the Kneser construction
inherits its vertex numbering from this order, so it must never change.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import Graph


@dataclass(frozen=True)
class Matching:
    """A matching given by its sorted tuple of edge indices."""

    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_mask(self) -> int:
        """Bitmask over edge indices; used for disjointness tests."""
        mask = 0
        for e in self.edges:
            mask |= 1 << e
        return mask

    def endpoint_pairs(self, g: Graph) -> tuple[tuple[int, int], ...]:
        return tuple(g.edges[e] for e in self.edges)


def enumerate_matchings(g: Graph, r: int) -> list[Matching]:
    """All matchings of size exactly r, in lexicographic order.

    Backtracks over edges in index order, keeping a covered-vertex mask,
    and prunes a branch as soon as the remaining edges cannot reach size
    r.  r=0 yields exactly one empty matching.
    """
    if r < 0:
        raise ValueError("matching size must be >= 0")
    if r == 0:
        return [Matching(())]
    evmask = g.edge_vertex_masks
    m = g.m
    out: list[Matching] = []
    cur: list[int] = []

    def rec(start: int, covered: int) -> None:
        need = r - len(cur)
        if need == 0:
            out.append(Matching(tuple(cur)))
            return
        for i in range(start, m):
            if m - i < need:  # remaining edges cannot reach size r
                break
            if covered & evmask[i]:
                continue
            cur.append(i)
            rec(i + 1, covered | evmask[i])
            cur.pop()

    rec(0, 0)
    return out


def has_matching_of_size(g: Graph, r: int, allowed=None):
    """First r-matching of g using only allowed edges, or None.

    allowed may be None (all edges), an int bitmask over edge indices, or
    an iterable of edge indices.  Same backtracking as enumeration but
    with early exit on the first hit; this is the check the extremal
    branch-and-bound leans on.
    """
    if r < 0:
        raise ValueError("matching size must be >= 0")
    if r == 0:
        return Matching(())
    if allowed is None:
        idxs = list(range(g.m))
    elif isinstance(allowed, int):
        idxs = []
        rest = allowed
        while rest:
            bit = rest & -rest
            idxs.append(bit.bit_length() - 1)
            rest ^= bit
    else:
        idxs = sorted(allowed)
    k = len(idxs)
    if k < r:
        return None
    evmask = g.edge_vertex_masks
    cur: list[int] = []

    def rec(start: int, covered: int):
        need = r - len(cur)
        if need == 0:
            return Matching(tuple(cur))
        for pos in range(start, k):
            if k - pos < need:
                break
            e = idxs[pos]
            if covered & evmask[e]:
                continue
            cur.append(e)
            found = rec(pos + 1, covered | evmask[e])
            if found is not None:
                return found
            cur.pop()
        return None

    return rec(0, 0)


def matching_number(g: Graph) -> int:
    """Exact maximum matching size via augmenting paths with blossom
    contraction.

    The brute-force oracle in the test suite pins this down on all small
    graphs; the algorithm itself is the standard O(n^3) one.
    """
    n = g.n
    if n == 0 or g.m == 0:
        return 0
    adj = [sorted(g.adj[v]) for v in range(n)]
    match = [-1] * n

    # cheap greedy start cuts the number of augmenting phases
    for u, v in g.edges:
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_path = [False] * n
        x = a
        while True:
            x = base[x]
            used_path[x] = True
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if used_path[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> int:
        nonlocal base, p
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle found: contract the blossom
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the alternating path to root
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return 1
                    used[match[to]] = True
                    queue.append(match[to])
        return 0

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return sum(1 for v in range(n) if match[v] != -1) // 2


def enumerate_perfect_matchings(g: Graph) -> list[Matching]:
    """All perfect matchings; empty for odd order."""
    if g.n % 2 == 1:
        return []
    return enumerate_matchings(g, g.n // 2)


def schonberger_check(g: Graph):
    """Does every pair of distinct edges miss some perfect matching?

    Returns (True, None), or (False, (e, f)) with the lexicographically
    first pair of edge indices such that no perfect matching avoids both.
    Requires m >= 2.
    """
    if g.m < 2:
        raise ValueError("schonberger_check needs at least two edges")
    pm_masks = [pm.edge_mask() for pm in enumerate_perfect_matchings(g)]
    for e in range(g.m):
        for f in range(e + 1, g.m):
            banned = (1 << e) | (1 << f)
            if not any(mask & banned == 0 for mask in pm_masks):
                return False, (e, f)
    return True, None


def perfect_matchings_pairwise_intersect(g: Graph) -> bool:
    """True iff every two distinct perfect matchings share an edge.

    Vacuously true with at most one perfect matching.  For a snark of
    order 2r this is the mechanism that leaves KG(G, rK2) edgeless.
    """
    masks = [pm.edge_mask() for pm in enumerate_perfect_matchings(g)]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j] == 0:
                return False
    return True
