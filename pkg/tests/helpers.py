"""Independent oracles for the test suite.

Everything here is deliberately naive: exhaustive dynamic programs and
plain backtracking with no heuristics, sharing no code with the package
search engines they check.
"""

from functools import lru_cache
from itertools import combinations
from pathlib import Path
from random import Random

from mkg import Graph, parse_graph6

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name):
    out = []
    for line in (FIXTURES / name).read_text().splitlines():
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out


def random_graph(rng: Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def brute_matching_number(g: Graph) -> int:
    """Exhaustive DP over vertex subsets; fine up to n ~ 16."""
    adjm = [0] * g.n
    for u, v in g.edges:
        adjm[u] |= 1 << v
        adjm[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        if avail == 0:
            return 0
        bit = avail & -avail
        v = bit.bit_length() - 1
        rest = avail ^ bit
        result = best(rest)  # v stays unmatched
        cand = adjm[v] & rest
        while cand:
            ubit = cand & -cand
            cand ^= ubit
            result = max(result, 1 + best(rest ^ ubit))
        return result

    return best((1 << g.n) - 1)


def brute_matchings(g: Graph, r: int):
    """All r-matchings straight from combinations, as sorted tuples."""
    def disjoint(es):
        vs = [w for e in es for w in g.edges[e]]
        return len(vs) == len(set(vs))
    return [c for c in combinations(range(g.m), r) if disjoint(c)]


def brute_chromatic(g: Graph) -> int:
    """Smallest k admitting a proper coloring, by plain recursion over
    vertices in index order.  No ordering heuristics, no bounds."""
    if g.n == 0:
        return 0
    adj = [sorted(s) for s in g.adj]

    def colorable(k: int) -> bool:
        col = [-1] * g.n

        def rec(i: int) -> bool:
            if i == g.n:
                return True
            for c in range(k):
                if all(col[w] != c for w in adj[i] if w < i):
                    col[i] = c
                    if rec(i + 1):
                        return True
            col[i] = -1
            return False

        return rec(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_colorable(g: Graph, k: int) -> bool:
    """Exhaustive k-colorability, used to confirm non-(chi-1)-colorability."""
    if g.n == 0:
        return True
    if k == 0:
        return False
    adj = [sorted(s) for s in g.adj]

    def rec(i: int, col) -> bool:
        if i == g.n:
            return True
        for c in range(k):
            if all(col[w] != c for w in adj[i] if w < i):
                col[i] = c
                if rec(i + 1, col):
                    return True
        col[i] = -1
        return False

    return rec(0, [-1] * g.n)


def brute_ex_multi(g: Graph, rs) -> dict:
    """ex(g, rK2) for each r in rs, over all 2^m edge subsets via a
    subset nu DP (m <= ~16).  One DP serves every r."""
    m = g.m
    conflict = [0] * m
    for i, (u, v) in enumerate(g.edges):
        for j, (x, y) in enumerate(g.edges):
            if {u, v} & {x, y}:
                conflict[i] |= 1 << j
    nu = [0] * (1 << m)
    for s in range(1, 1 << m):
        bit = s & -s
        e = bit.bit_length() - 1
        nu[s] = max(nu[s ^ bit], 1 + nu[s & ~conflict[e]])
    out = {}
    for r in rs:
        out[r] = max(s.bit_count() for s in range(1 << m) if nu[s] <= r - 1)
    return out


def brute_ex(g: Graph, r: int) -> int:
    return brute_ex_multi(g, [r])[r]


def reachability_connected(g: Graph) -> bool:
    """Connectivity via a brute transitive-closure matrix."""
    if g.n <= 1:
        return True
    reach = [[u == v or v in g.adj[u] for v in range(g.n)]
             for u in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(g.n):
                    if row_k[j]:
                        row_i[j] = True
    return all(reach[0])
