"""Simple undirected graphs with canonical edge indexing, plus graph6 I/O.

Vertices are dense integers 0..n-1.  Edges are stored as a tuple of pairs
(u, v) with u < v, sorted lexicographically; the position of a pair in that
tuple is its edge index.  Every other module refers to edges by index, so
this ordering is load-bearing: certificates, matchings and colorings all
name edges through it.

graph6 support is deliberately short-form only (n <= 62): the intended
inputs are desk-scale catalogs of small graphs.
"""

from __future__ import annotations

import re
from collections import deque


class Graph6Error(ValueError):
    """Malformed graph6 text. byte_offset points at the offending byte."""

    def __init__(self, message: str, byte_offset: int):
        super().__init__(f"{message} (byte offset {byte_offset})")
        self.byte_offset = byte_offset


class Graph:
    """Immutable simple graph with canonical (sorted) edge indexing.

    Attributes:
        n: number of vertices, labeled 0..n-1.
        edges: sorted tuple of (u, v) pairs with u < v; index into this
            tuple is the canonical edge index.
        m: number of edges.
        adj: tuple of frozensets, adj[v] = neighbors of v.

    The null graph (n=0) is legal and counts as connected.
    """

    __slots__ = ("n", "edges", "m", "adj", "_eindex", "_evmask", "_hash",
                 "__weakref__")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges = tuple(canon)
        self.m = len(canon)
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)
        self._eindex = {e: i for i, e in enumerate(canon)}
        self._evmask = None
        self._hash = hash((n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_index(self, u: int, v: int) -> int:
        """Canonical index of edge {u,v}; KeyError if absent."""
        return self._eindex[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u] if 0 <= u < self.n else False

    @property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        """Per-edge bitmask over vertices, evmask[i] = (1<<u) | (1<<v).

        Computed once on first use; shared by the matching and Kneser
        machinery.
        """
        if self._evmask is None:
            self._evmask = tuple((1 << u) | (1 << v) for u, v in self.edges)
        return self._evmask

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- graph6 --

_G6_PREFIX = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 (short form, n <= 62) into a Graph.

    The optional ">>graph6<<" header prefix is stripped.  Bit layout per
    the format definition: header byte n+63, then the upper-triangle
    adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
    packed big-endian into 6-bit groups, each offset by 63, padded with
    zero bits.

    Raises Graph6Error naming the byte offset on malformed input.
    """
    line = text.strip()
    if line.startswith(_G6_PREFIX):
        line = line[len(_G6_PREFIX):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character", exc.start) from None
    if not data:
        raise Graph6Error("empty graph6 line", 0)
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range 63..126", off)
    if data[0] == 126:
        raise Graph6Error("long-form size header (n > 62) not supported", 0)
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = len(data) - 1
    if body < need:
        raise Graph6Error(f"truncated body: need {need} bytes, got {body}",
                          len(data))
    if body > need:
        raise Graph6Error("trailing bytes after adjacency bits", 1 + need)
    bits = 0
    for byte in data[1:]:
        bits = (bits << 6) | (byte - 63)
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    edges = []
    k = need * 6 - 1  # most significant bit first
    for v in range(1, n):
        for u in range(v):
            if (bits >> k) & 1:
                edges.append((u, v))
            k -= 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as one short-form graph6 line (no trailing newline).

    Inverse of parse_graph6: labels are preserved, padding bits are zero.
    Raises ValueError for n > 62.
    """
    if g.n > 62:
        raise ValueError("graph6 short form requires n <= 62")
    out = bytearray([g.n + 63])
    eset = set(g.edges)
    acc = 0
    nb = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | ((u, v) in eset)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return out.decode("ascii")


def read_graph6_file(path) -> list[Graph]:
    """Parse every non-blank line of a graph6 file."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs


# ------------------------------------------------------------- generators --

def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(k: int) -> Graph:
    """K_{1,k}: hub 0 joined to leaves 1..k."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def disjoint_matching(n: int) -> Graph:
    """nK2: n disjoint edges (2i, 2i+1) on 2n vertices."""
    if n < 1:
        raise ValueError("disjoint_matching needs n >= 1")
    return Graph(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])


_GEN_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")

_GENERATORS = {
    "petersen": (petersen, False),
    "cycle": (cycle, True),
    "complete": (complete, True),
    "star": (star, True),
    "disjoint_matching": (disjoint_matching, True),
}


def generate(name: str) -> Graph:
    """Build a named graph from a spec string.

    Accepted forms: "petersen", "cycle(n)", "complete(n)", "star(k)",
    "disjoint_matching(n)".
    """
    match = _GEN_RE.match(name)
    if not match:
        raise ValueError(f"unrecognized generator spec: {name!r}")
    kind, arg = match.group(1), match.group(2)
    if kind not in _GENERATORS:
        raise ValueError(f"unknown generator {kind!r}")
    fn, wants_arg = _GENERATORS[kind]
    if wants_arg:
        if arg is None:
            raise ValueError(f"{kind} requires an integer parameter")
        return fn(int(arg))
    if arg is not None:
        raise ValueError(f"{kind} takes no parameter")
    return fn()


# ------------------------------------------------------------- predicates --

def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0; null and one-vertex graphs count
    as connected."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def bridges(g: Graph) -> list[int]:
    """Edge indices of all bridges, sorted ascending.

    Iterative lowpoint depth-first search, so deep hosts do not hit the
    interpreter recursion limit.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.append(g.edge_index(pv, v))
                continue
            if w == parent:
                continue  # the unique tree edge back up (simple graph)
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(sorted(g.adj[w]))))
            else:
                low[v] = min(low[v], disc[w])
    out.sort()
    return out


def is_cubic(g: Graph) -> bool:
    """True iff every vertex has degree exactly 3 (vacuously true for n=0)."""
    return all(len(a) == 3 for a in g.adj)
