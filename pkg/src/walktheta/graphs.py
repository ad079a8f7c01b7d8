"""Simple undirected graphs: parsing, named generators, matrices, strong product."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

__all__ = [
    "Graph",
    "Graph6ParseError",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "generate_named",
    "adjacency",
    "laplacian",
    "min_degree",
    "strong_product",
    "NAMED_GRAPHS",
]


class Graph6ParseError(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with an unordered edge set."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        canon = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} has endpoint outside [0, {self.n})")
            canon.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def add_isolated_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.edges)

    def is_regular(self) -> bool:
        deg = self.degrees()
        return self.n == 0 or all(d == deg[0] for d in deg)


def _pair_order(n: int):
    # graph6 bit order: upper triangle, column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(data) -> Graph:
    """Decode one graph6 line (standard short form, n <= 62).

    Accepts bytes or str, with an optional '>>graph6<<' prefix.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6ParseError("empty graph6 input", 0)
    for off, b in enumerate(data):
        if not (63 <= b <= 126):
            raise Graph6ParseError(f"character {b!r} outside graph6 range [63, 126]", off)
    if data[0] == 126:
        raise Graph6ParseError("long-form graph6 (n > 62) is not supported", 0)
    n = data[0] - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6ParseError(f"data section too short: need {need} bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6ParseError("trailing garbage after graph6 data", 1 + need)
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = {(i, j) for (i, j), bit in zip(_pair_order(n), bits) if bit}
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> bytes:
    """Inverse of parse_graph6 (short form only)."""
    if g.n > 62:
        raise ValueError("short-form graph6 supports n <= 62 only")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pair_order(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [g.n + 63]
    for k in range(0, len(bits), 6):
        v = 0
        for bit in bits[k:k + 6]:
            v = (v << 1) | bit
        out.append(v + 63)
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    """Parse 'n' followed by whitespace-separated 'i j' pairs; duplicates collapse."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty edge-list input")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ValueError(f"vertex count is not an integer: {tokens[0]!r}") from None
    rest = tokens[1:]
    if len(rest) % 2:
        raise ValueError("odd number of endpoint tokens")
    edges = set()
    for a, b in zip(rest[::2], rest[1::2]):
        try:
            i, j = int(a), int(b)
        except ValueError:
            raise ValueError(f"non-integer endpoint: {a!r} {b!r}") from None
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) has endpoint outside [0, {n})")
        edges.add((min(i, j), max(i, j)))
    return Graph(n, frozenset(edges))


# Fixed edge list of the 10-vertex, 18-edge Golomb graph: a hexagonal wheel
# (rim 1-2-6-5-7-3-1, hub 4) with an outer triangle {0, 8, 9} attached to
# alternating rim vertices.
GOLOMB_EDGES = (
    (0, 8), (0, 9), (8, 9),
    (0, 1), (6, 8), (7, 9),
    (1, 4), (2, 4), (3, 4), (4, 5), (4, 6), (4, 7),
    (1, 2), (1, 3), (2, 6), (3, 7), (5, 6), (5, 7),
)


def _gen_empty(n: int) -> Graph:
    return Graph(n)


def _gen_complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def _gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def _gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def _gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, frozenset(outer + inner + spokes))


def _gen_golomb() -> Graph:
    return Graph(10, frozenset(GOLOMB_EDGES))


def _gen_kneser(n: int, k: int) -> Graph:
    if not (1 <= k <= n):
        raise ValueError(f"kneser needs 1 <= k <= n, got n={n}, k={k}")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = {
        (a, b)
        for a, b in combinations(range(len(subsets)), 2)
        if not (subsets[a] & subsets[b])
    }
    return Graph(len(subsets), frozenset(edges))


NAMED_GRAPHS = ("empty", "complete", "cycle", "path", "petersen", "golomb", "kneser")


def generate_named(name: str, n: int = None, k: int = None) -> Graph:
    """Build a canonical labeled instance of a named graph family."""
    if name == "empty":
        _require_n(name, n)
        return _gen_empty(n)
    if name == "complete":
        _require_n(name, n)
        return _gen_complete(n)
    if name == "cycle":
        _require_n(name, n)
        return _gen_cycle(n)
    if name == "path":
        _require_n(name, n)
        return _gen_path(n)
    if name == "petersen":
        return _gen_petersen()
    if name == "golomb":
        return _gen_golomb()
    if name == "kneser":
        _require_n(name, n)
        if k is None:
            raise ValueError("kneser needs parameter k")
        return _gen_kneser(n, k)
    raise ValueError(f"unknown graph name {name!r}; expected one of {NAMED_GRAPHS}")


def _require_n(name: str, n) -> None:
    if n is None:
        raise ValueError(f"{name} needs parameter n")


def adjacency(g: Graph) -> np.ndarray:
    """0/1 adjacency matrix as a dense symmetric float array."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A; row sums are exactly zero."""
    a = adjacency(g)
    return np.diag(a.sum(axis=1)) - a


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(g.degrees())


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product with pair (i, j) labeled i * h.n + j."""
    edges = set()
    pairs = [(i, j) for i in range(g.n) for j in range(h.n)]
    for (i, j), (i2, j2) in combinations(pairs, 2):
        g_adj = g.has_edge(i, i2)
        h_adj = h.has_edge(j, j2)
        if (g_adj and h_adj) or (g_adj and j == j2) or (i == i2 and h_adj):
            edges.add((i * h.n + j, i2 * h.n + j2))
    return Graph(g.n * h.n, frozenset(edges))
