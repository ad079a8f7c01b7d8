"""Shared fixtures: a graph corpus, random generators, and a plain alpha oracle."""

from __future__ import annotations

import numpy as np
import pytest

from walktheta.graphs import Graph, generate_named, parse_edge_list


def build_corpus() -> list:
    """Named graphs covering regular, irregular, disconnected, and edgeless cases."""
    star4 = parse_edge_list("5 0 4 1 4 2 4 3 4")
    path5_iso = generate_named("path", n=5).add_isolated_vertex()
    return [
        ("K1", generate_named("empty", n=1)),
        ("empty3", generate_named("empty", n=3)),
        ("empty6", generate_named("empty", n=6)),
        ("K2", generate_named("complete", n=2)),
        ("K3", generate_named("complete", n=3)),
        ("K4", generate_named("complete", n=4)),
        ("K6", generate_named("complete", n=6)),
        ("C4", generate_named("cycle", n=4)),
        ("C5", generate_named("cycle", n=5)),
        ("C6", generate_named("cycle", n=6)),
        ("C7", generate_named("cycle", n=7)),
        ("P2", generate_named("path", n=2)),
        ("P3", generate_named("path", n=3)),
        ("P5", generate_named("path", n=5)),
        ("P17", generate_named("path", n=17)),
        ("petersen", generate_named("petersen")),
        ("golomb", generate_named("golomb")),
        ("kneser62", generate_named("kneser", n=6, k=2)),
        ("star4", star4),
        ("P5+iso", path5_iso),
    ]


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


def random_graph(rng: np.random.Generator, n_max: int = 12, allow_isolated: bool = True) -> Graph:
    n = int(rng.integers(1, n_max + 1))
    p = float(rng.uniform(0.05, 0.9))
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    g = Graph(n, frozenset(edges))
    if allow_isolated and rng.random() < 0.3:
        g = g.add_isolated_vertex()
    return g


def random_weighted_matrix(rng: np.random.Generator, n_min: int = 3, n_max: int = 10) -> np.ndarray:
    """Random nonzero symmetric zero-diagonal matrix supported on a random graph."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.uniform(0.2, 0.9))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if edges:
            break
    a = np.zeros((n, n))
    for i, j in edges:
        w = float(rng.uniform(0.2, 2.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        a[i, j] = a[j, i] = w
    return a


def plain_alpha(g: Graph) -> int:
    """Independence number by exhaustive subset enumeration (oracle, n <= ~20)."""
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    best = 0
    for mask in range(1 << g.n):
        m = mask
        ok = True
        while m:
            b = m & -m
            if adj[b.bit_length() - 1] & mask:
                ok = False
                break
            m ^= b
        if ok:
            best = max(best, bin(mask).count("1"))
    return best
