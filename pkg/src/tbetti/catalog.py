"""Small-graph enumeration: the graph atlas, free trees, forests, random graphs."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import networkx as nx

from .graphs import NULL_GRAPH, Graph, disjoint_union, from_networkx, kappa

ATLAS_MAX_N = 7


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_networkx(h) for h in nx.graph_atlas_g())


def all_graphs(max_n: int, min_n: int = 0, connected: bool = False) -> list[Graph]:
    """Every graph up to isomorphism with ``min_n <= n <= max_n`` (n at most 7)."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"the atlas stops at {ATLAS_MAX_N} vertices")
    out = [g for g in _atlas() if min_n <= g.n <= max_n]
    if connected:
        out = [g for g in out if g.n and kappa(g) == 1]
    return out


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All free trees on ``n`` vertices up to isomorphism."""
    if n <= 0:
        return (NULL_GRAPH,) if n == 0 else ()
    if n == 1:
        return (Graph(1, (0,)),)
    return tuple(from_networkx(t) for t in nx.nonisomorphic_trees(n))


def trees_up_to(max_n: int, min_n: int = 1) -> list[Graph]:
    return [t for n in range(min_n, max_n + 1) for t in trees(n)]


def _partitions(n: int, largest: int, allowed):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        if allowed(part):
            for rest in _partitions(n - part, part, allowed):
                yield (part,) + rest


def forests(n: int, even_only: bool = False) -> list[Graph]:
    """All forests on exactly ``n`` vertices up to isomorphism."""
    allowed = (lambda k: k % 2 == 0) if even_only else (lambda k: True)
    out = []
    for parts in _partitions(n, n, allowed):
        # multisets of trees per part size
        groups: dict[int, int] = {}
        for p in parts:
            groups[p] = groups.get(p, 0) + 1
        choices = [[]]
        for size, mult in groups.items():
            pool = range(len(trees(size)))
            choices = [c + [trees(size)[k] for k in combo]
                       for c in choices for combo in combinations_with_replacement(pool, mult)]
        out.extend(disjoint_union(*c) for c in choices)
    return out


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_forest(rng: random.Random, n: int) -> Graph:
    """Random forest: each vertex attaches to an earlier one or starts a new tree."""
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < 0.8]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
