"""Small simple graphs stored as per-vertex neighbour bitsets.

Vertices are 0-indexed internally.  Vertex subsets are plain ``int`` bitmasks
(bit ``i`` set means vertex ``i`` is present); the text formats accepted by
:func:`parse_edge_list` are 1-indexed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

WORD_WIDTH = 24


class CapacityError(ValueError):
    """Raised when a graph has more vertices than the bitset word holds."""


class GraphParseError(ValueError):
    """Malformed graph text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.n > WORD_WIDTH:
            raise CapacityError(f"{self.n} vertices exceed the word width {WORD_WIDTH}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has neighbours outside the vertex set")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > WORD_WIDTH:
            raise CapacityError(f"{n} vertices exceed the word width {WORD_WIDTH}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


NULL_GRAPH = Graph(0, ())


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``n=<int>;<u>-<v>,<u>-<v>,...`` with 1-indexed vertices.

    ``n=4;1-2,2-3,3-4`` is the path on four vertices and ``n=0;`` the null
    graph.  Whitespace around tokens is ignored and duplicate edges collapse.
    """
    pos = 0
    length = len(text)

    def skip_ws():
        nonlocal pos
        while pos < length and text[pos].isspace():
            pos += 1

    def read_int() -> tuple[int, int]:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < length and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise GraphParseError("expected an integer", start)
        return int(text[start:pos]), start

    skip_ws()
    if not text.startswith("n=", pos):
        raise GraphParseError("expected 'n='", pos)
    pos += 2
    n, n_at = read_int()
    if n > WORD_WIDTH:
        raise CapacityError(f"{n} vertices exceed the word width {WORD_WIDTH}")
    skip_ws()
    if pos >= length or text[pos] != ";":
        raise GraphParseError("expected ';' after vertex count", pos)
    pos += 1
    edges = set()
    skip_ws()
    if pos < length:
        while True:
            u, u_at = read_int()
            skip_ws()
            if pos >= length or text[pos] != "-":
                raise GraphParseError("expected '-' inside edge", pos)
            pos += 1
            v, v_at = read_int()
            for x, at in ((u, u_at), (v, v_at)):
                if not 1 <= x <= n:
                    raise GraphParseError(f"vertex {x} out of range [1,{n}]", at)
            if u == v:
                raise GraphParseError(f"loop at vertex {u}", u_at)
            edges.add((min(u, v) - 1, max(u, v) - 1))
            skip_ws()
            if pos >= length:
                break
            if text[pos] != ",":
                raise GraphParseError(f"unexpected character {text[pos]!r}", pos)
            pos += 1
    return Graph.from_edges(n, sorted(edges))


def encode_edge_list(g: Graph) -> str:
    return f"n={g.n};" + ",".join(f"{u + 1}-{v + 1}" for u, v in g.edges())


def parse_graph6(text: str) -> Graph:
    """Decode the short form of graph6 (at most 62 vertices)."""
    data = text.strip()
    if not data:
        raise GraphParseError("empty graph6 string", 0)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"character {ch!r} outside graph6 range 63-126", k)
    if data[0] == "~":
        raise GraphParseError("long-form graph6 is not supported", 0)
    n = ord(data[0]) - 63
    if n > WORD_WIDTH:
        raise CapacityError(f"{n} vertices exceed the word width {WORD_WIDTH}")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise GraphParseError(
            f"graph6 for n={n} needs {expected} characters, got {len(data)}",
            min(len(data), expected))
    stream = []
    for ch in data[1:]:
        val = ord(ch) - 63
        stream.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    stream = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    stream += [0] * (-len(stream) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(stream), 6):
        val = 0
        for b in stream[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


# ---------------------------------------------------------------------------
# families


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    # C_1 and C_2 degenerate to K_1 and K_2 (no multigraphs here).
    if n < 3:
        return path(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star on ``n`` vertices (``K_{1,n-1}``) with the centre as the last vertex."""
    if n <= 0:
        return NULL_GRAPH
    c = n - 1
    return Graph.from_edges(n, [(i, c) for i in range(c)])


def octopus(arms: Sequence[int]) -> Graph:
    """Hub is vertex 0; each arm is a path hanging off the hub, numbered consecutively."""
    if any(a < 1 for a in arms):
        raise ValueError("octopus arm lengths must be >= 1")
    edges = []
    nxt = 1
    for a in arms:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def spider(arms: Sequence[int]) -> Graph:
    return line_graph(octopus(arms))


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    size: int | tuple[int, ...]


_FAMILIES = {"path": path, "cycle": cycle, "complete": complete, "star": star}


def family(spec: FamilySpec | str, size=None) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec(spec, size)
    if spec.kind in _FAMILIES:
        if not isinstance(spec.size, int) or spec.size < 0:
            raise ValueError(f"{spec.kind} needs a non-negative integer size")
        return _FAMILIES[spec.kind](spec.size)
    if spec.kind in ("octopus", "spider"):
        arms = tuple(spec.size)
        return octopus(arms) if spec.kind == "octopus" else spider(arms)
    raise ValueError(f"unknown family {spec.kind!r}")


# ---------------------------------------------------------------------------
# structure


def induced(g: Graph, subset: int) -> Graph:
    """``G[I]`` relabelled to ``0..|I|-1`` preserving vertex order."""
    if subset & ~g.full:
        raise ValueError("subset is not contained in the vertex set")
    verts = list(bits(subset))
    index = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for w in bits(g.adj[v] & subset):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(verts), tuple(adj))


def component_of(g: Graph, v: int, within: int) -> int:
    """Vertex set of the component of ``g[within]`` containing ``v``."""
    comp = frontier = 1 << v
    while frontier:
        nbrs = 0
        for u in bits(frontier):
            nbrs |= g.adj[u]
        frontier = nbrs & within & ~comp
        comp |= frontier
    return comp


def components(g: Graph, subset: int | None = None) -> list[int]:
    rest = g.full if subset is None else subset
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def kappa(g: Graph, subset: int | None = None) -> int:
    return len(components(g, subset))


def is_connected_subset(g: Graph, subset: int) -> bool:
    if not subset:
        return False
    v = (subset & -subset).bit_length() - 1
    return component_of(g, v, subset) == subset


def connected_subsets(g: Graph) -> Iterator[int]:
    """Every nonempty ``I`` with ``G[I]`` connected, by popcount then value."""
    for mask in sorted(range(1, 1 << g.n), key=lambda m: (popcount(m), m)):
        if is_connected_subset(g, mask):
            yield mask


def is_even(g: Graph, subset: int | None = None) -> bool:
    return all(popcount(c) % 2 == 0 for c in components(g, subset))


def is_odd(g: Graph, subset: int | None = None) -> bool:
    return all(popcount(c) % 2 == 1 for c in components(g, subset))


def is_forest(g: Graph) -> bool:
    return len(g.edges()) == g.n - kappa(g)


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    adj = []
    for a, (u, v) in enumerate(es):
        row = 0
        for b, (x, y) in enumerate(es):
            if a != b and {u, v} & {x, y}:
                row |= 1 << b
        adj.append(row)
    return Graph(len(es), tuple(adj))


def spanning_subgraphs_no_isolated(g: Graph) -> Iterator[tuple[tuple[int, int], ...]]:
    """Edge subsets covering every vertex; the null graph yields the empty subset."""
    es = g.edges()
    for m in range(1 << len(es)):
        chosen = tuple(es[k] for k in bits(m))
        covered = 0
        for u, v in chosen:
            covered |= 1 << u | 1 << v
        if covered == g.full:
            yield chosen


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges()]
        offset += h.n
    return Graph.from_edges(offset, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def to_networkx(g: Graph):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: k for k, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])
