"""Combinatorial models of graph associahedra and graph cubeahedra.

A model is a list of facets, a compatibility relation between facets and an
integer normal vector per facet.  Both polytopes are flag, so the boundary
complex of the dual simplicial polytope is the clique complex of the
compatibility graph; vertices of the polytope are its maximal cliques.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from .betti import poly_mul, trim
from .graphs import (
    Graph, bits, components, connected_subsets, induced, is_connected_subset, mask_of,
    path, complete, star, popcount,
)
from .homology import SimplicialComplex, integer_det


class FalsificationError(AssertionError):
    """A property that must hold by theory failed on a computed instance."""


@dataclass(frozen=True, order=True)
class Facet:
    """``kind`` is "assoc" or "tube" (``mask`` a vertex set) or "bar" (``mask`` a single bit)."""
    kind: str
    mask: int

    def label(self) -> str:
        if self.kind == "bar":
            return f"{self.mask.bit_length()}'"
        return "".join(str(v + 1) for v in bits(self.mask)) or "{}"

    def __str__(self):
        return self.label()


@dataclass(frozen=True, eq=False)
class PolytopeModel:
    dim: int
    facets: tuple
    normals: tuple              # tuple of int tuples, aligned with facets
    compat: tuple               # compat[k]: bitset of facets compatible with facet k
    graph: Graph | None = None
    kind: str = ""

    def compatible(self, i: int, j: int) -> bool:
        return bool(self.compat[i] >> j & 1)

    def index(self, facet: Facet) -> int:
        return self._index[facet]

    @cached_property
    def _index(self):
        return {f: k for k, f in enumerate(self.facets)}

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Polytope vertices as bitsets over facet indices (maximal cliques)."""
        cliques = tuple(sorted(maximal_cliques(self.compat)))
        if self.dim == 0:
            return (0,)
        bad = [c for c in cliques if popcount(c) != self.dim]
        if bad:
            raise FalsificationError(
                f"maximal clique of size {popcount(bad[0])} in a {self.dim}-dimensional model")
        return cliques


def _tube_compatible(g: Graph, a: int, b: int) -> bool:
    if a & b == a or a & b == b:
        return True
    return not is_connected_subset(g, a | b)


def _compat_bitsets(facets, rel) -> tuple[int, ...]:
    m = len(facets)
    out = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if rel(facets[i], facets[j]):
                out[i] |= 1 << j
                out[j] |= 1 << i
    return tuple(out)


def model_assoc(g: Graph) -> PolytopeModel:
    """Graph associahedron of a connected graph.

    The distinguished vertex of the normal-vector rule is the highest label;
    normals live in the lattice spanned by the first ``n - 1`` coordinates.
    """
    n = g.n
    if n < 1 or len(components(g)) != 1:
        raise ValueError("graph associahedron model needs a connected nonempty graph")
    last = 1 << (n - 1)
    facets = tuple(Facet("assoc", m) for m in connected_subsets(g) if m != g.full)
    normals = []
    for f in facets:
        if f.mask & last:
            vec = [0 if f.mask >> j & 1 else 1 for j in range(n - 1)]
        else:
            vec = [-(f.mask >> j & 1) for j in range(n - 1)]
        normals.append(tuple(vec))
    compat = _compat_bitsets(facets, lambda x, y: _tube_compatible(g, x.mask, y.mask))
    return PolytopeModel(n - 1, facets, tuple(normals), compat, g, "assoc")


def model_cube(g: Graph) -> PolytopeModel:
    """Graph cubeahedron: tubes (including the full set when connected) and bars."""
    n = g.n
    facets = tuple([Facet("tube", m) for m in connected_subsets(g)] +
                   [Facet("bar", 1 << i) for i in range(n)])
    normals = []
    for f in facets:
        if f.kind == "tube":
            normals.append(tuple(f.mask >> j & 1 for j in range(n)))
        else:
            normals.append(tuple(-(f.mask >> j & 1) for j in range(n)))

    def rel(x: Facet, y: Facet) -> bool:
        if x.kind == "bar" and y.kind == "bar":
            return True
        if x.kind == "bar":
            x, y = y, x
        if y.kind == "bar":
            return not x.mask & y.mask
        return _tube_compatible(g, x.mask, y.mask)

    return PolytopeModel(n, facets, tuple(normals), _compat_bitsets(facets, rel), g, "cube")


def build_model(g: Graph, kind: str) -> PolytopeModel:
    if kind == "assoc":
        return model_assoc(g)
    if kind == "cube":
        return model_cube(g)
    raise ValueError(f"unknown polytope kind {kind!r}")


# ---------------------------------------------------------------------------
# cliques and the dual complex


def maximal_cliques(adj) -> list[int]:
    """Bron-Kerbosch with pivoting on neighbourhood bitsets."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: popcount(p & adj[u]))
        for v in list(bits(p & ~adj[pivot])):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << len(adj)) - 1, 0)
    return out


def all_cliques(adj, max_size: int | None = None) -> list[list[int]]:
    """All cliques (faces of the clique complex) grouped by size, as bitsets."""
    by_size: list[list[int]] = [[0]]

    def grow(c: int, cand: int, size: int):
        if max_size is not None and size >= max_size:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nc = c | low
            if len(by_size) <= size + 1:
                by_size.append([])
            by_size[size + 1].append(nc)
            # later candidates only, so each clique appears once
            grow(nc, cand & adj[v], size + 1)

    grow(0, (1 << len(adj)) - 1, 0)
    return by_size


def dual_complex(m: PolytopeModel) -> SimplicialComplex:
    """Boundary complex of the dual polytope, vertex k = facet k."""
    faces = [tuple(bits(c)) for c in m.vertices]
    return SimplicialComplex(len(m.facets), tuple(sorted(faces)), m.facets)


def f_vector(m: PolytopeModel) -> tuple[int, ...]:
    """Polytope face counts ``(f_0, ..., f_{d-1})``: vertices up to facets."""
    fstar = dual_f_vector(m)
    d = m.dim
    return tuple(fstar[d - k] for k in range(d))


def dual_f_vector(m: PolytopeModel) -> tuple[int, ...]:
    """``(f*_{-1}, f*_0, ..., f*_{d-1})`` of the dual simplicial sphere."""
    counts = [len(layer) for layer in all_cliques(m.compat, m.dim)]
    counts += [0] * (m.dim + 1 - len(counts))
    return tuple(counts)


def h_vector(m: PolytopeModel) -> tuple[int, ...]:
    """h from dual face counts via sum h_i t^i = sum f*_{k-1} (t-1)^(d-k); symmetry asserted."""
    d = m.dim
    fstar = dual_f_vector(m)
    h = [0] * (d + 1)
    for k in range(d + 1):
        # (t - 1)^(d-k) = sum_j C(d-k, j) t^j (-1)^(d-k-j)
        e = d - k
        coef = 1
        for j in range(e + 1):
            h[j] += fstar[k] * coef * (-1) ** (e - j)
            coef = coef * (e - j) // (j + 1)
    h = tuple(h)
    if h != h[::-1]:
        raise FalsificationError(f"h-vector {h} is not symmetric")
    return h


def h_vector_graph(g: Graph, kind: str) -> tuple[int, ...]:
    """h-vector of either polytope of ``g``; disconnected graphs multiply componentwise."""
    if kind == "cube":
        return h_vector(model_cube(g))
    out: tuple[int, ...] = (1,)
    for comp in components(g):
        out = poly_mul(out, h_vector(model_assoc(induced(g, comp))))
    return out


def facet_count_expected(g: Graph, kind: str) -> int:
    tubes = sum(1 for _ in connected_subsets(g))
    return tubes - 1 if kind == "assoc" else tubes + g.n


def delzant_check(m: PolytopeModel) -> bool:
    """Normals at every vertex form a lattice basis."""
    for v in m.vertices:
        rows = [m.normals[k] for k in bits(v)]
        if abs(integer_det(rows)) != 1:
            return False
    return True


def normals_primitive(m: PolytopeModel) -> bool:
    return all(gcd(*vec) == 1 for vec in m.normals) if m.dim else True


def with_normals(m: PolytopeModel, normals) -> PolytopeModel:
    return PolytopeModel(m.dim, m.facets, tuple(map(tuple, normals)), m.compat, m.graph, m.kind)


# ---------------------------------------------------------------------------
# equivalences between models


@dataclass
class FacetMap:
    source: PolytopeModel
    target: PolytopeModel
    image: dict                  # source facet index -> target facet index
    matrix: tuple | None = None  # unimodular U with U n(F) = n(phi F), when checked
    details: dict = field(default_factory=dict)


def _check_relation(src: PolytopeModel, dst: PolytopeModel, image: dict):
    if sorted(image.values()) != list(range(len(dst.facets))) or len(image) != len(src.facets):
        raise FalsificationError("facet map is not a bijection")
    for i in range(len(src.facets)):
        for j in range(i + 1, len(src.facets)):
            if src.compatible(i, j) != dst.compatible(image[i], image[j]):
                raise FalsificationError(
                    f"compatibility not preserved for {src.facets[i]}, {src.facets[j]}")


def path_poset_iso(n: int) -> FacetMap:
    """Facet bijection from the associahedron of P_{n+1} to the cubeahedron of P_n.

    A tube avoiding the last vertex maps to itself; a tube containing it, of
    size s, maps to the bar of vertex ``n - s`` (0-indexed).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    src = model_assoc(path(n + 1))
    dst = model_cube(path(n))
    last = 1 << n
    image = {}
    for k, f in enumerate(src.facets):
        if f.mask & last:
            target = Facet("bar", 1 << (n - popcount(f.mask)))
        else:
            target = Facet("tube", f.mask)
        image[k] = dst.index(target)
    _check_relation(src, dst, image)
    return FacetMap(src, dst, image)


def _solve_unimodular(frame_src, frame_dst):
    """U with U @ frame_src[k] = frame_dst[k] for each k (columns), exact rationals."""
    d = len(frame_src)
    # rows of B are source normals; solve U B^T = B'^T, i.e. B U^T = B'
    a = [[Fraction(x) for x in row] + [Fraction(y) for y in dst]
         for row, dst in zip(frame_src, frame_dst)]
    for col in range(d):
        piv = next(r for r in range(col, d) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    ut = [row[d:] for row in a]            # U^T
    u = [[ut[j][i] for j in range(d)] for i in range(d)]
    if any(x.denominator != 1 for row in u for x in row):
        return None
    return tuple(tuple(int(x) for x in row) for row in u)


def star_fan_iso(n: int) -> FacetMap:
    """Normal-fan equivalence from the cubeahedron of K_n to the associahedron of K_{1,n}.

    Bars go to leaf singletons; a tube ``I`` goes to the complement of ``I``
    in the star's vertex set (which contains the centre).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    src = model_cube(complete(n))
    dst = model_assoc(star(n + 1))
    full = (1 << (n + 1)) - 1
    image = {}
    for k, f in enumerate(src.facets):
        if f.kind == "bar":
            target = Facet("assoc", f.mask)
        else:
            target = Facet("assoc", full & ~f.mask)
        image[k] = dst.index(target)
    _check_relation(src, dst, image)
    frame = list(bits(src.vertices[0]))
    u = _solve_unimodular([src.normals[k] for k in frame],
                          [dst.normals[image[k]] for k in frame])
    if u is None or abs(integer_det(u)) != 1:
        raise FalsificationError("no unimodular matrix carries the normal frame")
    for k, vec in enumerate(src.normals):
        got = tuple(sum(u[i][j] * vec[j] for j in range(n)) for i in range(n))
        if got != dst.normals[image[k]]:
            raise FalsificationError(f"normal of {src.facets[k]} is not carried by U")
    return FacetMap(src, dst, image, u)


def square_facet_witness(m: PolytopeModel) -> list[tuple[Facet, Facet]]:
    """Pairs of quadrilateral facets with opposite normals (3-dimensional models only)."""
    if m.dim != 3:
        raise ValueError("square facet witness needs a 3-dimensional model")
    squares = [k for k in range(len(m.facets))
               if sum(1 for v in m.vertices if v >> k & 1) == 4]
    out = []
    for i, a in enumerate(squares):
        for b in squares[i + 1:]:
            if all(x == -y for x, y in zip(m.normals[a], m.normals[b])):
                out.append((m.facets[a], m.facets[b]))
    return out


__all__ = [
    "Facet", "PolytopeModel", "FalsificationError", "model_assoc", "model_cube",
    "build_model", "maximal_cliques", "all_cliques", "dual_complex", "f_vector",
    "dual_f_vector", "h_vector", "h_vector_graph", "facet_count_expected", "delzant_check",
    "normals_primitive", "with_normals", "path_poset_iso", "star_fan_iso",
    "square_facet_witness", "FacetMap", "mask_of",
]
