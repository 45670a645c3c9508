"""Betti numbers from the mod-2 characteristic matrix, by direct homology.

For a row subset ``S`` of the characteristic matrix, ``omega_S`` flags the
facets whose column has odd overlap with ``S``; ``P_omega`` is the part of
the dual sphere induced on the flagged facets.  Summing the reduced Betti
numbers of these subcomplexes over all ``S`` gives the Betti numbers of the
real toric manifold, independently of the a/b-number formulas.
"""
from __future__ import annotations

from dataclasses import dataclass

from .betti import poly_mul, trim
from .graphs import Graph, bits, components, connected_subsets, induced, is_odd, popcount
from .homology import (
    FaceCapExceeded, HomologyGroups, SimplicialComplex, _check_dd_zero, _sparse_invariants,
    boundary_rows, face_cap, gf2_rank, order_complex, reduced_homology,
)
from .invariants import bounded_poset, subset_structure
from .polytope import (
    Facet, FalsificationError, PolytopeModel, _tube_compatible, all_cliques, dual_complex,
    h_vector_graph, maximal_cliques, model_assoc, model_cube,
)


class TorsionFound(FalsificationError):
    pass


@dataclass(frozen=True)
class CharMatrix:
    """Columns as bitsets over ``rows``; column k belongs to facet k of the model."""
    rows: int
    columns: tuple[int, ...]

    def row(self, r: int) -> int:
        return sum(1 << k for k, c in enumerate(self.columns) if c >> r & 1)


def char_matrix(m: PolytopeModel) -> CharMatrix:
    cols = []
    for f, vec in zip(m.facets, m.normals):
        col = sum(1 << r for r, x in enumerate(vec) if x % 2)
        if not col:
            raise FalsificationError(f"facet {f} has an even normal vector")
        cols.append(col)
    return CharMatrix(m.dim, tuple(cols))


def omega(cm: CharMatrix, rows: int) -> int:
    """Facet bitset of the mod-2 sum of the selected rows."""
    return sum(1 << k for k, c in enumerate(cm.columns) if popcount(c & rows) % 2)


def nonsingular(m: PolytopeModel, cm: CharMatrix | None = None) -> bool:
    """Columns meeting at every vertex are independent over Z/2."""
    cm = cm or char_matrix(m)
    return all(gf2_rank([cm.columns[k] for k in bits(v)]) == m.dim for v in m.vertices)


def p_omega_complex(m: PolytopeModel, w: int) -> SimplicialComplex:
    """Subcomplex of the dual sphere induced on the facets flagged by ``w``."""
    return dual_complex(m).induced(list(bits(w)))


# ---------------------------------------------------------------------------
# the oracle


class _FaceStore:
    """All faces of a model's dual sphere, so each induced subcomplex is a filter."""

    def __init__(self, m: PolytopeModel, cap: int | None = None):
        cap = face_cap() if cap is None else cap
        layers = all_cliques(m.compat, m.dim)
        total = sum(len(layer) for layer in layers)
        if total > cap:
            raise FaceCapExceeded(f"{total} faces exceed the cap of {cap}")
        self.layers = [sorted(layer) for layer in layers]

    def homology(self, w: int, check: bool = False) -> HomologyGroups:
        by_dim = [[c for c in layer if not c & ~w] for layer in self.layers]
        while len(by_dim) > 1 and not by_dim[-1]:
            by_dim.pop()
        tuples = [[tuple(bits(c)) for c in layer] for layer in by_dim]
        top = len(tuples) - 2
        ranks, torsion = {}, {}
        prev = None
        for q in range(0, top + 1):
            d = boundary_rows(tuples[q], tuples[q + 1])
            if check and prev is not None:
                _check_dd_zero(prev, d)
            rk, tors = _sparse_invariants(d)
            ranks[q] = rk
            torsion[q - 1] = tuple(sorted(tors))
            prev = d
        torsion.setdefault(top, ())
        betti = {q: len(tuples[q + 1]) - ranks.get(q, 0) - ranks.get(q + 1, 0)
                 for q in range(-1, top + 1)}
        return HomologyGroups(betti, torsion)


@dataclass
class OracleRun:
    model: PolytopeModel
    betti: tuple[int, ...]
    torsion: dict           # row subset -> HomologyGroups, only where torsion appeared
    groups: dict            # row subset -> HomologyGroups


def oracle_model(m: PolytopeModel, cap: int | None = None, keep: bool = False) -> OracleRun:
    """Sum of reduced Betti numbers of P_omega over every row subset."""
    cm = char_matrix(m)
    store = _FaceStore(m, cap)
    out = [0] * (m.dim + 1)
    torsion = {}
    groups = {}
    for s in range(1 << cm.rows):
        h = store.homology(omega(cm, s))
        for q, r in h.betti.items():
            if r:
                out[q + 1] += r
        if not h.torsion_free():
            torsion[s] = h
        if keep:
            groups[s] = h
    return OracleRun(m, trim(out), torsion, groups)


def betti_via_homology(g: Graph, kind: str, cap: int | None = None) -> tuple[int, ...]:
    """Betti vector from the characteristic-matrix formula.

    The cube model is built on the whole graph; the associahedron of a
    disconnected graph is a product, so its Betti polynomial is the product
    of the components' polynomials.
    """
    if kind == "cube":
        return oracle_model(model_cube(g), cap).betti
    if kind != "assoc":
        raise ValueError(f"unknown polytope kind {kind!r}")
    out: tuple[int, ...] = (1,)
    for comp in components(g):
        out = poly_mul(out, oracle_model(model_assoc(induced(g, comp)), cap).betti)
    return trim(out)


def torsion_free_everywhere(g: Graph, kind: str) -> bool:
    if kind == "cube":
        return not oracle_model(model_cube(g)).torsion
    return all(not oracle_model(model_assoc(induced(g, c))).torsion for c in components(g))


@dataclass
class CohomologyProfile:
    """Per degree: free rank and the number of Z/2 summands."""
    free: tuple[int, ...]
    z2: tuple[int, ...]
    h: tuple[int, ...]

    def degrees(self):
        return list(zip(self.free, self.z2))

    def describe(self, ascii_only: bool = False) -> list[str]:
        z, z2 = ("Z", "Z2") if ascii_only else ("ℤ", "ℤ₂")
        sup = (lambda k: f"^{k}") if ascii_only else (lambda k: str(k).translate(_SUP))
        out = []
        for a, b in self.degrees():
            terms = []
            if a:
                terms.append(z if a == 1 else z + sup(a))
            if b:
                terms.append(z2 if b == 1 else z2 + sup(b))
            out.append(("+" if ascii_only else "⊕").join(terms) or "0")
        return out


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def cohomology_profile(g: Graph, kind: str) -> CohomologyProfile:
    """Free ranks from the oracle, Z/2 counts h_i - beta^i; raises on torsion in any P_omega."""
    if kind == "cube":
        runs = [oracle_model(model_cube(g))]
    else:
        runs = [oracle_model(model_assoc(induced(g, c))) for c in components(g)]
    for run in runs:
        if run.torsion:
            s, grp = next(iter(run.torsion.items()))
            raise TorsionFound(f"torsion in P_omega for rows {s:b}: {grp}")
    betti: tuple[int, ...] = (1,)
    for run in runs:
        betti = poly_mul(betti, run.betti)
    h = h_vector_graph(g, kind)
    free = tuple(betti[i] if i < len(betti) else 0 for i in range(len(h)))
    z2 = tuple(hi - bi for hi, bi in zip(h, free))
    if any(x < 0 for x in z2):
        raise FalsificationError(f"Betti numbers {free} exceed the h-vector {h}")
    return CohomologyProfile(free, z2, h)


# ---------------------------------------------------------------------------
# the odd and even subcomplexes of the cubeahedron sphere


def _clique_complex(g: Graph, facets: list) -> SimplicialComplex:
    def rel(x: Facet, y: Facet) -> bool:
        if x.kind == "bar" and y.kind == "bar":
            return True
        if x.kind == "bar":
            x, y = y, x
        if y.kind == "bar":
            return not x.mask & y.mask
        return _tube_compatible(g, x.mask, y.mask)

    adj = [0] * len(facets)
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if rel(facets[i], facets[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    faces = [tuple(bits(c)) for c in maximal_cliques(adj)] if facets else [()]
    return SimplicialComplex.from_faces(len(facets), faces, facets)


def k_odd(g: Graph, s: int | None = None) -> SimplicialComplex:
    """Tubes meeting ``s`` in an odd number of vertices, plus the bars of ``s``."""
    s = g.full if s is None else s
    facets = [Facet("tube", m) for m in connected_subsets(g) if popcount(m & s) % 2]
    facets += [Facet("bar", 1 << i) for i in bits(s)]
    return _clique_complex(g, facets)


def k_even(h: Graph) -> SimplicialComplex:
    """Complement of ``k_odd(h)`` in the dual sphere: the even tubes."""
    if not is_odd(h):
        raise ValueError("k_even needs an odd graph")
    facets = [Facet("tube", m) for m in connected_subsets(h) if popcount(m) % 2 == 0]
    return _clique_complex(h, facets)


def lemma53_check(g: Graph, s: int) -> bool:
    """Homology of k_odd(g, s) equals that of k_odd(g[s]), torsion included."""
    a = reduced_homology(k_odd(g, s))
    b = reduced_homology(k_odd(induced(g, s)))
    return a.key() == b.key()


def lemma54_check(g: Graph) -> bool:
    if g.n == 0 or len(components(g)) != 1 or g.n % 2:
        raise ValueError("needs a connected even graph")
    return reduced_homology(k_odd(g)).is_trivial()


def alexander_check(g: Graph, s: int) -> bool:
    """Reduced Betti numbers of k_odd(H) and k_even(H) are Alexander dual in the dual sphere of H = g[s]."""
    h = induced(g, s)
    if not is_odd(h):
        raise ValueError("g[s] must be odd")
    odd = reduced_homology(k_odd(h))
    even = reduced_homology(k_even(h))
    d = popcount(s)
    return all(odd.rank(q) == even.rank(d - q - 2) for q in range(-1, d))


def k_odd_matches_p_omega(g: Graph, s: int) -> bool:
    """Direct description of k_odd equals P_omega of the cubeahedron as labelled complexes."""
    m = model_cube(g)
    direct = k_odd(g, s)
    via = p_omega_complex(m, omega(char_matrix(m), s))
    return direct.relabelled() == via.relabelled()


# ---------------------------------------------------------------------------
# signed subsets


@dataclass(frozen=True, order=True)
class SignedSet:
    plus: int
    minus: int

    def __str__(self):
        parts = []
        for v in bits(self.plus | self.minus):
            parts.append(f"{v + 1}" + ("'" if self.minus >> v & 1 else ""))
        return "".join(parts)


def _signed_lt(x: SignedSet, y: SignedSet) -> bool:
    return x != y and x.plus & y.plus == x.plus and x.minus & y.minus == x.minus


def type_b_poset(g: Graph):
    """Signed sets with disjoint parts whose union induces a nonempty even subgraph, by containment."""
    st = subset_structure(g)
    elems = []
    for u in range(1, 1 << g.n):
        if not st.even[u]:
            continue
        vs = list(bits(u))
        for signs in range(1 << len(vs)):
            minus = sum(1 << v for k, v in enumerate(vs) if signs >> k & 1)
            elems.append(SignedSet(u & ~minus, minus))
    return bounded_poset(sorted(elems), _signed_lt)


def type_b_homology(g: Graph) -> HomologyGroups:
    return reduced_homology(order_complex(type_b_poset(g)))


__all__ = [
    "CharMatrix", "char_matrix", "omega", "nonsingular", "p_omega_complex", "oracle_model",
    "OracleRun", "betti_via_homology", "torsion_free_everywhere", "CohomologyProfile",
    "cohomology_profile", "TorsionFound", "k_odd", "k_even", "lemma53_check",
    "lemma54_check", "alexander_check", "k_odd_matches_p_omega", "SignedSet",
    "type_b_poset", "type_b_homology",
]
