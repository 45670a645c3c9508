"""Betti numbers of the real toric manifolds over graph associahedra and cubeahedra.

A Betti vector is a plain tuple ``(beta^0, beta^1, ...)`` with trailing zeros
trimmed.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .graphs import (
    Graph, bits, cycle, induced, is_forest, is_odd, kappa, line_graph, mask_of,
    popcount, spanning_subgraphs_no_isolated,
)
from .invariants import a_table, b_table, subset_structure


def trim(vec) -> tuple[int, ...]:
    vec = [int(x) for x in vec]
    while len(vec) > 1 and vec[-1] == 0:
        vec.pop()
    return tuple(vec)


def poly_mul(p, q) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return tuple(out)


def betti_assoc(g: Graph, table=None) -> tuple[int, ...]:
    """beta^i = sum of |a(G[I])| over subsets with |I| = 2i."""
    vals = (table or a_table(g)).values
    sizes = subset_structure(g).size
    out = [0] * (g.n // 2 + 1)
    for i in range(len(out)):
        out[i] = int(np.abs(vals[sizes == 2 * i]).sum())
    return trim(out)


def betti_cube(g: Graph, table=None) -> tuple[int, ...]:
    """beta^i = sum of |b(G[I])| over odd subsets with |I| + kappa(G[I]) = 2i."""
    vals = (table or b_table(g)).values
    st = subset_structure(g)
    weight = st.size.astype(np.int64) + st.kappa
    out = [0] * (g.n + 1)
    for i in range(len(out)):
        sel = st.odd & (weight == 2 * i)
        out[i] = int(np.abs(vals[sel]).sum())
    return trim(out)


def euler_characteristic(vec) -> int:
    return sum(x if i % 2 == 0 else -x for i, x in enumerate(vec))


def euler_char_assoc(g: Graph) -> int:
    return euler_characteristic(betti_assoc(g))


def euler_char_cube(g: Graph) -> int:
    return euler_characteristic(betti_cube(g))


# ---------------------------------------------------------------------------
# integer sequences


def catalan(k: int) -> int:
    if k < 0:
        return 0
    return comb(2 * k, k) // (k + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n; N(0, 0) = 1."""
    if n == 0:
        return int(k == 0)
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def central_binomial(k: int) -> int:
    return comb(2 * k, k) if k >= 0 else 0


def euler_zigzag(k: int) -> int:
    """Euler zigzag number A_k via the boustrophedon triangle; 0 for negative k."""
    if k < 0:
        return 0
    row = [1]
    for _ in range(k):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


# ---------------------------------------------------------------------------
# closed forms


def closed_form_assoc(family: str, vertices: int, i: int) -> int:
    """Betti number beta^i over the graph associahedron of a family member.

    ``vertices`` is the vertex count of the graph (``n + 1`` in the usual
    indexing of these formulas); ``star`` means ``K_{1, vertices - 1}``.
    Valid for ``1 <= i <= vertices // 2``.
    """
    v = vertices
    if not 1 <= i <= v // 2:
        raise ValueError(f"i={i} outside 1..{v // 2}")
    if family == "complete":
        return comb(v, 2 * i) * euler_zigzag(2 * i)
    if family == "path":
        return comb(v, i) - comb(v, i - 1)
    if family == "cycle":
        if v < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return comb(v, i) if 2 * i < v else comb(2 * i, i) // 2
    if family == "star":
        return comb(v - 1, 2 * i - 1) * euler_zigzag(2 * i - 1)
    raise ValueError(f"unknown family {family!r}")


def closed_form_cube(family: str, n: int, i: int) -> int:
    """Betti number beta^i over the graph cubeahedron of a family member.

    ``n`` is the vertex count for path, cycle and complete graphs and the
    number of leaves for ``star`` (the graph is ``K_{1,n}``).  Returns 0
    outside the support and 1 at ``i = 0``.
    """
    if i < 0:
        return 0
    if family == "star":
        return _binom(n, i) + _binom(n, 2 * i - 2) * euler_zigzag(2 * i - 2)
    if i == 0:
        return 1
    if family == "path":
        if i <= (n + 1) // 2:
            return comb(n + 1, i) - comb(n + 1, i - 1)
        return 0
    if family == "cycle":
        if i <= n // 2:
            return comb(n, i)
        if n % 2 == 1 and i == (n + 1) // 2:
            return comb(n - 1, i - 1)
        return 0
    if family == "complete":
        return _binom(n, 2 * i - 1) * euler_zigzag(2 * i - 1)
    raise ValueError(f"unknown family {family!r}")


def closed_form_betti(family: str, n: int, polytope: str) -> tuple[int, ...]:
    """Whole Betti vector from the closed forms (same parameterisation as the CLI)."""
    if polytope == "cube":
        return trim(closed_form_cube(family, n, i) for i in range(2 * n + 2))
    v = n + 1 if family == "star" else n
    return trim([1] + [closed_form_assoc(family, v, i) for i in range(1, v // 2 + 1)])


def b_closed_form(family: str, n: int) -> int:
    """Signed b-number of a family member with an odd number ``n`` of vertices.

    ``star`` is ``K_{1, n-1}``.  The cycle sign is ``(-1)^((n+1)/2)``, the
    same as the other three families (C_3 = K_3 forces this).
    """
    if n % 2 == 0:
        raise ValueError("closed forms need an odd vertex count")
    sign = -1 if ((n + 1) // 2) % 2 else 1
    if family == "complete":
        return sign * euler_zigzag(n)
    if family == "path":
        return sign * catalan((n - 1) // 2)
    if family == "cycle":
        return sign * comb(n - 1, (n - 1) // 2)
    if family == "star":
        return sign * euler_zigzag(n - 1)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# forests and line graphs


@dataclass
class ForestLineReport:
    betti_assoc: tuple[int, ...]
    betti_cube_line: tuple[int, ...]
    betti_equal: bool
    # Only filled for even forests: (a(G), sum of b(L(H))) and the absolute version.
    signed: tuple[int, int] | None = None
    absolute: tuple[int, int] | None = None
    flags: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def spanning_line_sum(g: Graph) -> tuple[int, int]:
    """(sum of b(L(H)), sum of |b(L(H))|) over spanning subgraphs without isolated vertices."""
    lg = line_graph(g)
    index = {e: k for k, e in enumerate(g.edges())}
    table = b_table(lg)
    signed = absolute = 0
    for chosen in spanning_subgraphs_no_isolated(g):
        # L(H) is the subgraph of L(G) induced on the chosen edges
        val = table[mask_of(index[e] for e in chosen)]
        signed += val
        absolute += abs(val)
    return signed, absolute


def forest_line_identity(g: Graph) -> ForestLineReport:
    if not is_forest(g):
        raise ValueError("graph is not a forest")
    ba = betti_assoc(g)
    bc = betti_cube(line_graph(g))
    rep = ForestLineReport(ba, bc, ba == bc)
    rep.flags["betti"] = ba == bc
    if subset_structure(g).even[g.full]:
        a = a_table(g).total
        signed, absolute = spanning_line_sum(g)
        rep.signed = (a, signed)
        rep.absolute = (abs(a), absolute)
        rep.flags["signed"] = a == signed
        rep.flags["absolute"] = abs(a) == absolute
    return rep


# ---------------------------------------------------------------------------
# partial Dyck words on Z_n


def _dyck_parse(word: str):
    """Match parentheses of a circular word.

    Returns ``(match, outer)`` where ``match`` maps left to right positions and
    ``outer`` holds the left positions of outermost pairs, or None when the
    word is not a partial Dyck word.
    """
    n = len(word)
    for start in range(n):
        stack = []
        match = {}
        outer = set()
        ok = True
        for k in range(n):
            pos = (start + k) % n
            ch = word[pos]
            if ch == "*":
                if stack:
                    ok = False
                    break
            elif ch == "(":
                if not stack:
                    outer.add(pos)
                stack.append(pos)
            else:
                if not stack:
                    ok = False
                    break
                match[stack.pop()] = pos
        if ok and not stack:
            return match, outer
    return None


def is_partial_dyck(word: str) -> bool:
    return _dyck_parse(word) is not None


def outermost_pairs(word: str) -> list[tuple[int, int]]:
    """(left, right) positions of the outermost parenthesis pairs."""
    parsed = _dyck_parse(word)
    if parsed is None:
        raise ValueError(f"{word!r} is not a partial Dyck word")
    match, outer = parsed
    return sorted((left, match[left]) for left in outer)


def dyck_vertex_set(word: str) -> int:
    """Positions holding an inner parenthesis or a left outermost one."""
    outer_right = {r for _, r in outermost_pairs(word)}
    return mask_of(k for k, ch in enumerate(word) if ch != "*" and k not in outer_right)


def partial_dyck_words(n: int, i: int):
    """All partial Dyck words on Z_n with exactly ``i`` left parentheses."""
    for lefts in combinations(range(n), i):
        rest = [k for k in range(n) if k not in lefts]
        for rights in combinations(rest, i):
            word = ["*"] * n
            for k in lefts:
                word[k] = "("
            for k in rights:
                word[k] = ")"
            w = "".join(word)
            if is_partial_dyck(w):
                yield w


@dataclass
class DyckCensus:
    n: int
    i: int
    count: int
    classes: dict          # outermost positions -> list of words
    class_b: dict          # outermost positions -> |b(H_f)|
    betti: int             # sum of |b(H_f)| over classes
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def partial_dyck_census(n: int, i: int) -> DyckCensus:
    if n < 1 or not 0 <= i <= n // 2:
        raise ValueError(f"need 0 <= i <= n // 2, got n={n}, i={i}")
    g = cycle(n)
    table = b_table(g)
    st = subset_structure(g)
    classes: dict = {}
    vertex_sets: dict = {}
    words = list(partial_dyck_words(n, i))
    for w in words:
        # keyed by oriented pairs: ")()(" and "()()" share positions but not pairs
        key = tuple(outermost_pairs(w))
        classes.setdefault(key, []).append(w)
        vertex_sets.setdefault(key, set()).add(dyck_vertex_set(w))
    class_b = {}
    checks = {"count": len(words) == comb(n, i), "class_size": True,
              "single_subgraph": True, "odd_weight": True, "surjective": True}
    for key, members in classes.items():
        vs = vertex_sets[key]
        if len(vs) != 1:
            checks["single_subgraph"] = False
        mask = next(iter(vs))
        class_b[key] = abs(table[mask])
        if len(members) != class_b[key]:
            checks["class_size"] = False
        if not st.odd[mask] or popcount(mask) + st.kappa[mask] != 2 * i:
            checks["odd_weight"] = False
    hit = {next(iter(v)) for v in vertex_sets.values()}
    wanted = {m for m in range(1 << n)
              if st.odd[m] and popcount(m) + st.kappa[m] == 2 * i}
    checks["surjective"] = hit == wanted
    betti = sum(class_b.values())
    cube = betti_cube(g)
    checks["betti"] = betti == (cube[i] if i < len(cube) else 0)
    return DyckCensus(n, i, len(words), classes, class_b, betti, checks)
