"""Property sweeps behind ``tbetti verify``.

Each suite returns a :class:`SuiteResult`; failures carry a readable
counterexample (graph6 string plus what differed).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import betti as B
from . import invariants as inv
from .catalog import all_graphs, forests, random_forest, random_graph, trees_up_to
from .graphs import (
    Graph, complete, components, disjoint_union, encode_graph6, induced, is_odd, kappa,
    popcount, star,
)
from .homology import euler_characteristic, order_complex
from .polytope import (
    build_model, delzant_check, facet_count_expected, h_vector, model_assoc, model_cube,
    normals_primitive,
)
from .toric import (
    alexander_check, betti_via_homology, k_odd_matches_p_omega, lemma53_check,
    lemma54_check, nonsingular, oracle_model, type_b_homology, type_b_poset,
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str):
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)


def _tag(g: Graph) -> str:
    return f"g6:{encode_graph6(g)}"


DEFAULT_MAX_N = {"duality": 10, "signs": 10, "forest": 9, "flags": 5, "oracle": 5,
                 "lemmas": 5, "dyck": 10, "typeB": 4}


def suite_duality(max_n: int = 10, seed: int = 0, count: int = 200) -> SuiteResult:
    res = SuiteResult("duality")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng, rng.randint(0, max_n))
        a, b = inv.a_table(g), inv.b_table(g)
        res.check(inv.b_via_a(g) == b.total, f"{_tag(g)}: b via a != b")
        res.check(inv.a_via_b(g) == a.total, f"{_tag(g)}: a via b != a")
        res.check(list(inv.b_table_via_a(g)) == list(b.values), f"{_tag(g)}: b-table via a")
        res.check(B.euler_characteristic(B.betti_cube(g, b)) == a.total,
                  f"{_tag(g)}: chi(cube) != a")
        sgn = -1 if g.n % 2 else 1
        res.check(sgn * B.euler_characteristic(B.betti_assoc(g, a)) == b.total,
                  f"{_tag(g)}: chi(assoc) != b")
        h = random_graph(rng, rng.randint(0, max(0, max_n - g.n)))
        u = disjoint_union(g, h)
        res.check(inv.a_number(u) == a.total * inv.a_number(h), f"{_tag(g)} + {_tag(h)}: a product")
        res.check(inv.b_number(u) == b.total * inv.b_number(h), f"{_tag(g)} + {_tag(h)}: b product")
    return res


def suite_signs(max_n: int = 10, seed: int = 0, count: int = 200) -> SuiteResult:
    res = SuiteResult("signs")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng, rng.randint(0, max_n))
        a, b = inv.a_table(g), inv.b_table(g)
        st = inv.subset_structure(g)
        for mask in range(1 << g.n):
            av, bv = a[mask], b[mask]
            size = popcount(mask)
            if not st.even[mask]:
                res.check(av == 0, f"{_tag(g)} I={mask:b}: a nonzero on non-even")
            elif av:
                res.check((av > 0) == ((size // 2) % 2 == 0), f"{_tag(g)} I={mask:b}: sign of a")
            if not st.odd[mask]:
                res.check(bv == 0, f"{_tag(g)} I={mask:b}: b nonzero on non-odd")
            elif bv:
                w = size + int(st.kappa[mask])
                res.check((bv > 0) == ((w // 2) % 2 == 0), f"{_tag(g)} I={mask:b}: sign of b")
    return res


def suite_forest(max_n: int = 9, seed: int = 0, count: int = 100) -> SuiteResult:
    res = SuiteResult("forest")
    for t in trees_up_to(max_n):
        rep = B.forest_line_identity(t)
        res.check(rep.ok, f"{_tag(t)}: {rep.betti_assoc} vs {rep.betti_cube_line} {rep.flags}")
    for n in range(0, max_n + 2, 2):
        for f in forests(n, even_only=True):
            rep = B.forest_line_identity(f)
            res.check(rep.ok, f"{_tag(f)}: signed {rep.signed} absolute {rep.absolute}")
    rng = random.Random(seed)
    for _ in range(count):
        f = random_forest(rng, rng.randint(1, max_n + 1))
        rep = B.forest_line_identity(f)
        res.check(rep.ok, f"{_tag(f)}: {rep.flags}")
    return res


def suite_flags(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("flags")
    for g in all_graphs(max_n, 0):
        kinds = ["cube"] + (["assoc"] if g.n and kappa(g) == 1 else [])
        for kind in kinds:
            m = build_model(g, kind)
            tag = f"{_tag(g)} {kind}"
            try:
                m.vertices
            except AssertionError as exc:
                res.check(False, f"{tag}: {exc}")
                continue
            res.check(len(m.facets) == facet_count_expected(g, kind), f"{tag}: facet count")
            h = h_vector(m)
            res.check(h == h[::-1], f"{tag}: h not symmetric")
            res.check(sum(h) == len(m.vertices), f"{tag}: sum h != vertices")
            res.check(delzant_check(m), f"{tag}: Delzant")
            res.check(normals_primitive(m), f"{tag}: primitive normals")
            res.check(nonsingular(m), f"{tag}: mod 2 singular")
    return res


def suite_oracle(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("oracle")
    for g in all_graphs(max_n, 1, connected=True):
        got = betti_via_homology(g, "cube")
        res.check(got == B.betti_cube(g), f"{_tag(g)} cube: {got} vs {B.betti_cube(g)}")
        got = betti_via_homology(g, "assoc")
        res.check(got == B.betti_assoc(g), f"{_tag(g)} assoc: {got} vs {B.betti_assoc(g)}")
    return res


def suite_lemmas(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("lemmas")
    for g in all_graphs(max_n, 0):
        for s in range(1 << g.n):
            res.check(lemma53_check(g, s), f"{_tag(g)} S={s:b}: k_odd vs k_odd of G[S]")
            res.check(k_odd_matches_p_omega(g, s), f"{_tag(g)} S={s:b}: k_odd vs P_omega")
            if is_odd(induced(g, s)):
                res.check(alexander_check(g, s), f"{_tag(g)} S={s:b}: Alexander duality")
        if g.n % 2 == 0 and g.n and kappa(g) == 1:
            res.check(lemma54_check(g), f"{_tag(g)}: k_odd not acyclic")
        res.check(not oracle_model(model_cube(g)).torsion, f"{_tag(g)}: torsion (cube)")
        for c in components(g):
            res.check(not oracle_model(model_assoc(induced(g, c))).torsion,
                      f"{_tag(g)}: torsion (assoc)")
    return res


def suite_dyck(max_n: int = 10, **_) -> SuiteResult:
    res = SuiteResult("dyck")
    for n in range(1, max_n + 1):
        for i in range(n // 2 + 1):
            c = B.partial_dyck_census(n, i)
            res.check(c.ok, f"n={n} i={i}: {c.checks}")
    return res


def suite_typeB(max_n: int = 4, **_) -> SuiteResult:
    res = SuiteResult("typeB")
    h = type_b_homology(complete(2))
    res.check(h.rank(0) == 3 and h.key() == (((0, 3),), ()), f"K_2: {h}")
    h = type_b_homology(star(5))
    res.check(h.rank(0) >= 1, f"K_1,4: order complex connected ({h})")
    for g in all_graphs(min(max_n, 4), 0):
        p = type_b_poset(g)
        k = order_complex(p)
        res.check(euler_characteristic(k) == inv.mobius_invariant(p),
                  f"{_tag(g)}: Philip Hall on signed poset")
    return res


SUITES = {
    "duality": suite_duality, "signs": suite_signs, "forest": suite_forest,
    "flags": suite_flags, "oracle": suite_oracle, "lemmas": suite_lemmas,
    "dyck": suite_dyck, "typeB": suite_typeB,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        n = DEFAULT_MAX_N[nm] if max_n is None else max_n
        if name == "all" and max_n is not None:
            # a global bound only tightens each suite's own default
            n = min(n, max_n)
        out.append(SUITES[nm](max_n=n, seed=seed) if nm in ("duality", "signs", "forest")
                   else SUITES[nm](max_n=n))
    return out
