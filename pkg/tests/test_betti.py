from math import comb

import pytest
import sympy as sp
from hypothesis import given
import hypothesis.strategies as st

from tbetti import betti as B
from tbetti.graphs import (
    NULL_GRAPH, complete, cycle, disjoint_union, is_forest, line_graph, path, star,
)
from tbetti.invariants import a_number, b_number
from tbetti.catalog import trees_up_to
from conftest import graphs


def _zigzag_oracle(k_max):
    x = sp.symbols("x")
    s = sp.series(sp.sec(x) + sp.tan(x), x, 0, k_max + 1).removeO()
    return [int(sp.factorial(k) * s.coeff(x, k)) for k in range(k_max + 1)]


def test_zigzag_against_series():
    assert [B.euler_zigzag(k) for k in range(7)] == [1, 1, 1, 2, 5, 16, 61]
    assert [B.euler_zigzag(k) for k in range(22)] == _zigzag_oracle(21)
    assert B.euler_zigzag(-2) == 0


def test_sequences():
    assert [B.catalan(k) for k in range(5)] == [1, 1, 2, 5, 14]
    for k in range(10):
        assert B.catalan(k + 1) == sum(B.catalan(i) * B.catalan(k - i) for i in range(k + 1))
    assert B.narayana(3, 2) == 3
    for n in range(1, 10):
        assert sum(B.narayana(n, k) for k in range(n + 1)) == B.catalan(n)
    assert [B.central_binomial(k) for k in range(4)] == [1, 2, 6, 20]


def test_betti_examples():
    assert B.betti_assoc(path(3)) == (1, 2)
    assert B.betti_assoc(NULL_GRAPH) == (1,)
    assert B.betti_cube(path(2)) == (1, 2)
    assert B.betti_cube(path(5)) == (1, 5, 9, 5)
    assert B.betti_cube(cycle(9)) == (1, 9, 36, 84, 126, 70)


def test_betti_assoc_cycle_five():
    # 2i < 5 in both nonzero degrees, so both come from the binomial case
    assert B.betti_assoc(cycle(5)) == (1, 5, 10)
    assert B.betti_assoc(cycle(5))[2] == B.closed_form_assoc("cycle", 5, 2) == comb(5, 2)


def test_closed_form_examples():
    assert B.closed_form_assoc("complete", 4, 2) == 5
    assert B.closed_form_assoc("path", 5, 2) == 5
    assert B.closed_form_assoc("cycle", 6, 3) == 10
    assert B.closed_form_cube("path", 9, 4) == 90
    assert B.closed_form_cube("cycle", 5, 3) == 6
    assert B.closed_form_cube("star", 3, 2) == 6
    with pytest.raises(ValueError):
        B.closed_form_assoc("path", 5, 3)


def test_b_closed_forms():
    assert B.b_closed_form("path", 5) == -2 == b_number(path(5))
    assert B.b_closed_form("complete", 5) == -16 == b_number(complete(5))
    assert B.b_closed_form("cycle", 5) == b_number(cycle(5)) == -6
    # C_3 and K_3 are the same graph
    assert B.b_closed_form("cycle", 3) == B.b_closed_form("complete", 3) == 2
    with pytest.raises(ValueError):
        B.b_closed_form("path", 4)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
def test_b_closed_forms_engine(n):
    for fam, g in (("path", path(n)), ("cycle", cycle(n)), ("complete", complete(n)),
                   ("star", star(n))):
        if fam == "cycle" and n < 3:
            continue
        assert B.b_closed_form(fam, n) == b_number(g), (fam, n)


@pytest.mark.parametrize("fam, limit", [("path", 12), ("cycle", 12), ("complete", 9), ("star", 10)])
def test_closed_forms_match_engine(fam, limit):
    for n in range(1, limit + 1):
        g = star(n + 1) if fam == "star" else {"path": path, "cycle": cycle, "complete": complete}[fam](n)
        assert B.betti_cube(g) == B.closed_form_betti(fam, n, "cube"), (fam, n)
        if fam == "cycle" and n < 3:
            continue
        assert B.betti_assoc(g) == B.closed_form_betti(fam, n, "assoc"), (fam, n)


@given(graphs(max_n=10))
def test_euler_characteristics(g):
    assert B.euler_char_cube(g) == a_number(g)
    sign = -1 if g.n % 2 else 1
    assert sign * B.euler_char_assoc(g) == b_number(g)


def test_euler_examples():
    assert B.euler_char_cube(path(4)) == 2
    assert B.euler_char_assoc(path(3)) == -1
    assert B.euler_char_cube(path(2)) == -1


@given(graphs(max_n=10))
def test_assoc_support(g):
    assert len(B.betti_assoc(g)) <= g.n // 2 + 1
    assert B.betti_assoc(g)[0] == 1 and B.betti_cube(g)[0] == 1


def test_cube_support_can_exceed_half():
    vec = B.betti_cube(star(7))
    assert len(vec) - 1 > (7 + 1) / 2 and vec[-1] > 0


def test_forest_identity_examples():
    rep = B.forest_line_identity(path(4))
    assert rep.betti_assoc == rep.betti_cube_line == (1, 3, 2)
    rep = B.forest_line_identity(path(2))
    assert rep.signed == (-1, -1) and rep.ok
    rep = B.forest_line_identity(star(4))
    assert rep.betti_assoc == B.betti_cube(complete(3))
    with pytest.raises(ValueError):
        B.forest_line_identity(cycle(3))


def test_forest_identity_trees():
    for t in trees_up_to(8):
        assert B.forest_line_identity(t).ok


@given(graphs(max_n=9))
def test_forest_identity_random(g):
    if is_forest(g):
        rep = B.forest_line_identity(g)
        assert rep.ok, rep


def test_identity_fails_off_forests():
    assert B.betti_assoc(cycle(5)) != B.betti_cube(cycle(5))
    assert line_graph(cycle(5)).n == 5


@given(graphs(max_n=5), graphs(max_n=5))
def test_assoc_betti_multiplies(g, h):
    assert B.betti_assoc(disjoint_union(g, h)) == B.trim(
        B.poly_mul(B.betti_assoc(g), B.betti_assoc(h)))


# --- partial Dyck words ---------------------------------------------------


def test_dyck_words():
    assert B.is_partial_dyck("()*") and B.is_partial_dyck(")*(")
    assert not B.is_partial_dyck("(*)") and not B.is_partial_dyck("((")
    assert B.outermost_pairs("(())") == [(0, 3)]
    assert B.outermost_pairs(")()(") == [(1, 2), (3, 0)]
    assert B.dyck_vertex_set("(())") == 0b0111


@given(st.integers(1, 9), st.data())
def test_dyck_count_brute(n, data):
    i = data.draw(st.integers(0, n // 2))
    from itertools import product
    brute = sum(1 for w in product("()*", repeat=n)
                if w.count("(") == i and B.is_partial_dyck("".join(w)))
    assert brute == len(list(B.partial_dyck_words(n, i))) == comb(n, i)


def test_dyck_census_examples():
    assert B.partial_dyck_census(4, 2).count == 6
    assert B.partial_dyck_census(5, 0).count == 1
    c = B.partial_dyck_census(6, 3)
    assert c.betti == 20 and c.ok
    with pytest.raises(ValueError):
        B.partial_dyck_census(4, 3)


@pytest.mark.parametrize("n", range(1, 11))
def test_dyck_census(n):
    for i in range(n // 2 + 1):
        c = B.partial_dyck_census(n, i)
        assert c.ok, c.checks
