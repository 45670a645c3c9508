import random
from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given
import hypothesis.strategies as st

from tbetti.homology import (
    FaceCapExceeded, SimplicialComplex, boundary_rows, euler_characteristic, integer_det,
    order_complex, reduced_betti_mod2, reduced_homology, smith_normal_form,
)
from tbetti.invariants import bounded_poset, even_poset, mobius_invariant
from tbetti.graphs import path
from tbetti.catalog import random_graph

RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
       (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)]


def hollow_triangle():
    return SimplicialComplex.from_faces(3, [(0, 1), (1, 2), (0, 2)])


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 4]]) == ((2, 4), 2)
    assert smith_normal_form([[1, 0], [0, 1]]) == ((1, 1), 2)
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ((2, 6, 12), 3)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)
    assert smith_normal_form([]) == ((), 0)


def test_snf_hollow_triangle_boundary():
    k = hollow_triangle()
    faces = k.faces()
    d1 = boundary_rows(faces[1], faces[2])
    dense = [[row.get(c, 0) for c in range(3)] for row in d1]
    assert smith_normal_form(dense) == ((1, 1), 2)


@st.composite
def int_matrices(draw):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    return [[draw(st.integers(-6, 6)) for _ in range(c)] for _ in range(r)]


@given(int_matrices())
def test_snf_against_sympy(m):
    factors, rank = smith_normal_form(m)
    assert rank == sp.Matrix(m).rank()
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0
    # the product of the first k factors is the gcd of the k-minors
    k = len(factors)
    if k:
        minors = sp.Matrix(m)
        g = 0
        for rows in combinations(range(len(m)), k):
            for cols in combinations(range(len(m[0])), k):
                g = sp.gcd(g, minors.extract(list(rows), list(cols)).det())
        prod = 1
        for f in factors:
            prod *= f
        assert prod == abs(g)


def test_homology_examples():
    h = reduced_homology(hollow_triangle())
    assert h.rank(1) == 1 and h.rank(0) == 0 and h.torsion_free()
    h = reduced_homology(SimplicialComplex.from_faces(6, RP2))
    assert h.rank(1) == 0 and h.torsion[1] == (2,) and h.rank(2) == 0
    five = SimplicialComplex.from_faces(5, [(i, (i + 1) % 5) for i in range(5)])
    assert reduced_homology(five).rank(1) == 1


def test_minus_one_sphere_conventions():
    void = SimplicialComplex(0, ())
    empty_face = SimplicialComplex(0, ((),))
    for k in (void, empty_face):
        assert reduced_homology(k).rank(-1) == 1
        assert euler_characteristic(k) == -1
    assert euler_characteristic(SimplicialComplex(1, ((0,),))) == 0


def test_field_comparison_on_projective_plane():
    k = SimplicialComplex.from_faces(6, RP2)
    h = reduced_homology(k)
    mod2 = reduced_betti_mod2(k)
    for q in range(-1, 3):
        twos = sum(1 for d in h.torsion.get(q, ()) if d % 2 == 0) + \
            sum(1 for d in h.torsion.get(q - 1, ()) if d % 2 == 0)
        assert mod2[q] == h.rank(q) + twos


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 7))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4),
                          min_size=1, max_size=8))
    return SimplicialComplex.from_faces(n, faces)


@given(complexes())
def test_rank_nullity_and_euler(k):
    h = reduced_homology(k)
    faces = k.faces()
    ranks = {}
    for q in range(0, k.dim + 1):
        rows = boundary_rows(faces[q], faces[q + 1])
        dense = [[r.get(c, 0) for c in range(len(faces[q]))] for r in rows]
        ranks[q] = smith_normal_form(dense)[1]
    for q in range(-1, k.dim + 1):
        assert h.rank(q) >= 0
        assert h.rank(q) + ranks.get(q, 0) + ranks.get(q + 1, 0) == len(faces[q + 1])
    assert sum(h.rank(q) if q % 2 == 0 else -h.rank(q) for q in range(-1, k.dim + 1)) == \
        euler_characteristic(k)


@given(complexes())
def test_torsion_free_complexes_agree_mod_two(k):
    h = reduced_homology(k)
    if h.torsion_free():
        assert reduced_betti_mod2(k) == {q: h.rank(q) for q in h.betti}


def test_face_cap():
    simplex = SimplicialComplex(12, (tuple(range(12)),))
    with pytest.raises(FaceCapExceeded):
        reduced_homology(simplex, cap=1000)
    assert reduced_homology(simplex).is_trivial()


def test_face_cap_env(monkeypatch):
    monkeypatch.setenv("TBETTI_FACE_CAP", "10")
    with pytest.raises(FaceCapExceeded):
        reduced_homology(SimplicialComplex(5, (tuple(range(5)),)))


def test_order_complex_examples():
    k = order_complex(even_poset(path(3)))
    assert k.vertex_count == 2 and reduced_homology(k).rank(0) == 1
    chain = bounded_poset(["x"], lambda a, b: False)
    assert reduced_homology(order_complex(chain)).is_trivial()
    k = order_complex(even_poset(path(4)))
    h = reduced_homology(k)
    assert sum(h.betti.values()) == 2 and h.rank(k.dim) == 2


@pytest.mark.parametrize("seed", range(10))
def test_philip_hall(seed):
    rng = random.Random(seed)
    for _ in range(5):
        g = random_graph(rng, rng.randint(1, 7))
        p = even_poset(g)
        assert euler_characteristic(order_complex(p)) == mobius_invariant(p)


def test_integer_det():
    assert integer_det([]) == 1
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[2, 0, 0], [0, 3, 0], [1, 1, 1]]) == 6
    m = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    assert integer_det(m) == sp.Matrix(m).det()
