"""a-numbers and b-numbers of graphs over all induced subgraphs.

Both invariants are tabulated for every vertex subset of a host graph.  The
tables are filled one popcount level at a time: the running sum over proper
subsets is kept as a zeta transform of the lower levels, so the proper-subset
sum of ``I`` is a single lookup instead of a submask walk.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, bits, component_of, is_even, is_odd, kappa, popcount

# Above this many vertices intermediate sums may leave int64; fall back to
# Python integers stored in object arrays.
INT64_MAX_N = 19


@dataclass(frozen=True)
class SubsetStructure:
    """Per-subset component data of a host graph."""
    host: Graph
    kappa: np.ndarray
    even: np.ndarray
    odd: np.ndarray
    size: np.ndarray


def subset_structure(g: Graph) -> SubsetStructure:
    return _subset_structure(g)


@lru_cache(maxsize=256)
def _subset_structure(g: Graph) -> SubsetStructure:
    size = 1 << g.n
    kap = np.zeros(size, dtype=np.int8)
    even = np.zeros(size, dtype=bool)
    odd = np.zeros(size, dtype=bool)
    even[0] = odd[0] = True
    adj = g.adj
    for mask in range(1, size):
        v = (mask & -mask).bit_length() - 1
        comp = component_of(g, v, mask) if adj[v] & mask else 1 << v
        rest = mask ^ comp
        kap[mask] = kap[rest] + 1
        c_even = popcount(comp) % 2 == 0
        even[mask] = c_even and even[rest]
        odd[mask] = (not c_even) and odd[rest]
    pc = np.array([popcount(m) for m in range(size)], dtype=np.int8)
    for arr in (kap, even, odd, pc):
        arr.flags.writeable = False
    return SubsetStructure(g, kap, even, odd, pc)


@dataclass(frozen=True)
class SubsetTable:
    host: Graph
    values: np.ndarray

    def __getitem__(self, mask: int) -> int:
        return int(self.values[mask])

    @property
    def total(self) -> int:
        """Value at the full vertex set."""
        return int(self.values[-1])

    def items(self):
        for mask in range(len(self.values)):
            yield mask, int(self.values[mask])


def _dtype(n: int):
    return np.int64 if n <= INT64_MAX_N else object


def zeta_transform(values: np.ndarray, n: int) -> np.ndarray:
    """``out[I] = sum of values[J] over J subset of I``."""
    out = np.array(values, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return out


def _recursive_table(g: Graph, allowed: np.ndarray) -> np.ndarray:
    n = g.n
    size = 1 << n
    st = subset_structure(g)
    dtype = _dtype(n)
    vals = np.zeros(size, dtype=dtype)
    vals[0] = 1
    below = zeta_transform(vals, n)   # sum over subsets of size < current level
    for k in range(1, n + 1):
        level = (st.size == k) & allowed
        if not level.any():
            continue
        vals[level] = -below[level]
        layer = np.zeros(size, dtype=dtype)
        layer[level] = vals[level]
        below += zeta_transform(layer, n)
    return vals


def a_table(g: Graph) -> SubsetTable:
    """``values[I] = a(G[I])`` for every vertex subset ``I``."""
    return SubsetTable(g, _recursive_table(g, subset_structure(g).even))


def b_table(g: Graph) -> SubsetTable:
    """``values[I] = b(G[I])`` for every vertex subset ``I``."""
    return SubsetTable(g, _recursive_table(g, subset_structure(g).odd))


def a_number(g: Graph) -> int:
    return a_table(g).total


def b_number(g: Graph) -> int:
    return b_table(g).total


def b_via_a(g: Graph) -> int:
    """b(G) from the a-table alone: ``(-1)^|V| * sum of a(H) over H in G``."""
    total = sum(int(x) for x in a_table(g).values)
    return -total if g.n % 2 else total


def a_via_b(g: Graph) -> int:
    """a(G) as the sum of b(H) over all induced subgraphs H."""
    return sum(int(x) for x in b_table(g).values)


def b_table_via_a(g: Graph) -> np.ndarray:
    """Whole b-table recovered from the a-table by a signed zeta transform."""
    z = zeta_transform(a_table(g).values, g.n)
    sign = np.where(subset_structure(g).size % 2 == 1, -1, 1)
    return z * sign


def a_table_via_b(g: Graph) -> np.ndarray:
    return zeta_transform(b_table(g).values, g.n)


def sign_of_a(g: Graph) -> int:
    """Predicted sign of a(G); 0 when G is not even."""
    if not is_even(g):
        return 0
    return -1 if (g.n // 2) % 2 else 1


def sign_of_b(g: Graph) -> int:
    """Predicted sign of b(G); 0 when G is not odd."""
    if not is_odd(g):
        return 0
    return -1 if ((g.n + kappa(g)) // 2) % 2 else 1


# ---------------------------------------------------------------------------
# posets

BOTTOM = "0^"
TOP = "1^"


@dataclass(frozen=True)
class Poset:
    """Finite bounded poset given by a strict order relation."""
    elements: tuple
    less: frozenset
    bottom: object = BOTTOM
    top: object = TOP

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    def proper_part(self) -> tuple:
        return tuple(e for e in self.elements if e != self.bottom and e != self.top)


def bounded_poset(proper, lt) -> Poset:
    """Add a bottom and top to ``proper`` ordered by the predicate ``lt``."""
    proper = tuple(proper)
    less = {(BOTTOM, TOP)}
    for x in proper:
        less.add((BOTTOM, x))
        less.add((x, TOP))
        for y in proper:
            if x != y and lt(x, y):
                less.add((x, y))
    return Poset((BOTTOM,) + proper + (TOP,), frozenset(less))


def _subset_lt(x: int, y: int) -> bool:
    return x != y and x & y == x


def even_poset(g: Graph) -> Poset:
    st = subset_structure(g)
    proper = [m for m in range(1, g.full) if st.even[m]]
    return bounded_poset(proper, _subset_lt)


def odd_poset(g: Graph) -> Poset:
    st = subset_structure(g)
    proper = [m for m in range(1, g.full) if st.odd[m]]
    return bounded_poset(proper, _subset_lt)


def mobius_invariant(p: Poset) -> int:
    """mu(bottom, top) by the defining recursion."""
    down = {x: [r for r in p.elements if (r, x) in p.less] for x in p.elements}
    order = sorted(p.elements, key=lambda x: len(down[x]))
    mu = {}
    for x in order:
        # every element lies above the bottom, so the interval [bottom, x) is down[x]
        mu[x] = 1 if x == p.bottom else -sum(mu[r] for r in down[x])
    return mu[p.top]
