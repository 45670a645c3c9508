"""Exact reduced simplicial homology over the integers.

Complexes are given by their maximal faces.  Boundary matrices are reduced
with sparse unit-pivot elimination first (almost every pivot of a simplicial
boundary is +-1); whatever is left goes through a dense Smith normal form.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

DEFAULT_FACE_CAP = 200_000


class FaceCapExceeded(RuntimeError):
    pass


def face_cap() -> int:
    return int(os.environ.get("TBETTI_FACE_CAP", DEFAULT_FACE_CAP))


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex on vertices ``0..vertex_count-1``.

    ``maximal_faces == ()`` is the void complex and ``((),)`` the complex
    ``{emptyset}``; both are treated as the (-1)-sphere by the homology code.
    """
    vertex_count: int
    maximal_faces: tuple[tuple[int, ...], ...]
    labels: tuple | None = None

    @classmethod
    def from_faces(cls, vertex_count: int, faces, labels=None) -> "SimplicialComplex":
        """Build from any generating set of faces, keeping only the maximal ones."""
        fs = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f))
        kept: list[frozenset] = []
        out = []
        for f in fs:
            sf = frozenset(f)
            if any(sf <= k for k in kept):
                continue
            kept.append(sf)
            out.append(f)
        out.sort()
        return cls(vertex_count, tuple(out), None if labels is None else tuple(labels))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0) - 1

    def faces(self, cap: int | None = None) -> list[list[tuple[int, ...]]]:
        """All faces grouped by dimension: index ``q + 1`` holds the q-faces."""
        cap = face_cap() if cap is None else cap
        seen: set[tuple[int, ...]] = {()}
        for f in self.maximal_faces:
            if f in seen:
                continue
            for k in range(len(f), 0, -1):
                for sub in combinations(f, k):
                    if sub not in seen:
                        seen.add(sub)
                        if len(seen) > cap:
                            raise FaceCapExceeded(
                                f"more than {cap} faces; raise TBETTI_FACE_CAP to continue")
        by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(self.dim + 2)]
        for f in seen:
            by_dim[len(f)].append(f)
        for layer in by_dim:
            layer.sort()
        return by_dim

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, f_1, ...)."""
        return tuple(len(layer) for layer in self.faces())

    def induced(self, keep: Sequence[int]) -> "SimplicialComplex":
        keep = set(keep)
        faces = [tuple(v for v in f if v in keep) for f in self.maximal_faces]
        return SimplicialComplex.from_faces(self.vertex_count, faces, self.labels)

    def relabelled(self) -> frozenset:
        """Maximal faces as frozensets of labels (for label-level comparison)."""
        lab = self.labels or tuple(range(self.vertex_count))
        return frozenset(frozenset(lab[v] for v in f) for f in self.maximal_faces)


@dataclass(frozen=True)
class HomologyGroups:
    """Reduced homology: free ranks and torsion invariant factors per dimension."""
    betti: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)

    def rank(self, q: int) -> int:
        return self.betti.get(q, 0)

    def torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def is_trivial(self) -> bool:
        return not any(self.betti.values()) and self.torsion_free()

    def key(self):
        """Hashable summary used to compare two groups up to isomorphism."""
        return (tuple(sorted((q, r) for q, r in self.betti.items() if r)),
                tuple(sorted((q, t) for q, t in self.torsion.items() if t)))

    def __str__(self):
        dims = sorted(set(q for q, r in self.betti.items() if r) |
                      set(q for q, t in self.torsion.items() if t))
        if not dims:
            return "0"
        parts = []
        for q in dims:
            terms = []
            if self.rank(q):
                terms.append("Z" if self.rank(q) == 1 else f"Z^{self.rank(q)}")
            terms += [f"Z/{d}" for d in self.torsion.get(q, ())]
            parts.append(f"H~_{q} = " + " + ".join(terms))
        return ", ".join(parts)


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(matrix) -> tuple[tuple[int, ...], int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` (positive) and the rank."""
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        # pick the nonzero entry of smallest absolute value in the lower block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, cols):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in row/column t: move it to the pivot
                best = None
                for i in range(t, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(best[2])):
                        best = (i, t, a[i][t])
                for j in range(t, cols):
                    if a[t][j] and (best is None or abs(a[t][j]) < abs(best[2])):
                        best = (t, j, a[t][j])
                i, j, _ = best
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            ai, at = a[bad[0]], a[t]
            for j in range(t, cols):
                at[j] += ai[j]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag), len(diag)


def _sparse_invariants(rows: list[dict[int, int]]) -> tuple[int, list[int]]:
    """Rank and invariant factors > 1 of a sparse integer matrix (rows as dicts)."""
    rows = [dict(r) for r in rows if r]
    col_rows: dict[int, set[int]] = {}
    for k, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(k)
    alive = set(range(len(rows)))
    rank = 0
    progress = True
    while progress:
        progress = False
        for k in sorted(alive, key=lambda k: len(rows[k])):
            if k not in alive:
                continue
            r = rows[k]
            if not r:
                alive.discard(k)
                continue
            unit = [c for c, v in r.items() if v in (1, -1)]
            if not unit:
                continue
            c = min(unit, key=lambda c: len(col_rows[c]))
            p = r[c]
            for k2 in list(col_rows[c]):
                if k2 == k:
                    continue
                r2 = rows[k2]
                f = r2[c] * p  # p is +-1, so r2[c] / p == r2[c] * p
                for c2, v in r.items():
                    nv = r2.get(c2, 0) - f * v
                    if nv:
                        if c2 not in r2:
                            col_rows[c2].add(k2)
                        r2[c2] = nv
                    else:
                        if c2 in r2:
                            del r2[c2]
                            col_rows[c2].discard(k2)
            for c2 in r:
                col_rows[c2].discard(k)
            rows[k] = {}
            alive.discard(k)
            rank += 1
            progress = True
    rest = [rows[k] for k in alive if rows[k]]
    if not rest:
        return rank, []
    cols = sorted({c for r in rest for c in r})
    index = {c: j for j, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for i, r in enumerate(rest):
        for c, v in r.items():
            dense[i][index[c]] = v
    factors, rk = smith_normal_form(dense)
    return rank + rk, [d for d in factors if d > 1]


def boundary_rows(lower: list[tuple], upper: list[tuple]) -> list[dict[int, int]]:
    """Boundary map from ``upper`` (q-faces) to ``lower`` ((q-1)-faces), one dict per q-face."""
    index = {f: k for k, f in enumerate(lower)}
    out = []
    for f in upper:
        row = {}
        for k in range(len(f)):
            row[index[f[:k] + f[k + 1:]]] = -1 if k % 2 else 1
        out.append(row)
    return out


def _check_dd_zero(d_low: list[dict], d_high: list[dict]):
    for row in d_high:
        acc: dict[int, int] = {}
        for mid, v in row.items():
            for low, w in d_low[mid].items():
                acc[low] = acc.get(low, 0) + v * w
        if any(acc.values()):
            raise AssertionError("boundary of a boundary is nonzero")


def reduced_homology(K: SimplicialComplex, cap: int | None = None,
                     check: bool = True) -> HomologyGroups:
    """Reduced integral homology in every dimension from -1 up to dim K."""
    by_dim = K.faces(cap)
    top = len(by_dim) - 2
    ranks = {}
    torsion = {}
    d_prev = None
    for q in range(0, top + 1):
        d = boundary_rows(by_dim[q], by_dim[q + 1])
        if check and d_prev is not None:
            _check_dd_zero(d_prev, d)
        rk, tors = _sparse_invariants(d)
        ranks[q] = rk
        torsion[q - 1] = tuple(sorted(tors))
        d_prev = d
    betti = {}
    for q in range(-1, top + 1):
        betti[q] = len(by_dim[q + 1]) - ranks.get(q, 0) - ranks.get(q + 1, 0)
    torsion.setdefault(top, ())
    return HomologyGroups(betti, {q: t for q, t in torsion.items()})


def reduced_betti_mod2(K: SimplicialComplex, cap: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers over Z/2 by bitset elimination (independent of the SNF path)."""
    by_dim = K.faces(cap)
    top = len(by_dim) - 2
    ranks = {}
    for q in range(0, top + 1):
        index = {f: k for k, f in enumerate(by_dim[q])}
        vecs = []
        for f in by_dim[q + 1]:
            v = 0
            for k in range(len(f)):
                v ^= 1 << index[f[:k] + f[k + 1:]]
            vecs.append(v)
        ranks[q] = _gf2_rank(vecs)
    return {q: len(by_dim[q + 1]) - ranks.get(q, 0) - ranks.get(q + 1, 0)
            for q in range(-1, top + 1)}


def _gf2_rank(vectors) -> int:
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            hb = v.bit_length() - 1
            if hb in pivots:
                v ^= pivots[hb]
            else:
                pivots[hb] = v
                break
    return len(pivots)


def gf2_rank(vectors) -> int:
    return _gf2_rank(vectors)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic; -1 for the void complex and for {emptyset}."""
    return sum(n if q % 2 else -n for q, n in enumerate(K.f_vector()))


# ---------------------------------------------------------------------------
# posets


def order_complex(p) -> SimplicialComplex:
    """Chains of the proper part of a bounded poset, as a complex on its elements."""
    proper = list(p.proper_part())
    index = {x: k for k, x in enumerate(proper)}
    up = {x: [y for y in proper if p.lt(x, y)] for x in proper}
    covers = {x: [y for y in up[x] if not any(p.lt(z, y) for z in up[x])] for x in proper}
    minimal = [x for x in proper if not any(p.lt(y, x) for y in proper)]
    chains = []

    def extend(chain):
        nxt = covers[chain[-1]]
        if not nxt:
            chains.append(tuple(index[x] for x in chain))
            return
        for y in nxt:
            extend(chain + [y])

    for x in minimal:
        extend([x])
    if not proper:
        chains = [()]
    return SimplicialComplex.from_faces(len(proper), chains, proper)


def integer_det(matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


__all__ = [
    "SimplicialComplex", "HomologyGroups", "FaceCapExceeded", "smith_normal_form",
    "reduced_homology", "reduced_betti_mod2", "euler_characteristic", "order_complex",
    "integer_det", "gcd", "face_cap",
]
