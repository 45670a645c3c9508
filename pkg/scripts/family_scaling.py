#!/usr/bin/env python3
"""Time the subset-table engine on family graphs as n grows.

    python scripts/family_scaling.py --family complete --max-n 20
"""
import argparse
import time
from dataclasses import dataclass

from tbetti.betti import betti_assoc, betti_cube
from tbetti.cli import family_graph
from tbetti.invariants import a_table, b_table


@dataclass
class Config:
    family: str = "path"
    min_n: int = 1
    max_n: int = 16


def run(cfg: Config):
    print(f"{'n':>3} {'a':>22} {'b':>22} {'seconds':>8}  cube Betti")
    for n in range(cfg.min_n, cfg.max_n + 1):
        g = family_graph(cfg.family, n)
        t0 = time.perf_counter()
        a, b = a_table(g), b_table(g)
        cube = betti_cube(g, b)
        betti_assoc(g, a)
        dt = time.perf_counter() - t0
        print(f"{n:>3} {a.total:>22} {b.total:>22} {dt:>8.2f}  {' '.join(map(str, cube))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=["path", "cycle", "complete", "star"], default="path")
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=16)
    a = ap.parse_args()
    run(Config(a.family, a.min_n, a.max_n))
