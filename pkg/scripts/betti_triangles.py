#!/usr/bin/env python3
"""Print the cubeahedron Betti triangles for paths and cycles next to the closed forms.

    python scripts/betti_triangles.py --max-n 12
"""
import argparse
from dataclasses import dataclass

from tbetti.betti import closed_form_betti
from tbetti.cli import format_table, table_rows


@dataclass
class Config:
    max_n: int = 9
    families: tuple = ("path", "cycle")
    polytope: str = "cube"


def run(cfg: Config) -> bool:
    ok = True
    for fam in cfg.families:
        rows = table_rows(fam, cfg.polytope, cfg.max_n)
        print(f"# {fam}, {cfg.polytope}")
        print("\n".join(format_table(rows)))
        mismatches = [n for n, r in rows.items() if r != closed_form_betti(fam, n, cfg.polytope)]
        print(f"# closed form mismatches: {mismatches or 'none'}\n")
        ok &= not mismatches
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--polytope", choices=["assoc", "cube"], default="cube")
    ap.add_argument("--families", default="path,cycle")
    a = ap.parse_args()
    cfg = Config(a.max_n, tuple(a.families.split(",")), a.polytope)
    raise SystemExit(0 if run(cfg) else 1)
