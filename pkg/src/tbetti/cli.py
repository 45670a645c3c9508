"""Command-line front end.

    tbetti invariant --graph path:4 --which both
    tbetti betti --graph cycle:5 --polytope cube --oracle
    tbetti table --family path --polytope cube --max-n 9
    tbetti verify --suite all
    tbetti hvector --graph path:3 --polytope cube
    tbetti cohomology --graph path:2 --polytope cube

Graph specs: ``path:N``, ``cycle:N``, ``complete:N``, ``star:N`` (N leaves,
so N + 1 vertices), ``octopus:2,2,1``, ``spider:2,2,1``, ``g6:STRING`` and
``edges:n=4;1-2,2-3`` (1-indexed).

Exit codes: 0 ok, 2 bad input, 3 a property that must hold failed, 4 over capacity.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import betti as B
from . import invariants as inv
from .graphs import (
    CapacityError, Graph, GraphParseError, bits, family, octopus, parse_edge_list,
    parse_graph6, spider, star,
)
from .homology import FaceCapExceeded
from .polytope import FalsificationError, h_vector_graph
from .suites import SUITES, run_suite
from .toric import betti_via_homology, cohomology_profile

EXIT_OK, EXIT_INPUT, EXIT_FALSIFIED, EXIT_CAPACITY = 0, 2, 3, 4
SAFE_INT = 2 ** 53


def parse_graph_spec(spec: str) -> Graph:
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"graph spec {spec!r} needs the form kind:argument")
    if kind == "g6":
        return parse_graph6(arg)
    if kind == "edges":
        return parse_edge_list(arg)
    if kind in ("octopus", "spider"):
        try:
            arms = [int(x) for x in arg.split(",") if x.strip()]
        except ValueError:
            raise ValueError(f"bad arm list {arg!r}") from None
        return octopus(arms) if kind == "octopus" else spider(arms)
    if kind in ("path", "cycle", "complete", "star"):
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad size {arg!r}") from None
        if n < 0:
            raise ValueError("size must be non-negative")
        return family_graph(kind, n)
    raise ValueError(f"unknown graph kind {kind!r}")


def family_graph(kind: str, n: int) -> Graph:
    """Family member as the CLI numbers it: ``star`` counts leaves."""
    return star(n + 1) if kind == "star" else family(kind, n)


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= SAFE_INT else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def graph_echo(g: Graph | None):
    if g is None:
        return None
    return {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges()]}


def _subset_label(mask: int) -> str:
    return "{" + ",".join(str(v + 1) for v in bits(mask)) + "}"


# ---------------------------------------------------------------------------
# commands: each returns (graph, result dict, plain-text lines, exit code)


def cmd_invariant(args):
    g = parse_graph_spec(args.graph)
    res, lines = {}, []
    tables = {}
    if args.which in ("a", "both"):
        tables["a"] = inv.a_table(g)
    if args.which in ("b", "both"):
        tables["b"] = inv.b_table(g)
    for name, t in tables.items():
        res[name] = t.total
        lines.append(f"{name} = {t.total}")
    if args.verbose:
        res["tables"] = {name: {_subset_label(m): v for m, v in t.items()}
                         for name, t in tables.items()}
        lines.append("I " + " ".join(tables))
        for m in range(1 << g.n):
            lines.append(_subset_label(m) + " " + " ".join(str(t[m]) for t in tables.values()))
    return g, res, lines, EXIT_OK


def cmd_betti(args):
    g = parse_graph_spec(args.graph)
    fn = B.betti_cube if args.polytope == "cube" else B.betti_assoc
    vec = fn(g)
    res = {"betti": list(vec)}
    lines = [" ".join(map(str, vec))]
    code = EXIT_OK
    if args.oracle:
        got = betti_via_homology(g, args.polytope)
        agree = got == vec
        res["oracle"] = list(got)
        res["verdict"] = "AGREE" if agree else "DISAGREE"
        lines.append("oracle: " + " ".join(map(str, got)))
        lines.append(res["verdict"])
        code = EXIT_OK if agree else EXIT_FALSIFIED
    return g, res, lines, code


def format_table(rows: dict[int, tuple[int, ...]]) -> list[str]:
    """Rows ``n`` by columns ``i``; blank cells beyond each row's support."""
    width = max((len(r) for r in rows.values()), default=1)
    cells = [["n\\i"] + [str(i) for i in range(width)]]
    for n, r in rows.items():
        cells.append([str(n)] + [str(x) for x in r] + [""] * (width - len(r)))
    cols = list(zip(*cells))
    widths = [max(len(c) for c in col) for col in cols]
    return [" ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def table_rows(fam: str, polytope: str, max_n: int) -> dict[int, tuple[int, ...]]:
    fn = B.betti_cube if polytope == "cube" else B.betti_assoc
    return {n: fn(family_graph(fam, n)) for n in range(1, max_n + 1)}


def cmd_table(args):
    rows = table_rows(args.family, args.polytope, args.max_n)
    res = {"family": args.family, "polytope": args.polytope,
           "rows": {str(n): list(r) for n, r in rows.items()}}
    return None, res, format_table(rows), EXIT_OK


def cmd_verify(args):
    results = run_suite(args.suite, args.max_n, args.seed)
    lines, res = [], {}
    for r in results:
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.checked} checks)")
        lines += [f"  counterexample: {f}" for f in r.failures]
        res[r.name] = {"passed": r.passed, "checked": r.checked, "failures": r.failures}
    ok = all(r.passed for r in results)
    return None, res, lines, EXIT_OK if ok else EXIT_FALSIFIED


def cmd_hvector(args):
    g = parse_graph_spec(args.graph)
    h = h_vector_graph(g, args.polytope)
    return g, {"h": list(h)}, [" ".join(map(str, h))], EXIT_OK


def cmd_cohomology(args):
    g = parse_graph_spec(args.graph)
    prof = cohomology_profile(g, args.polytope)
    text = prof.describe(ascii_only=args.ascii)
    res = {"h": list(prof.h), "free": list(prof.free), "z2": list(prof.z2)}
    lines = [f"H^{i}: {t}" for i, t in enumerate(text)]
    lines.append("; ".join(text))
    return g, res, lines, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    p = argparse.ArgumentParser(prog="tbetti", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariant", parents=[common], help="a- and b-numbers")
    s.add_argument("--graph", required=True)
    s.add_argument("--which", choices=["a", "b", "both"], default="both")
    s.add_argument("--verbose", action="store_true", help="print the full subset tables")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("betti", parents=[common], help="Betti numbers")
    s.add_argument("--graph", required=True)
    s.add_argument("--polytope", choices=["assoc", "cube"], required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check by simplicial homology")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("table", parents=[common], help="Betti triangle of a family")
    s.add_argument("--family", choices=["path", "cycle", "complete", "star"], required=True)
    s.add_argument("--polytope", choices=["assoc", "cube"], required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", parents=[common], help="property sweeps")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-n", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    for name, fn, text in (("hvector", cmd_hvector, "h-vector of the polytope"),
                           ("cohomology", cmd_cohomology, "integral cohomology of the real toric variety")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--graph", required=True)
        s.add_argument("--polytope", choices=["assoc", "cube"], required=True)
        if name == "cohomology":
            s.add_argument("--ascii", action="store_true", help="write Z and Z2 in ASCII")
        s.set_defaults(func=fn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        g, res, lines, code = args.func(args)
    except (CapacityError, FaceCapExceeded) as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except FalsificationError as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        report = {"command": args.command, "graph": graph_echo(g),
                  "result": jsonable(res), "elapsed_ms": round(elapsed, 3)}
        print(json.dumps(report, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
