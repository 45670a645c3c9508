import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from tbetti.cli import main, parse_graph_spec
from tbetti.graphs import complete, octopus, path, star

DATA = Path(__file__).parent / "data"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "graph", "result", "elapsed_ms"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "graph": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["n", "edges"],
                 "properties": {"n": {"type": "integer"},
                                "edges": {"type": "array",
                                          "items": {"type": "array", "minItems": 2,
                                                    "maxItems": 2}}}},
            ]
        },
        "result": {"type": "object"},
        "elapsed_ms": {"type": "number"},
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_specs():
    assert parse_graph_spec("path:4") == path(4)
    assert parse_graph_spec("star:3") == star(4)
    assert parse_graph_spec("octopus:2,1") == octopus([2, 1])
    assert parse_graph_spec("g6:Ch") == path(4)
    assert parse_graph_spec("edges:n=3;1-2,2-3,1-3") == complete(3)
    for bad in ("path", "path:x", "blob:3", "path:-1"):
        with pytest.raises(ValueError):
            parse_graph_spec(bad)


def test_invariant(capsys):
    assert run(capsys, "invariant", "--graph", "path:4", "--which", "both")[:2] == \
        (0, "a = 2\nb = 0\n")
    assert run(capsys, "invariant", "--graph", "g6:Ch", "--which", "a")[1] == "a = 2\n"
    assert run(capsys, "invariant", "--graph", "edges:n=0;")[1] == "a = 1\nb = 1\n"
    code, out, _ = run(capsys, "invariant", "--graph", "path:2", "--verbose")
    assert code == 0 and "{1,2} -1 0" in out


def test_betti(capsys):
    assert run(capsys, "betti", "--graph", "path:5", "--polytope", "cube")[1] == "1 5 9 5\n"
    code, out, _ = run(capsys, "betti", "--graph", "cycle:5", "--polytope", "cube", "--oracle")
    assert code == 0 and out.splitlines() == ["1 5 10 6", "oracle: 1 5 10 6", "AGREE"]
    assert run(capsys, "betti", "--graph", "complete:1", "--polytope", "cube")[1] == "1 1\n"


@pytest.mark.parametrize("family", ["path", "cycle"])
def test_table_golden(capsys, family):
    code, out, _ = run(capsys, "table", "--family", family, "--polytope", "cube", "--max-n", "9")
    assert code == 0
    assert out == (DATA / f"{family}_cube_betti.txt").read_text()


def test_table_star_rows(capsys):
    from tbetti.betti import closed_form_betti
    _, out, _ = run(capsys, "table", "--family", "star", "--polytope", "cube", "--max-n", "6")
    rows = out.splitlines()[1:]
    for n, line in enumerate(rows, start=1):
        assert tuple(int(x) for x in line.split()[1:]) == closed_form_betti("star", n, "cube")


def test_hvector_and_cohomology(capsys):
    assert run(capsys, "hvector", "--graph", "path:3", "--polytope", "cube")[1] == "1 6 6 1\n"
    assert run(capsys, "hvector", "--graph", "path:3", "--polytope", "assoc")[1] == "1 3 1\n"
    out = run(capsys, "cohomology", "--graph", "path:2", "--polytope", "cube")[1]
    assert out.splitlines()[-1] == "ℤ; ℤ²⊕ℤ₂; ℤ₂"
    out = run(capsys, "cohomology", "--graph", "path:2", "--polytope", "cube", "--ascii")[1]
    assert out.splitlines()[-1] == "Z; Z^2+Z2; Z2"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-n", "8", "--seed", "7")
    assert code == 0 and out.startswith("duality: PASS")
    code, out, _ = run(capsys, "verify", "--suite", "dyck", "--max-n", "6")
    assert code == 0 and "PASS" in out


def test_exit_codes(capsys):
    assert run(capsys, "invariant", "--graph", "edges:n=3;1-4")[0] == 2
    assert run(capsys, "invariant", "--graph", "g6:~??")[0] == 2
    assert run(capsys, "betti", "--graph", "complete:25", "--polytope", "cube")[0] == 4
    assert run(capsys, "verify", "--suite", "oracle", "--max-n", "9")[0] == 2


def test_face_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("TBETTI_FACE_CAP", "20")
    code, _, err = run(capsys, "betti", "--graph", "path:4", "--polytope", "cube", "--oracle")
    assert code == 4 and "capacity" in err


def test_falsification_exit(capsys, monkeypatch):
    import tbetti.cli as cli
    monkeypatch.setattr(cli, "betti_via_homology", lambda g, kind: (1, 0))
    code, out, _ = run(capsys, "betti", "--graph", "path:2", "--polytope", "cube", "--oracle")
    assert code == 3 and "DISAGREE" in out


def test_json_schema_and_big_ints(capsys):
    code, out, _ = run(capsys, "invariant", "--graph", "path:4", "--json")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["graph"] == {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}
    assert report["result"] == {"a": 2, "b": 0}
    code, out, _ = run(capsys, "betti", "--graph", "complete:20", "--polytope", "cube", "--json")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["result"]["betti"][-1] == 581777702256640
    _, out, _ = run(capsys, "table", "--family", "path", "--polytope", "cube", "--max-n", "3",
                    "--json")
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


def test_json_strings_above_53_bits():
    from tbetti.cli import jsonable
    assert jsonable({"x": [2 ** 53, 5]}) == {"x": ["9007199254740992", 5]}


def test_plain_output_is_stable(capsys):
    first = run(capsys, "betti", "--graph", "star:4", "--polytope", "assoc")[1]
    assert run(capsys, "betti", "--graph", "star:4", "--polytope", "assoc")[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tbetti", "invariant", "--graph", "path:4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "a = 2\nb = 0\n"
