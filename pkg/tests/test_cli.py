import json

import jsonschema
import pytest

from uklc import io
from uklc.cli import main
from uklc.schemas import SCHEMAS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gadget(tmp_path, capsys):
    out = tmp_path / "gadget"
    code, _, _ = run(capsys, "gen", "gadget", "-k", 2, "-n", 2, "-o", out)
    assert code == 0
    return out


def check(kind, text):
    data = json.loads(text)
    jsonschema.validate(data, SCHEMAS[kind])
    assert io.dumps(data) == text
    return data


def test_schema_flag(capsys):
    code, out, _ = run(capsys, "--schema")
    assert code == 0 and json.loads(out) == SCHEMAS
    for schema in SCHEMAS.values():
        jsonschema.Draft202012Validator.check_schema(schema)


def test_gen_writes_only_into_output_dir(tmp_path, capsys):
    out = tmp_path / "deep" / "dir"
    code, text, err = run(capsys, "gen", "gadget", "-k", 2, "-n", 2, "-o", out)
    assert code == 0 and "gadget" in err
    data = check("gen", text)
    names = sorted(p.name for p in out.iterdir())
    assert names == ["claims.json", "coloring.json", "graph.col", "graph.meta.json", "lists.json"]
    assert sorted(p.name for p in tmp_path.rglob("*") if p.is_file()) == names
    assert all(str(out) in f for f in data["files"])
    jsonschema.validate(json.loads((out / "claims.json").read_text()), SCHEMAS["claims"])
    jsonschema.validate(json.loads((out / "lists.json").read_text()), SCHEMAS["lists"])
    jsonschema.validate(json.loads((out / "coloring.json").read_text()), SCHEMAS["coloring"])
    jsonschema.validate(json.loads((out / "graph.meta.json").read_text()), SCHEMAS["metadata"])


def test_unique_on_gadget(gadget, capsys):
    code, out, err = run(capsys, "unique", gadget / "graph.col", gadget / "lists.json")
    assert code == 0 and "unique" in err
    data = check("unique", out)
    predicted = json.loads((gadget / "coloring.json").read_text())["colors"]
    assert data["verdict"] == "unique" and data["coloring"] == predicted


def test_solve_count_direct_audit(gadget, capsys):
    g, L, c = gadget / "graph.col", gadget / "lists.json", gadget / "coloring.json"
    code, out, _ = run(capsys, "solve", g, L)
    assert code == 0 and check("solve", out)["count"] == 1
    code, out, _ = run(capsys, "count", g, L, "--cap", 5)
    assert code == 0 and check("count", out)["count"] == 1
    code, out, _ = run(capsys, "direct", g, L, c)
    data = check("direct", out)
    assert code == 0 and data["bidirectional"] == [] and data["violations"] == []
    assert data["flow"]["net_inflow"] == 0
    code, out, err = run(capsys, "audit-tight", g, L, c)
    assert code == 2 and "degree equality" in err and out == ""


def test_direct_reports_alternate(tmp_path, capsys):
    (tmp_path / "g.col").write_text("p 2 1\ne 1 2\n")
    (tmp_path / "l.json").write_text('{"lists": [[1, 2], [1, 2]]}')
    code, out, _ = run(capsys, "direct", tmp_path / "g.col", tmp_path / "l.json")
    data = check("direct", out)
    assert code == 0 and data["bidirectional"] == [[0, 1]]
    assert data["alternate_coloring"] == [2, 1] and data["flow"] is None


def test_audit_commands(tmp_path, capsys):
    (tmp_path / "e.col").write_text("p 2 1\ne 1 2\n")
    (tmp_path / "e.json").write_text('{"lists": [[1], [1, 2]]}')
    (tmp_path / "c.json").write_text('{"colors": [1, 2]}')
    code, out, _ = run(capsys, "audit-tight", tmp_path / "e.col", tmp_path / "e.json",
                       tmp_path / "c.json")
    assert code == 0 and all(r["equal"] for r in check("audit-tight", out)["colors"])
    run(capsys, "gen", "complete", "-n", 6, "-o", tmp_path / "k6")
    (tmp_path / "k6.json").write_text(json.dumps({"lists": [[1, 2, 3, 4, 5]] * 5 + [[1, 2, 3, 4, 6]]}))
    code, out, _ = run(capsys, "audit-t5", tmp_path / "k6" / "graph.col", tmp_path / "k6.json")
    data = check("audit-t5", out)
    assert code == 0 and data["satisfied"] and data["bound"] == "5/2"


def test_certify_planar_with_meta(tmp_path, capsys):
    (tmp_path / "planar.col").write_text("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    (tmp_path / "meta.json").write_text('{"planar": true}')
    code, out, _ = run(capsys, "certify", "-k", 4, tmp_path / "planar.col",
                       "--meta", tmp_path / "meta.json")
    data = check("certify", out)
    assert code == 0 and data["certificate"]["k"] == 4
    code, out, _ = run(capsys, "certify", "-k", 4, tmp_path / "planar.col",
                       "--meta", tmp_path / "meta.json", "--all")
    rules = [c["rule"] for c in check("certify", out)["all"]]
    assert "PlanarM4" in rules


def test_certify_with_induced_file(tmp_path, capsys):
    run(capsys, "gen", "hn", "-n", 1, "-o", tmp_path / "h1")
    params = json.loads((tmp_path / "h1" / "claims.json").read_text())["params"]
    inner = {"rule": "BlockM2", "k": 2, "params": {"component": [0, 1, 2, 3], "blocks": []}}
    (tmp_path / "ind.json").write_text(json.dumps(
        {"H_vertices": params["induced_k4"][0], "inner_k": 2, "l": 1, "certificate": inner}))
    code, out, _ = run(capsys, "certify", "-k", 3, tmp_path / "h1" / "graph.col",
                       "--induced", tmp_path / "ind.json")
    data = check("certify", out)
    assert code == 0 and data["certificate"]["rule"] == "InducedSubgraph"


def test_search_commands(tmp_path, capsys):
    run(capsys, "gen", "complement-c6", "-o", tmp_path / "c6")
    g = tmp_path / "c6" / "graph.col"
    code, out, _ = run(capsys, "search", "witness", "-k", 2, "-t", 3, "--nodes", "1e7", g)
    assert code == 0 and check("witness", out)["witness"]["status"] == "found"
    code, out, _ = run(capsys, "search", "mnumber", g)
    bounds = check("mnumber", out)["bounds"]
    assert code == 0 and (bounds["m_lower"], bounds["m_upper"]) == (3, 3)
    code, out, _ = run(capsys, "mnumber", g, "--jobs", 2)
    assert code == 0 and check("mnumber", out)["bounds"]["determined"]
    for n in (4, 5):
        run(capsys, "gen", "cycle", "-n", n, "-o", tmp_path / "cycles" / f"c{n}")
    code, out, _ = run(capsys, "search", "conjecture", "-k", 2, "--stream",
                       tmp_path / "cycles" / "c4", tmp_path / "cycles" / "c5")
    scan = check("conjecture", out)["scan"]
    assert code == 0 and scan["at_boundary"] == 2 and scan["definitive_negatives"] == 2


def test_budget_exceeded_exit_code(tmp_path, capsys):
    run(capsys, "gen", "hn", "-n", 1, "-o", tmp_path / "h1")
    code, out, err = run(capsys, "search", "witness", "-k", 2, "--nodes", 10,
                         tmp_path / "h1" / "graph.col")
    assert code == 3 and "budget_exceeded" in err
    assert check("witness", out)["witness"]["status"] == "budget_exceeded"


def test_missing_file_exit_code(capsys):
    code, out, err = run(capsys, "solve", "missing.col", "lists.json")
    assert code == 2 and "missing.col" in err and out == ""


def test_malformed_file_names_line(tmp_path, capsys):
    (tmp_path / "bad.col").write_text("p 3 2\ne 1 2\ne 2 9\n")
    (tmp_path / "l.json").write_text('{"lists": [[1], [2], [3]]}')
    code, _, err = run(capsys, "unique", tmp_path / "bad.col", tmp_path / "l.json")
    assert code == 2 and "bad.col:3" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "gen", "gadget", "-o", "x")[0] == 2


def test_rerun_reproduces_verdicts(gadget, capsys):
    argv = ["unique", gadget / "graph.col", gadget / "lists.json"]
    first = json.loads(run(capsys, *argv)[1])
    second = json.loads(run(capsys, *first["run"]["command"][1:])[1])
    for data in (first, second):
        data["run"].pop("wall_time")
    assert io.dumps(first) == io.dumps(second)
    assert first["run"]["inputs"][0]["sha256"]
