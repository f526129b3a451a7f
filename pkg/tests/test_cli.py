import json

from powergraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group(capsys):
    code, out, _ = run(capsys, "group", "A4")
    assert code == 0
    assert "order: 12" in out and "element orders: 1:1, 2:3, 3:8" in out


def test_graph_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "Z2xZ2", "--format", "graph6")
    assert (code, out) == (0, "Bw\n")
    code, out, _ = run(capsys, "graph", "Z4", "--kind", "power", "--format", "json")
    assert json.loads(out)["edges"] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    path = tmp_path / "g.dot"
    assert run(capsys, "graph", "S3", "--format", "dot", "-o", str(path))[0] == 0
    assert path.read_text().startswith("graph")


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "Z20", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["predicted"]["is_toroidal"] is True
    assert doc["computed"]["diameter"] == "inf"
    code, out, _ = run(capsys, "analyze", "Q8")
    assert "identified as: Q8" in out


def test_genus(capsys, tmp_path):
    code, out, _ = run(capsys, "genus", "Z20", "--orientable-max", "1", "--euler-max", "1")
    assert code == 0 and out.count(": embeddable") == 2
    g6 = tmp_path / "k5.g6"
    g6.write_text("D~{\n")
    wit = tmp_path / "w.json"
    code, out, _ = run(capsys, "genus", str(g6), "--orientable-max", "0", "--witness", str(wit))
    assert code == 0 and "not_embeddable" in out
    assert json.loads(wit.read_text())[0]["decision"] == "not_embeddable"


def test_genus_exhausted(capsys):
    code, out, _ = run(capsys, "genus", "Z2xZ6", "--orientable-max", "1", "--nodes", "3")
    assert code == 3 and "exhausted" in out


def test_verify(capsys, tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text("# sample\nZ12\nQ8  # quaternion\n")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "structure", "--corpus", str(manifest), "--report", str(report), "--no-timing")
    assert code == 0 and out.strip().endswith("PASS")
    assert [e["label"] for e in json.loads(report.read_text())["entries"]] == ["Z12", "Q8"]
    manifest.write_text("Q12\n")
    code, out, _ = run(capsys, "verify", "--suite", "structure", "--corpus", str(manifest))
    assert code == 1 and "FAIL Q12 diameter" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "group", "Q6")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "graph", "Z64xZ2")
    assert code == 2
