import io
import json
import subprocess
import sys

import pytest

from twoswitch import are_isomorphic, catalog, induced_subgraph, relabel, to_graph6
from twoswitch.cli import CACHE_ENV, ProfileCache, run


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_catalog_g6():
    code, out, _ = call(["catalog", "U", "--g6"])
    assert code == 0 and out.strip() == to_graph6(catalog("U"))
    code, out, _ = call(["catalog", "P3"])
    assert out.splitlines() == ["3", "0 1", "1 2"]
    code, _, err = call(["catalog", "nonsense"])
    assert code == 2 and "error" in err


def test_realizations():
    assert call(["realizations", "3,2,2,2,1", "--count"])[:2] == (0, "2\n")
    code, out, _ = call(["realizations", "2,2,2,2,2,2", "--list"])
    assert code == 0 and len(out.split()) == 2
    code, _, err = call(["realizations", "3,3,1"])
    assert code == 2 and "not graphical" in err
    code, _, err = call(["realizations", "3,x"])
    assert code == 2


def test_verify_exit_codes(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = call(["verify", "thm2.2", "--max-n", "6", "--report", str(report)])
    assert code == 0 and "PASS" in out
    data = json.loads(report.read_text())
    assert data["pass"] is True and data["claim"] == "thm2.2"
    code, out, _ = call(["verify", "thm2.2", "--max-n", "6", "--negative-control"])
    assert code == 1 and "FAIL" in out
    assert call(["verify", "thm2.2", "--max-n", "12"])[0] == 2
    assert call(["verify", "nope"])[0] == 2


def test_usage_errors():
    assert call([])[0] == 2
    assert call(["frobnicate"])[0] == 2


def test_malformed_graph6_reports_position():
    code, _, err = call(["classify", "D??z"])
    assert code == 2 and "position 3" in err


def test_classify_text_and_json(monkeypatch):
    code, out, _ = call(["classify", to_graph6(catalog("U"))])
    assert code == 0
    assert "threshold=no" in out and "hereditary_unigraph=no" in out and "unigraph=yes" in out
    code, out, _ = call(["classify", "-", "--json"], stdin="Ch\nDhc\n\n", monkeypatch=monkeypatch)
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["graph6"] for r in recs] == ["Ch", "Dhc"]
    assert list(recs[0]) == ["graph6", "n", "degree_sequence", "threshold", "matrogenic", "unigraph",
                             "hereditary_unigraph", "witnesses"]
    assert recs[1]["matrogenic"] is True and recs[1]["threshold"] is False


def test_a4c_and_switch():
    code, out, _ = call(["a4c", "C`"])  # 2K2
    assert out.splitlines() == ["<0,1:2,3>", "<0,1:3,2>"]
    p5 = to_graph6(catalog("P5"))
    code, out, _ = call(["switch", p5, "--cycle", "4,3,1,0", "--check-iso"])
    lines = out.splitlines()
    assert code == 0 and lines[1] == "changes isomorphism class"
    code, _, err = call(["switch", p5, "--cycle", "0,1,2,3"])
    assert code == 2 and "not an alternating 4-cycle" in err
    assert call(["switch", p5, "--cycle", "0,1"])[0] == 2


def test_configs(tmp_path):
    code, out, _ = call(["configs", to_graph6(catalog("P5")), "--which", "FIG2_A,FIG6"])
    assert code == 0 and out.startswith("FIG2_A: ") and "FIG6: " in out
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"k": 3, "E": [["x", "y"], ["y", "z"]], "F": [["x", "z"]], "roles": ["x", "y", "z"]}))
    code, out, _ = call(["configs", to_graph6(catalog("P4")), "--config", str(cfg)])
    assert code == 0 and out.startswith("custom: 4 embeddings")
    assert call(["configs", "Ch", "--which", "FIG9"])[0] == 2


def test_transition_formats():
    code, out, _ = call(["transition", "2,2,2,1,1", "--format", "json"])
    data = json.loads(out)
    assert data["edges"] == [[0, 1]] and len(data["nodes"]) == 2
    code, out, _ = call(["transition", "2,2,2,1,1", "--format", "dot"])
    assert "0 -- 1;" in out


def test_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    U = catalog("U")
    shuffled = relabel(U, [5, 3, 1, 0, 2, 4])
    code, first, _ = call(["classify", to_graph6(U), "--json"])
    lines = (tmp_path / "profiles.tsv").read_text().splitlines()
    assert len(lines) == 1 and "\t" in lines[0]
    code, second, _ = call(["classify", to_graph6(shuffled), "--json"])
    assert len((tmp_path / "profiles.tsv").read_text().splitlines()) == 1
    a, b = json.loads(first), json.loads(second)
    for k in ("threshold", "matrogenic", "unigraph", "hereditary_unigraph"):
        assert a[k] == b[k]
    # witnesses are translated to the input's labels
    wit = b["witnesses"]["hereditary_unigraph"]
    assert are_isomorphic(induced_subgraph(shuffled, wit["vertices"]), catalog(wit["forbidden"]))


def test_cache_spot_check_detects_corruption(tmp_path):
    cache = ProfileCache(tmp_path, spot_check_every=1)
    G = catalog("P4")
    cache.profile(G)
    key = next(iter(cache.entries))
    cache.entries[key] = dict(cache.entries[key], matrogenic=False, threshold=False)
    with pytest.raises(RuntimeError):
        cache.profile(G)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "twoswitch", "realizations", "4,2,2,2,2,2", "--count"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"
