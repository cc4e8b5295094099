import io
import json
import subprocess
import sys


from hopfinv import __version__
from hopfinv.cache import ResultCache
from hopfinv.cli import run
from hopfinv.hopf import set_guards
from hopfinv.invariants import set_psi_max_n

P3 = '{"n": 3, "edges": [[1, 2], [2, 3]]}'
P4 = '{"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        code = run(["--no-cache", *argv], out, err)
    finally:
        set_psi_max_n(8)
        set_guards(takeuchi=7, hm=9)
    return code, out.getvalue(), err.getvalue()


def as_json(text):
    return json.loads(text.strip().splitlines()[-1])


def test_psi_path():
    code, out, _ = call("psi", "--graph", P3, "--basis", "p,h")
    assert code == 0
    doc = as_json(out)
    terms = {tuple(t["partition"]): t["coeff"]["0"] for t in doc["expansions"]["h"]["terms"]}
    assert terms == {(3,): "3", (2, 1): "-7", (1, 1, 1): "4"}


def test_graph_from_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(P3)
    code, out, _ = call("psi", "--graph", str(path))
    assert code == 0


def test_chrom_poly_value():
    code, out, _ = call("chrom-poly", "--graph", P3, "--at", "-1", "--reciprocity")
    doc = as_json(out)
    assert doc["value"] == "-4"
    assert doc["reciprocity"]["ok"]


def test_character_forms():
    for text in ("edge", "A:K2", "A:K2,P3", 'A:[{"n": 2, "edges": [[1, 2]]}]'):
        code, _, err = call("psi", "--graph", P4, "--character", text)
        assert code == 0, err
    code, out, _ = call("psi", "--perm", "2143", "--character", "zeta21")
    assert code == 0
    code, _, _ = call("psi", "--perm", "2143", "--character", "gamma:21")
    assert code == 0
    code, _, _ = call("psi", "--graph", P4, "--character", "zeta21")
    assert code == 2


def test_antipode_methods_agree():
    _, a, _ = call("antipode", "--graph", P3, "--classes")
    _, b, _ = call("antipode", "--graph", P3, "--method", "hm")
    assert as_json(a)["terms"] == as_json(b)["terms"]


def test_nabla():
    code, out, _ = call("nabla-q1", "--graph", P3, "--checks")
    doc = as_json(out)
    assert code == 0
    assert doc["checks"]["column"] and doc["checks"]["top_row"]


def test_bond_and_dd_bond():
    code, out, _ = call("bond", "--graph", P3)
    assert code == 0 and len(as_json(out)["elements"]) == 4
    code, out, _ = call("dd-bond", "--graph", P4)
    assert code == 0 and len(as_json(out)["elements"]) == 2


def test_sched(tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("x1 != x2\n")
    code, out, _ = call("sched", "eval", "--formula", str(f), "--colors", "2")
    assert as_json(out)["qsym"]["terms"] == [{"composition": [1, 1], "coeff": {"0": "2"}}]
    code, out, _ = call("sched", "build", "--graph", P4, "--A", "K2")
    assert as_json(out)["formula"] == "x1 = x2 & x3 = x4 & x2 != x3"
    code, out, _ = call("sched", "verify", "--graph", P4, "--A", "K2,P3")
    assert as_json(out)["equal"] is True


def test_sched_syntax_error_is_input_error():
    code, _, err = call("sched", "eval", "--formula", "x1 ! x2")
    assert code == 2 and "token 2" in err


def test_scan_lines():
    code, out, _ = call("scan", "--family", "graphs", "--n", "3", "--predicate", "e-positive")
    lines = [json.loads(x) for x in out.strip().splitlines()]
    assert code == 0
    assert lines[-1]["summary"]["total"] == 4
    assert len(lines) == 5


def test_exit_codes():
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("psi", "--graph", '{"n": 9, "edges": []}')[0] == 3
    assert call("--max-n", "9", "psi", "--graph", '{"n": 9, "edges": []}')[0] == 0
    assert call("psi", "--graph", '{"n": 2, "edges": [[1, 3]]}')[0] == 2
    assert call("psi", "--graph", "{not json")[0] == 2
    assert call("psi", "--perm", "1224")[0] == 2


def test_output_keys_sorted():
    _, out, _ = call("psi", "--graph", P3)
    line = out.strip()
    assert line == json.dumps(json.loads(line), sort_keys=True, separators=(",", ":"))


def test_cache_is_transparent(tmp_path):
    argv = ["--cache-dir", str(tmp_path), "psi", "--graph", P4, "--basis", "e"]
    first, second = io.StringIO(), io.StringIO()
    assert run(argv, first, io.StringIO()) == 0
    assert any(tmp_path.rglob("*.json"))
    assert run(argv, second, io.StringIO()) == 0
    assert first.getvalue() == second.getvalue()
    # isomorphic relabelling hits the same entry, output still names the input
    relabelled = '{"n": 4, "edges": [[1, 3], [3, 2], [2, 4]]}'
    third = io.StringIO()
    run(["--cache-dir", str(tmp_path), "psi", "--graph", relabelled, "--basis", "e"], third, io.StringIO())
    assert as_json(third.getvalue())["expansions"] == as_json(first.getvalue())["expansions"]
    assert len(list(tmp_path.rglob("*.json"))) == 1


def test_cache_roundtrip(tmp_path):
    cache = ResultCache(str(tmp_path), __version__)
    calls = []
    value = cache.get_or_compute(["k"], lambda: calls.append(1) or {"a": 1})
    assert value == {"a": 1}
    assert cache.get_or_compute(["k"], lambda: calls.append(1) or {"a": 2}) == {"a": 1}
    assert len(calls) == 1
    other = ResultCache(str(tmp_path), "other-version")
    assert other.get(["k"]) is None
    assert not ResultCache(None, __version__).enabled


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("CHA_CACHE_DIR", str(tmp_path))
    assert ResultCache.from_env(__version__).directory == str(tmp_path)
    assert ResultCache.from_env(__version__, disabled=True).directory is None


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfinv", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == __version__
