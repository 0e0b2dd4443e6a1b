import json

from formstrength.cli import run


def _capture(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_regseq_regular_exit_zero(tmp_path, capsys):
    path = tmp_path / "sys.txt"
    path.write_text("ring n=3 field=q\nx1\nx2\nx3\n")
    assert run(["regseq", "--in", str(path)]) == 0
    out, _ = _capture(capsys)
    assert "regular sequence" in out


def test_regseq_non_regular_exit_one(tmp_path, capsys):
    path = tmp_path / "sys.txt"
    path.write_text("ring n=2 field=q\nx1\nx1*x2\n")
    assert run(["regseq", "--in", str(path)]) == 1
    out, _ = _capture(capsys)
    assert "NOT a regular sequence" in out


def test_regseq_ring_flag(tmp_path):
    path = tmp_path / "sys.txt"
    path.write_text("x1\nx2\n")
    assert run(["regseq", "--in", str(path), "--ring", "n=2 field=q"]) == 0


def test_usage_errors_exit_two(tmp_path, capsys):
    assert run(["regseq", "--bogus"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["regseq"]) == 2  # missing --in
    _capture(capsys)


def test_quadric_minrank_diag(capsys):
    assert run(["quadric", "minrank", "--diag", "1,1,2,3", "--p", "101"]) == 0
    out, _ = _capture(capsys)
    assert "minrank: 2" in out
    assert "agrees: True" in out


def test_quadric_minrank_json_deterministic(capsys):
    assert run(["quadric", "minrank", "--diag", "1,1,2,3", "--p", "101", "--json"]) == 0
    first, _ = _capture(capsys)
    assert run(["quadric", "minrank", "--diag", "1,1,2,3", "--p", "101", "--json"]) == 0
    second, _ = _capture(capsys)
    assert first == second
    doc = json.loads(first)
    assert doc["result"]["minrank"] == 2
    assert doc["environment"]["seed"] == 0  # seed recorded even when unused


def test_quadric_rank_and_collective(tmp_path, capsys):
    path = tmp_path / "forms.txt"
    path.write_text("ring n=6 field=fp:5 matrix=3x2\n"
                    "x2_1*x3_2 - x3_1*x2_2\n"
                    "x1_1*x3_2 - x3_1*x1_2\n"
                    "x1_1*x2_2 - x2_1*x1_2\n")
    assert run(["quadric", "collective", "--in", str(path), "--json"]) == 0
    out, _ = _capture(capsys)
    assert json.loads(out)["result"]["collective_strength"] == 1

    gram = tmp_path / "gram.txt"
    gram.write_text("0 1/2 0\n1/2 0 0\n0 0 -1\n")
    assert run(["quadric", "rank", "--in", str(gram)]) == 0
    out, _ = _capture(capsys)
    assert "rank: 3" in out


def test_minors_export_feeds_gb(tmp_path, capsys):
    assert run(["minors", "--matrix", "4x3", "--field", "fp:7"]) == 0
    out, _ = _capture(capsys)
    exported = tmp_path / "minors.txt"
    exported.write_text(out)
    assert run(["gb", "codim", "--in", str(exported)]) == 0
    out, _ = _capture(capsys)
    assert out.strip() == "2"


def test_gb_operations(tmp_path, capsys):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("ring n=3 field=q\nx1*x2\n")
    other = tmp_path / "other.txt"
    other.write_text("ring n=3 field=q\nx1*x3\n")

    assert run(["gb", "basis", "--in", str(ideal)]) == 0
    out, _ = _capture(capsys)
    assert "x1*x2" in out

    assert run(["gb", "dim", "--in", str(ideal)]) == 0
    out, _ = _capture(capsys)
    assert out.strip() == "2"

    assert run(["gb", "intersect", "--in", str(ideal), "--in2", str(other)]) == 0
    out, _ = _capture(capsys)
    assert "x1*x2*x3" in out.replace(" ", "")

    assert run(["gb", "quotient", "--in", str(ideal), "--f", "x2"]) == 0
    out, _ = _capture(capsys)
    assert out.splitlines()[-1].strip() == "x1"

    assert run(["gb", "quotient", "--in", str(ideal)]) == 2  # missing --f
    _capture(capsys)


def test_gb_basis_lex_order(tmp_path, capsys):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("ring n=3 field=q\nx1^2 - x2\nx1^3 - x3\n")
    assert run(["gb", "basis", "--in", str(ideal), "--order", "lex"]) == 0
    out, _ = _capture(capsys)
    assert "x2^3 - x3^2" in out  # the eliminant appears under lex


def test_regseq_respects_order_flag(tmp_path):
    path = tmp_path / "sys.txt"
    path.write_text("ring n=3 field=q\nx1\nx2\nx3\n")
    assert run(["regseq", "--in", str(path), "--order", "lex"]) == 0


def test_certify_json_and_determinism(capsys):
    assert run(["certify", "n32-lower", "--json"]) == 0
    first, _ = _capture(capsys)
    doc = json.loads(first)
    assert doc["passed"] is True
    assert doc["claim"] == "N(3,2) >= 2"
    assert run(["certify", "n32-lower", "--json"]) == 0
    second, _ = _capture(capsys)
    assert first == second


def test_certify_n33_passes(capsys):
    assert run(["certify", "n33", "--json"]) == 0
    out, _ = _capture(capsys)
    doc = json.loads(out)
    assert doc["passed"] is True
    names = [v["name"] for v in doc["subverdicts"]]
    assert "exclusion_skew" in names


def test_certify_all(capsys):
    assert run(["certify", "all", "--json"]) == 0
    out, _ = _capture(capsys)
    docs = json.loads(out)
    assert len(docs) == 4
    assert all(d["passed"] for d in docs)


def test_certify_with_prime_override(capsys):
    assert run(["certify", "n32-lower", "--p", "7", "--json"]) == 0
    out, _ = _capture(capsys)
    assert json.loads(out)["environment"]["primes"] == [7]


def test_recheck_cli_round_trip(tmp_path, capsys):
    assert run(["certify", "small-r", "--json"]) == 0
    out, _ = _capture(capsys)
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert run(["recheck", str(path)]) == 0
    out, _ = _capture(capsys)
    assert "PASS" in out

    # single-character tamper flips the verdict
    text = path.read_text()
    tampered = text.replace('"passed": true', '"passed": false', 1)
    assert tampered != text
    path.write_text(tampered)
    assert run(["recheck", str(path)]) == 1
    out, _ = _capture(capsys)
    assert "FAIL" in out


def test_recheck_rejects_garbage(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(["recheck", str(path)]) == 2
    _capture(capsys)


def test_threads_do_not_change_output(capsys):
    assert run(["quadric", "minrank", "--diag", "1,1,2,3,4", "--p", "101", "--json"]) == 0
    serial, _ = _capture(capsys)
    assert run(["quadric", "minrank", "--diag", "1,1,2,3,4", "--p", "101",
                "--json", "--threads", "3"]) == 0
    threaded, _ = _capture(capsys)
    assert serial == threaded


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    out, _ = _capture(capsys)
    assert out.strip() == "0.1.0"
