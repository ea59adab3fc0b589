import json

import pytest

from hopfrad.cli import main
from hopfrad.schema import dump_fixture, write_builtin_fixtures
from hopfrad.fixtures import fixture_by_name


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    write_builtin_fixtures(str(d))
    return d


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(capsys, fixture_dir):
    code, out, _ = run(capsys, "validate", str(fixture_dir / "e2.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["checks"] == {"algebra": "pass", "hopf": "pass", "action": "pass"}


def test_validate_corrupted_antipode(capsys, fixture_dir, tmp_path):
    doc = json.loads((fixture_dir / "e5.json").read_text())
    doc["H"]["antipode"][2] = ["0", "0", "1", "0"]  # S(y) = y
    bad = tmp_path / "bad-antipode.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 2
    rep = json.loads(out)
    assert rep["checks"]["hopf"] == "fail"
    assert any("antipode" in f for f in rep["failures"])


def test_validate_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    code, _, err = run(capsys, "validate", str(empty))
    assert code == 3
    assert "parse error" in err


def test_validate_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent.json")
    assert code == 3


def test_radical_baer(capsys, fixture_dir):
    code, out, _ = run(capsys, "radical", str(fixture_dir / "e2.json"), "baer")
    assert code == 0
    rep = json.loads(out)
    assert rep["radicals"]["h_baer"]["basis"] == [[0, 1]]


def test_radical_all_reports_unsupported(capsys, fixture_dir):
    code, out, _ = run(capsys, "radical", str(fixture_dir / "e5.json"), "all")
    assert code == 0
    rep = json.loads(out)
    assert rep["radicals"]["gt"]["status"] == "unsupported"
    assert rep["radicals"]["h_baer"]["basis"] == []
    # classical radical reported for contrast
    assert rep["radicals"]["classical_nilradical"]["basis"] == [[0, 1]]


def test_radical_jacobson_backend_fallback(capsys, fixture_dir):
    code, out, _ = run(capsys, "radical", str(fixture_dir / "e2-f2.json"), "jacobson")
    assert code == 0
    rep = json.loads(out)
    entry = rep["radicals"]["h_jacobson"]
    assert entry["basis"] == [[0, 1]]
    assert "enumeration" in entry["method"]


def test_oracle_parity(capsys, fixture_dir):
    for name in ("e2-f3.json", "e5-f3.json", "e3-f2.json"):
        code, out, _ = run(capsys, "oracle", str(fixture_dir / name))
        assert code == 0, name
        rep = json.loads(out)
        assert "diffs" not in rep
    code, out, _ = run(capsys, "oracle", str(fixture_dir / "e2-f3.json"))
    assert json.loads(out)["h_ideal_count"] == 3


def test_oracle_cap_exceeded(capsys, fixture_dir):
    code, _, err = run(capsys, "oracle", str(fixture_dir / "e2-f3.json"), "--cap", "2")
    assert code == 4


def test_regress_deterministic(capsys, fixture_dir):
    code1, out1, _ = run(capsys, "regress", str(fixture_dir))
    code2, out2, _ = run(capsys, "regress", str(fixture_dir))
    assert code1 == code2 == 0
    assert out1 == out2


def test_regress_empty_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "regress", str(tmp_path))
    assert code == 0
    assert "warning" in json.loads(out)


def test_regress_catches_broken_fixture(capsys, fixture_dir, tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "e2.json").write_text((fixture_dir / "e2.json").read_text())
    doc = json.loads((fixture_dir / "e2.json").read_text())
    doc["action"] = [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]  # g.1 = x
    doc["metadata"]["name"] = "e2-broken"
    (d / "e2-broken.json").write_text(json.dumps(doc))
    code, out, _ = run(capsys, "regress", str(d))
    assert code == 5
    rep = json.loads(out)
    assert rep["checks"]["e2-broken/validates"] == "fail"
    assert rep["checks"]["e2/validates"] == "pass"


def test_text_format(capsys, fixture_dir):
    code, out, _ = run(
        capsys, "validate", str(fixture_dir / "e2.json"), "--format", "text"
    )
    assert code == 0
    assert "algebra: pass" in out
