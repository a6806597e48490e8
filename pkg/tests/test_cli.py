"""Exit-code contract and output stability of the ``bvfla`` command."""

import json
import os
import subprocess
import sys

import pytest

from bvfla.cli import main
from bvfla.fixtures import golden_files


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(fixture_dir, name):
    return os.path.join(fixture_dir, name)


def test_fixtures_are_byte_exact(tmp_path, capsys, fixture_dir):
    code, _, _ = run(capsys, "fixtures", "--out", str(tmp_path))
    assert code == 0
    for name, text in golden_files().items():
        with open(tmp_path / name, "rb") as fh:
            written = fh.read()
        with open(fx(fixture_dir, name), "rb") as fh:
            golden = fh.read()
        assert written == golden == text.encode()


def test_laws_example31(capsys, fixture_dir):
    code, out, _ = run(capsys, "laws", fx(fixture_dir, "example31.tbl"),
                       "--at", "associative=d,b,a", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["laws"]["left_invertive"]["holds"] is True
    assoc = rep["laws"]["associative"]
    assert assoc["holds"] is False
    assert assoc["witness"]["labels"] == ["d", "b", "a"]
    assert assoc["witness"]["value_labels"] == ["d", "b"]
    assert rep["left_identity"] == {"index": 1, "label": "b"}


def test_laws_example32_text(capsys, fixture_dir):
    code, out, _ = run(capsys, "laws", fx(fixture_dir, "example32.tbl"))
    assert code == 0
    assert "left identity: none" in out


def test_laws_non_la_table_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.tbl"
    path.write_text("2\n0 0\n1 0\n")
    code, out, _ = run(capsys, "laws", str(path))
    assert code == 1
    assert "left_invertive" in out and "witness" in out.splitlines()[0]


def test_laws_integer_window(capsys):
    code, out, _ = run(capsys, "laws", "--integers", "b-a", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["laws"]["associative"]["witness"]["elements"] == [-5, -5, -5]


def test_classify_examples(capsys, fixture_dir):
    code, out, _ = run(capsys, "classify", fx(fixture_dir, "example31.tbl"),
                       fx(fixture_dir, "example31.bvf.json"), "--json")
    assert code == 0
    assert all(v["holds"] for v in json.loads(out)["classes"].values())

    code, out, _ = run(capsys, "classify", fx(fixture_dir, "example32.tbl"),
                       fx(fixture_dir, "example32.bvf.json"), "--at", "right=b,c", "--json")
    assert code == 0
    classes = json.loads(out)["classes"]
    assert classes["interior"]["holds"] is True
    right = classes["right"]
    assert right["holds"] is False
    assert right["witness"]["labels"] == ["b", "c"]
    assert right["witness"]["pos"] == ["1/10", "3/10"]
    assert right["witness"]["neg"] == ["-1/5", "-2/5"]


def test_classify_gamma_and_decimal(capsys, fixture_dir):
    code, out, _ = run(capsys, "classify", fx(fixture_dir, "example31.tbl"), "--gamma")
    assert code == 0
    assert out.count("true") == 7
    code, out, _ = run(capsys, "classify", fx(fixture_dir, "example32.tbl"),
                       fx(fixture_dir, "example32.bvf.json"), "--decimal")
    assert "decimals (~)" in out and "~0.1000" in out


def test_conflicting_flags_exit_2(capsys, fixture_dir):
    code, _, err = run(capsys, "classify", fx(fixture_dir, "example31.tbl"),
                       fx(fixture_dir, "example31.bvf.json"), "--gamma")
    assert code == 2 and "exactly one" in err
    code, _, _ = run(capsys, "classify", fx(fixture_dir, "example31.tbl"))
    assert code == 2
    code, _, _ = run(capsys, "verify", fx(fixture_dir, "example31.tbl"), "--up-to-order", "2")
    assert code == 2


def test_io_and_parse_errors_exit_2(tmp_path, capsys, fixture_dir):
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.tbl"))
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 5\n1 0\n")
    code, _, err = run(capsys, "laws", str(bad))
    assert code == 2 and "line 2" in err
    badj = tmp_path / "bad.json"
    badj.write_text('{"pos": ["2"], "neg": ["0"]}')
    code, _, _ = run(capsys, "classify", fx(fixture_dir, "example31.tbl"), str(badj))
    assert code == 2


def test_verify_example31(capsys, fixture_dir):
    code, out, _ = run(capsys, "verify", fx(fixture_dir, "example31.tbl"),
                       "--bvf", fx(fixture_dir, "example31.bvf.json"),
                       "--samples", "1000", "--seed", "7", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["all_applicable_pass"] is True
    assert {r["status"] for r in rep["reports"]} == {"pass"}


def test_verify_example32_not_applicable(capsys, fixture_dir):
    code, out, _ = run(capsys, "verify", fx(fixture_dir, "example32.tbl"),
                       "--bvf", fx(fixture_dir, "example32.bvf.json"), "--samples", "50", "--json")
    assert code == 0
    st = {r["id"]: r["status"] for r in json.loads(out)["reports"]}
    assert st["lem-gamma-absorption"] == "not_applicable"
    assert st["prop-right-iff-interior"] == "not_applicable"
    assert "fail" not in st.values()


def test_verify_nothing_to_check(capsys, fixture_dir):
    code, out, _ = run(capsys, "verify", fx(fixture_dir, "example31.tbl"), "--samples", "0")
    assert code == 0 and "nothing to check" in out


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--up-to-order", "2", "--samples", "20", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["magmas"] == 7 and rep["failures"] == []


def test_enumerate(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "2")
    assert code == 0
    lines = out.splitlines()
    assert json.loads(lines[0])["count"] == 6 and len(lines) == 7
    code, out, _ = run(capsys, "enumerate", "--order", "1")
    assert code == 0 and json.loads(out.splitlines()[0])["count"] == 1
    path = tmp_path / "c.txt"
    code, _, err = run(capsys, "enumerate", "--order", "4", "--budget", "100", "--out", str(path))
    assert code == 3 and "partial" in err
    assert json.loads(path.read_text().splitlines()[0])["budget_exhausted"] is True


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--target", "interior&!two_sided", "--orders", "4", "--json")
    assert code == 0
    hit = json.loads(out)["hit"]
    assert hit["classification"]["interior"]["holds"]
    assert not hit["classification"]["two_sided"]["holds"]
    code, out, _ = run(capsys, "search", "--target", "subsemigroup")
    assert code == 0 and "trial 0" in out
    code, out, _ = run(capsys, "search", "--target", "left&!subsemigroup", "--max-trials", "500")
    assert code == 4 and out.strip() == "none"
    code, _, _ = run(capsys, "search", "--target", "left+")
    assert code == 2


@pytest.mark.slow
def test_search_unsatisfiable_default_budget(capsys):
    code, out, _ = run(capsys, "search", "--target", "left&!subsemigroup")
    assert code == 4 and out.strip() == "none"


def test_json_output_is_stable(capsys, fixture_dir):
    args = ("classify", fx(fixture_dir, "example32.tbl"), fx(fixture_dir, "example32.bvf.json"), "--json")
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    assert first == json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n"


def test_console_script_module_entry(fixture_dir):
    out = subprocess.run([sys.executable, "-m", "bvfla.cli", "laws", fx(fixture_dir, "example31.tbl")],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "left identity: b" in out.stdout
