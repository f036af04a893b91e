import json
import subprocess
import sys

import pytest

from braidcx.cli import main
from conftest import CORPUS

EXCLUDED = CORPUS / "excluded"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_classify(capsys):
    code, data = run_json(capsys, "classify", CORPUS / "s0.cx")
    assert code == 0
    assert data["point_classes"]["c"] == "branch"
    assert data["elementary"] == {"kind": "BranchedSurface"}


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", CORPUS / "bowtie.cx")
    assert code == 0 and "simple: no w" in out


def test_simplify_writes_log_and_replays(capsys, tmp_path):
    log = tmp_path / "bowtie.log"
    code, data = run_json(capsys, "simplify", CORPUS / "bowtie.cx", "--log", log)
    assert code == 0 and len(data["moves"]) == 1
    code, data = run_json(capsys, "replay", CORPUS / "bowtie.cx", log)
    assert code == 0 and data["matches"]


def test_replay_wrong_complex(capsys, tmp_path):
    log = tmp_path / "bowtie.log"
    run(capsys, "simplify", CORPUS / "bowtie.cx", "--log", log)
    code, _, err = run(capsys, "replay", CORPUS / "torus.cx", log)
    assert code == 2 and "initial fingerprint" in err


def test_decompose(capsys, validate):
    code, data = run_json(capsys, "decompose", CORPUS / "theta3.cx")
    assert code == 0 and data["node"] == "TwoCutNode" and data["m"] == 3
    validate("tree", data)


def test_h1(capsys, validate):
    code, data = run_json(capsys, "h1", CORPUS / "k5.cx", "--n", 2)
    assert code == 0 and data["value"]["text"] == "Z^6 (+) Z/2"
    validate("certificate", data)


def test_h1_text(capsys):
    code, out, _ = run(capsys, "h1", CORPUS / "figure_eight.cx", "--n", 2)
    assert code == 0 and out.strip().endswith("H1 = Z^4") and "one-cut" in out


def test_present(capsys, validate):
    code, data = run_json(capsys, "present", CORPUS / "h_tree.cx", "--closure")
    assert code == 0 and data["abelianization"]["free_rank"] == 5
    validate("presentation", data["presentation"])


def test_present_two_trees(capsys):
    code, data = run_json(capsys, "present", CORPUS / "tripod.cx", "--second", CORPUS / "tripod.cx")
    assert code == 0 and data["family"] == "twotrees"
    assert data["abelianization"]["free_rank"] == 3


def test_present_rejects_non_tree(capsys):
    code, _, _ = run(capsys, "present", CORPUS / "k4.cx")
    assert code == 2


def test_oracle(capsys, validate):
    code, data = run_json(capsys, "oracle", CORPUS / "tripod.cx", "--n", 2, "--pi1")
    assert code == 0 and data["h1"]["free_rank"] == 1
    validate("oracle", data)


def test_oracle_budget(capsys):
    code, _, err = run(capsys, "oracle", CORPUS / "k5.cx", "--n", 2, "--limit", 50)
    assert code == 2 and err


def test_verdict(capsys, validate):
    code, data = run_json(capsys, "verdict", CORPUS / "book3.cx")
    assert code == 0 and data["surface"] == "no" and data["symmetric_subgroup"] == "yes"
    validate("verdict", data)


def test_crosscheck_corpus(capsys, validate):
    code, data = run_json(capsys, "crosscheck", CORPUS, "--no-oracle")
    assert code == 0 and data["concordant"] and len(data["reports"]) >= 20
    validate("crosscheck", data)


@pytest.mark.parametrize("name", ["sphere", "projective_plane", "ball"])
def test_excluded_complexes_exit_2(capsys, name):
    code, _, err = run(capsys, "crosscheck", EXCLUDED / f"{name}.cx")
    assert code == 2 and "hypothesis failed" in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["h1", str(CORPUS / "k4.cx")])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["h1", str(CORPUS / "k4.cx"), "--n", "0"])
    assert exc.value.code == 1


def test_input_errors_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.cx"
    bad.write_text("1 1\n")
    assert run(capsys, "classify", bad)[0] == 1
    assert run(capsys, "classify", tmp_path / "missing.cx")[0] == 1


def test_report(capsys, tmp_path):
    files = [CORPUS / f"{n}.cx" for n in ("k4", "k5", "s0", "torus", "figure_eight")]
    code, data = run_json(capsys, "report", *files, "--out", tmp_path)
    assert code == 0 and data["complexes"] == 5 and not data["discrepancies"]
    lines = (tmp_path / "report.tsv").read_text().splitlines()
    assert lines[0].split("\t")[0] == "name" and len(lines) == 6
    for png in ("ranks.png", "verdicts.png"):
        assert (tmp_path / png).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "braidcx", "h1", str(CORPUS / "tripod.cx"), "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert "H1 = Z^1" in out.stdout
