"""Command-line interface: output formats, determinism, exit codes.

Commands run in-process through main(), so exit codes are return
values and output is captured per call.
"""

import json

import pytest

from idealis import TheoremCheck, __version__
from idealis.cli import main, parse_property, eval_property


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_classify_single_ideal(capsys):
    rc, out, _ = run(capsys, "classify", "Z12", "(4)")
    assert rc == 0
    doc = json.loads(out)
    assert doc["ring"] == "Z12" and doc["ringSize"] == 12
    assert doc["toolVersion"] == __version__
    assert len(doc["corpusHash"]) == 64
    entry, = doc["ideals"]
    assert entry["generators"] == "(4)"
    assert entry["elements"] == [0, 4, 8]
    assert entry["verdicts"]["weaklyOneAbsorbingPrime"] is True
    assert entry["verdicts"]["weaklyPrime"] is False
    assert entry["witnesses"]["weaklyPrime"] == [2, 2]
    assert entry["witnesses"]["weaklyOneAbsorbingPrime"] is None
    assert len(doc["latticeEdges"]) == 7


def test_classify_all_proper_ideals(capsys):
    rc, out, _ = run(capsys, "classify", "Z5")
    assert rc == 0
    doc = json.loads(out)
    assert [e["generators"] for e in doc["ideals"]] == ["(0)"]
    assert doc["ideals"][0]["verdicts"]["prime"] is True
    assert doc["latticeEdges"] == [["(0)", "(1)"]]


def test_classify_output_is_byte_stable(capsys):
    rc1, out1, _ = run(capsys, "classify", "Z30")
    rc2, out2, _ = run(capsys, "classify", "Z30")
    assert rc1 == rc2 == 0
    assert out1 == out2
    assert json.dumps(json.loads(out1), sort_keys=True, indent=2) + "\n" == out1


def test_classify_golden_z30(capsys):
    rc, out, _ = run(capsys, "classify", "Z30", "(6)")
    doc = json.loads(out)
    v = doc["ideals"][0]["verdicts"]
    assert v["weaklyOneAbsorbingPrime"] is False
    assert v["weaklyTwoAbsorbing"] is True
    assert doc["ideals"][0]["witnesses"]["weaklyOneAbsorbingPrime"] == [2, 2, 3]


def test_classify_recheck(capsys):
    rc, _, err = run(capsys, "classify", "Z12", "--recheck")
    assert rc == 0
    assert "re-validate" in err


def test_classify_zero_ideal_footnote(capsys):
    _, out, _ = run(capsys, "classify", "Z12", "(0)")
    doc = json.loads(out)
    assert doc["ideals"][0]["footnotes"]


def test_parse_error_exits_2(capsys):
    rc, _, err = run(capsys, "classify", "Z12x")
    assert rc == 2
    assert "offset" in err
    rc, _, err = run(capsys, "classify", "Z12", "(13)")
    assert rc == 2
    rc, _, err = run(capsys, "classify", "Z6/(1)")
    assert rc == 2


def test_cap_exits_3(capsys):
    rc, _, err = run(capsys, "classify", "Z40", "--cap", "30")
    assert rc == 3
    assert "cap" in err


def test_cap_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("IDEALIS_CAP", "30")
    rc, _, _ = run(capsys, "classify", "Z40", "(0)")
    assert rc == 3
    rc, _, _ = run(capsys, "classify", "Z40", "(0)", "--cap", "50")
    assert rc == 0
    monkeypatch.setenv("IDEALIS_CAP", "50")
    rc, _, _ = run(capsys, "classify", "Z40", "(0)")
    assert rc == 0


def test_lattice_dot_z12(capsys):
    rc, out, _ = run(capsys, "lattice", "Z12", "--dot")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "digraph lattice {"
    nodes = [ln for ln in lines if "label=" in ln]
    edges = [ln for ln in lines if "->" in ln]
    assert len(nodes) == 6 and len(edges) == 7
    assert any('label="(0)\\n-p-a-b"' in ln for ln in nodes)
    assert any('label="(2)\\nPpAaBb"' in ln for ln in nodes)
    assert any('label="(1)"' in ln for ln in nodes)   # whole ring: no code


def test_lattice_dot_maximal_annotations(capsys):
    _, out2, _ = run(capsys, "lattice", "Z2", "--dot")
    assert "m2=0" in out2
    _, out8, _ = run(capsys, "lattice", "Z8", "--dot")
    assert "m3=0" in out8 and "m2=0" not in out8
    _, out12, _ = run(capsys, "lattice", "Z12", "--dot")
    assert "m2=0" not in out12 and "m3=0" not in out12


def test_lattice_json(capsys):
    rc, out, _ = run(capsys, "lattice", "Z12")
    assert rc == 0
    doc = json.loads(out)
    assert [n["generators"] for n in doc["nodes"]] == \
        ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]
    assert doc["nodes"][0]["code"] == "-p-a-b"
    assert doc["nodes"][-1]["code"] is None
    assert len(doc["edges"]) == 7
    assert ["(0)", "(6)"] in doc["edges"]


def test_verify_small_corpus(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("Z12\nZ30  # reduced\n\n# full-line comment\nZ2 x Z3\n")
    rc, out, err = run(capsys, "verify", "--corpus", str(corpus))
    assert rc == 0
    assert "corpus: 3 rings" in out
    lines = [ln for ln in out.splitlines()
             if ln and not ln.startswith((" ", "corpus", "check"))]
    assert len(lines) == 17
    assert all(" pass " in ln or " vacuous " in ln for ln in lines)
    assert "warning" not in err


def test_verify_empty_corpus_warns(capsys, tmp_path):
    corpus = tmp_path / "empty.txt"
    corpus.write_text("# nothing here\n")
    rc, out, err = run(capsys, "verify", "--corpus", str(corpus))
    assert rc == 0
    assert "warning" in err
    assert out.count(" vacuous ") >= 17


def test_verify_failure_exits_1(capsys, monkeypatch):
    fake = [TheoremCheck(check_id=cid, outcome="pass", tested=1, vacuous=0)
            for cid in ("a", "b")]
    fake.append(TheoremCheck(
        check_id="zn_table", outcome="fail", tested=1, vacuous=0,
        failures=[{"ring": "Z8", "ideal": "(4)", "note": "engine says False"}]))
    monkeypatch.setattr("idealis.cli.run_checks", lambda rings: fake)
    rc, out, _ = run(capsys, "verify", "--default")
    assert rc == 1
    assert 'idealis classify "Z8" "(4)"' in out
    assert "engine says False" in out


def test_verify_bad_corpus_path_exits_2(capsys, tmp_path):
    rc, _, err = run(capsys, "verify", "--corpus", str(tmp_path / "missing.txt"))
    assert rc == 2


def test_search_separating_example(capsys):
    rc, out, _ = run(capsys, "search", "--property",
                     "w1ap AND NOT weaklyPrime", "--max-size", "12")
    assert rc == 0
    assert out.splitlines() == ["Z8\t(4)", "Z2 x Z4\t((1, 0))",
                                "Z12\t(4)", "Z3 x Z4\t((1, 0))"]


def test_search_prime_small(capsys):
    rc, out, _ = run(capsys, "search", "--property", "prime", "--max-size", "4")
    assert rc == 0
    assert out.splitlines() == [
        "Z2\t(0)", "Z3\t(0)", "Z4\t(2)",
        "Z2 x Z2\t((0, 1))", "Z2 x Z2\t((1, 0))"]


def test_search_contradiction_is_empty(capsys):
    rc, out, _ = run(capsys, "search", "--property", "prime AND NOT prime",
                     "--max-size", "8")
    assert rc == 0 and out == ""


def test_search_property_grammar(capsys):
    tree = parse_property("w1ap AND NOT (prime OR 2abs)")
    verdicts = {"weaklyOneAbsorbingPrime": True, "prime": False,
                "twoAbsorbing": False}
    assert eval_property(tree, verdicts)
    verdicts["twoAbsorbing"] = True
    assert not eval_property(tree, verdicts)
    # case-insensitive keywords and names
    assert parse_property("W1AP and not PRIME") == \
        ("and", ("name", "weaklyOneAbsorbingPrime"), ("not", ("name", "prime")))


def test_search_bad_property_exits_2(capsys):
    rc, _, err = run(capsys, "search", "--property", "w1ap AND NOT wibble")
    assert rc == 2
    assert "offset" in err
    rc, _, _ = run(capsys, "search", "--property", "w1ap AND")
    assert rc == 2
    rc, _, _ = run(capsys, "search", "--property", "(w1ap")
    assert rc == 2
