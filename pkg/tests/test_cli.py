"""Command-line front end: exit codes, determinism, file formats."""
import json

import pytest

from equialg.cli import main
from equialg.magmas import (enumerate_interchanging_pairs, pair_to_json)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_unital_c2(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "cyclic:2",
                       "--filter", "unital")
    assert code == 0
    assert "6 weak indexing systems (unital)" in out


def test_enumerate_transfer_systems_c4(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "cyclic:4",
                       "--transfer-systems")
    assert code == 0
    assert "5 transfer systems" in out


def test_enumerate_trivial_group_single_node(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "cyclic:1",
                       "--filter", "unital", "--cutoff", "3")
    assert code == 0
    assert "2 weak indexing systems" in out


def test_enumerate_guard_exit_2(capsys):
    code, _, err = run(capsys, "enumerate", "--group", "cyclic:36",
                       "--transfer-systems")
    assert code == 2 and "guard" in err


def test_enumerate_bad_group_exit_1(capsys):
    code, _, err = run(capsys, "enumerate", "--group", "cyclic:x")
    assert code == 1


def test_enumerate_deterministic_json(tmp_path, capsys):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    for f in (f1, f2):
        code, _, _ = run(capsys, "enumerate", "--group", "cyclic:2",
                         "--filter", "almost_unital", "--format", "json",
                         "--output", str(f))
        assert code == 0
    assert f1.read_bytes() == f2.read_bytes()
    data = json.loads(f1.read_text())
    assert len(data["nodes"]) == 9


def test_enumerate_dot_output(tmp_path, capsys):
    out = tmp_path / "poset.dot"
    code, _, _ = run(capsys, "enumerate", "--group", "cyclic:4",
                     "--transfer-systems", "--format", "dot",
                     "--output", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph") and "->" in text


def test_eh_check_pair_file_pass(tmp_path, capsys):
    pair = enumerate_interchanging_pairs(2, 2, 2)[-1]
    f = tmp_path / "pair.json"
    f.write_text(pair_to_json(pair))
    code, out, _ = run(capsys, "eh-check", "--pair", str(f))
    assert code == 0 and "PASS" in out


def test_eh_check_corrupted_pair_is_input_error(tmp_path, capsys):
    # transfers that are not coupled: precondition failure, exit 1 not 3
    text = json.dumps({
        "p": 2, "size_e": 2, "size_g": 4,
        "sigma": [0, 1], "r": [0, 1, 0, 1], "unit_e": 0, "unit_g": 0,
        "star": {"mul_e": [[0, 1], [1, 0]],
                 "mul_g": [[(a + b) % 4 for b in range(4)] for a in range(4)],
                 "t": [0, 0]},
        "bullet": {"mul_e": [[0, 1], [1, 0]],
                   "mul_g": [[(a + b) % 4 for b in range(4)] for a in range(4)],
                   "t": [0, 2]}})
    f = tmp_path / "bad.json"
    f.write_text(text)
    code, _, err = run(capsys, "eh-check", "--pair", str(f))
    assert code == 1 and "interchange precondition" in err


def test_eh_check_malformed_file_exit_1(tmp_path, capsys):
    f = tmp_path / "junk.json"
    f.write_text("{oops")
    code, _, _ = run(capsys, "eh-check", "--pair", str(f))
    assert code == 1


def test_eh_check_sweep(capsys):
    code, out, _ = run(capsys, "eh-check", "--sweep", "2", "2", "--p", "2")
    assert code == 0
    assert "0 violations" in out and "bijective" in out


def test_eh_check_sweep_guard(capsys):
    code, _, err = run(capsys, "eh-check", "--sweep", "9", "9")
    assert code == 2


def test_conn_all_pairs_c4(capsys):
    code, out, _ = run(capsys, "conn", "--group", "cyclic:4", "--all-pairs")
    assert code == 0
    assert "0 failures" in out


def test_conn_ev_value(capsys):
    code, out, _ = run(capsys, "conn", "--ev", "1", "2", "--set", "2,1")
    assert code == 0 and "= -1" in out


def test_conn_ev_level_e(capsys):
    code, out, _ = run(capsys, "conn", "--ev", "1", "2", "--set", "3",
                       "--level", "e")
    assert code == 0 and "= 1" in out


def test_conn_ev_witness(capsys):
    code, out, _ = run(capsys, "conn", "--ev-witness", "2", "2")
    assert code == 0
    assert "lhs bound 0 < rhs 1: True" in out
    assert "forthcoming" in out


def test_conn_missing_mode_exit_1(capsys):
    code, _, _ = run(capsys, "conn")
    assert code == 1


def test_workers_flag_validated(capsys):
    code, _, _ = run(capsys, "enumerate", "--group", "cyclic:2",
                     "--workers", "0")
    assert code == 1
