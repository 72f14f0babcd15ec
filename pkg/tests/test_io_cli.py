from __future__ import annotations

import json

import pytest

from matchflip.cli import main
from matchflip.errors import MalformedInputError
from matchflip.graph import Flip, Slide, edge_set
from matchflip.io import (
    dumps_canonical,
    instance_to_dict,
    load_instance,
    load_ncl,
    load_sequence,
    sequence_to_dict,
)

from helpers import C4_PM1, C6_PM1, C6_PM2, K4


def _write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if isinstance(data, dict) else data)
    return str(p)


C6_INSTANCE = {
    "n": 6,
    "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
    "m_ini": [[0, 1], [2, 3], [4, 5]],
    "m_tar": [[1, 2], [3, 4], [5, 0]],
}

K4_INSTANCE = {
    "n": 4,
    "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
    "m_ini": [[0, 1], [2, 3]],
    "m_tar": [[0, 2], [1, 3]],
}

TWO_OR_MACHINE = {
    "vertices": [{"id": 0, "type": "or"}, {"id": 1, "type": "or"}],
    "edges": [{"u": 0, "v": 1, "w": 2}] * 3,
    "c_ini": [{"edge": 0, "head": 0}, {"edge": 1, "head": 1}, {"edge": 2, "head": 1}],
    "c_tar": [{"edge": 0, "head": 1}, {"edge": 1, "head": 0}, {"edge": 2, "head": 0}],
}


def test_load_instance_identity_labels():
    inst = load_instance(C6_INSTANCE)
    assert inst.graph.n == 6 and inst.m_ini == C6_PM1 and inst.m_tar == C6_PM2


def test_load_instance_arbitrary_labels():
    data = {
        "n": 4,
        "edges": [[10, 20], [20, 30], [30, 40], [40, 10]],
        "m_ini": [[10, 20], [30, 40]],
        "m_tar": [[20, 30], [40, 10]],
    }
    inst = load_instance(data)
    assert inst.graph.n == 4
    assert inst.m_ini == edge_set([(0, 1), (1, 2)]) or len(inst.m_ini) == 2
    assert inst.label_of == (10, 20, 30, 40)


def test_load_instance_bad_labels():
    with pytest.raises(MalformedInputError):
        load_instance({"n": 2, "edges": [[5, 9], [9, 11]], "m_ini": [], "m_tar": []})


def test_sequence_round_trip():
    from matchflip.graph import ReconfigSequence

    seq = ReconfigSequence(
        "flip_slide", (Flip((0, 1, 2, 3)), Slide((0, 1), (1, 2))), None
    )
    again = load_sequence(sequence_to_dict(seq))
    assert again == seq
    kseq = ReconfigSequence("kflip", (Flip((0, 1, 2, 3, 4, 5)),), 6)
    assert load_sequence(sequence_to_dict(kseq)) == kseq


def test_load_ncl():
    machine, c_ini, c_tar = load_ncl(TWO_OR_MACHINE)
    assert machine.n == 2 and len(machine.edges) == 3
    assert c_ini == (0, 1, 1) and c_tar == (1, 0, 0)


def test_instance_dict_round_trip():
    d = instance_to_dict(K4, C4_PM1, edge_set([(0, 2), (1, 3)]))
    inst = load_instance(d)
    assert inst.graph.edges == K4.edges


def test_cli_solve_outerplanar_no(tmp_path, capsys):
    path = _write(tmp_path, "c6.json", C6_INSTANCE)
    rc = main(["solve", "--class", "outerplanar", path])
    assert rc == 1
    assert capsys.readouterr().out.splitlines()[0] == "NO"


def test_cli_solve_auto_yes_and_verify(tmp_path, capsys):
    inst = {
        "n": 4,
        "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
        "m_ini": [[0, 1], [2, 3]],
        "m_tar": [[1, 2], [3, 0]],
    }
    ipath = _write(tmp_path, "c4.json", inst)
    spath = str(tmp_path / "seq.json")
    rc = main(["solve", ipath, "--emit-sequence", spath])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[0] == "YES"
    rc = main(["verify", ipath, spath])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[0] == "Accept"


def test_cli_solve_all_classes_agree(tmp_path, capsys):
    inst = {
        "n": 4,
        "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
        "m_ini": [[0, 1], [2, 3]],
        "m_tar": [[1, 2], [3, 0]],
        "hints": {"strong_order": [0, 1, 3, 2]},
    }
    path = _write(tmp_path, "c4.json", inst)
    codes = []
    for cls in ("cograph", "outerplanar", "strongly_orderable"):
        codes.append(main(["solve", "--class", cls, path]))
        capsys.readouterr()
    assert codes == [0, 0, 0]


def test_cli_oracle_distance_and_reject(tmp_path, capsys):
    path = _write(tmp_path, "k4.json", K4_INSTANCE)
    spath = str(tmp_path / "seq.json")
    rc = main(["oracle", path, "--want-path", "--emit-sequence", spath])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0 and out[0] == "YES"
    assert json.loads(out[1])["distance"] == 1
    # corrupt the final matching -> verifier rejects
    bad = dict(K4_INSTANCE)
    bad["m_tar"] = [[0, 3], [1, 2]]
    bpath = _write(tmp_path, "k4bad.json", bad)
    rc = main(["verify", bpath, spath])
    assert rc == 1
    assert capsys.readouterr().out.startswith("Reject")


def test_cli_oracle_no(tmp_path, capsys):
    path = _write(tmp_path, "c6.json", C6_INSTANCE)
    rc = main(["oracle", path])
    assert rc == 1
    assert capsys.readouterr().out.splitlines()[0] == "NO"


def test_cli_stats_json(tmp_path, capsys):
    path = _write(tmp_path, "c6.json", C6_INSTANCE)
    rc = main(["stats", path])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["nodes"] == 2 and data["components"] == 2


def test_cli_gen_random_deterministic(tmp_path, capsys):
    outs = []
    for _ in range(2):
        rc = main(["gen-random", "--class", "interval", "--n", "16", "--seed", "9"])
        assert rc == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    inst = load_instance(json.loads(outs[0]))
    assert "strong_order" in inst.hints


def test_cli_gen_random_classes_solvable(tmp_path, capsys):
    for cls, solver in (("interval", "strongly_orderable"), ("outerplanar", "outerplanar"), ("cograph", "cograph")):
        path = str(tmp_path / f"{cls}.json")
        rc = main(["gen-random", "--class", cls, "--n", "12", "--seed", "3", "-o", path])
        assert rc == 0
        rc = main(["solve", "--class", solver, path])
        assert rc in (0, 1)
        capsys.readouterr()


def test_cli_gen_ncl_and_oracle(tmp_path, capsys):
    mpath = _write(tmp_path, "m.json", TWO_OR_MACHINE)
    ipath = str(tmp_path / "inst.json")
    rc = main(["gen-ncl", mpath, "-o", ipath])
    assert rc == 0
    rc = main(["oracle", ipath])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[0] == "YES"
    # k-flip subdivided variant
    i6 = str(tmp_path / "inst6.json")
    rc = main(["gen-ncl", mpath, "--k", "6", "-o", i6])
    assert rc == 0
    rc = main(["oracle", "--mode", "kflip", "--k", "6", i6])
    assert rc == 0
    capsys.readouterr()


def test_cli_auto_detection_fails_cleanly(tmp_path, capsys):
    # Petersen graph: not a cograph, not outerplanar, no ordering hint
    outer = [[i, (i + 1) % 5] for i in range(5)]
    inner = [[5 + i, 5 + (i + 2) % 5] for i in range(5)]
    spokes = [[i, i + 5] for i in range(5)]
    inst = {
        "n": 10,
        "edges": outer + inner + spokes,
        "m_ini": [[i, i + 5] for i in range(5)],
        "m_tar": [[i, i + 5] for i in range(5)],
    }
    path = _write(tmp_path, "petersen.json", inst)
    assert main(["solve", path]) == 2
    capsys.readouterr()


def test_cli_malformed_input(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", "{not json")
    assert main(["solve", path]) == 2
    capsys.readouterr()
    path2 = _write(tmp_path, "noorder.json", {
        "n": 2, "edges": [[0, 1]], "m_ini": [[0, 1]], "m_tar": [[0, 1]]})
    assert main(["solve", "--class", "strongly_orderable", path2]) == 2
    capsys.readouterr()


def test_cli_budget_exit_code(tmp_path, capsys):
    inst = {
        "n": 6,
        "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0], [0, 3]],
        "m_ini": [[0, 1], [2, 3], [4, 5]],
        "m_tar": [[1, 2], [3, 4], [5, 0]],
    }
    path = _write(tmp_path, "inst.json", inst)
    rc = main(["oracle", path, "--budget", "1"])
    assert rc == 3
    capsys.readouterr()


def test_cli_budget_env_var(tmp_path, capsys, monkeypatch):
    inst = {
        "n": 6,
        "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0], [0, 3]],
        "m_ini": [[0, 1], [2, 3], [4, 5]],
        "m_tar": [[1, 2], [3, 4], [5, 0]],
    }
    path = _write(tmp_path, "inst.json", inst)
    monkeypatch.setenv("MATCHFLIP_BUDGET", "1")
    assert main(["oracle", path]) == 3
    capsys.readouterr()
    monkeypatch.delenv("MATCHFLIP_BUDGET")
    assert main(["oracle", path]) == 0
    capsys.readouterr()


def test_cli_boundary_hint_verified(tmp_path, capsys):
    inst = {
        "n": 4,
        "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
        "m_ini": [[0, 1], [2, 3]],
        "m_tar": [[1, 2], [3, 0]],
        "hints": {"boundary_order": [0, 2, 1, 3]},
    }
    path = _write(tmp_path, "c4bad.json", inst)
    assert main(["solve", "--class", "outerplanar", path]) == 2
    capsys.readouterr()
    inst["hints"]["boundary_order"] = [0, 1, 2, 3]
    path = _write(tmp_path, "c4ok.json", inst)
    assert main(["solve", "--class", "outerplanar", path]) == 0
    capsys.readouterr()


def test_cli_mode_mismatch(tmp_path, capsys):
    ipath = _write(tmp_path, "c4.json", {
        "n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
        "m_ini": [[0, 1], [2, 3]], "m_tar": [[1, 2], [3, 0]]})
    spath = _write(tmp_path, "seq.json", json.dumps(
        {"mode": "flip", "moves": [{"flip": [0, 1, 2, 3]}]}))
    assert main(["verify", ipath, spath, "--mode", "flip_slide"]) == 2
    capsys.readouterr()


def test_cli_solve_and_oracle_agree(tmp_path, capsys):
    # the polynomial solvers and the brute-force oracle give the same
    # answer on every generated instance where both complete
    for cls, seed in (("interval", 1), ("outerplanar", 2), ("outerplanar", 3), ("cograph", 4)):
        path = str(tmp_path / f"{cls}{seed}.json")
        assert main(["gen-random", "--class", cls, "--n", "8", "--seed", str(seed), "-o", path]) == 0
        capsys.readouterr()
        rc_solve = main(["solve", path])
        capsys.readouterr()
        mode = "flip_slide" if cls == "cograph" else "flip"
        rc_oracle = main(["oracle", path, "--mode", mode])
        capsys.readouterr()
        assert rc_solve == rc_oracle, (cls, seed)


def test_canonical_dump_is_stable():
    a = dumps_canonical({"b": 1, "a": [2, 3]})
    b = dumps_canonical({"a": [2, 3], "b": 1})
    assert a == b and a.endswith("\n")
