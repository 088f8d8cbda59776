import json

import pytest

from facehit import generators as gen
from facehit.cli import main
from facehit.plane_core import PlaneMultigraph, dumps


@pytest.fixture
def plg(tmp_path):
    def write(G, name="g.plg"):
        p = tmp_path / name
        p.write_text(G if isinstance(G, str) else dumps(G))
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(plg, capsys):
    code, out, _ = run(["validate", plg(gen.triangle())], capsys)
    assert code == 0 and "ok   euler[0]" in out


def test_validate_rotation_typo(plg, capsys):
    lines = dumps(gen.triangle()).splitlines()
    i = next(i for i, ln in enumerate(lines) if ln.startswith("rot 1 "))
    lines[i] = "rot 1 " + " ".join(t.replace("-", "+") for t in lines[i].split()[2:])
    text = "\n".join(lines) + "\n"
    code, out, _ = run(["validate", plg(text)], capsys)
    assert code == 1 and "vertex 1" in out


def test_validate_euler(plg, capsys):
    K = gen.k4()
    lines = dumps(K).splitlines()
    i = next(i for i, ln in enumerate(lines) if ln.startswith("rot 0 "))
    head, *darts = lines[i].split()[2:]
    lines[i] = " ".join(["rot", "0", head, darts[1], darts[0]])
    code, out, _ = run(["validate", plg("\n".join(lines) + "\n")], capsys)
    assert code == 1 and "v-e+f = 4-6+2" in out


def test_parse_error_exit(plg, capsys):
    code, _, err = run(["validate", plg("plg 1\nv x\n")], capsys)
    assert code == 2 and "parse" in err


def test_color_four_cycle(plg, capsys):
    code, out, _ = run(["color", plg(gen.cycle(4)), "--check"], capsys)
    assert code == 0
    assert "domatic: True" in out and "polychromatic: True" in out and "check agree: True" in out


def test_color_json_matches_text(plg, capsys):
    path = plg(gen.random_theorem_instance(30, 5))
    _, out, _ = run(["color", path, "--json"], capsys)
    d = json.loads(out)
    _, text, _ = run(["color", path], capsys)
    assert f"V1 ({len(d['V1'])}): " + " ".join(map(str, d["V1"])) in text


def test_color_doubled_k4_names_2_face(plg, capsys):
    code, _, err = run(["color", plg(gen.doubled_k4_family(1))], capsys)
    assert code == 3 and "2-face" in err and "face " in err


def test_color_isolated_vertex_named(plg, capsys):
    G = PlaneMultigraph([0, 1, 2], {0: (0, 1)}, {0: [0], 1: [1]})
    code, _, err = run(["color", plg(G)], capsys)
    assert code == 3 and "isolated vertex present: 2" in err


def test_dominate(plg, capsys):
    code, out, _ = run(["dominate", plg(gen.k4()), "--exact"], capsys)
    assert code == 0 and out.startswith("S (1):")
    code, out, _ = run(["dominate", plg(gen.octahedron()), "--json"], capsys)
    assert code == 0 and json.loads(out)["dominating_size"] <= 2
    code, _, _ = run(["dominate", plg(gen.cycle(4))], capsys)
    assert code == 3


def test_dominate_exact_budget(plg, capsys):
    code, _, err = run(["dominate", plg(gen.stacked_triangulation(25, 1)), "--exact"], capsys)
    assert code == 4 and "budget" in err


def test_bench_deterministic(capsys):
    code, out1, _ = run(["bench", "--count", "10", "--n", "30", "--seed", "7"], capsys)
    _, out2, _ = run(["bench", "--count", "10", "--n", "30", "--seed", "7"], capsys)
    assert code == 0 and out1 == out2
    rows = [ln for ln in out1.splitlines() if ln and ln[0].isdigit()]
    assert len(rows) == 10


def test_bench_tiny_by_hand(capsys):
    _, out, _ = run(["bench", "--count", "1", "--n", "4"], capsys)
    row = out.splitlines()[1].split(",")
    assert row[:8] == ["4", "1", "1", "4", "1", "4/3", "8/7", "3/2"] and row[9] == "crr"


def test_bench_bad_parameter(capsys):
    code, _, _ = run(["bench", "--count", "0"], capsys)
    assert code == 3


def test_oracle_and_budget(plg, capsys):
    code, out, _ = run(["oracle", plg(gen.doubled_k4_family(1)), "--what", "beta"], capsys)
    assert code == 0 and json.loads(out)["beta"] == 3
    code, out, _ = run(["oracle", plg(gen.loop_gadget()), "--what", "coloring"], capsys)
    assert json.loads(out)["coloring"] is None
    code, _, _ = run(["oracle", plg(gen.stacked_triangulation(22, 0))], capsys)
    assert code == 4


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "t.plg"
    assert main(["gen", "theorem", "--n", "30", "--seed", "9", "-o", str(out)]) == 0
    assert out.read_text() == dumps(gen.random_theorem_instance(30, 9))
    code, _, _ = run(["validate", str(out)], capsys)
    assert code == 0


def test_render_and_augment(plg, capsys, tmp_path):
    dot = tmp_path / "g.dot"
    assert main(["render", plg(gen.cycle(4)), "--dot", str(dot)]) == 0
    assert "fillcolor" in dot.read_text()
    code, out, _ = run(["augment", plg(gen.cycle(5))], capsys)
    assert code == 0 and "kind" in out and "dummy" in out


def test_manifest_file(plg, tmp_path, capsys):
    m = tmp_path / "m.json"
    main(["--manifest", str(m), "color", plg(gen.cycle(4))])
    d = json.loads(m.read_text())
    assert d["command"] == "color" and d["exit_code"] == 0 and len(d["input_sha256"]) == 64
