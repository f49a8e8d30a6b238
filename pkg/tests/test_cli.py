import json
import re
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import fr, on_curve
from strategies import polynomials
from tropint import cli, formats
from tropint.curated import overlap_pair, three_curves
from tropint.errors import GenericityError, MalformedInputError
from tropint.complexes import connected_components
from tropint.lab import FAIL, CorpusSummary, Instance, VerificationReport

LINE = {"support": [[0, 0], [1, 0], [0, 1]], "coeffs": ["0", "0", "0"]}


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def instance(*polys, n=2):
    return {"version": 1, "n": n, "polynomials": list(polys)}


def run(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


# -- hypersurface --------------------------------------------------------------

def test_hypersurface_of_a_line(tmp_path, capsys):
    code, out, _ = run(["hypersurface", write(tmp_path, instance(LINE))], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == 1 and doc["n"] == 2
    assert sorted((c["rays"], c["vertices"], c["weight"]) for c in doc["cells"]) == sorted(
        [([["1", "0"]], [["0", "0"]], 1), ([["0", "1"]], [["0", "0"]], 1),
         ([["-1", "-1"]], [["0", "0"]], 1)])


def test_hypersurface_output_file_and_determinism(tmp_path, capsys):
    path = write(tmp_path, instance({"support": [[0, 0], [2, 1], [1, 3]],
                                     "coeffs": ["1/2", "-3", "7/5"]}))
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["hypersurface", path, "-o", str(out1)]) == 0
    assert cli.main(["hypersurface", path, "--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert capsys.readouterr().out == ""


def test_hypersurface_of_a_monomial(tmp_path, capsys):
    code, out, _ = run(["hypersurface", write(tmp_path, instance(
        {"support": [[1, 1]], "coeffs": ["3"]}))], capsys)
    assert code == 0 and json.loads(out)["cells"] == []


# -- exit code 2: malformed input ---------------------------------------------------

BAD_DOCUMENTS = {
    "not json": "{",
    "not an object": "[1, 2]",
    "wrong version": json.dumps({"version": 2, "n": 2, "polynomials": [LINE]}),
    "missing version": json.dumps({"n": 2, "polynomials": [LINE]}),
    "zero n": json.dumps(instance(LINE, n=0)),
    "boolean n": json.dumps(instance(LINE, n=True)),
    "no polynomials": json.dumps(instance()),
    "missing coeffs": json.dumps(instance({"support": [[0, 0]]})),
    "length mismatch": json.dumps(instance({"support": [[0, 0], [1, 0]], "coeffs": ["0"]})),
    "short exponent": json.dumps(instance({"support": [[0]], "coeffs": ["0"]})),
    "fractional exponent": json.dumps(instance({"support": [[0.5, 0]], "coeffs": ["0"]})),
    "zero denominator": json.dumps(instance({"support": [[0, 0]], "coeffs": ["1/0"]})),
    "decimal coefficient": json.dumps(instance({"support": [[0, 0]], "coeffs": ["0.5"]})),
    "float coefficient": json.dumps(instance({"support": [[0, 0]], "coeffs": [0.5]})),
    "repeated exponent": json.dumps(instance({"support": [[0, 0], [0, 0]],
                                              "coeffs": ["0", "1"]})),
    "empty support": json.dumps(instance({"support": [], "coeffs": []})),
}


@pytest.mark.parametrize("command", ["hypersurface", "verify", "plot", "mv", "yu"])
@pytest.mark.parametrize("name", sorted(BAD_DOCUMENTS))
def test_malformed_input_exits_2(tmp_path, capsys, command, name):
    path = write(tmp_path, BAD_DOCUMENTS[name])
    args = [command, path] + ([str(tmp_path / "o.svg")] if command == "plot" else [])
    code, _, err = run(args, capsys)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("command", ["hypersurface", "verify", "mv", "yu"])
def test_missing_file_exits_2(tmp_path, capsys, command):
    assert run([command, str(tmp_path / "absent.json")], capsys)[0] == 2


@pytest.mark.parametrize("args", [
    ["verify", "--seeds", "a,b"],
    ["verify", "--seeds", ","],
    ["verify", "--corpus", "2", "--params", "2,2"],
    ["nonsense"],
    [],
])
def test_bad_flags_exit_2(args, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(args)
    assert exc.value.code == 2


def test_usage_errors_exit_2(tmp_path, capsys):
    two = write(tmp_path, instance(LINE, LINE), "two.json")
    one = write(tmp_path, instance(LINE), "one.json")
    three = write(tmp_path, instance(LINE, LINE, LINE), "three.json")
    space = write(tmp_path, instance({"support": [[0, 0, 0], [1, 0, 0]], "coeffs": ["0", "0"]},
                                     n=3), "space.json")
    assert run(["hypersurface", two], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run(["verify", "--corpus", "2"], capsys)[0] == 2
    assert run(["plot", space, str(tmp_path / "x.svg")], capsys)[0] == 2
    assert not (tmp_path / "x.svg").exists()
    assert run(["mv", one], capsys)[0] == 2
    assert run(["mv", three], capsys)[0] == 2
    assert run(["yu", three], capsys)[0] == 2


def test_genericity_exhaustion_exits_2(tmp_path, capsys, monkeypatch):
    def boom(*a, **k):
        raise GenericityError("no generic perturbation")
    monkeypatch.setattr(cli, "check_seed_theorem", boom)
    assert run(["verify", write(tmp_path, instance(LINE, LINE))], capsys)[0] == 2


# -- verify ---------------------------------------------------------------------

def test_verify_generic_lines(tmp_path, capsys):
    other = {"support": [[0, 0], [1, 0], [0, 1]], "coeffs": ["1/3", "-2/7", "5/4"]}
    code, out, err = run(["verify", write(tmp_path, instance(LINE, other))], capsys)
    assert code == 0 and "verdict: pass" in err
    doc = json.loads(out)
    assert doc["verdict"] == "pass" and len(doc["components"]) == 1
    w = doc["components"][0]["witness"]
    point = [fr(formats.parse_rational(x)) for x in w["point"]]
    assert on_curve(((0, 0), (1, 0), (0, 1)), (0, 0, 0), point)
    assert len(doc["stable_cells"]) == 1 and doc["stable_cells"][0]["multiplicity"] == 1


def test_verify_report_file_and_seeds(tmp_path, capsys):
    path = write(tmp_path, formats.serialize_instance(overlap_pair()))
    report = tmp_path / "r.json"
    code, out, _ = run(["verify", path, "--seeds", "3,4", "--report", str(report)], capsys)
    assert code == 0 and out == ""
    doc = json.loads(report.read_text())
    assert doc["verdict"] == "pass" and len(doc["components"]) == 3
    assert all(c["witness"] is not None for c in doc["components"])


def test_verify_vacuous_exits_0(tmp_path, capsys):
    f = {"support": [[0, 0], [1, 0]], "coeffs": ["0", "0"]}
    g = {"support": [[0, 0], [1, 0]], "coeffs": ["0", "1"]}
    code, out, _ = run(["verify", write(tmp_path, instance(f, g))], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "vacuous"


def test_verify_failure_exits_1(tmp_path, capsys, monkeypatch):
    fake = VerificationReport(connected_components([]), (), (None,), FAIL, (None,))
    monkeypatch.setattr(cli, "check_seed_theorem", lambda inst, seeds: fake)
    monkeypatch.setattr(formats, "report_to_dict", lambda r: {"verdict": r.verdict})
    assert run(["verify", write(tmp_path, instance(LINE, LINE))], capsys)[0] == 1


def test_subset_experiment_dispatch(tmp_path, capsys):
    path = write(tmp_path, formats.serialize_instance(three_curves()))
    code, out, err = run(["verify", path, "--subset-experiment"], capsys)
    assert code == 0 and "subset experiment: yes" in err
    doc = json.loads(out)
    assert doc["verdict"] == "yes"
    assert len(doc["points"]) == 16  # 6 + 6 + 4 pairwise stable points
    white = {tuple(p["vertices"][0]) for p in doc["points"] if p["on_all"]}
    assert len(white) == 4
    # without the flag the full triple has an empty stable intersection
    code, out, _ = run(["verify", path], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "vacuous"


def test_verify_corpus(tmp_path, capsys):
    code, out, err = run(["verify", "--corpus", "3", "--params", "2,2,1",
                          "--start-seed", "5"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert [r["seed"] for r in doc["instances"]] == [5, 6, 7]
    assert doc["failed"] == 0 and doc["passed"] == 3
    assert "3 pass" in err
    assert run(["verify", "--corpus", "2", "--params", "2,2,2", "--sparse"], capsys)[0] == 0


def test_corpus_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_corpus", lambda *a: CorpusSummary((), 0, 1, 0))
    assert run(["verify", "--corpus", "1", "--params", "2,2,1"], capsys)[0] == 1


# -- mv and yu -----------------------------------------------------------------------

def simplex_poly(d, n=2):
    pts = [[d * (i == j) for j in range(n)] for i in range(n)] + [[0] * n]
    return {"support": pts, "coeffs": ["0"] * len(pts)}


@pytest.mark.parametrize("d,e", [(1, 1), (2, 3), (3, 3)])
def test_mv_prints_product_of_degrees(tmp_path, capsys, d, e):
    code, out, _ = run(["mv", write(tmp_path, instance(simplex_poly(d), simplex_poly(e)))],
                       capsys)
    assert code == 0 and out == f"{d * e}\n"


def test_yu_outputs(tmp_path, capsys):
    ok = write(tmp_path, instance(simplex_poly(1), simplex_poly(1)), "ok.json")
    seg = {"support": [[0, 0], [1, 0]], "coeffs": ["0", "0"]}
    bad = write(tmp_path, instance(seg, seg), "bad.json")
    assert run(["yu", ok], capsys)[:2] == (0, "satisfied\n")
    assert run(["yu", bad], capsys)[:2] == (0, "violated J={1,2}\n")


# -- plot ----------------------------------------------------------------------------

def test_plot_single_line(tmp_path, capsys):
    out = tmp_path / "line.svg"
    assert run(["plot", write(tmp_path, instance(LINE)), str(out)], capsys)[0] == 0
    svg = out.read_text()
    group = re.search(r'<g id="curve-1"[^>]*>(.*?)</g>', svg, re.S).group(1)
    assert group.count("<line ") == 3
    assert "<circle" not in svg and 'id="intersection"' not in svg


def test_plot_is_byte_deterministic(tmp_path, capsys):
    path = write(tmp_path, formats.serialize_instance(three_curves()))
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert cli.main(["plot", path, str(a)]) == 0
    assert cli.main(["plot", path, str(b), "--seeds", "0"]) == 0
    assert a.read_bytes() == b.read_bytes()
    svg = a.read_text()
    assert svg.count("<circle ") == 16
    white = set(re.findall(r'class="on-all" cx="([^"]+)" cy="([^"]+)"', svg))
    black = set(re.findall(r'class="partial" cx="([^"]+)" cy="([^"]+)"', svg))
    assert len(white) == 4 and len(black) == 6


def test_installed_entry_point(tmp_path):
    path = write(tmp_path, instance(simplex_poly(2), simplex_poly(2)))
    proc = subprocess.run([sys.executable, "-m", "tropint.cli", "mv", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "4\n"


# -- instance files ------------------------------------------------------------------

@given(st.lists(polynomials(max_size=5), min_size=1, max_size=3), st.integers(0, 99))
def test_round_trip(polys, seed):
    inst = Instance(2, tuple(polys), seed)
    text = formats.serialize_instance(inst)
    back = formats.parse_instance(text)
    assert back.polynomials == inst.polynomials
    assert formats.serialize_instance(back) == text


@pytest.mark.parametrize("text,value", [("3", 3), ("-3", -3), ("+4/6", fr(2) / 3),
                                        ("-10/4", fr(-5) / 2), (" 7 ", 7), (0, 0)])
def test_parse_rational(text, value):
    assert formats.parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1.5", "1e3", "", "1/-2", "a", None, True, 1.0])
def test_parse_rational_rejects(text):
    with pytest.raises(MalformedInputError):
        formats.parse_rational(text)


def test_format_rational_is_lowest_terms():
    assert formats.format_rational(fr(6) / 4) == "3/2"
    assert formats.format_rational(-4) == "-4"
