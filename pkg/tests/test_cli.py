import json
import re
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from elamite.dissection import shipped_placements
from golden_cases import CASES, GOLDEN, materialize, writes_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(cli, tmp_path, name):
    argv = CASES[name]
    svg = tmp_path / "out.svg"
    code, out, err = cli(*materialize(argv, svg))
    assert code == 0, err
    assert err == ""
    assert out == (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
    if writes_svg(argv):
        assert svg.read_bytes() == (GOLDEN / f"{name}.svg").read_bytes()


def test_errors_table(cli):
    code, out, _ = cli("errors", "--n", "7")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert [line.split()[-1] for line in lines[2:]] == ["1.39", "1.36", "0.90"]


def _table_rows(text):
    lines = text.splitlines()
    header = lines[0].split()
    starts = [lines[0].index(h) for h in header] + [None]
    return [
        {h: line[starts[i] : starts[i + 1]].strip() for i, h in enumerate(header)} for line in lines[2:] if line.strip()
    ]


def _same(cell, value):
    if value is None:
        return cell == "-"
    if isinstance(value, bool):
        return cell == ("true" if value else "false")
    if isinstance(value, (int, float)):
        return float(cell) == value
    return cell == value


@pytest.mark.parametrize(
    "argv",
    [
        ["errors", "--n", "7"],
        ["areas", "--n", "7", "--side", "2"],
        ["areas", "--n", "3", "--side", "1"],
        ["constants"],
        ["derive", "smt2", "--r", "0;35"],
        ["construct", "--shape", "pentagon", "--method", "ptolemy"],
    ],
)
def test_table_and_json_carry_the_same_rows(cli, argv):
    _, table, _ = cli(*argv)
    _, raw, _ = cli(*argv, "--format", "json")
    data = json.loads(raw)
    rows = data["steps"] if isinstance(data, dict) else data
    parsed = _table_rows(table)
    assert len(parsed) == len(rows)
    for got, want in zip(parsed, rows):
        assert set(got) == set(want)
        for key, value in want.items():
            assert _same(got[key], value), (key, got[key], value)


@pytest.mark.parametrize(
    "argv",
    [
        ["dissect", "--layout", "square", "--report"],
        ["sexa", "eval", "1/7"],
        ["construct", "--shape", "heptagon", "--method", "elamite", "--report"],
    ],
)
def test_key_value_reports_match_json(cli, argv):
    _, table, _ = cli(*argv)
    _, raw, _ = cli(*argv, "--format", "json")
    data = json.loads(raw)
    data.pop("points", None)
    pairs = {}
    for line in table.split("\n\n")[0].splitlines():
        key, _, value = line.partition("  ")
        pairs[key.strip()] = value.strip()
    assert set(pairs) == set(data)
    for key, value in data.items():
        assert _same(pairs[key], value), key


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bogus"], 1),
        (["errors", "--bogus"], 1),
        (["errors", "--n", "seven"], 1),
        (["sexa", "eval", "1 +"], 1),
        (["sexa", "eval", "3;60"], 1),
        (["derive", "smt2", "--r", "x"], 1),
        (["derive", "smt2", "--a", "1"], 1),
        (["derive", "heron", "--r", "1"], 1),
        (["construct", "--shape", "pentagon", "--method", "elamite"], 1),
        (["construct", "--shape", "ngon", "--method", "exact"], 1),
        (["construct", "--shape", "square", "--method", "exact", "--closure", "midpoint"], 1),
        (["construct", "--shape", "heptagon", "--method", "durer", "--sqrt3-approx"], 1),
        (["sexa", "eval", "1/0"], 2),
        (["errors", "--n", "6"], 2),
        (["areas", "--side", "0"], 2),
        (["areas", "--n", "2"], 2),
        (["derive", "elamite", "--a", "-1"], 2),
        (["construct", "--shape", "hexagon", "--radius", "-2"], 2),
        (["construct", "--shape", "ngon", "--method", "compose", "--n", "6", "--m", "3"], 2),
        (["construct", "--shape", "ngon", "--method", "exact", "--n", "2"], 2),
        (["dissect", "--layout", "square", "--grid", "7"], 2),
        (["dissect", "--layout", "square", "--placements", "/nonexistent/file.json"], 2),
    ],
)
def test_exit_codes(cli, argv, code):
    got, out, err = cli(*argv)
    assert got == code
    assert out == ""
    assert err.startswith("elamite: error: ") and err.count("\n") == 1


def test_mismatched_placement_file(cli, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(shipped_placements("rectangle").to_json())
    code, _, err = cli("dissect", "--layout", "square", "--placements", str(path))
    assert code == 2 and "rectangle" in err
    code, out, _ = cli("dissect", "--layout", "rectangle", "--placements", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["split"] == "four"


def test_values_accept_sexagesimal_decimal_and_fraction(cli):
    outs = {cli("derive", "elamite", "--a", a)[1] for a in ("0;30", "0.5", "1/2")}
    assert len(outs) == 1


def test_sexa_marks_truncation(cli):
    _, out, _ = cli("sexa", "eval", "1/7", "--places", "3")
    assert "0;8,34,17 [truncated]" in out
    _, out, _ = cli("sexa", "eval", "7 * 0;7,55")
    assert "0;55,25\n" in out and "[truncated]" not in out


def test_construct_report_gap(cli):
    _, out, _ = cli("construct", "--shape", "heptagon", "--method", "elamite", "--radius", "1", "--report", "--format", "json")
    data = json.loads(out)
    assert data["gap_deg"] == pytest.approx(4.7229306479)
    assert len(data["points"]) == 7


def test_svg_structure(cli, tmp_path):
    svg = tmp_path / "hept.svg"
    cli("construct", "--shape", "heptagon", "--method", "heron", "--svg", str(svg))
    text = svg.read_text(encoding="utf-8")
    root = ET.fromstring(text)
    assert root.get("viewBox") == "0 0 1000 1000"
    layers = [g.get("id") for g in root.iter(f"{SVG_NS}g")]
    assert layers == ["construction", "polygon", "points"]
    numbers = re.findall(r'(?:c?[xy]\d?|r)="(-?[\d.]+)"', text)
    assert numbers and all(re.fullmatch(r"-?\d+\.\d{6}", n) for n in numbers if n not in ("0", "1000"))
    assert list(tmp_path.iterdir()) == [svg]  # no temporary file left behind


def test_dissection_svg_layers(cli, tmp_path):
    svg = tmp_path / "sq.svg"
    cli("dissect", "--layout", "square", "--svg", str(svg))
    root = ET.fromstring(svg.read_text(encoding="utf-8"))
    layers = [g.get("id") for g in root.iter(f"{SVG_NS}g")]
    assert layers == ["cells", "removed", "pieces", "region"]
    cells = root.find(f"{SVG_NS}g[@id='cells']")
    assert len(cells) == 528
    pieces = root.find(f"{SVG_NS}g[@id='pieces']")
    assert len(pieces) == 9


def test_svg_overwrite_is_atomic(cli, tmp_path):
    svg = tmp_path / "out.svg"
    svg.write_text("old")
    code, _, _ = cli("construct", "--shape", "square", "--svg", str(svg))
    assert code == 0 and svg.read_text().startswith("<?xml")
    code, _, _ = cli("construct", "--shape", "square", "--svg", str(tmp_path / "missing" / "x.svg"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "elamite", "derive", "elamite"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].split() == ["area", "11/3", "3;40"]
    proc = subprocess.run([sys.executable, "-m", "elamite", "errors", "--x"], capture_output=True, text=True, check=False)
    assert proc.returncode == 1


def test_help_exits_cleanly(capsys):
    from elamite.cli import main

    assert main(["--help"]) == 0
    assert "construct" in capsys.readouterr().out
