import io
import json

import pytest

from zetalab.output import RunManifest, fmt_real, format_cell, write_csv
from zetalab.svg import render_bar_chart, render_heatmap, render_line_chart


def test_fmt_real():
    assert fmt_real(0.25) == "0.25"
    assert fmt_real(1.0) == "1"
    assert fmt_real(1 / 3) == "0.333333333333"
    assert fmt_real(28.127343587325348) == "28.1273435873"


def test_format_cell():
    assert format_cell("abc") == "abc"
    assert format_cell(True) == "true"
    assert format_cell(False) == "false"
    assert format_cell(7) == "7"
    assert format_cell(0.5) == "0.5"


def test_write_csv_to_stream():
    buf = io.StringIO()
    write_csv(buf, ["q", "c"], [[3, 0.25], [5, 0.5]])
    assert buf.getvalue() == "q,c\n3,0.25\n5,0.5\n"


def test_write_csv_to_path_uses_lf(tmp_path):
    dest = tmp_path / "out.csv"
    write_csv(dest, ["a"], [[1], [2]])
    raw = dest.read_bytes()
    assert raw == b"a\n1\n2\n"
    assert b"\r" not in raw


def test_manifest_roundtrip(tmp_path):
    out = tmp_path / "row.csv"
    out.write_text("q,c\n")
    m = RunManifest("corr-row", {"p": 29}, "fixture", 1000, "0.1.0")
    dest = m.write(out)
    assert dest == str(out) + ".manifest.json"
    payload = json.loads(open(dest).read())
    assert payload["subcommand"] == "corr-row"
    assert payload["parameters"] == {"p": 29}
    assert payload["zeros_used"] == 1000
    assert list(payload) == sorted(payload)   # sort_keys pinned


def test_line_chart_deterministic(tmp_path):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    xs = [0.0, 1.0, 2.0]
    ys = [1.0, 3.0, 2.0]
    render_line_chart(a, xs, ys, title="demo")
    render_line_chart(b, xs, ys, title="demo")
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<svg")
    assert "polyline" in text
    assert "demo" in text


def test_line_chart_validation(tmp_path):
    with pytest.raises(ValueError):
        render_line_chart(tmp_path / "x.svg", [1.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        render_line_chart(tmp_path / "x.svg", [], [])


def test_bar_chart(tmp_path):
    dest = tmp_path / "h.svg"
    render_bar_chart(dest, [0.0, 0.5, 1.0], [3, 1])
    text = dest.read_text()
    assert text.count("<rect") >= 3   # background plus two bars
    with pytest.raises(ValueError):
        render_bar_chart(dest, [0.0, 1.0], [1, 2])


def test_bar_chart_flat_zero(tmp_path):
    dest = tmp_path / "z.svg"
    render_bar_chart(dest, [0.0, 0.5, 1.0], [0, 0])
    assert dest.exists()


def test_heatmap(tmp_path):
    dest = tmp_path / "g.svg"
    render_heatmap(dest, [[0, 2], [1, 0]])
    text = dest.read_text()
    assert "rgb(" in text
    with pytest.raises(ValueError):
        render_heatmap(dest, [])
