"""Rewrite the graph files and golden reports in this directory.

Run from the repository root: python3 tests/data/regenerate.py
The golden reports are the CLI's JSON output; test_golden.py checks them
against closed-form values before comparing bytes.
"""

import io
import shutil
from contextlib import redirect_stdout
from importlib.resources import files
from pathlib import Path

from edgelind import graph as gr
from edgelind.cli import main

HERE = Path(__file__).parent
I1 = "x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4, x1^3*x3, x1^2*x2*x3^2, x1^2*x3^3, x1*x2^2*x3^2"
I2 = "x1^4, x1^3*x2, x1^2*x2^2, x1^3*x3, x1*x2^2*x3, x1*x2*x3^2, x1*x2^4, x1^2*x3^3, x2^4*x3"


def graphs():
    for n in range(3, 11):
        yield f"cycle{n}", gr.cycle(n)
    for n in range(4, 8):
        yield f"anticycle{n}", gr.complement(gr.cycle(n))
    for n in range(2, 13):
        yield f"path{n}", gr.path(n)
    for g in range(1, 5):
        yield f"matching{g}", gr.Graph.from_edges(2 * g, [(2 * i, 2 * i + 1) for i in range(g)])


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(argv)
    return buf.getvalue()


def golden_cases():
    """(name, argv) pairs; graph paths are relative to this directory."""
    for name, _ in graphs():
        yield name, ["analyze", f"graphs/{name}.txt", "--char", "0", "--char", "2", "--format", "json"]
    yield "katzman", ["analyze", "graphs/katzman.txt", "--char", "0", "--char", "2", "--format", "json"]
    yield "dalili_kummini", ["analyze", "graphs/dalili_kummini.txt", "--char", "0", "--char", "2", "--format", "json"]
    for name, text in (("ideal_I1", I1), ("ideal_I2", I2)):
        yield name, ["analyze", "--ideal", text, "--format", "json"]
    yield "split_c6", ["split-check", "graphs/cycle6.txt", "--split", "U:0-5,0-1,1-2", "--format", "json"]
    yield "split_c5", ["split-check", "graphs/cycle5.txt", "--split", "e:0-1", "--format", "json"]


def main_():
    for name, g in graphs():
        (HERE / "graphs" / f"{name}.txt").write_text(gr.format_graph_text(g))
    for name in ("katzman", "dalili_kummini"):
        with (files("edgelind") / "data" / f"{name}.txt").open("rb") as src, open(HERE / "graphs" / f"{name}.txt", "wb") as dst:
            shutil.copyfileobj(src, dst)
    import os

    cwd = os.getcwd()
    os.chdir(HERE)
    try:
        for name, argv in golden_cases():
            (HERE / "golden" / f"{name}.json").write_text(run(argv))
    finally:
        os.chdir(cwd)


if __name__ == "__main__":
    main_()
