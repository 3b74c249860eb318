"""Golden CLI reports for the worked examples, checked against closed forms first."""

import json
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(DATA))
from regenerate import golden_cases, run  # noqa: E402

CASES = dict(golden_cases())


def load(name):
    return json.loads((DATA / "golden" / f"{name}.json").read_text())


def fields(name):
    return {f["field"]: f for f in load(name)["fields"]}


def expected_lind(name):
    for prefix, rule in (
        ("cycle", lambda n: 2 * ((n - 2) // 3)),
        ("anticycle", lambda n: n - 3),
        ("path", lambda n: (n - 2) // 3),
        ("matching", lambda g: g - 1),
    ):
        if name.startswith(prefix) and name[len(prefix) :].isdigit():
            return rule(int(name[len(prefix) :]))
    return None


@pytest.mark.parametrize("name", [n for n in CASES if expected_lind(n) is not None])
def test_golden_lind_matches_formula(name):
    for f in fields(name).values():
        assert f["lind"] == expected_lind(name)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_golden_matching_reg_pd(g):
    for f in fields(f"matching{g}").values():
        assert (f["reg"], f["pd"]) == (g + 1, g - 1)


def test_golden_characteristic_dependence():
    k = fields("katzman")
    assert (k["QQ"]["reg"], k["GF(2)"]["reg"]) == (3, 4)
    dk = fields("dalili_kummini")
    assert (dk["QQ"]["reg"], dk["GF(2)"]["reg"]) == (4, 5)
    for f in list(k.values()) + list(dk.values()):
        assert f["lind"].startswith("skipped")


def test_golden_ideal_pair():
    a, b = fields("ideal_I1")["QQ"], fields("ideal_I2")["QQ"]
    assert a["betti"] == b["betti"]
    assert (a["lind"], b["lind"]) == (0, 1)


def test_golden_splits():
    assert load("split_c6")["reports"][0]["is_splitting"]
    assert not load("split_c5")["reports"][0]["is_splitting"]


@pytest.mark.parametrize("name", list(CASES))
def test_golden_bytes(name, monkeypatch):
    monkeypatch.chdir(DATA)
    assert run(CASES[name]) == (DATA / "golden" / f"{name}.json").read_text()
