import json

import pytest

from edgelind import graph as gr
from edgelind.errors import InputError
from edgelind.linalg import GF2, QQ
from edgelind.verify import EXPERIMENTAL, THEOREMS, check_graph, is_bipartite, verify


def test_cycle_lind_values():
    c = verify("cycle-lind", 10, QQ)
    assert c.passed
    got = [(v["values"]["n"], v["values"]["lind"]) for v in c.verdicts]
    assert got == [(3, 0), (4, 0), (5, 2), (6, 2), (7, 2), (8, 4), (9, 4), (10, 4)]


def test_froberg_over_gf2_n6():
    c = verify("froberg", 6, GF2)
    assert c.passed and c.classes == 156 and not c.counterexamples


def test_bounds_n5():
    c = verify("bounds", 5, QQ)
    assert c.passed and c.classes == 34 and c.checked == 33


@pytest.mark.parametrize("theorem", [t for t in THEOREMS if t != "cycle-lind"])
def test_every_theorem_passes_at_n5(theorem):
    for f in (QQ, GF2):
        assert verify(theorem, 5, f).passed


def test_scope_filters():
    in_scope, _, ok = check_graph("weakly-chordal-lind", gr.cycle(5), QQ)
    assert not in_scope and ok
    in_scope, values, ok = check_graph("weakly-chordal-lind", gr.cycle(4), QQ)
    assert in_scope and ok and values == {"lind": 0, "inmat": 1}
    in_scope, _, _ = check_graph("ld-char-independence", gr.cycle(5), QQ)
    assert not in_scope


def test_failing_statement_is_reported(monkeypatch):
    from edgelind import verify as vmod

    monkeypatch.setattr(vmod, "_lind", lambda g, f: 5)
    c = vmod.verify("froberg", 3, QQ)
    assert not c.passed
    assert c.counterexamples and "counterexample" in c.to_text()


def test_unknown_theorem():
    with pytest.raises(InputError):
        verify("no-such-theorem", 4)
    with pytest.raises(InputError):
        verify("froberg", 0)


def test_reports_are_deterministic_and_worker_independent():
    a = verify("weakly-chordal-pd", 5, GF2).to_json()
    b = verify("weakly-chordal-pd", 5, GF2).to_json()
    c = verify("weakly-chordal-pd", 5, GF2, workers=2).to_json()
    assert a == b == c
    d = json.loads(a)
    assert d["schema"] == 1 and d["field"] == "GF(2)" and d["passed"]


def test_connected_only():
    c = verify("ld1", 5, QQ, connected_only=True)
    assert c.classes == 21 and c.connected_only


def test_experimental_search_never_fails():
    c = verify("ld-char-independence", 5, QQ)
    assert "ld-char-independence" in EXPERIMENTAL
    assert c.experimental and c.passed
    assert all(v["values"]["same"] for v in c.verdicts if v["in_scope"])


def test_is_bipartite():
    assert is_bipartite(gr.cycle(6)) and not is_bipartite(gr.cycle(5))
    assert is_bipartite(gr.Graph.from_edges(3, []))
