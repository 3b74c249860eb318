"""Betti splittings I = J + K checked directly on Betti numbers.

A split is a Betti splitting when, for all i and j,
beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from . import graph as gr
from . import monomials as mono
from .errors import DomainError, InputError, PreconditionError
from .hochster import squarefree_hochster_betti
from .lind import linearity_defect
from .linalg import QQ, FieldSpec
from .resolution import BettiTable, betti_table, lattice_resolution

log = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def betti_of(ideal, f=QQ):
    """Hochster for squarefree ideals, the lattice resolution otherwise (memoised)."""
    if ideal.is_zero:
        return BettiTable(f, {})
    if ideal.is_squarefree:
        return squarefree_hochster_betti(ideal, f)
    return betti_table(lattice_resolution(ideal, f))


def _pd(t):
    g = t.graded
    return max((i for i, _ in g), default=None)


def _reg(t):
    g = t.graded
    return max((j - i for i, j in g), default=None)


def _max(*xs):
    vals = [x for x in xs if x is not None]
    return max(vals) if vals else None


@dataclass
class SplittingReport:
    is_splitting: bool
    field: FieldSpec
    ledger: list  # rows (i, j, I, J, K, JK at i-1, residual)
    tables: dict = field(default_factory=dict)
    label: str = ""

    @property
    def residuals(self):
        return {(r[0], r[1]): r[6] for r in self.ledger if r[6]}

    def formula_checks(self):
        """pd and reg of I against the values forced by the splitting."""
        tI, tJ, tK, tJK = (self.tables[k] for k in ("I", "J", "K", "JK"))
        pjk = _pd(tJK)
        rjk = _reg(tJK)
        pd_pred = _max(_pd(tJ), _pd(tK), None if pjk is None else pjk + 1)
        reg_pred = _max(_reg(tJ), _reg(tK), None if rjk is None else rjk - 1)
        return {"pd": (_pd(tI), pd_pred), "reg": (_reg(tI), reg_pred)}

    def to_dict(self):
        return {
            "schema": 1,
            "label": self.label,
            "field": self.field.label,
            "is_splitting": self.is_splitting,
            "ledger": [
                {"i": i, "j": j, "I": a, "J": b, "K": c, "JK_prev": d, "residual": e}
                for i, j, a, b, c, d, e in self.ledger
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        head = f"{self.label or 'split'} over {self.field.label}: "
        head += "Betti splitting" if self.is_splitting else "NOT a Betti splitting"
        lines = [head, "   i   j  b(I)  b(J)  b(K)  b'(JK)  residual"]
        for i, j, a, b, c, d, e in self.ledger:
            lines.append(f"{i:4d}{j:4d}{a:6d}{b:6d}{c:6d}{d:8d}{e:10d}")
        return "\n".join(lines) + "\n"


def is_betti_splitting(I, J, K, f=QQ, label=""):
    gi, gj, gk = set(I.gens), set(J.gens), set(K.gens)
    if gj & gk or gj | gk != gi:
        raise InputError("G(J) and G(K) must partition the minimal generators of I")
    JK = mono.intersect(J, K)
    tables = {"I": betti_of(I, f), "J": betti_of(J, f), "K": betti_of(K, f), "JK": betti_of(JK, f)}
    gI, gJ, gK, gJK = (tables[k].graded for k in ("I", "J", "K", "JK"))
    keys = set(gI) | set(gJ) | set(gK) | {(i + 1, j) for i, j in gJK}
    ledger = []
    for i, j in sorted(keys):
        a, b, c, d = gI.get((i, j), 0), gJ.get((i, j), 0), gK.get((i, j), 0), gJK.get((i - 1, j), 0)
        ledger.append((i, j, a, b, c, d, a - b - c - d))
    ok = all(row[6] == 0 for row in ledger)
    if ok and tables["I"].total(0) != tables["J"].total(0) + tables["K"].total(0):
        raise PreconditionError("beta_0 is not additive on a generator partition")
    return SplittingReport(ok, f, ledger, tables, label)


def edge_split(g, e):
    """I(G) = (e) + I(G minus e)."""
    u, v = sorted(e)
    if not g.has_edge(u, v):
        raise InputError(f"{e} is not an edge")
    I = mono.edge_ideal(g)
    J = mono.edge_ideal(gr.Graph.from_edges(g.n, [(u, v)]))
    K = mono.edge_ideal(g.delete_edge(u, v))
    return I, J, K


def co_two_pair_splittings(g, f=QQ):
    if g.num_edges == 0:
        raise DomainError("graph has no edges")
    if not gr.is_weakly_chordal(g):
        raise DomainError("co-two-pair splittings are only guaranteed for weakly chordal graphs")
    out = []
    for e in gr.co_two_pairs(g):
        I, J, K = edge_split(g, e)
        out.append((e, is_betti_splitting(I, J, K, f, label=f"edge {e[0]}-{e[1]}")))
    return out


def y_partition_splitting(I, v, f=QQ):
    J, L = mono.variable_partition(I, v)
    K = mono.product_by_monomial(L, mono.variable(v, I.nvars))
    if not L.is_zero and linearity_defect(L, f, long_running=True) != 0:
        raise DomainError("L is not Koszul; the y-partition need not split")
    return is_betti_splitting(I, J, K, f, label=f"x{v}-partition")


@lru_cache(maxsize=4096)
def _lind(ideal, f):
    return linearity_defect(ideal, f, long_running=True)


@dataclass
class InequalityReport:
    lind: dict  # "I", "J", "K", "JK" -> int
    checks: dict  # name -> bool
    conjecture: bool  # max(lind J, lind K) <= lind I

    @property
    def ok(self):
        return all(self.checks.values())

    def to_dict(self):
        return {"lind": self.lind, "checks": self.checks, "conjecture": self.conjecture}


def check_splitting_inequalities(I, J, K, f=QQ, report=None):
    if report is None:
        report = is_betti_splitting(I, J, K, f)
    if not report.is_splitting:
        raise PreconditionError("not a Betti splitting: " + repr(report.residuals))
    JK = mono.intersect(J, K)
    ld = {name: _lind(x, f) for name, x in (("I", I), ("J", J), ("K", K), ("JK", JK))}
    checks = {
        "upper": ld["I"] <= max(ld["J"], ld["K"], ld["JK"] + 1),
        "middle": max(ld["J"], ld["K"]) <= max(ld["JK"], ld["I"]),
        "intersection": ld["JK"] <= max(ld["J"], ld["K"], ld["I"] - 1),
    }
    pd, reg = report.formula_checks()["pd"], report.formula_checks()["reg"]
    checks["pd_formula"] = pd[0] == pd[1]
    checks["reg_formula"] = reg[0] == reg[1]
    conj = max(ld["J"], ld["K"]) <= ld["I"]
    if not conj:
        log.warning("max(lind J, lind K) > lind I on a Betti splitting: %s", ld)
    return InequalityReport(ld, checks, conj)


def search_conjecture(graphs, f=QQ):
    """Scan co-two-pair and y-partition splittings; return the ones where
    max(lind J, lind K) <= lind I fails. Never raises on a violation."""
    found = []
    for g in graphs:
        if g.num_edges == 0:
            continue
        I = mono.edge_ideal(g)
        candidates = []
        if gr.is_weakly_chordal(g):
            for e in gr.co_two_pairs(g):
                candidates.append(("edge", e, edge_split(g, e)))
        for v in range(g.n):
            J, L = mono.variable_partition(I, v)
            if L.is_zero or J.is_zero:
                continue
            candidates.append(("vertex", v, (I, J, mono.product_by_monomial(L, mono.variable(v, g.n)))))
        for kind, where, (I_, J, K) in candidates:
            rep = is_betti_splitting(I_, J, K, f)
            if not rep.is_splitting:
                continue
            res = check_splitting_inequalities(I_, J, K, f, rep)
            if not res.conjecture:
                found.append((g, kind, where, res.lind))
    return found
