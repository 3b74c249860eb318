"""Exact linear algebra over the rationals and prime fields.

Characteristic 0 works on Python integers only: rows are scaled to integers
and updated fraction-free (``p*row - a*pivot``), then divided by their content
so coefficients stay small. Characteristic p reduces everything mod p and, for
dense enough matrices, hands the work to the compiled kernel.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import InputError

DENSE_LIMIT = 4_000_000


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p >= 2**31 or not _is_prime(p)):
            raise InputError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @classmethod
    def parse(cls, text):
        t = str(text).strip().upper()
        if t in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"(?:GF|F)?\(?(\d+)\)?", t)
        if m:
            t = m.group(1)
        try:
            return cls(int(t))
        except ValueError:
            raise InputError(f"cannot parse field {text!r}") from None

    @property
    def label(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self):
        return self.label

    def normalize(self, x):
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fraction) and x.denominator == 1:
                return int(x.numerator)
            return x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(1) / x
        return pow(int(x), -1, p)


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)  # (r, c) -> nonzero scalar

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise InputError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if v == 0:
                raise InputError("stored zero entry")

    @classmethod
    def from_dense(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v != 0}
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Columns given as dicts row -> value."""
        entries = {(r, c): v for c, col in enumerate(columns) for r, v in col.items() if v != 0}
        return cls(nrows, len(columns), entries)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()})

    def apply(self, vec, f=QQ):
        out = [0] * self.nrows
        for (r, c), v in self.entries.items():
            out[r] += v * vec[c]
        return [f.normalize(x) for x in out]


# -- row helpers ---------------------------------------------------------------


def _integer_row(row):
    """Scale a dict row with rational entries to a primitive integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items() if v != 0}
    return _primitive(out)


def _primitive(row):
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _prepare_rows(rows, f):
    p = f.characteristic
    out = []
    for row in rows:
        if p == 0:
            r = _integer_row(row)
        else:
            r = {c: f.normalize(v) for c, v in row.items()}
            r = {c: v for c, v in r.items() if v}
        if r:
            out.append(r)
    return out


def _combine(target, pivot_row, col, p):
    """Eliminate ``col`` from ``target`` using ``pivot_row``."""
    a = target[col]
    b = pivot_row[col]
    if p == 0:
        g = math.gcd(a, b)
        sa, sb = b // g, a // g
        out = {c: v * sa for c, v in target.items()}
        for c, v in pivot_row.items():
            nv = out.get(c, 0) - sb * v
            if nv:
                out[c] = nv
            else:
                out.pop(c, None)
        return _primitive(out)
    factor = a * pow(b, -1, p) % p
    out = dict(target)
    for c, v in pivot_row.items():
        nv = (out.get(c, 0) - factor * v) % p
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def _sparse_rank(rows, p):
    """Markowitz-style elimination; returns the rank."""
    rows = {i: r for i, r in enumerate(rows)}
    cols = {}
    for i, r in rows.items():
        for c in r:
            cols.setdefault(c, set()).add(i)
    rank = 0
    while rows:
        i = min(rows, key=lambda k: (len(rows[k]), k))
        prow = rows.pop(i)
        for c in prow:
            cols[c].discard(i)
        col = min(prow, key=lambda c: (len(cols[c]), c))
        for k in sorted(cols[col]):
            old = rows[k]
            new = _combine(old, prow, col, p)
            for c in old:
                if c not in new:
                    cols[c].discard(k)
            for c in new:
                if c not in old:
                    cols.setdefault(c, set()).add(k)
            if new:
                rows[k] = new
            else:
                del rows[k]
        rank += 1
    return rank


def _dense_mod_p(rows, ncols, p):
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, v in r.items():
            a[i, c] = v
    return a


def rank_rows(rows, ncols, f=QQ):
    """Rank of a list of dict rows."""
    rows = _prepare_rows(rows, f)
    if not rows:
        return 0
    p = f.characteristic
    if p and len(rows) * ncols <= DENSE_LIMIT and len(rows) > 8:
        return int(kernels.rank_mod_p(_dense_mod_p(rows, ncols, p), p))
    return _sparse_rank(rows, p)


def rank(m, f=QQ):
    if m.nrows == 0 or m.ncols == 0:
        return 0
    rows = m.row_dicts()
    # eliminate along the shorter side
    if m.ncols < m.nrows:
        rows = m.transpose().row_dicts()
        return rank_rows(rows, m.nrows, f)
    return rank_rows(rows, m.ncols, f)


def rref_rows(rows, ncols, f=QQ):
    """Reduced row echelon form; returns (rows, pivots) with pivot entries 1.

    Entries are Fractions (char 0) or residues (char p).
    """
    p = f.characteristic
    work = _prepare_rows(rows, f)
    if p and work and len(work) * ncols <= DENSE_LIMIT:
        a, piv = kernels.rref_mod_p(_dense_mod_p(work, ncols, p), p)
        out = []
        for i in range(len(piv)):
            out.append({c: int(v) for c, v in enumerate(a[i]) if v})
        return out, list(piv)
    pivots = {}  # pivot col -> row
    for r in work:
        for c in sorted(pivots):
            if c in r:
                r = _combine(r, pivots[c], c, p)
                if not r:
                    break
        if not r:
            continue
        lead = min(r)
        pivots[lead] = r
    order = sorted(pivots)
    # back substitution
    for idx in range(len(order) - 1, -1, -1):
        c = order[idx]
        prow = pivots[c]
        for c2 in order[:idx]:
            if c in pivots[c2]:
                pivots[c2] = _combine(pivots[c2], prow, c, p)
    out = []
    for c in order:
        r = pivots[c]
        if p == 0:
            lead = r[c]
            r = {k: Fraction(v, lead) for k, v in r.items()}
            r = {k: (int(v) if v.denominator == 1 else v) for k, v in r.items()}
        else:
            inv = pow(r[c], -1, p)
            r = {k: v * inv % p for k, v in r.items()}
        out.append(r)
    return out, order


def kernel_basis(m, f=QQ):
    """Basis of the right kernel as dense lists.

    In characteristic 0 each vector is scaled to a primitive integer vector.
    """
    rows, pivots = rref_rows(m.row_dicts(), m.ncols, f)
    pivset = set(pivots)
    out = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        vec = [0] * m.ncols
        vec[free] = 1
        for r, pc in zip(rows, pivots):
            v = r.get(free)
            if v:
                vec[pc] = f.normalize(-v)
        if f.characteristic == 0:
            vec = _to_integer_vector(vec)
        out.append(vec)
    return out


def _to_integer_vector(vec):
    d = _integer_row({i: v for i, v in enumerate(vec) if v})
    out = [0] * len(vec)
    for i, v in d.items():
        out[i] = v
    return out


class Echelon:
    """Incrementally grown row space; ``add`` reports whether a vector was new."""

    def __init__(self, ncols, f=QQ):
        self.ncols = ncols
        self.field = f
        self.rows = {}  # lead col -> row dict

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        p = self.field.characteristic
        if isinstance(vec, dict):
            r = dict(vec)
        else:
            r = {i: v for i, v in enumerate(vec) if v}
        r = _prepare_rows([r], self.field)
        if not r:
            return {}
        r = r[0]
        while r:
            lead = min(r)
            prow = self.rows.get(lead)
            if prow is None:
                return r
            r = _combine(r, prow, lead, p)
        return r

    def add(self, vec):
        r = self.reduce(vec)
        if not r:
            return False
        self.rows[min(r)] = r
        return True

    def contains(self, vec):
        return not self.reduce(vec)
