"""Free resolutions of monomial ideals and their Betti tables.

Three routes to the same numbers:

* ``taylor_complex`` + ``minimalize_complex``: the Taylor complex on subsets of
  generators, minimized by cancelling unit entries one at a time.
* ``lattice_resolution``: builds the minimal resolution directly, one lcm-lattice
  element at a time. At multidegree ``a`` the part of the resolution already
  built below ``a`` (augmented by the field in degree -1) is a complex whose
  homology H_i counts the new generators of F_{i+1} at shift ``a``; cycle
  representatives complementing the boundaries become their differentials.
* ``hochster`` (separate module): simplicial homology, no complexes at all.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import NamedTuple

from . import monomials as mono
from .errors import InternalError, PreconditionError, ResourceError
from .linalg import QQ, Echelon, FieldSpec, SparseMatrix, kernel_basis, rank_rows

DEFAULT_TAYLOR_CAP = 20


@dataclass(frozen=True)
class GradedFreeComplex:
    """F_0 <- F_1 <- ... with multigraded shifts and scalar differentials.

    ``diffs[i]`` (i >= 1) maps F_i to F_{i-1} as a dict ``(row, col) -> scalar``;
    the monomial of an entry is ``shifts[i][col] - shifts[i-1][row]``.
    ``diffs[0]`` is empty: F_0 maps onto the ideal, generator by generator.
    """

    nvars: int
    shifts: tuple
    diffs: tuple
    field: FieldSpec = QQ
    minimal: bool = False

    @property
    def length(self):
        return len(self.shifts) - 1

    def ranks(self):
        return tuple(len(s) for s in self.shifts)

    def entry_monomial(self, i, r, c):
        return mono.quotient(self.shifts[i][c], self.shifts[i - 1][r])

    def matrix(self, i):
        """Scalar part of d_i as a SparseMatrix."""
        return SparseMatrix(len(self.shifts[i - 1]), len(self.shifts[i]), dict(self.diffs[i]))

    def has_unit_entry(self):
        for i in range(1, len(self.shifts)):
            for (r, c) in self.diffs[i]:
                if self.shifts[i][c] == self.shifts[i - 1][r]:
                    return True
        return False

    def check(self):
        """Assert multihomogeneity, d∘d = 0 and (if flagged) minimality."""
        p = self.field.characteristic
        for i in range(1, len(self.shifts)):
            for (r, c), v in self.diffs[i].items():
                if not mono.divides(self.shifts[i - 1][r], self.shifts[i][c]):
                    raise InternalError(f"entry ({r}, {c}) of d_{i} is not multihomogeneous")
                if p and v % p == 0:
                    raise InternalError(f"stored zero in d_{i}")
        for i in range(1, len(self.shifts) - 1):
            prod = compose(self.diffs[i], self.diffs[i + 1], self.field)
            if prod:
                raise InternalError(f"d_{i} d_{i + 1} != 0")
        if self.minimal and self.has_unit_entry():
            raise InternalError("complex flagged minimal has a unit entry")
        return True


def compose(d_low, d_high, f):
    """Scalar product d_low * d_high as a dict of nonzero entries."""
    by_row = {}
    for (r, c), v in d_low.items():
        by_row.setdefault(c, []).append((r, v))
    out = {}
    for (m, c), v in d_high.items():
        for r, w in by_row.get(m, ()):
            out[(r, c)] = out.get((r, c), 0) + w * v
    return {k: v for k, v in out.items() if f.normalize(v) != 0}


def _trim(shifts, diffs):
    while len(shifts) > 1 and not shifts[-1]:
        shifts.pop()
        diffs.pop()
    return tuple(tuple(s) for s in shifts), tuple(diffs)


# -- Taylor complex ------------------------------------------------------------


def taylor_complex(ideal, f=QQ, cap=DEFAULT_TAYLOR_CAP):
    gens = ideal.gens
    m = len(gens)
    if m == 0:
        raise PreconditionError("the zero ideal has no Taylor complex")
    if m > cap:
        raise ResourceError(
            f"Taylor complex needs 2^{m} subsets, above the cap of {cap} generators; "
            "raise the cap or use long-running mode"
        )
    by_size = [[] for _ in range(m + 1)]
    for mask in range(1, 1 << m):
        by_size[bin(mask).count("1")].append(mask)
    index = {}
    lcms = {}
    shifts = []
    for k in range(1, m + 1):
        level = []
        for pos, mask in enumerate(by_size[k]):
            index[mask] = pos
            if k == 1:
                lcms[mask] = gens[mask.bit_length() - 1]
            else:
                low = mask & -mask
                lcms[mask] = mono.lcm(lcms[mask ^ low], lcms[low])
            level.append(lcms[mask])
        shifts.append(level)
    one = f.normalize(1)
    minus = f.normalize(-1)
    diffs = [{}]
    for k in range(2, m + 1):
        d = {}
        for mask in by_size[k]:
            c = index[mask]
            sign = 0
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                d[(index[mask ^ low], c)] = one if sign % 2 == 0 else minus
                sign += 1
        diffs.append(d)
    return GradedFreeComplex(ideal.nvars, tuple(tuple(s) for s in shifts), tuple(diffs), f, False)


# -- cancellation --------------------------------------------------------------


class _Matrix:
    """Mutable sparse matrix with row and column indexes, keyed by original labels."""

    def __init__(self, entries):
        self.cols = {}
        self.rows = {}
        for (r, c), v in entries.items():
            self.cols.setdefault(c, {})[r] = v
            self.rows.setdefault(r, {})[c] = v

    def set(self, r, c, v):
        if v:
            self.cols.setdefault(c, {})[r] = v
            self.rows.setdefault(r, {})[c] = v
        else:
            self.cols.get(c, {}).pop(r, None)
            self.rows.get(r, {}).pop(c, None)

    def drop_row(self, r):
        for c in self.rows.pop(r, {}):
            self.cols[c].pop(r, None)

    def drop_col(self, c):
        for r in self.cols.pop(c, {}):
            self.rows[r].pop(c, None)

    def entries(self):
        return {(r, c): v for c, col in self.cols.items() for r, v in col.items()}


def minimalize_complex(c, order="lex"):
    """Cancel unit entries until none remain.

    ``order`` is "lex" (smallest (row, col) first) or "reverse" (largest first);
    both process homological degrees from the bottom up.
    """
    f = c.field
    alive = [set(range(len(s))) for s in c.shifts]
    mats = [None] + [_Matrix(d) for d in c.diffs[1:]]
    sign = 1 if order == "lex" else -1

    def key(r, col):
        return (sign * r, sign * col)

    def is_unit(i, r, col):
        return c.shifts[i][col] == c.shifts[i - 1][r]

    for i in range(1, len(c.shifts)):
        mat = mats[i]
        heap = [key(r, col) + (r, col) for (r, col) in mat.entries() if is_unit(i, r, col)]
        heapq.heapify(heap)
        while heap:
            _, _, r, col = heapq.heappop(heap)
            if r not in alive[i - 1] or col not in alive[i]:
                continue
            u = mat.cols.get(col, {}).get(r)
            if not u:
                continue
            u_inv = f.inv(u)
            col_entries = [(r2, v) for r2, v in mat.cols[col].items() if r2 != r]
            row_entries = [(c2, v) for c2, v in mat.rows[r].items() if c2 != col]
            for r2, g in col_entries:
                for c2, b in row_entries:
                    old = mat.cols.get(c2, {}).get(r2, 0)
                    new = f.normalize(old - g * u_inv * b)
                    mat.set(r2, c2, new)
                    if new and is_unit(i, r2, c2):
                        heapq.heappush(heap, key(r2, c2) + (r2, c2))
            mat.drop_col(col)
            mat.drop_row(r)
            alive[i].discard(col)
            alive[i - 1].discard(r)
            if i + 1 < len(mats):
                mats[i + 1].drop_row(col)
            if i - 1 >= 1:
                mats[i - 1].drop_col(r)

    # renumber survivors
    shifts = []
    renum = []
    for i, s in enumerate(c.shifts):
        keep = sorted(alive[i])
        renum.append({old: new for new, old in enumerate(keep)})
        shifts.append([s[k] for k in keep])
    diffs = [{}]
    for i in range(1, len(c.shifts)):
        d = {}
        for (r, col), v in mats[i].entries().items():
            d[(renum[i - 1][r], renum[i][col])] = v
        diffs.append(d)
    shifts_t, diffs_t = _trim(shifts, diffs)
    out = GradedFreeComplex(c.nvars, shifts_t, diffs_t, f, True)
    if out.has_unit_entry():
        raise InternalError("cancellation left a unit entry")
    return out


# -- lcm-lattice construction ------------------------------------------------


def _strand_matrix(cols, rows_idx, cols_idx):
    """Rows of d restricted to the given basis subsets, as dict rows over cols.

    ``cols[c]`` is column c of d as a dict row -> scalar.
    """
    pos_r = {k: n for n, k in enumerate(rows_idx)}
    rows = [dict() for _ in rows_idx]
    for pc, c in enumerate(cols_idx):
        for r, v in cols[c].items():
            pr = pos_r.get(r)
            if pr is not None:
                rows[pr][pc] = v
    return rows


def lattice_resolution(ideal, f=QQ, lattice=None):
    """Minimal multigraded free resolution of ``ideal``."""
    if ideal.is_zero:
        raise PreconditionError("the zero ideal has an empty resolution")
    gens = ideal.gens
    squarefree = ideal.is_squarefree
    if lattice is None:
        if squarefree:
            lattice = [mono.from_mask(m, ideal.nvars) for m in mono.mask_lattice([mono.support_mask(g) for g in gens])]
        else:
            lattice = mono.lcm_lattice(gens)
    order = sorted(lattice, key=lambda a: (mono.degree(a), a))
    # squarefree shifts are compared as bitmasks, the rest as exponent tuples
    key = mono.support_mask if squarefree else (lambda a: a)
    shifts = [[]]
    keys = [[]]
    cols = [[]]  # cols[i][c] = column c of d_i as {row: scalar}
    for a in order:
        ka = key(a)
        below = []
        for ks in keys:
            if squarefree:
                below.append([k for k, b in enumerate(ks) if b != ka and b & ~ka == 0])
            else:
                below.append([k for k, b in enumerate(ks) if b != ka and mono.divides(b, ka)])
        # matrices of the augmented strand: D_0 is the augmentation row
        mats = {0: [{k: 1 for k in range(len(below[0]))}]}
        for i in range(1, len(shifts)):
            mats[i] = _strand_matrix(cols[i], below[i - 1], below[i])
        sizes = {-1: 1}
        for i, b in enumerate(below):
            sizes[i] = len(b)
        ranks = {}

        def rk(i):
            if i not in ranks:
                if i not in mats or sizes.get(i, 0) == 0 or sizes.get(i - 1, 0) == 0:
                    ranks[i] = 0
                else:
                    ranks[i] = rank_rows(mats[i], sizes[i], f)
            return ranks[i]

        top = len(shifts) - 1
        new_cols = {}
        for i in range(-1, top + 1):
            if sizes.get(i, 0) == 0:
                continue
            h = sizes[i] - (rk(i) if i >= 0 else 0) - rk(i + 1)
            if h < 0:
                raise InternalError("negative homology dimension")
            if h == 0:
                continue
            new_cols[i + 1] = _homology_representatives(mats, sizes, i, f, h)
        for j in sorted(new_cols):
            while len(shifts) <= j:
                shifts.append([])
                keys.append([])
                cols.append([])
            for vec in new_cols[j]:
                shifts[j].append(a)
                keys[j].append(ka)
                cols[j].append({} if j == 0 else {below[j - 1][pos]: v for pos, v in vec.items()})
    diffs = [{}]
    for j in range(1, len(cols)):
        diffs.append({(r, c): v for c, col in enumerate(cols[j]) for r, v in col.items()})
    shifts_t, diffs_t = _trim(shifts, diffs)
    return GradedFreeComplex(ideal.nvars, shifts_t, diffs_t, f, True)


def _homology_representatives(mats, sizes, i, f, h):
    """h cycles of the strand in degree i spanning homology, as dict vectors."""
    n = sizes[i]
    if i == -1:
        return [{0: 1}]
    kern = kernel_basis(SparseMatrix.from_dense(_dense(mats[i], n), n), f)
    ech = Echelon(n, f)
    if i + 1 in mats and sizes.get(i + 1, 0):
        higher = mats[i + 1]
        cols = [dict() for _ in range(sizes[i + 1])]
        for r, row in enumerate(higher):
            for c, v in row.items():
                cols[c][r] = v
        for col in cols:
            ech.add(col)
    reps = []
    for vec in kern:
        if ech.add(vec):
            reps.append({k: f.normalize(v) for k, v in enumerate(vec) if f.normalize(v)})
            if len(reps) == h:
                break
    if len(reps) != h:
        raise InternalError("homology representatives do not match the rank count")
    return reps


def _dense(rows, ncols):
    out = []
    for row in rows:
        r = [0] * ncols
        for c, v in row.items():
            r[c] = v
        out.append(r)
    return out


def minimal_resolution(ideal, f=QQ, method="lattice", taylor_cap=DEFAULT_TAYLOR_CAP):
    if method == "taylor":
        return minimalize_complex(taylor_complex(ideal, f, taylor_cap))
    if method == "lattice":
        return lattice_resolution(ideal, f)
    raise ValueError(f"unknown resolution method {method!r}")


# -- Betti tables --------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    field: FieldSpec
    multigraded: dict = field(default_factory=dict)  # (i, multidegree) -> beta
    graded_only: dict = None  # used when no multigrading is available

    @property
    def graded(self):
        if self.graded_only is not None:
            return dict(self.graded_only)
        out = {}
        for (i, a), b in self.multigraded.items():
            key = (i, mono.degree(a))
            out[key] = out.get(key, 0) + b
        return out

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.field == other.field and self.graded == other.graded

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.graded.items()))))

    def multigraded_equal(self, other):
        return self.multigraded == other.multigraded

    def total(self, i):
        return sum(b for (k, _), b in self.graded.items() if k == i)

    def totals(self):
        pd = projective_dimension(self) if self.graded else -1
        return tuple(self.total(i) for i in range(pd + 1))

    def get(self, i, j):
        return self.graded.get((i, j), 0)

    def is_empty(self):
        return not self.graded

    def to_text(self):
        return format_betti_text(self)

    def to_json(self):
        return format_betti_json(self)


def betti_table(c):
    if not c.minimal or c.has_unit_entry():
        raise PreconditionError("Betti numbers can only be read off a minimal complex")
    out = {}
    for i, s in enumerate(c.shifts):
        for a in s:
            out[(i, a)] = out.get((i, a), 0) + 1
    return BettiTable(c.field, out)


def regularity(t):
    g = t.graded
    if not g:
        raise PreconditionError("the zero ideal has no regularity")
    return max(j - i for (i, j) in g)


def projective_dimension(t):
    g = t.graded
    if not g:
        raise PreconditionError("the zero ideal has no projective dimension")
    return max(i for (i, _) in g)


def format_betti_text(t):
    g = t.graded
    if not g:
        return "0 (zero ideal)\n"
    pd = projective_dimension(t)
    rows = sorted({j - i for (i, j) in g})
    lo, hi = rows[0], rows[-1]
    header = ["", *[str(i) for i in range(pd + 1)]]
    body = [["total:", *[str(t.total(i)) for i in range(pd + 1)]]]
    for r in range(lo, hi + 1):
        line = [f"{r}:"]
        for i in range(pd + 1):
            b = g.get((i, i + r), 0)
            line.append(str(b) if b else ".")
        body.append(line)
    table = [header] + body
    widths = [max(len(row[k]) for row in table) for k in range(len(header))]
    lines = []
    for row in table:
        lines.append(" ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def betti_entries(t):
    return [[i, j, b] for (i, j), b in sorted(t.graded.items())]


def format_betti_json(t):
    return json.dumps({"field": t.field.label, "entries": betti_entries(t)})


# -- graded pieces -------------------------------------------------------------


class GradedPieces(NamedTuple):
    free: int  # dim of (F_0)_d
    syzygy: int  # dim of the first syzygy module in degree d
    ideal: int  # dim of I_d


def graded_piece_dims(ideal, c, d, f=QQ):
    """Degree-d dimensions of F_0, of ker(F_0 -> I) and of I.

    The syzygy dimension comes from the rank of the multiplication map
    (F_0)_d -> R_d; the ideal dimension is also counted monomial by monomial
    and the two must agree.
    """
    n = ideal.nvars
    basis = []
    for k, b in enumerate(c.shifts[0]):
        e = d - mono.degree(b)
        if e < 0:
            continue
        for m in mono.monomials_of_degree(n, e):
            basis.append(mono.mul(b, m))
    if not basis:
        return GradedPieces(0, 0, mono.dim_in_degree(ideal, d))
    targets = {}
    rows = {}
    for col, m in enumerate(basis):
        r = targets.setdefault(m, len(targets))
        rows.setdefault(r, {})[col] = 1
    rk = rank_rows(list(rows.values()), len(basis), f)
    ideal_dim = mono.dim_in_degree(ideal, d)
    if rk != ideal_dim:
        raise InternalError("image of F_0 disagrees with the monomial count of I")
    return GradedPieces(len(basis), len(basis) - rk, ideal_dim)
