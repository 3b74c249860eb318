"""Linear part of a minimal resolution and the linearity defect.

Two independent ways to decide whether H_i of the linear part vanishes:

``groebner``
    Compare Hilbert series. im d_{i+1} sits inside ker d_i, so the two are
    equal exactly when their series agree; HS(ker d_i) = HS(F_i) - HS(im d_i).
    Image series come from the leading-term modules of Groebner bases.

``strands``
    Look at one multidegree at a time. The strand of the complex at ``a`` is
    a finite complex of vector spaces (basis: shifts dividing ``a``). If
    H_i(a) != 0 then H_i(a') != 0 for ``a'`` the lcm of the degree-i shifts
    dividing ``a`` (same cycles, fewer boundaries), so it is enough to scan
    lcms of subsets of the degree-i shifts.

Complexes here are multigraded, so every vector that occurs is multihomogeneous
and has at most one term per component. The Groebner code stores a vector as
its multidegree plus one scalar per component.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from . import monomials as mono
from .errors import InternalError, PreconditionError, ResourceError
from .linalg import QQ, rank_rows
from .resolution import DEFAULT_TAYLOR_CAP, GradedFreeComplex, minimal_resolution

METHODS = ("groebner", "strands")


@dataclass(frozen=True)
class LinearComplex:
    complex: GradedFreeComplex

    @property
    def shifts(self):
        return self.complex.shifts

    @property
    def diffs(self):
        return self.complex.diffs

    @property
    def field(self):
        return self.complex.field

    @property
    def length(self):
        return self.complex.length

    def matrix_terms(self, i):
        """Dense d_i with entries 0 or (scalar, monomial)."""
        c = self.complex
        out = [[0] * len(c.shifts[i]) for _ in c.shifts[i - 1]]
        for (r, col), v in c.diffs[i].items():
            out[r][col] = (v, c.entry_monomial(i, r, col))
        return out


def linear_part(c):
    if not c.minimal or c.has_unit_entry():
        raise PreconditionError("the linear part is defined for minimal resolutions")
    diffs = [{}]
    for i in range(1, len(c.shifts)):
        keep = {}
        for (r, col), v in c.diffs[i].items():
            if mono.degree(c.shifts[i][col]) - mono.degree(c.shifts[i - 1][r]) == 1:
                keep[(r, col)] = v
        diffs.append(keep)
    lin = GradedFreeComplex(c.nvars, c.shifts, tuple(diffs), c.field, True)
    lin.check()
    return LinearComplex(lin)


# -- module Groebner bases -----------------------------------------------------


@dataclass(frozen=True)
class ModuleGB:
    rank: int
    shifts: tuple
    basis: tuple  # (multidegree, {component: scalar})
    leading: tuple  # (component, monomial)


def _lead(vec):
    return min(vec)


def _sub_scaled(v, w, s, f):
    """v - s*w."""
    out = dict(v)
    for c, x in w.items():
        y = f.normalize(out.get(c, 0) - s * x)
        if y:
            out[c] = y
        else:
            out.pop(c, None)
    return out


def _scale(v, s, f):
    return {c: f.normalize(x * s) for c, x in v.items()}


def _to_multihomogeneous(col, shifts):
    """Term-vector {comp: (scalar, monomial)} -> (multidegree, {comp: scalar})."""
    a = None
    vec = {}
    for comp, (s, m) in col.items():
        if s == 0:
            continue
        b = mono.mul(shifts[comp], m)
        if a is None:
            a = b
        elif a != b:
            raise PreconditionError("column is not multihomogeneous")
        vec[comp] = s
    return (a, vec) if vec else None


def _reduce(a, vec, by_lead, f):
    """Top-reduce (a, vec) against the basis until its leading term is irreducible."""
    while vec:
        c = _lead(vec)
        hit = None
        for b, w in by_lead.get(c, ()):
            if mono.divides(b, a):
                hit = w
                break
        if hit is None:
            return vec
        vec = _sub_scaled(vec, hit, vec[c] * f.inv(hit[c]), f)
    return vec


def module_groebner(columns, shifts, f=QQ):
    """Buchberger's algorithm, position over term (lower index ranks higher).

    ``columns`` are term-vectors ``{component: (scalar, monomial)}`` that must be
    multihomogeneous, which holds for every column of a multigraded complex.
    """
    shifts = tuple(tuple(s) for s in shifts)
    basis = []
    by_lead = {}
    pairs = []

    def insert(a, vec):
        vec = _scale(vec, f.inv(vec[_lead(vec)]), f)
        k = len(basis)
        c = _lead(vec)
        for j, (b, w) in enumerate(basis):
            if _lead(w) == c:
                heapq.heappush(pairs, (mono.degree(mono.lcm(a, b)), j, k))
        basis.append((a, vec))
        by_lead.setdefault(c, []).append((a, vec))

    for col in columns:
        mh = _to_multihomogeneous(col, shifts)
        if mh is None:
            continue
        a, vec = mh
        vec = _reduce(a, vec, by_lead, f)
        if vec:
            insert(a, vec)
    while pairs:
        _, j, k = heapq.heappop(pairs)
        (a1, w1), (a2, w2) = basis[j], basis[k]
        l = mono.lcm(a1, a2)
        # leads are normalised to 1, so the S-vector is w1 - w2 at multidegree l
        s = _sub_scaled(w1, w2, 1, f)
        s = _reduce(l, s, by_lead, f)
        if s:
            insert(l, s)
    leading = tuple((_lead(w), mono.quotient(a, shifts[_lead(w)])) for a, w in basis)
    return ModuleGB(len(shifts), shifts, tuple(basis), leading)


def certify_groebner(gb, f=QQ):
    """Every S-vector reduces to zero."""
    by_lead = {}
    for a, w in gb.basis:
        by_lead.setdefault(_lead(w), []).append((a, w))
    for j, (a1, w1) in enumerate(gb.basis):
        for a2, w2 in gb.basis[j + 1 :]:
            if _lead(w1) != _lead(w2):
                continue
            l = mono.lcm(a1, a2)
            s = _sub_scaled(_scale(w1, f.inv(w1[_lead(w1)]), f), _scale(w2, f.inv(w2[_lead(w2)]), f), 1, f)
            if _reduce(l, s, by_lead, f):
                return False
    return True


# -- Hilbert numerators --------------------------------------------------------


def _poly_add(p, q, sign=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _poly_shift(p, d):
    return {k + d: v for k, v in p.items()}


def quotient_numerator(gens, nvars):
    """N(t) with HS(R/J) = N(t) / (1-t)^nvars for J generated by ``gens``."""
    gens = mono.minimalize(gens, nvars).gens
    if not gens:
        return {0: 1}
    if any(mono.degree(g) == 0 for g in gens):
        return {}
    # pairwise coprime generators form a regular sequence
    used = 0
    coprime = True
    for g in gens:
        s = mono.support_mask(g)
        if s & used:
            coprime = False
            break
        used |= s
    if coprime:
        out = {0: 1}
        for g in gens:
            out = _poly_add(out, _poly_shift(out, mono.degree(g)), -1)
        return out
    # pivot on the variable occurring in the most generators
    counts = [sum(1 for g in gens if g[v]) for v in range(nvars)]
    v = max(range(nvars), key=lambda k: (counts[k], -k))
    x = mono.variable(v, nvars)
    with_x = quotient_numerator(list(gens) + [x], nvars)
    colon = quotient_numerator([mono.quotient(g, mono.gcd(g, x)) for g in gens], nvars)
    return _poly_add(with_x, _poly_shift(colon, 1))


def hilbert_numerator(lt, shifts, nvars):
    """Numerator of the Hilbert series of the monomial submodule ``lt`` of the
    free module with the given shifts (denominator (1-t)^nvars)."""
    by_comp = {}
    for comp, m in lt:
        by_comp.setdefault(comp, []).append(m)
    out = {}
    for comp, ms in sorted(by_comp.items()):
        ideal_num = _poly_add({0: 1}, quotient_numerator(ms, nvars), -1)
        out = _poly_add(out, _poly_shift(ideal_num, mono.degree(shifts[comp])))
    return out


def free_numerator(shifts):
    out = {}
    for s in shifts:
        d = mono.degree(s)
        out[d] = out.get(d, 0) + 1
    return out


def _image_numerator(lc, i):
    """Hilbert numerator of im d_i inside F_{i-1}."""
    c = lc.complex
    if i < 1 or i > c.length:
        return {}
    cols = [dict() for _ in c.shifts[i]]
    for (r, col), v in c.diffs[i].items():
        cols[col][r] = (v, c.entry_monomial(i, r, col))
    gb = module_groebner(cols, c.shifts[i - 1], c.field)
    return hilbert_numerator(gb.leading, c.shifts[i - 1], c.nvars)


def _vanishes_groebner(lc, i):
    c = lc.complex
    if i > c.length:
        return True
    ker = _poly_add(free_numerator(c.shifts[i]), _image_numerator(lc, i), -1)
    return ker == _image_numerator(lc, i + 1)


# -- strand scan ---------------------------------------------------------------


def _strand_rank(c, i, a):
    """Rank of d_i restricted to basis elements whose shifts divide ``a``."""
    if i < 1 or i > c.length:
        return 0
    rows_ok = {r for r, b in enumerate(c.shifts[i - 1]) if mono.divides(b, a)}
    cols = {}
    for (r, col), v in c.diffs[i].items():
        if r in rows_ok and mono.divides(c.shifts[i][col], a):
            cols.setdefault(col, {})[r] = v
    if not cols:
        return 0
    return rank_rows(list(cols.values()), len(c.shifts[i - 1]), c.field)


def strand_homology(lc, i, a):
    """dim H_i of the linear part in multidegree ``a``."""
    c = lc.complex
    n_i = sum(1 for b in c.shifts[i] if mono.divides(b, a)) if i <= c.length else 0
    return n_i - _strand_rank(c, i, a) - _strand_rank(c, i + 1, a)


def nonvanishing_degrees(lc, i):
    """Multidegrees in the lcm-closure of the degree-i shifts where H_i != 0."""
    c = lc.complex
    if i > c.length:
        return []
    lattice = mono.lcm_lattice(list(set(c.shifts[i])))
    return sorted(a for a in lattice if strand_homology(lc, i, a))


def _vanishes_strands(lc, i):
    c = lc.complex
    if i > c.length:
        return True
    for a in sorted(mono.lcm_lattice(list(set(c.shifts[i]))), key=lambda a: (mono.degree(a), a)):
        if strand_homology(lc, i, a):
            return False
    return True


def linear_homology_vanishes(lc, i, f=None, method="groebner", cross_check=False):
    if i < 1:
        raise PreconditionError("homological degree must be at least 1")
    if f is not None and f != lc.field:
        raise PreconditionError("field does not match the complex")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    verdict = _vanishes_strands(lc, i) if method == "strands" else _vanishes_groebner(lc, i)
    if cross_check:
        other = _vanishes_groebner(lc, i) if method == "strands" else _vanishes_strands(lc, i)
        if other != verdict:
            raise InternalError(f"H_{i} vanishing: strand scan and Hilbert series disagree")
    return verdict


def lind_of_complex(lc, method="groebner", cross_check=False):
    for i in range(lc.length, 0, -1):
        if not linear_homology_vanishes(lc, i, method=method, cross_check=cross_check):
            return i
    return 0


def linearity_defect(
    ideal,
    f=QQ,
    method="groebner",
    cross_check=False,
    taylor_cap=DEFAULT_TAYLOR_CAP,
    long_running=False,
    resolution="lattice",
):
    """lind of a monomial ideal; 0 for the zero ideal."""
    if ideal.is_zero:
        return 0
    if len(ideal.gens) > taylor_cap and not long_running:
        raise ResourceError(
            f"{len(ideal.gens)} generators exceed the cap of {taylor_cap}; "
            "pass long_running=True (CLI: --long-running) to compute anyway"
        )
    if ideal.is_unit:
        return 0
    c = minimal_resolution(ideal, f, method=resolution, taylor_cap=max(taylor_cap, len(ideal.gens)))
    return lind_of_complex(linear_part(c), method=method, cross_check=cross_check)
