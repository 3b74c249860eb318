"""Monomials as exponent tuples and monomial ideals by their minimal generators."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import InputError

Multidegree = tuple  # tuple[int, ...] of nonnegative exponents


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def quotient(a, b):
    """a / b for b dividing a."""
    return tuple(x - y for x, y in zip(a, b))


def degree(a):
    return sum(a)


def is_squarefree_monomial(a):
    return all(x <= 1 for x in a)


def support_mask(a):
    """Bitmask of the variables occurring in a."""
    mask = 0
    for i, x in enumerate(a):
        if x:
            mask |= 1 << i
    return mask


def from_mask(mask, nvars):
    return tuple(mask >> i & 1 for i in range(nvars))


def variable(i, nvars):
    return tuple(1 if j == i else 0 for j in range(nvars))


def monomials_of_degree(nvars, d):
    """All exponent vectors of total degree d, in lex-descending order."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple  # minimal generators, lex-sorted

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars or any(x < 0 for x in g):
                raise InputError(f"bad exponent vector {g} for {self.nvars} variables")

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return any(degree(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self):
        return all(is_squarefree_monomial(g) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def contains(self, m):
        return any(divides(g, m) for g in self.gens)

    def generator_degrees(self):
        return sorted(degree(g) for g in self.gens)

    def __str__(self):
        return format_ideal(self)


def minimalize(gens, nvars):
    """Deduplicated, divisibility-reduced, lex-sorted generating set."""
    uniq = sorted({tuple(g) for g in gens}, key=lambda g: (degree(g), g))
    kept = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(nvars, tuple(sorted(kept)))


def zero_ideal(nvars):
    return MonomialIdeal(nvars, ())


def unit_ideal(nvars):
    return MonomialIdeal(nvars, ((0,) * nvars,))


def edge_ideal(g):
    return minimalize([from_mask(1 << u | 1 << v, g.n) for u, v in g.edges()], g.n)


def _same_ambient(a, b):
    if a.nvars != b.nvars:
        raise InputError(f"ambient mismatch: {a.nvars} vs {b.nvars} variables")


def ideal_sum(a, b):
    _same_ambient(a, b)
    return minimalize(a.gens + b.gens, a.nvars)


def intersect(a, b):
    _same_ambient(a, b)
    return minimalize([lcm(g, h) for g in a.gens for h in b.gens], a.nvars)


def product_by_monomial(a, m):
    return minimalize([mul(g, m) for g in a.gens], a.nvars)


def colon(a, m):
    """(a : m) = (g / gcd(g, m) for g in G(a))."""
    if len(m) != a.nvars:
        raise InputError("monomial and ideal live in different rings")
    return minimalize([quotient(g, gcd(g, m)) for g in a.gens], a.nvars)


def variable_partition(a, v):
    """The x_v-partition a = J + x_v L: J from generators free of x_v, L = rest / x_v."""
    xv = variable(v, a.nvars)
    j = [g for g in a.gens if g[v] == 0]
    rest = [quotient(g, xv) for g in a.gens if g[v] > 0]
    return MonomialIdeal(a.nvars, tuple(j)), minimalize(rest, a.nvars)


def degree_part(a, d):
    """The ideal generated by the degree-d monomials of a."""
    out = set()
    for g in a.gens:
        k = d - degree(g)
        if k < 0:
            continue
        for m in monomials_of_degree(a.nvars, k):
            out.add(mul(g, m))
    return minimalize(out, a.nvars)


def restrict_to(a, m):
    """Sub-ideal generated by the generators dividing m."""
    return MonomialIdeal(a.nvars, tuple(g for g in a.gens if divides(g, m)))


def lcm_lattice(gens):
    """All lcms of nonempty subsets of ``gens`` (closure under pairwise lcm)."""
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                c = lcm(a, g)
                if c not in lattice:
                    new.add(c)
        lattice |= new
        frontier = new
    return lattice


def mask_lattice(masks):
    """Closure of ``masks`` under union: the lcm lattice of squarefree generators."""
    masks = set(masks)
    lattice = set(masks)
    frontier = set(masks)
    while frontier:
        new = {a | m for a in frontier for m in masks} - lattice
        lattice |= new
        frontier = new
    return lattice


def dim_in_degree(a, d):
    """Number of degree-d monomials in a."""
    return sum(1 for m in monomials_of_degree(a.nvars, d) if a.contains(m))


# -- literal format --------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def default_variables(nvars, prefix="x", start=0):
    return [f"{prefix}{i + start}" for i in range(nvars)]


def _natural_key(name):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def parse_ideal(text, variables=None):
    """Parse "x1*x2, x1^2*x6" over ``variables`` (inferred in natural order when omitted).

    Returns (ideal, variables). Coefficients are rejected; "1" is the unit monomial.
    """
    chunks = [c.strip() for c in text.replace("\n", ",").split(",")]
    chunks = [c for c in chunks if c]
    parsed = []
    names = set()
    for chunk in chunks:
        factors = []
        for tok in (t.strip() for t in chunk.split("*")):
            if tok == "1":
                continue
            mt = _TOKEN.match(tok)
            if not mt:
                if re.fullmatch(r"[-+]?\d+(?:/\d+)?", tok):
                    raise InputError(f"coefficients are not allowed: {chunk!r}")
                raise InputError(f"cannot parse factor {tok!r} in {chunk!r}")
            factors.append((mt.group(1), int(mt.group(2) or 1)))
            names.add(mt.group(1))
        parsed.append(factors)
    if variables is None:
        variables = sorted(names, key=_natural_key)
    variables = list(variables)
    index = {name: i for i, name in enumerate(variables)}
    gens = []
    for factors in parsed:
        exp = [0] * len(variables)
        for name, e in factors:
            if name not in index:
                raise InputError(f"undeclared variable {name!r}")
            exp[index[name]] += e
        gens.append(tuple(exp))
    return minimalize(gens, len(variables)), variables


def format_monomial(m, variables=None):
    variables = variables or default_variables(len(m))
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_ideal(a, variables=None):
    if a.is_zero:
        return "0"
    return ", ".join(format_monomial(g, variables) for g in a.gens)


def squarefree_subsets(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def combinations_masks(n, k):
    for combo in itertools.combinations(range(n), k):
        yield sum(1 << i for i in combo)
