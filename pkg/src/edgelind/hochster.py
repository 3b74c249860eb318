"""Multigraded Betti numbers of squarefree monomial ideals by Hochster's formula.

beta_{i,sigma}(I) = dim H~_{|sigma|-i-2}(Delta_sigma), where Delta is the
Stanley-Reisner complex of I (the independence complex for an edge ideal) and
Delta_sigma its restriction to sigma.

For graphs the restricted complexes are shrunk before any matrix is built:
an isolated vertex makes the complex a cone (zero homology),
a fold (N(u) subset of N(v) => drop v) keeps the homotopy type, and components
join, so the reduced Poincare polynomial factors as t * P(A) * P(B).
"""

from __future__ import annotations

from . import kernels
from . import monomials as mono
from .errors import InputError
from .graph import components
from .linalg import QQ, rank_rows
from .resolution import BettiTable

# reduced Poincare polynomials are dicts {dim: betti}; the empty complex {emptyset}
# has H~_{-1} = k


def _faces_by_dim(is_face, vertices):
    """All faces of a simplicial complex on ``vertices`` given a face predicate on masks.

    Faces are found by extending from the empty face through increasing vertices,
    which works because the complex is closed under subsets.
    """
    levels = [[0]]
    while True:
        nxt = []
        for face in levels[-1]:
            top = face.bit_length()
            for v in vertices:
                if v < top:
                    continue
                cand = face | 1 << v
                if is_face(cand):
                    nxt.append(cand)
        if not nxt:
            break
        levels.append(nxt)
    return levels  # levels[k] = faces with k vertices (dimension k-1)


def reduced_homology(levels, f=QQ):
    """{dim: rank of H~_dim} for a complex given by faces grouped by size."""
    index = [{face: n for n, face in enumerate(level)} for level in levels]
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        rows = []
        for face in levels[k]:
            row = {}
            sign = 1
            rest = face
            while rest:
                low = rest & -rest
                rest ^= low
                row[index[k - 1][face ^ low]] = sign
                sign = -sign
            rows.append(row)
        ranks[k] = rank_rows(rows, len(levels[k - 1]), f)
    out = {}
    for k, level in enumerate(levels):
        h = len(level) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


def _poly_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j + 1] = out.get(i + j + 1, 0) + x * y
    return out


class IndependenceHomology:
    """Memoized reduced homology of independence complexes of induced subgraphs."""

    def __init__(self, g, f=QQ, use_folds=True):
        self.g = g
        self.field = f
        self.use_folds = use_folds
        self.adj = list(g.adj)
        self.memo = {}

    def _is_independent(self, mask):
        adj = self.adj
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if adj[v] & mask:
                return False
            rest ^= low
        return True

    def _component(self, mask):
        if mask in self.memo:
            return self.memo[mask]
        if mask & (mask - 1) == 0:
            out = {}  # a point
        else:
            vs = [v for v in range(self.g.n) if mask >> v & 1]
            levels = _faces_by_dim(lambda m: m & ~mask == 0 and self._is_independent(m), vs)
            out = reduced_homology(levels, self.field)
        self.memo[mask] = out
        return out

    def poincare(self, mask):
        """Reduced Poincare polynomial of Ind(G[mask])."""
        if mask == 0:
            return {-1: 1}
        adj = self.adj
        rest = mask
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & mask == 0:
                return {}  # cone over an isolated vertex
            rest ^= low
        if self.use_folds:
            mask = kernels.fold_reduce(adj, mask)
        out = None
        for comp in components(self.g, mask):
            p = self._component(comp)
            if not p:
                return {}
            out = p if out is None else _poly_mul(out, p)
        return out


def hochster_betti(g, f=QQ, use_folds=True, masks=None):
    """BettiTable of I(g) by Hochster's formula."""
    hom = IndependenceHomology(g, f, use_folds)
    n = g.n
    table = {}
    it = masks if masks is not None else range(1, 1 << n)
    for mask in it:
        p = hom.poincare(mask)
        if not p:
            continue
        size = bin(mask).count("1")
        sigma = mono.from_mask(mask, n)
        for dim, h in p.items():
            i = size - dim - 2
            if i >= 0 and h:
                table[(i, sigma)] = h
    return BettiTable(f, table)


def _compress(nonfaces, sigma):
    """Relabel the vertices of ``sigma`` as 0..k-1 (order kept); returns (k, nonfaces)."""
    vs = [v for v in range(sigma.bit_length()) if sigma >> v & 1]
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for m in nonfaces:
        c = 0
        for v in vs:
            if m >> v & 1:
                c |= 1 << pos[v]
        out.append(c)
    return len(vs), tuple(sorted(out))


_HOMOLOGY_CACHE = {}
_CACHE_LIMIT = 200_000


def _restricted_homology(k, nonfaces, f):
    key = (k, nonfaces, f.characteristic)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is not None:
        return hit

    def is_face(m):
        return not any(m & n == n for n in nonfaces)

    p = reduced_homology(_faces_by_dim(is_face, range(k)), f)
    if len(_HOMOLOGY_CACHE) >= _CACHE_LIMIT:
        _HOMOLOGY_CACHE.clear()
    _HOMOLOGY_CACHE[key] = p
    return p


def squarefree_hochster_betti(ideal, f=QQ):
    """BettiTable of any squarefree monomial ideal via its Stanley-Reisner complex."""
    if not ideal.is_squarefree:
        raise InputError("Hochster's formula needs a squarefree ideal")
    n = ideal.nvars
    table = {}
    if ideal.is_zero:
        return BettiTable(f, table)
    if ideal.is_unit:
        return BettiTable(f, {(0, (0,) * n): 1})
    nonfaces = [mono.support_mask(gen) for gen in ideal.gens]
    for sigma in sorted(mono.mask_lattice(nonfaces)):
        inside = [m for m in nonfaces if m & ~sigma == 0]
        size, key = _compress(inside, sigma)
        p = _restricted_homology(size, key, f)
        for dim, h in p.items():
            i = size - dim - 2
            if i >= 0:
                table[(i, mono.from_mask(sigma, n))] = h
    return BettiTable(f, table)
