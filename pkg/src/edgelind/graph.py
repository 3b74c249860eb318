"""Finite simple graphs on vertices 0..n-1 stored as neighbour bitmasks.

Recognition (chordal, weakly chordal), induced matchings, two-pairs, Kimura's
d(G), isomorphism-class enumeration for n <= 8, and the two graph file formats.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

from . import kernels
from .errors import DomainError, InputError, InternalError, PreconditionError


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length must equal the vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise InputError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise InputError(f"loop at vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {{{u},{v}}} outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def edges(self):
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self):
        return sum(_popcount(a) for a in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return list(_bits(self.adj[v]))

    def degree(self, v):
        return _popcount(self.adj[v])

    def delete_edge(self, u, v):
        """G minus the edge uv (same vertex set)."""
        if not self.has_edge(u, v):
            raise InputError(f"{{{u},{v}}} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm):
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors ---------------------------------------------------------------


def cycle(m):
    if m < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path(m):
    """P_m: m vertices, m-1 edges."""
    if m < 1:
        raise InputError("a path needs at least 1 vertex")
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def anticycle(m):
    return complement(cycle(m))


def matching_graph(g):
    """gK2 on vertices 0..2g-1 with edges {2i, 2i+1}."""
    return Graph.from_edges(2 * g, [(2 * i, 2 * i + 1) for i in range(g)])


def complete_graph(m):
    return Graph.from_edges(m, itertools.combinations(range(m), 2))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g, h):
    shifted = [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, g.edges() + shifted)


# -- basic operations -----------------------------------------------------------


def complement(g):
    full = g.full_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def induced_subgraph(g, vs):
    """Induced subgraph on ``vs`` (reindexed 0..k-1 in sorted order) and the index map."""
    vs = sorted(set(vs))
    for v in vs:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vs), edges), vs


def _is_clique_mask(g, mask):
    return all((g.adj[u] | 1 << u) & mask == mask for u in _bits(mask))


def is_clique(g):
    return _is_clique_mask(g, g.full_mask)


def components(g, mask=None):
    """Connected components of the subgraph induced on ``mask``, as bitmasks."""
    mask = g.full_mask if mask is None else mask
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        mask &= ~comp
    return comps


def is_connected(g):
    return g.n <= 1 or len(components(g)) == 1


def is_forest(g):
    return g.num_edges == g.n - len(components(g))


# -- chordality -----------------------------------------------------------------


def is_chordal(g):
    """Simplicial-vertex peeling: succeeds iff g has a perfect elimination ordering."""
    remaining = g.full_mask
    while remaining:
        for v in _bits(remaining):
            if _is_clique_mask(g, g.adj[v] & remaining):
                remaining &= ~(1 << v)
                break
        else:
            return False
    return True


def find_induced_cycle(g, min_length):
    """An induced cycle with at least ``min_length`` vertices (as a vertex list), or None."""
    adj = g.adj

    def extend(path_, interior, start):
        last = path_[-1]
        # candidates: neighbours of last, larger than start, off the path, no chord to the interior
        for v in _bits(adj[last] & ~((2 << start) - 1)):
            if v in path_ or adj[v] & interior:
                continue
            if adj[v] >> start & 1:
                if len(path_) + 1 >= min_length and len(path_) >= 2:
                    return path_ + [v]
                continue
            found = extend(path_ + [v], interior | 1 << last if len(path_) > 1 else interior, start)
            if found:
                return found
        return None

    for s in range(g.n):
        for first in _bits(adj[s] & ~((2 << s) - 1)):
            found = extend([s, first], 0, s)
            if found:
                return found
    return None


def is_chordal_bruteforce(g):
    return find_induced_cycle(g, 4) is None


def is_weakly_chordal(g):
    """No induced cycle of length >= 5 in g or in its complement."""
    return find_induced_cycle(g, 5) is None and find_induced_cycle(complement(g), 5) is None


def is_cochordal(g):
    return is_chordal(complement(g))


# -- induced matchings ----------------------------------------------------------


def is_induced_matching(g, edges):
    verts = 0
    for u, v in edges:
        if not g.has_edge(u, v) or (verts >> u & 1) or (verts >> v & 1):
            return False
        verts |= 1 << u | 1 << v
    return sum(_popcount(g.adj[u] & verts) for u in _bits(verts)) == 2 * len(edges)


def maximum_induced_matching(g):
    """Branch and bound over the edge list; returns one maximum induced matching."""
    edges = g.edges()
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    best = []

    def rec(i, blocked, chosen):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        free = g.full_mask & ~blocked
        if len(chosen) + _popcount(free) // 2 <= len(best):
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            chosen.append((u, v))
            rec(j + 1, blocked | closed[u] | closed[v], chosen)
            chosen.pop()
            # excluding edge j: later branches skip it
            free = g.full_mask & ~blocked
            if len(chosen) + _popcount(free) // 2 <= len(best):
                return

    rec(0, 0, [])
    return best


def induced_matching_number(g):
    return len(maximum_induced_matching(g))


def induced_matchings(g):
    """All nonempty induced matchings (as tuples of edges in edge-list order)."""
    edges = g.edges()
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    out = []

    def rec(i, blocked, chosen):
        for j in range(i, len(edges)):
            u, v = edges[j]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            chosen.append((u, v))
            out.append(tuple(chosen))
            rec(j + 1, blocked | closed[u] | closed[v], chosen)
            chosen.pop()

    rec(0, 0, [])
    return out


# -- two-pairs ------------------------------------------------------------------


def induced_paths(g, x, y):
    """All induced x-y paths, each as a vertex list from x to y."""
    adj = g.adj
    out = []

    def extend(path_, onpath, interior):
        last = path_[-1]
        for v in _bits(adj[last] & ~onpath):
            if adj[v] & interior:
                continue
            if v == y:
                out.append(path_ + [v])
                continue
            if adj[v] >> y & 1:
                # y is the only possible continuation
                if not adj[y] & (interior | 1 << last):
                    out.append(path_ + [v, y])
                continue
            extend(path_ + [v], onpath | 1 << v, interior | 1 << last)

    if x == y:
        return [[x]]
    extend([x], 1 << x, 0)
    return out


def _is_two_pair_paths(g, x, y):
    if g.has_edge(x, y):
        return False
    return all(len(p) == 3 for p in induced_paths(g, x, y))


def _is_two_pair_cut(g, x, y):
    if g.has_edge(x, y):
        return False
    common = g.adj[x] & g.adj[y]
    keep = g.full_mask & ~common
    for comp in components(g, keep):
        if comp >> x & 1:
            return not comp >> y & 1
    raise InternalError("vertex missing from its own component")


def find_two_pairs(g, method="paths"):
    """Unordered nonadjacent pairs (x, y), x < y, all of whose induced paths have length 2.

    ``method="paths"`` enumerates induced paths (the definition);
    ``method="cut"`` tests whether x and y are separated once their common
    neighbours are removed. Pairs in different components qualify vacuously.
    """
    test = {"paths": _is_two_pair_paths, "cut": _is_two_pair_cut}[method]
    return [(x, y) for x, y in itertools.combinations(range(g.n), 2) if test(g, x, y)]


def co_two_pairs(g, method="paths"):
    return find_two_pairs(complement(g), method)


def is_co_two_pair(g, u, v):
    return g.has_edge(u, v) and _is_two_pair_cut(complement(g), min(u, v), max(u, v))


# -- complete bipartite structures ----------------------------------------------


@dataclass(frozen=True)
class StronglyDisjointFamily:
    blocks: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    witness_matching: tuple[tuple[int, int], ...]

    def value(self):
        return sum(len(a) + len(b) for a, b in self.blocks) - len(self.blocks)

    def check(self, g):
        seen = 0
        for (a, b), (u, v) in zip(self.blocks, self.witness_matching):
            for z in a + b:
                if seen >> z & 1:
                    raise InternalError("blocks share a vertex")
                seen |= 1 << z
            if any(not g.has_edge(p, q) for p in a for q in b):
                raise InternalError("block is not complete bipartite in G")
            if not ((u in a and v in b) or (u in b and v in a)):
                raise InternalError("witness edge not inside its block")
        if not is_induced_matching(g, self.witness_matching):
            raise InternalError("witness edges are not an induced matching")
        return True


def d_invariant(g):
    """Kimura's d(G) by exhaustive search, with one maximizing family."""
    if g.num_edges == 0:
        raise DomainError("d(G) is defined only for graphs with at least one edge")
    adj = g.adj
    best_value = 0
    best_family = None
    for matching in sorted(induced_matchings(g), key=len):
        k = len(matching)
        if g.n - k <= best_value:
            continue
        used = 0
        for u, v in matching:
            used |= 1 << u | 1 << v
        others = [z for z in range(g.n) if not used >> z & 1]
        sides = [[1 << u, 1 << v] for u, v in matching]
        state = {"best": best_value, "sides": None}

        def rec(i, extra):
            if k + extra + (len(others) - i) <= state["best"]:
                return
            if i == len(others):
                state["best"] = k + extra
                state["sides"] = [list(s) for s in sides]
                return
            z = others[i]
            for blk in sides:
                for s in (0, 1):
                    if blk[1 - s] & ~adj[z] == 0:
                        blk[s] |= 1 << z
                        rec(i + 1, extra + 1)
                        blk[s] &= ~(1 << z)
            rec(i + 1, extra)

        rec(0, 0)
        if state["sides"] is not None and state["best"] > best_value:
            best_value = state["best"]
            best_family = StronglyDisjointFamily(
                tuple((tuple(_bits(a)), tuple(_bits(b))) for a, b in state["sides"]),
                tuple(matching),
            )
    return best_value, best_family


def bipartite_span_of_co_two_pair(g, e):
    """Bipartition of N(x1) | N(x2) spanning a complete bipartite subgraph of g.

    Grows V1 from {x1} and V2 from {x2} by adding every z of V whose
    neighbourhood misses part of the current set, until both stabilise; the
    leftover vertices (adjacent to all of V1) join V2. The part holding x1 is
    returned first.
    """
    x1, x2 = e
    if not g.has_edge(x1, x2) or not is_co_two_pair(g, x1, x2):
        raise PreconditionError(f"{{{x1},{x2}}} is not a co-two-pair")
    adj = g.adj
    span = adj[x1] | adj[x2]
    v1, v2 = 1 << x1, 1 << x2
    while True:
        n1 = v1 | sum(1 << z for z in _bits(span) if v1 & ~adj[z])
        n2 = v2 | sum(1 << z for z in _bits(span) if v2 & ~adj[z])
        if (n1, n2) == (v1, v2):
            break
        v1, v2 = n1, n2
    v2 |= span & ~(v1 | v2)
    if v1 & v2:
        raise InternalError("bipartition parts overlap")
    for a in _bits(v1):
        if v2 & ~adj[a]:
            raise InternalError(f"span of {{{x1},{x2}}} is not complete bipartite")
    return tuple(_bits(v1)), tuple(_bits(v2))


# -- canonical forms and enumeration ---------------------------------------------


def _bit_positions(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def adjacency_key(g):
    """Adjacency string (pairs ordered column by column) read as a binary integer."""
    key = 0
    for i, j in _bit_positions(g.n):
        key = key << 1 | (g.adj[i] >> j & 1)
    return key


def canonical_form(g):
    """Relabelling of g with lexicographically minimal adjacency string.

    Searches vertex permutations position by position, pruning every prefix
    that already exceeds the best string seen.
    """
    n = g.n
    if n <= 1:
        return g
    adj = g.adj
    best = None
    best_perm = None
    perm = []

    def rec(used, segs):
        nonlocal best, best_perm
        k = len(perm)
        if k == n:
            if best is None or segs < best:
                best, best_perm = list(segs), list(perm)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            seg = tuple(adj[perm[i]] >> v & 1 for i in range(k))
            cand = segs + [seg]
            if best is not None and cand > best[: k + 1]:
                continue
            perm.append(v)
            rec(used | 1 << v, cand)
            perm.pop()

    rec(0, [])
    inverse = [0] * n
    for pos, v in enumerate(best_perm):
        inverse[v] = pos
    return g.relabel(inverse)


def is_isomorphic(g, h):
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g):
    """Brute force over all n! permutations."""
    edges = set(g.edges())
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            count += 1
    return count


def enumerate_graphs(n, connected_only=False):
    """One lexicographically-minimal representative per isomorphism class on n vertices.

    Orderly generation: graphs whose complement is maximal among its
    relabellings are grown one edge at a time past their last edge (deleting
    the last edge of a maximal string keeps it maximal, so each class appears
    once). Output is sorted by (edge count, adjacency key).
    """
    if not 1 <= n <= 8:
        raise InputError(f"n must be between 1 and 8, got {n}")
    positions = _bit_positions(n)
    found = []

    def grow(adj, last):
        found.append(tuple(adj))
        for p in range(last + 1, len(positions)):
            i, j = positions[p]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            if kernels.is_max_canonical(adj, n):
                grow(adj, p)
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)

    grow([0] * n, -1)
    graphs = [complement(Graph(n, a)) for a in found]
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    graphs.sort(key=lambda g: (g.num_edges, adjacency_key(g)))
    return graphs


# -- file formats ---------------------------------------------------------------


def parse_graph_text(text):
    """Parse "u v" edge lines with an optional "n=<count>" header; '#' starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").lower().startswith("n="):
            if n is not None or edges:
                raise InputError("the n=<count> header must come first", lineno)
            try:
                n = int(line.split("=", 1)[1])
            except ValueError:
                raise InputError(f"bad vertex count {line!r}", lineno) from None
            if n < 0:
                raise InputError("negative vertex count", lineno)
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise InputError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise InputError("negative vertex index", lineno)
        if u == v:
            raise InputError(f"loop at vertex {u}", lineno)
        if n is not None and max(u, v) >= n:
            raise InputError(f"vertex {max(u, v)} outside 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def parse_graph_json(text):
    try:
        obj = json.loads(text)
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad graph JSON: {exc}") from None
    return Graph.from_edges(n, edges)


def parse_graph(text):
    return parse_graph_json(text) if text.lstrip().startswith("{") else parse_graph_text(text)


def read_graph(path):
    return parse_graph(Path(path).read_text())


def format_graph_text(g):
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def format_graph_json(g):
    return json.dumps({"n": g.n, "edges": [list(e) for e in sorted(g.edges())]})
