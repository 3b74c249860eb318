# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: dense elimination mod p, orderly-generation canonicity, fold reduction.

Every function here has a line-for-line twin in ``_pykernels.py``; the two are
checked against each other in ``tests/test_kernels.py``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t

cnp.import_array()


cdef inline int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _eliminate(int64_t[:, ::1] a, int64_t p, bint full, list pivots):
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, tmp
    for i in range(nrows):
        for j in range(ncols):
            a[i, j] %= p
            if a[i, j] < 0:
                a[i, j] += p
    for c in range(ncols):
        if r >= nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        if inv != 1:
            for j in range(c, ncols):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(nrows):
            if i == r or a[i, c] == 0:
                continue
            if not full and i < r:
                continue
            f = a[i, c]
            for j in range(c, ncols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        pivots.append(c)
        r += 1
    return r


def rank_mod_p(a, long long p):
    """Rank of an integer matrix reduced mod p. Works on a private copy."""
    cdef cnp.ndarray[int64_t, ndim=2] work = np.array(a, dtype=np.int64, order="C", copy=True)
    if work.shape[0] == 0 or work.shape[1] == 0:
        return 0
    return _eliminate(work, p, False, [])


def rref_mod_p(a, long long p):
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    cdef cnp.ndarray[int64_t, ndim=2] work = np.array(a, dtype=np.int64, order="C", copy=True)
    pivots = []
    if work.shape[0] and work.shape[1]:
        _eliminate(work, p, True, pivots)
    return work, pivots


cdef bint _canon_dfs(uint64_t* adj, int n, int k, int* perm, uint64_t used):
    cdef int v, i, b, t, cmp
    if k == n:
        return True
    for v in range(n):
        if (used >> v) & 1:
            continue
        cmp = 0
        for i in range(k):
            b = <int>((adj[perm[i]] >> v) & 1)
            t = <int>((adj[k] >> i) & 1)
            if b != t:
                cmp = 1 if b > t else -1
                break
        if cmp > 0:
            return False
        if cmp == 0:
            perm[k] = v
            if not _canon_dfs(adj, n, k + 1, perm, used | ((<uint64_t>1) << v)):
                return False
    return True


def is_max_canonical(adj, int n):
    """True iff no relabelling gives a lexicographically larger adjacency string."""
    cdef uint64_t cadj[64]
    cdef int perm[64]
    cdef int i
    if n > 64:
        raise ValueError("at most 64 vertices")
    for i in range(n):
        cadj[i] = adj[i]
    return _canon_dfs(cadj, n, 0, perm, 0)


def fold_reduce(adj, mask):
    """Repeatedly delete v when some other u has N(u) contained in N(v); returns surviving mask."""
    cdef uint64_t cadj[64]
    cdef uint64_t m = mask, nu, nv
    cdef int n = len(adj), u, v
    cdef bint changed = True
    if n > 64:
        raise ValueError("at most 64 vertices")
    for u in range(n):
        cadj[u] = adj[u]
    while changed:
        changed = False
        for v in range(n):
            if not (m >> v) & 1:
                continue
            nv = cadj[v] & m
            for u in range(n):
                if u == v or not (m >> u) & 1:
                    continue
                nu = cadj[u] & m
                if (nu & ~nv) == 0:
                    m &= ~((<uint64_t>1) << v)
                    changed = True
                    break
            if changed:
                break
    return int(m)
