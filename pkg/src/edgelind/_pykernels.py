"""Pure-Python twins of the compiled kernels in ``_ckernels.pyx``."""


def _eliminate(rows, ncols, p, full):
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        if inv != 1:
            prow = rows[r] = [x * inv % p for x in prow]
        start = 0 if full else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return r, pivots


def _rows_mod(a, p):
    return [[int(x) % p for x in row] for row in (a.tolist() if hasattr(a, "tolist") else a)]


def rank_mod_p(a, p):
    rows = _rows_mod(a, p)
    if not rows or not rows[0]:
        return 0
    return _eliminate(rows, len(rows[0]), p, False)[0]


def rref_mod_p(a, p):
    import numpy as np

    rows = _rows_mod(a, p)
    if not rows or not rows[0]:
        return np.array(a, dtype=np.int64), []
    _, pivots = _eliminate(rows, len(rows[0]), p, True)
    return np.array(rows, dtype=np.int64), pivots


def is_max_canonical(adj, n):
    perm = [0] * n

    def dfs(k, used):
        if k == n:
            return True
        target = adj[k]
        for v in range(n):
            if used >> v & 1:
                continue
            cmp = 0
            for i in range(k):
                b = adj[perm[i]] >> v & 1
                t = target >> i & 1
                if b != t:
                    cmp = 1 if b > t else -1
                    break
            if cmp > 0:
                return False
            if cmp == 0:
                perm[k] = v
                if not dfs(k + 1, used | 1 << v):
                    return False
        return True

    return dfs(0, 0)


def fold_reduce(adj, mask):
    n = len(adj)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not mask >> v & 1:
                continue
            nv = adj[v] & mask
            for u in range(n):
                if u == v or not mask >> u & 1:
                    continue
                if adj[u] & mask & ~nv == 0:
                    mask &= ~(1 << v)
                    changed = True
                    break
            if changed:
                break
    return mask
