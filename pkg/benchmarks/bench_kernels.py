"""Compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N] [--end-to-end]

Each row times one kernel call on the same input with both backends and
checks that the answers agree. ``--end-to-end`` also times a full
``edgelind verify`` run in a subprocess with and without EDGELIND_PURE=1.
"""

import argparse
import itertools
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from edgelind import graph as gr
from edgelind import kernels


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def random_matrix(rows, cols, p, density, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
    a[rng.random((rows, cols)) > density] = 0
    return a


def cases():
    for shape, p in (((40, 60), 2), ((120, 160), 2), ((120, 160), 32003), ((300, 300), 3)):
        a = random_matrix(*shape, p, 0.3, seed=shape[0] + p)
        yield f"rank_mod_p {shape[0]}x{shape[1]} p={p}", "rank_mod_p", (a, p)
    a = random_matrix(80, 100, 5, 0.3, seed=1)
    yield "rref_mod_p 80x100 p=5", "rref_mod_p", (a, 5)
    for n in (6, 7):
        gs = gr.enumerate_graphs(n)
        yield f"is_max_canonical x{len(gs)} (n={n})", "canon_all", gs
    graphs = [gr.complement(gr.cycle(12)), gr.path(14), gr.complete_bipartite(6, 7)]
    yield "fold_reduce all masks, 3 graphs", "fold_all", graphs


def run_case(backend, kind, arg):
    if kind == "rank_mod_p":
        a, p = arg
        return backend.rank_mod_p(a.copy(), p)
    if kind == "rref_mod_p":
        a, p = arg
        m, piv = backend.rref_mod_p(a.copy(), p)
        return (np.asarray(m) % p).tobytes(), tuple(piv)
    if kind == "canon_all":
        return [backend.is_max_canonical(list(g.adj), g.n) for g in arg]
    if kind == "fold_all":
        out = []
        for g in arg:
            adj = list(g.adj)
            for mask in itertools.islice(range(1, 1 << g.n), 0, None, 7):
                out.append(backend.fold_reduce(adj, mask))
        return out
    raise ValueError(kind)


def end_to_end(repeat):
    cmd = [sys.executable, "-m", "edgelind.cli", "verify", "froberg", "--max-vertices", "6", "--char", "2"]
    out = {}
    for label, pure in (("compiled", False), ("python", True)):
        env = dict(os.environ)
        env.pop("EDGELIND_PURE", None)
        if pure:
            env["EDGELIND_PURE"] = "1"
        times = []
        for _ in range(repeat):
            t = time.perf_counter()
            subprocess.run(cmd, env=env, check=True, capture_output=True)
            times.append(time.perf_counter() - t)
        out[label] = min(times)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args()
    if kernels.compiled_backend is None:
        sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    c, py = kernels.compiled_backend, kernels.python_backend
    print(f"{'kernel':42s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for label, kind, arg in cases():
        if run_case(c, kind, arg) != run_case(py, kind, arg):
            sys.exit(f"backends disagree on {label}")
        tc = best_of(lambda: run_case(c, kind, arg), args.repeat)
        tp = best_of(lambda: run_case(py, kind, arg), args.repeat)
        print(f"{label:42s} {tc * 1e3:8.2f}ms {tp * 1e3:8.2f}ms {tp / tc:7.1f}x")
    if args.end_to_end:
        t = end_to_end(args.repeat)
        print(f"{'verify froberg n=6 GF(2) (subprocess)':42s} {t['compiled']:9.2f}s {t['python']:9.2f}s "
              f"{t['python'] / t['compiled']:7.1f}x")


if __name__ == "__main__":
    main()
