"""Command-line interface: ``edgelind <command> ...``.

Exit codes: 0 success, 1 counterexample or failed split, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import graph as gr
from . import monomials as mono
from .errors import DomainError, InputError, PreconditionError, ResourceError
from .hochster import hochster_betti
from .lind import linearity_defect
from .linalg import FieldSpec
from .resolution import DEFAULT_TAYLOR_CAP, betti_entries, projective_dimension, regularity
from .splitting import betti_of, is_betti_splitting, y_partition_splitting
from .verify import EXPERIMENTAL, THEOREMS, verify

SCHEMA = 1


class _Progress:
    def __init__(self, enabled):
        self.enabled = enabled
        self.t0 = time.time()

    def __call__(self, msg):
        if self.enabled:
            print(f"[{time.time() - self.t0:7.1f}s] {msg}", file=sys.stderr, flush=True)


def _fields(args):
    chars = args.char if args.char else [0]
    return [FieldSpec(int(c)) for c in chars]


def _load_input(args):
    """(graph or None, ideal, variable names) from --ideal or a graph file."""
    if getattr(args, "ideal", None):
        variables = args.vars.split(",") if args.vars else None
        ideal, names = mono.parse_ideal(args.ideal, variables)
        return None, ideal, names
    path = getattr(args, "graph", None) or getattr(args, "input", None)
    if not path:
        raise InputError("give a graph file or --ideal")
    try:
        g = gr.read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return g, mono.edge_ideal(g), mono.default_variables(g.n)


def _betti(g, ideal, f):
    if g is not None:
        return hochster_betti(g, f)
    return betti_of(ideal, f)


def _lind_or_skip(ideal, f, args, progress):
    try:
        progress(f"linearity defect over {f.label}")
        return linearity_defect(ideal, f, taylor_cap=args.taylor_cap, long_running=args.long_running)
    except ResourceError as exc:
        return f"skipped: above Taylor cap ({exc})"


def _graph_invariants(g):
    out = {
        "n": g.n,
        "edges": g.num_edges,
        "chordal": gr.is_chordal(g),
        "weakly_chordal": gr.is_weakly_chordal(g),
        "co_chordal": gr.is_cochordal(g),
        "connected": gr.is_connected(g),
        "inmat": gr.induced_matching_number(g),
        "d": gr.d_invariant(g)[0] if g.num_edges else None,
        "co_two_pairs": [list(e) for e in gr.co_two_pairs(g)],
    }
    return out


def _emit(args, obj, text):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True))
    else:
        sys.stdout.write(text)


def _text_block(d, order=None):
    keys = order or list(d)
    return "".join(f"{k}: {d[k]}\n" for k in keys if k in d)


def cmd_analyze(args):
    g, ideal, names = _load_input(args)
    progress = _Progress(args.long_running)
    reports = []
    text = []
    base = _graph_invariants(g) if g is not None else {"nvars": ideal.nvars, "generators": len(ideal.gens)}
    text.append(_text_block(base))
    for f in _fields(args):
        progress(f"Betti numbers over {f.label}")
        t = _betti(g, ideal, f)
        entry = {"field": f.label, "betti": betti_entries(t)}
        if t.graded:
            entry["reg"] = regularity(t)
            entry["pd"] = projective_dimension(t)
        entry["lind"] = _lind_or_skip(ideal, f, args, progress)
        reports.append(entry)
        text.append(f"-- over {f.label}\n")
        text.append(t.to_text())
        text.append(_text_block(entry, ["reg", "pd", "lind"]))
    _emit(args, {"invariants": base, "fields": reports}, "".join(text))
    return 0


def cmd_betti(args):
    g, ideal, _ = _load_input(args)
    out = []
    text = []
    for f in _fields(args):
        t = _betti(g, ideal, f)
        out.append({"field": f.label, "entries": betti_entries(t)})
        text.append(f"-- over {f.label}\n" + t.to_text())
    _emit(args, {"tables": out}, "".join(text))
    return 0


def cmd_lind(args):
    _, ideal, _ = _load_input(args)
    progress = _Progress(args.long_running)
    out = []
    for f in _fields(args):
        progress(f"linearity defect over {f.label}")
        ld = linearity_defect(ideal, f, taylor_cap=args.taylor_cap, long_running=args.long_running)
        out.append({"field": f.label, "lind": ld})
    _emit(args, {"lind": out}, "".join(f"lind over {o['field']}: {o['lind']}\n" for o in out))
    return 0


def cmd_invariants(args):
    g, _, _ = _load_input(args)
    if g is None:
        raise InputError("graph invariants need a graph file")
    inv = _graph_invariants(g)
    _emit(args, {"invariants": inv}, _text_block(inv))
    return 0


def cmd_verify(args):
    chars = args.char if args.char else [0, 2]
    status = 0
    checks = []
    for p in chars:
        progress = _Progress(args.long_running)
        progress(f"{args.theorem} over char {p}")
        c = verify(args.theorem, args.max_vertices, FieldSpec(int(p)), args.connected, args.workers)
        checks.append(c)
        if not c.passed:
            status = 1
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "checks": [c.to_dict() for c in checks]}, sort_keys=True))
    else:
        for c in checks:
            sys.stdout.write(c.to_text())
    return status


def _parse_edge_items(items, g):
    edges = []
    for item in items:
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise InputError(f"bad edge {item!r} in --split (use u-v)") from None
        if not g.has_edge(u, v):
            raise InputError(f"{item} is not an edge of the graph")
        edges.append((u, v))
    return edges


def cmd_split_check(args):
    g, ideal, names = _load_input(args)
    if not args.split or ":" not in args.split:
        raise InputError("--split needs LABEL:items, e.g. U:0-5,0-1 or var:3")
    label, items = args.split.split(":", 1)
    reports = []
    for f in _fields(args):
        if label == "var":
            try:
                v = int(items) if items.isdigit() else names.index(items)
            except ValueError:
                raise InputError(f"unknown variable {items!r}") from None
            rep = y_partition_splitting(ideal, v, f)
        else:
            if g is not None:
                part = _parse_edge_items([s for s in items.split(",") if s], g)
                J = mono.edge_ideal(gr.Graph.from_edges(g.n, part))
            else:
                J, _ = mono.parse_ideal(items.replace(";", ","), names)
            K = mono.MonomialIdeal(ideal.nvars, tuple(x for x in ideal.gens if x not in set(J.gens)))
            rep = is_betti_splitting(ideal, J, K, f, label=label)
        reports.append(rep)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            sys.stdout.write(r.to_text())
    return 0 if all(r.is_splitting for r in reports) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", action="append", help="field characteristic, 0 or a prime (repeatable)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--taylor-cap", type=int, default=DEFAULT_TAYLOR_CAP)
    common.add_argument("--long-running", action="store_true", help="compute beyond the cap; progress on stderr")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("input", nargs="?", help="graph file (edge list or JSON)")
    inputs.add_argument("--graph", help="graph file (alternative to the positional argument)")
    inputs.add_argument("--ideal", help='monomial ideal literal, e.g. "x1*x2, x1^2"')
    inputs.add_argument("--vars", help="comma-separated variable names for --ideal")

    p = argparse.ArgumentParser(prog="edgelind", description="Homological invariants of edge ideals.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
        ("analyze", cmd_analyze, "graph invariants, Betti table, reg, pd and lind"),
        ("betti", cmd_betti, "graded Betti table"),
        ("lind", cmd_lind, "linearity defect"),
        ("invariants", cmd_invariants, "graph-theoretic invariants only"),
    ):
        sp = sub.add_parser(name, parents=[common, inputs], help=helptext)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("verify", parents=[common], help="exhaustive theorem check")
    sp.add_argument("theorem", choices=THEOREMS + EXPERIMENTAL)
    sp.add_argument("--max-vertices", type=int, default=6)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("split-check", parents=[common, inputs], help="test a decomposition I = J + K")
    sp.add_argument("--split", required=True, help="LABEL:u-v,... (edges of J), LABEL:m1;m2 (ideal), or var:<v>")
    sp.set_defaults(func=cmd_split_check)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
