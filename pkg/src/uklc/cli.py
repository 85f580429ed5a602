"""Command line entry point.

Every subcommand prints one JSON document on standard output and a short
summary on standard error.  Graph files number vertices from 1; JSON files
and reports number them from 0.

Exit status: 0 when the analysis completed (whatever the verdict), 2 for
usage or input errors, 3 when a budget ran out before a verdict.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from .certify import Certificate, audit_theorem5, certify, tight_equality_audit
from . import constructions, directing, io
from .errors import BudgetError, InputError
from .schemas import SCHEMAS
from .search import SearchBudget, WitnessStatus, conjecture_scan, find_witness, m_number_bounds
from .solver import Verdict, count_colorings, enumerate_colorings, uniqueness

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

_EPILOG = "Graph files: 'p <n> <m>' then 'e <u> <v>' lines, vertices 1..n. " \
          "JSON lists/colorings index vertices from 0."


class _Run:
    def __init__(self, argv):
        self.argv = list(argv)
        self.inputs = []
        self.budgets = {}
        self.start = time.monotonic()

    def track(self, path):
        if path is None:
            return None
        try:
            digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        except OSError:
            digest = ""
        self.inputs.append({"path": str(path), "sha256": digest})
        return path

    def report(self, verdicts: dict) -> dict:
        out = dict(verdicts)
        out["run"] = {
            "command": self.argv,
            "inputs": self.inputs,
            "wall_time": round(time.monotonic() - self.start, 6),
            "budgets": self.budgets,
        }
        return out


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj))


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(run, args):
    return io.read_graph(run.track(args.graph), run.track(getattr(args, "meta", None)))


def _budget(run, args) -> SearchBudget:
    budget = SearchBudget(
        color_budget=args.t,
        node_budget=int(float(args.nodes)),
        time_budget=math.inf if args.time is None else float(args.time),
    )
    run.budgets = budget.to_json() | {"jobs": args.jobs}
    return budget


# --------------------------------------------------------------------------
# subcommands


def cmd_solve(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    run.budgets = {"cap": args.cap}
    found, exhausted = enumerate_colorings(G, L, args.cap)
    _say(f"{len(found)} coloring(s){'' if exhausted else ' (cap reached)'}")
    return run.report({"colorings": [list(c) for c in found], "count": len(found),
                       "exhausted": exhausted}), EXIT_OK


def cmd_unique(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    u = uniqueness(G, L)
    _say(f"verdict: {u.verdict.value}")
    out = {"verdict": u.verdict.value,
           "coloring": list(u.coloring) if u.coloring is not None else None}
    if u.verdict is Verdict.MULTIPLE:
        out["colorings"] = [list(c) for c in u.colorings]
    return run.report(out), EXIT_OK


def cmd_count(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    run.budgets = {"cap": args.cap}
    count = count_colorings(G, L, args.cap)
    saturated = args.cap is not None and count >= args.cap
    _say(f"{count}{'+' if saturated else ''} coloring(s)")
    return run.report({"count": count, "saturated": saturated}), EXIT_OK


def cmd_direct(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    if args.coloring is not None:
        c = io.read_coloring(run.track(args.coloring), G.n)
    else:
        found, _ = enumerate_colorings(G, L, cap=1)
        if not found:
            raise InputError("the lists admit no proper coloring to direct")
        c = found[0]
    state = directing.run_directing(G, L, c)
    both = directing.bidirectional_edges(state)
    violations = directing.lemma2_violations(state, G, L, c)
    alternate = None
    if both:
        alternate = directing.extract_alternate_coloring(G, L, c, state, both[0])
    elif violations:
        alternate = directing.extract_alternate_coloring(G, L, c, state, violations[0])
    flow = None
    k = len(L[0]) if G.n else 0
    if not both and G.n and L.uniform_size(k):
        flow = directing.flow_report(state, G, L, c, k).to_json()
    _say(f"{len(both)} bidirectional edge(s), {len(violations)} deficit(s)")
    return run.report({
        "coloring": list(c),
        "orientation": state.to_json(),
        "bidirectional": [list(e) for e in both],
        "violations": [list(v) for v in violations],
        "alternate_coloring": list(alternate) if alternate is not None else None,
        "flow": flow,
    }), EXIT_OK


def _read_induced(run, path):
    if path is None:
        return ()
    data = io._read_json(run.track(path))
    entries = data if isinstance(data, list) else [data]
    out = []
    for e in entries:
        try:
            out.append((e["H_vertices"], int(e["inner_k"]), int(e["l"]),
                        Certificate.from_json(e["certificate"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise io.FileFormatError(path, None, f"bad induced entry: {exc}") from None
    return out


def cmd_certify(run, args):
    G = _load_graph(run, args)
    induced = _read_induced(run, args.induced)
    result = certify(G, args.k, collect_all=args.all, induced=induced)
    c = result.certificate
    _say(f"{c.rule.value}: {c.conclusion}" if c else "no certificate")
    return run.report(result.to_json()), EXIT_OK


def cmd_mnumber(run, args):
    G = _load_graph(run, args)
    bounds = m_number_bounds(G, _budget(run, args), jobs=args.jobs,
                             induced=_read_induced(run, getattr(args, "induced", None)))
    _say(f"{bounds.m_lower} <= m(G) <= {bounds.m_upper}")
    return run.report({"bounds": bounds.to_json()}), EXIT_OK


def cmd_witness(run, args):
    G = _load_graph(run, args)
    res = find_witness(G, args.k, _budget(run, args), jobs=args.jobs)
    _say(f"{res.status.value} after {res.nodes} node(s), t={res.t}")
    code = EXIT_BUDGET if res.status is WitnessStatus.BUDGET_EXCEEDED else EXIT_OK
    return run.report({"witness": res.to_json()}), code


def cmd_conjecture(run, args):
    budget = _budget(run, args)
    paths = []
    for item in args.stream:
        p = Path(item)
        if p.is_dir():
            paths.extend(io.iter_graph_files(p))
        elif p.exists():
            paths.append(p)
        else:
            raise io.FileFormatError(p, None, "no such file or directory")
    for p in paths:
        run.track(p)
    report = conjecture_scan(args.k, paths, budget, jobs=args.jobs)
    _say(f"{report.at_boundary} at boundary, {len(report.counterexamples)} counterexample(s)")
    return run.report({"scan": report.to_json()}), EXIT_OK


_GEN_ARGS = {
    "complete": ("n",), "bipartite": ("a", "b"), "cycle": ("n",), "path": ("n",),
    "complement-c6": (), "diamond": (), "petersen": (), "T": ("k", "n"),
    "gadget": ("k", "n"), "strip": ("n",), "hn": ("n",), "figure1": ("m",),
}


def cmd_gen(run, args):
    params = []
    for name in _GEN_ARGS[args.family]:
        value = getattr(args, name)
        if value is None:
            raise InputError(f"family {args.family!r} needs -{name}")
        params.append(value)
    inst = constructions.FAMILIES[args.family](*params)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    files = [out / "graph.col", out / "graph.meta.json"]
    io.write_graph(inst.graph, files[0], files[1])
    if inst.lists is not None:
        files.append(out / "lists.json")
        io.write_json(io.lists_to_json(inst.lists), files[-1])
    if inst.predicted_coloring is not None:
        files.append(out / "coloring.json")
        io.write_json(io.coloring_to_json(inst.predicted_coloring), files[-1])
    claims = inst.claims_json()
    if args.check:
        claims["claims"] = constructions.check_claims(inst)
    files.append(out / "claims.json")
    io.write_json(claims, files[-1])
    _say(f"{inst.family}: n={inst.graph.n}, m={inst.graph.m} -> {out}")
    return run.report({"family": inst.family, "files": [str(f) for f in files],
                       "claims": claims["claims"]}), EXIT_OK


def cmd_audit_tight(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    c = io.read_coloring(run.track(args.coloring), G.n)
    report = tight_equality_audit(G, L, c)
    rows = [{"color": t, "lhs": r.lhs, "rhs": r.rhs, "b_t": r.b_t, "d_t": r.d_t,
             "equal": r.equal} for t, r in sorted(report.items())]
    _say(f"{sum(r['equal'] for r in rows)}/{len(rows)} colour(s) balanced")
    return run.report({"colors": rows}), EXIT_OK


def cmd_audit_t5(run, args):
    G = _load_graph(run, args)
    L = io.read_lists(run.track(args.lists), G.n)
    audit = audit_theorem5(G, L)
    _say(f"count {audit.count} vs bound {audit.bound}: "
         f"{'ok' if audit.satisfied else 'VIOLATED'}")
    return run.report(audit.to_json()), EXIT_OK


# --------------------------------------------------------------------------
# parser


def _graph_args(p, meta=True):
    p.add_argument("graph", help="graph file ('p'/'e' lines, 1-based)")
    if meta:
        p.add_argument("--meta", help="metadata sidecar JSON (planar, outerplanar, euler_genus)")


def _budget_args(p):
    p.add_argument("-t", type=int, default=None, help="colour budget (default depends on k)")
    p.add_argument("--nodes", default="1e7", help="search node budget (default 1e7)")
    p.add_argument("--time", default=None, help="wall-clock budget in seconds")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uklc", description=__doc__.splitlines()[0],
                                     epilog=_EPILOG)
    parser.add_argument("--schema", action="store_true", help="print the JSON schemas and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("solve", help="enumerate proper list colorings", epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("unique", help="decide whether the coloring is unique", epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("count", help="count colorings (saturating)", epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("direct", help="run the directing procedure", epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.add_argument("coloring", nargs="?", help="defaults to the least proper coloring")
    p.set_defaults(func=cmd_direct)

    p = sub.add_parser("certify", help="certify property M(k)", epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="collect every applicable rule")
    p.add_argument("--induced", help="JSON with H_vertices, inner_k, l, certificate")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("mnumber", help="bound the m-number", epilog=_EPILOG)
    _graph_args(p)
    _budget_args(p)
    p.add_argument("--induced", help="JSON with H_vertices, inner_k, l, certificate")
    p.set_defaults(func=cmd_mnumber)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family", choices=sorted(_GEN_ARGS))
    for name in ("k", "n", "a", "b", "m"):
        p.add_argument(f"-{name}", type=int)
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--check", action="store_true", help="verify claims with the solver")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="witness search, m-number, boundary scan")
    ssub = p.add_subparsers(dest="search_command", required=True)
    q = ssub.add_parser("witness", help="find a unique k-list assignment", epilog=_EPILOG)
    q.add_argument("-k", type=int, required=True)
    _budget_args(q)
    _graph_args(q)
    q.set_defaults(func=cmd_witness)
    q = ssub.add_parser("mnumber", help="bound the m-number", epilog=_EPILOG)
    _budget_args(q)
    _graph_args(q)
    q.set_defaults(func=cmd_mnumber)
    q = ssub.add_parser("conjecture", help="scan graphs of average degree 2k-2")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("--stream", nargs="+", required=True, help="graph files or directories")
    _budget_args(q)
    q.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("audit-tight", help="per-colour balance at the degree boundary",
                       epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_audit_tight)

    p = sub.add_parser("audit-t5", help="coloring-count bound for regular graphs",
                       epilog=_EPILOG)
    _graph_args(p)
    p.add_argument("lists")
    p.set_defaults(func=cmd_audit_t5)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if args.schema:
        _emit(SCHEMAS)
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    run = _Run(["uklc"] + argv)
    try:
        report, code = args.func(run, args)
    except BudgetError as exc:
        _say(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except (InputError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
