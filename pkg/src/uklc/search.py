"""Exhaustive search for uniquely k-list colorable witnesses.

The search walks k-uniform list assignments vertex by vertex in index order.
Only canonical assignments are generated: reading the sorted lists in vertex
order, colour labels first appear as 1, 2, 3, ...  Every assignment is a
relabelling of some canonical one, so nothing is lost.

A partial assignment on vertices ``0..i`` is summarised by the proper
colorings of that prefix, projected onto the prefix vertices that still have
neighbours later on (the boundary), with multiplicities capped at 2.  Two
prefix colorings that agree on the boundary extend in exactly the same ways,
so when every boundary pattern already has multiplicity 2 (or there are no
patterns) no completion can be uniquely colorable and the branch is cut.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .errors import BudgetError, InputError, InternalInconsistency
from .graph import (
    CHROMATIC_CAP,
    Graph,
    _dsatur_upper,
    average_degree,
    chromatic_number,
    min_degree,
)
from .solver import Coloring, ListAssignment, Verdict, uniqueness

__all__ = [
    "SearchBudget",
    "WitnessStatus",
    "WitnessResult",
    "MNumberBounds",
    "ScanReport",
    "canonical_lists",
    "iter_canonical_assignments",
    "default_color_budget",
    "find_witness",
    "m_number_bounds",
    "conjecture_scan",
]


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search.  ``color_budget=None`` picks a default per k."""

    color_budget: int | None = None
    node_budget: int = 10_000_000
    time_budget: float = math.inf

    def __post_init__(self):
        if self.color_budget is not None and self.color_budget < 1:
            raise InputError("color budget must be positive")
        if self.node_budget < 1:
            raise InputError("node budget must be positive")
        if not self.time_budget > 0:
            raise InputError("time budget must be positive")

    def to_json(self) -> dict:
        return {
            "color_budget": self.color_budget,
            "node_budget": self.node_budget,
            "time_budget": None if math.isinf(self.time_budget) else self.time_budget,
        }


class WitnessStatus(str, enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted_negative"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class WitnessResult:
    status: WitnessStatus
    k: int
    t: int
    nodes: int
    definitive: bool
    lists: ListAssignment | None = None
    coloring: Coloring | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "k": self.k,
            "t": self.t,
            "nodes": self.nodes,
            "definitive": self.definitive,
            "lists": None if self.lists is None else [list(s) for s in self.lists],
            "coloring": None if self.coloring is None else list(self.coloring),
        }


# --------------------------------------------------------------------------
# canonical list generation


@lru_cache(maxsize=None)
def canonical_lists(k: int, t: int, used: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Lists allowed next when colours ``1..used`` have appeared so far.

    Returns ``(list, new_used)`` pairs in lexicographic order of the list.
    Fresh colours must be exactly ``used+1, used+2, ...``.
    """
    out = []
    for fresh in range(0, min(k, t - used) + 1):
        new = tuple(range(used + 1, used + fresh + 1))
        for old in itertools.combinations(range(1, used + 1), k - fresh):
            out.append((old + new, used + fresh))
    out.sort()
    return tuple(out)


def iter_canonical_assignments(n: int, k: int, t: int) -> Iterable[ListAssignment]:
    """Every canonical k-uniform assignment over ``1..t`` (no pruning)."""

    def rec(i, used, acc):
        if i == n:
            yield ListAssignment(acc)
            return
        for lst, nu in canonical_lists(k, t, used):
            acc.append(lst)
            yield from rec(i + 1, nu, acc)
            acc.pop()

    return rec(0, 0, [])


# --------------------------------------------------------------------------
# pruned search


class _Plan:
    """Per-vertex bookkeeping for the boundary-pattern transitions."""

    def __init__(self, G: Graph):
        n = G.n
        last = [max([v] + [w for w in G.adj[v]]) for v in range(n)]
        self.n = n
        self.nbr_pos = []
        self.keep = []
        boundary: list[int] = []
        for i in range(n):
            pos = {v: p for p, v in enumerate(boundary)}
            self.nbr_pos.append(tuple(pos[w] for w in G.adj[i] if w < i))
            full = boundary + [i]
            new_boundary = [v for v in full if last[v] > i]
            self.keep.append(tuple(full.index(v) for v in new_boundary))
            boundary = new_boundary

    def step(self, i: int, state: dict, lst) -> dict | None:
        nbr_pos, keep = self.nbr_pos[i], self.keep[i]
        new: dict = {}
        for pat, mult in state.items():
            forbidden = {pat[p] for p in nbr_pos}
            for col in lst:
                if col in forbidden:
                    continue
                full = pat + (col,)
                proj = tuple(full[q] for q in keep)
                new[proj] = min(2, new.get(proj, 0) + mult)
        if not new or all(m >= 2 for m in new.values()):
            return None
        return new


class _OutOfBudget(Exception):
    pass


def _dfs(plan: _Plan, k: int, t: int, start: int, used: int, state: dict,
         acc: list, node_limit: int, deadline: float, counter: list):
    """First completion (lexicographic) whose full coloring is unique."""
    if start == plan.n:
        return list(acc) if state.get((), 0) == 1 else None
    for lst, nu in canonical_lists(k, t, used):
        counter[0] += 1
        if counter[0] > node_limit:
            raise _OutOfBudget
        if counter[0] & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfBudget
        nxt = plan.step(start, state, lst)
        if nxt is None:
            continue
        acc.append(lst)
        found = _dfs(plan, k, t, start + 1, nu, nxt, acc, node_limit, deadline, counter)
        acc.pop()
        if found is not None:
            return found
    return None


def _prefixes(plan: _Plan, k: int, t: int, depth: int) -> tuple[list, int]:
    """Surviving prefixes of the given depth, in order, and nodes spent."""
    out = []
    nodes = 0

    def rec(i, used, state, acc):
        nonlocal nodes
        if i == depth:
            out.append((tuple(acc), used, state))
            return
        for lst, nu in canonical_lists(k, t, used):
            nodes += 1
            nxt = plan.step(i, state, lst)
            if nxt is not None:
                acc.append(lst)
                rec(i + 1, nu, nxt, acc)
                acc.pop()

    rec(0, 0, {(): 1}, [])
    return out, nodes


def _prefix_depth(n: int, k: int, t: int) -> int:
    # depends only on the instance so that chunking never changes results
    depth, width = 0, 1
    while depth < min(n, 4) and width < 64:
        width *= max(1, len(canonical_lists(k, t, min(t, k * depth))))
        depth += 1
    return depth


def _run_chunk(args):
    G, k, t, depth, chunk, node_limit, deadline = args
    plan = _Plan(G)
    results = []
    for prefix, used, state in chunk:
        counter = [0]
        try:
            found = _dfs(plan, k, t, depth, used, state, list(prefix), node_limit, deadline,
                         counter)
        except _OutOfBudget:
            results.append(("budget", counter[0], None))
            return results
        if found is not None:
            results.append(("found", counter[0], found))
            return results
        results.append(("none", counter[0], None))
    return results


def default_color_budget(G: Graph, k: int) -> int:
    """Colours searched when the budget leaves ``t`` open.

    k = 2: ``max(3, chi(G))``, which settles 2-list colorability outright.
    Above the chromatic-number cap the DSATUR bound stands in for chi, which
    only enlarges the (still decisive) space.  k >= 3: ``min(n, k + 2)``,
    but never fewer than k.
    """
    if k <= 1:
        return max(k, 1)
    if k == 2:
        chi = chromatic_number(G) if G.n <= CHROMATIC_CAP else _dsatur_upper(G)
        return max(3, chi)
    return max(k, min(G.n, k + 2))


def _negative_is_definitive(G: Graph, k: int, t: int) -> bool:
    if k == 1:
        return True
    if k != 2:
        return False
    if t >= max(3, _dsatur_upper(G)):
        return True
    if G.n <= CHROMATIC_CAP:
        return t >= max(3, chromatic_number(G))
    return False


def find_witness(G: Graph, k: int, budget: SearchBudget | None = None,
                 jobs: int = 1) -> WitnessResult:
    """Search canonical k-uniform assignments over ``t`` colours for a unique one.

    Returns the lexicographically least witness, ``EXHAUSTED`` when the whole
    space was covered without one, or ``BUDGET_EXCEEDED``.  Results do not
    depend on ``jobs`` except through the wall-clock limit.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    budget = budget or SearchBudget()
    t = budget.color_budget if budget.color_budget is not None else default_color_budget(G, k)
    deadline = time.monotonic() + budget.time_budget
    if G.n == 0:
        return WitnessResult(WitnessStatus.EXHAUSTED, k, t, 0, True)

    plan = _Plan(G)
    depth = _prefix_depth(G.n, k, t)
    prefixes, spent = _prefixes(plan, k, t, depth)
    if spent > budget.node_budget:
        return WitnessResult(WitnessStatus.BUDGET_EXCEEDED, k, t, spent, False)

    chunk_size = max(1, math.ceil(len(prefixes) / max(1, jobs * 4)))
    chunks = [prefixes[i:i + chunk_size] for i in range(0, len(prefixes), chunk_size)]
    tasks = [(G, k, t, depth, chunk, budget.node_budget, deadline) for chunk in chunks]

    nodes = spent
    result: WitnessResult | None = None

    def merge(chunk_results):
        nonlocal nodes, result
        for status, used, found in chunk_results:
            nodes += used
            if nodes > budget.node_budget or status == "budget":
                result = WitnessResult(WitnessStatus.BUDGET_EXCEEDED, k, t,
                                       min(nodes, budget.node_budget), False)
                return True
            if status == "found":
                result = _confirm(G, k, t, nodes, found)
                return True
        return False

    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            remaining = budget.node_budget - nodes
            if merge(_run_chunk(task[:5] + (remaining, deadline))):
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_chunk, task) for task in tasks]
            for i, fut in enumerate(futures):
                if merge(fut.result()):
                    for later in futures[i + 1:]:
                        later.cancel()
                    break

    if result is None:
        result = WitnessResult(WitnessStatus.EXHAUSTED, k, t, nodes,
                               _negative_is_definitive(G, k, t))
    return result


def _confirm(G: Graph, k: int, t: int, nodes: int, lists) -> WitnessResult:
    L = ListAssignment(lists)
    check = uniqueness(G, L)
    if check.verdict is not Verdict.UNIQUE:
        raise InternalInconsistency(f"search produced a non-unique witness {lists}")
    return WitnessResult(WitnessStatus.FOUND, k, t, nodes, True, L, check.coloring)


# --------------------------------------------------------------------------
# m-number bounds


@dataclass
class MNumberBounds:
    m_lower: int
    m_upper: int
    upper_source: str
    witnesses: dict = field(default_factory=dict)  # k -> WitnessResult
    notes: list = field(default_factory=list)
    chi_u_2: int | None = None  # least colour total for a unique 2-list coloring, 0 if none

    @property
    def determined(self) -> bool:
        return self.m_lower == self.m_upper

    def to_json(self) -> dict:
        return {
            "m_lower": self.m_lower,
            "m_upper": self.m_upper,
            "determined": self.determined,
            "upper_source": self.upper_source,
            "witnesses": {str(k): w.to_json() for k, w in sorted(self.witnesses.items())},
            "chi_u_2": self.chi_u_2,
            "notes": list(self.notes),
        }


def m_number_bounds(G: Graph, budget: SearchBudget | None = None, jobs: int = 1,
                    induced=()) -> MNumberBounds:
    """Bracket the least k for which ``G`` has property M(k)."""
    from .certify import certify

    if G.n == 0:
        raise InputError("m-number of the empty graph is undefined")
    budget = budget or SearchBudget()
    candidates = [(min_degree(G) + 2, "min_degree+2"), (max(G.n - 1, 2), "n-1")]
    upper, source = min(candidates)
    upper = max(upper, 2)
    for k in range(2, upper):
        cert = certify(G, k, induced=induced).certificate
        if cert is not None:
            upper, source = k, cert.rule.value
            break

    bounds = MNumberBounds(2, upper, source)
    witness_k = 1
    for k in range(2, upper):
        res = find_witness(G, k, budget, jobs=jobs)
        if res.status is WitnessStatus.FOUND:
            bounds.witnesses[k] = res
            witness_k = k
            continue
        if res.status is WitnessStatus.BUDGET_EXCEEDED:
            bounds.notes.append(f"k={k}: search budget exceeded")
        elif not res.definitive:
            bounds.notes.append(f"k={k}: no witness within t={res.t} (not definitive)")
        else:
            bounds.witnesses[k] = res
        break
    bounds.m_lower = witness_k + 1
    if bounds.m_lower > bounds.m_upper:
        raise InternalInconsistency(
            f"witness for k={witness_k} contradicts certificate M({bounds.m_upper})"
        )
    if 2 in bounds.witnesses:
        w = bounds.witnesses[2]
        if w.status is WitnessStatus.FOUND:
            bounds.chi_u_2 = max(3, chromatic_number(G)) if G.n <= CHROMATIC_CAP else None
        elif w.definitive:
            bounds.chi_u_2 = 0
    elif bounds.m_upper == 2:
        bounds.chi_u_2 = 0
    return bounds


# --------------------------------------------------------------------------
# boundary-case scanner


@dataclass
class ScanReport:
    k: int
    scanned: int = 0
    at_boundary: int = 0
    negatives: int = 0
    definitive_negatives: int = 0
    budget_exceeded: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "scanned": self.scanned,
            "at_boundary": self.at_boundary,
            "negatives": self.negatives,
            "definitive_negatives": self.definitive_negatives,
            "budget_exceeded": self.budget_exceeded,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
        }


def conjecture_scan(k: int, graph_source: Iterable, budget: SearchBudget | None = None,
                    jobs: int = 1) -> ScanReport:
    """Look for uniquely k-list colorable graphs of average degree exactly ``2k - 2``.

    ``graph_source`` yields :class:`Graph` objects or paths to graph files;
    entries that cannot be read are skipped with a warning.
    """
    from .io import read_graph

    if k < 2:
        raise InputError("conjecture scan needs k >= 2")
    budget = budget or SearchBudget()
    report = ScanReport(k)
    target = Fraction(2 * k - 2)
    for entry in graph_source:
        if not isinstance(entry, Graph):
            try:
                entry = read_graph(Path(entry))
            except (InputError, OSError) as exc:
                warnings.warn(f"skipping {entry}: {exc}")
                report.skipped += 1
                continue
        report.scanned += 1
        if entry.n == 0 or average_degree(entry) != target:
            continue
        report.at_boundary += 1
        try:
            res = find_witness(entry, k, budget, jobs=jobs)
        except BudgetError as exc:
            warnings.warn(f"skipping graph: {exc}")
            report.budget_exceeded += 1
            continue
        if res.status is WitnessStatus.FOUND:
            if uniqueness(entry, res.lists).verdict is Verdict.UNIQUE:
                report.counterexamples.append({
                    "n": entry.n,
                    "edges": [list(e) for e in entry.edges],
                    "lists": [list(s) for s in res.lists],
                    "coloring": list(res.coloring),
                })
        elif res.status is WitnessStatus.BUDGET_EXCEEDED:
            report.budget_exceeded += 1
        else:
            report.negatives += 1
            report.definitive_negatives += res.definitive
    return report


def cpu_jobs() -> int:
    return os.cpu_count() or 1
