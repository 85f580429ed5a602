"""The (G, c)-directing procedure and the audits built on it.

Given a proper list coloring ``c`` the procedure orients some edges:

* Step 1, for every ordered pair across an edge: direct ``v -> u`` when ``u``
  is the only neighbour of ``v`` coloured ``c(u)`` and ``c(u)`` is in ``L(v)``.
* Step 2, repeated to a fixpoint: for a vertex ``v`` and a colour
  ``t in L(v) - {c(v)}``, if exactly one edge from ``v`` to a ``t``-coloured
  neighbour is undirected and every other such edge points at ``v``, direct
  the undirected one away from ``v``.  All moves of one iteration are read off
  the state before the iteration and applied together.

On a uniquely colorable instance the result has no edge directed both ways and
every ``(v, t)`` keeps an undirected or outgoing edge to colour ``t``.  When
either fails, :func:`extract_alternate_coloring` swaps two colours along the
directed alternating paths into the offending spot and returns a second
proper coloring.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InputError, InternalInconsistency
from .graph import Graph
from .solver import Coloring, ListAssignment, is_proper

__all__ = [
    "Mark",
    "DirectionEvent",
    "OrientationState",
    "ColorDeficit",
    "FlowReport",
    "run_directing",
    "replay",
    "bidirectional_edges",
    "lemma2_violations",
    "extract_alternate_coloring",
    "flow_report",
]


class Mark(str, enum.Enum):
    UNDIRECTED = "undirected"
    A_TO_B = "a->b"
    B_TO_A = "b->a"
    BOTH = "both"


class DirectionEvent(NamedTuple):
    step: int  # index i of the graph D(G, c, i) this event belongs to
    tail: int
    head: int


class ColorDeficit(NamedTuple):
    """A vertex and a colour whose every edge to that colour points inward."""

    vertex: int
    color: int


def _marks(G: Graph, arcs: set[tuple[int, int]]) -> tuple[Mark, ...]:
    out = []
    for a, b in G.edges:
        fwd, bwd = (a, b) in arcs, (b, a) in arcs
        if fwd and bwd:
            out.append(Mark.BOTH)
        elif fwd:
            out.append(Mark.A_TO_B)
        elif bwd:
            out.append(Mark.B_TO_A)
        else:
            out.append(Mark.UNDIRECTED)
    return tuple(out)


@dataclass(frozen=True)
class OrientationState:
    edges: tuple[tuple[int, int], ...]
    marks: tuple[Mark, ...]
    trace: tuple[DirectionEvent, ...]
    converged: bool
    iterations: int  # number of Step 2 passes that directed something

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((e.tail, e.head) for e in self.trace)

    def mark(self, u: int, v: int) -> Mark:
        return self.marks[self.edges.index((min(u, v), max(u, v)))]

    def to_json(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "marks": [m.value for m in self.marks],
            "trace": [list(e) for e in self.trace],
            "converged": self.converged,
            "iterations": self.iterations,
        }


def _require_proper(G: Graph, L: Sequence, c: Sequence[int]) -> None:
    if len(L) != G.n or len(c) != G.n:
        raise InputError("lists and coloring must have one entry per vertex")
    for v in range(G.n):
        if c[v] not in L[v]:
            raise InputError(f"c({v})={c[v]} is not in the list of vertex {v}")
    for u, v in G.edges:
        if c[u] == c[v]:
            raise InputError(f"coloring is not proper on edge ({u}, {v})")


def run_directing(G: Graph, L: ListAssignment, c: Coloring) -> OrientationState:
    _require_proper(G, L, c)
    n = G.n
    by_color = [dict() for _ in range(n)]
    for v in range(n):
        for w in G.adj[v]:
            by_color[v].setdefault(c[w], []).append(w)

    arcs: set[tuple[int, int]] = set()
    trace: list[DirectionEvent] = []
    for a, b in G.edges:
        for v, u in ((a, b), (b, a)):
            if len(by_color[v][c[u]]) == 1 and c[u] in L[v]:
                arcs.add((v, u))
                trace.append(DirectionEvent(1, v, u))

    iterations = 0
    converged = False
    for _ in range(G.m + 1):
        moves = []
        for v in range(n):
            for t in L[v]:
                if t == c[v]:
                    continue
                A = by_color[v].get(t, ())
                loose = [a for a in A if (v, a) not in arcs and (a, v) not in arcs]
                if len(loose) != 1:
                    continue
                if all((a, v) in arcs for a in A if a != loose[0]):
                    moves.append((v, loose[0]))
        if not moves:
            converged = True
            break
        iterations += 1
        for v, a in moves:
            arcs.add((v, a))
            trace.append(DirectionEvent(iterations + 1, v, a))

    return OrientationState(G.edges, _marks(G, arcs), tuple(trace), converged, iterations)


def replay(G: Graph, trace: Sequence[DirectionEvent]) -> tuple[Mark, ...]:
    """Marks obtained by applying ``trace`` to the undirected graph."""
    last = 0
    arcs: set[tuple[int, int]] = set()
    for event in trace:
        if event.step < last:
            raise InputError("trace events are out of step order")
        if not G.has_edge(event.tail, event.head):
            raise InputError(f"trace directs a non-edge {event.tail}->{event.head}")
        last = event.step
        arcs.add((event.tail, event.head))
    return _marks(G, arcs)


def bidirectional_edges(state: OrientationState) -> list[tuple[int, int]]:
    return sorted(e for e, m in zip(state.edges, state.marks) if m is Mark.BOTH)


def lemma2_violations(
    state: OrientationState, G: Graph, L: ListAssignment, c: Coloring
) -> list[ColorDeficit]:
    """Pairs ``(v, t)`` with every ``t``-coloured neighbour pointing strictly at ``v``.

    A colour ``t`` in ``L(v)`` with no ``t``-coloured neighbour at all counts
    too: ``v`` could simply be recoloured.
    """
    arcs = state.arcs
    out = []
    for v in range(G.n):
        for t in L[v]:
            if t == c[v]:
                continue
            inward = all(
                (a, v) in arcs and (v, a) not in arcs for a in G.adj[v] if c[a] == t
            )
            if inward:
                out.append(ColorDeficit(v, t))
    return out


def extract_alternate_coloring(
    G: Graph,
    L: ListAssignment,
    c: Coloring,
    state: OrientationState,
    violation: ColorDeficit | tuple[int, int],
) -> Coloring:
    """Second proper coloring witnessed by a violation.

    ``violation`` is a :class:`ColorDeficit` from :func:`lemma2_violations` or
    an edge from :func:`bidirectional_edges`.  The two colours involved are
    swapped on every vertex with a directed two-coloured path into the
    violation site.
    """
    arcs = state.arcs
    if isinstance(violation, ColorDeficit):
        v, t = violation
        pair = {c[v], t}
        roots = [v]
    else:
        a, b = violation
        if not ((a, b) in arcs and (b, a) in arcs):
            raise InputError(f"edge ({a}, {b}) is not directed both ways")
        pair = {c[a], c[b]}
        roots = [a, b]

    S = set(roots)
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in S and c[y] in pair and c[y] != c[x] and (y, x) in arcs:
                S.add(y)
                queue.append(y)

    lo, hi = sorted(pair) if len(pair) == 2 else (None, None)
    new = list(c)
    for x in S:
        if new[x] == lo:
            new[x] = hi
        elif new[x] == hi:
            new[x] = lo
    new = tuple(new)
    if new == tuple(c) or not is_proper(G, L, new):
        raise InternalInconsistency(
            f"swapping {sorted(pair)} on {sorted(S)} did not give a second proper coloring"
        )
    return new


@dataclass(frozen=True)
class FlowReport:
    k: int
    per_color: dict  # (v, t) -> (d_plus, d_minus, N)
    d_plus: tuple[int, ...]
    d_minus: tuple[int, ...]
    slack: tuple[int, ...]
    degree_surplus: int  # sum over v of d(v) - 2(k-1), i.e. 2|E| - n(2k-2)

    @property
    def net_inflow(self) -> int:
        return sum(self.d_minus) - sum(self.d_plus)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "per_color": [
                {"vertex": v, "color": t, "d_plus": p, "d_minus": m, "neighbors": N}
                for (v, t), (p, m, N) in sorted(self.per_color.items())
            ],
            "d_plus": list(self.d_plus),
            "d_minus": list(self.d_minus),
            "slack": list(self.slack),
            "net_inflow": self.net_inflow,
            "degree_surplus": self.degree_surplus,
        }


def flow_report(
    state: OrientationState, G: Graph, L: ListAssignment, c: Coloring, k: int
) -> FlowReport:
    """In/out flow per vertex and colour on a converged orientation.

    ``d_minus(v)`` counts every edge pointing at ``v``, whatever the tail's
    colour, so that in- and out-flows balance over the whole graph.
    """
    if not L.uniform_size(k):
        raise InputError(f"flow report needs every list of size {k}")
    both = bidirectional_edges(state)
    if both:
        raise InputError(
            f"orientation has bidirectional edges {both}; see bidirectional_edges"
        )
    arcs = state.arcs
    per_color: dict[tuple[int, int], tuple[int, int, int]] = {}
    d_plus, d_minus, slack = [], [], []
    for v in range(G.n):
        counts: dict[int, list[int]] = {t: [0, 0, 0] for t in L[v] if t != c[v]}
        for w in G.adj[v]:
            entry = counts.setdefault(c[w], [0, 0, 0])
            entry[2] += 1
            if (v, w) in arcs:
                entry[0] += 1
            elif (w, v) in arcs:
                entry[1] += 1
        for t, (p, m, N) in counts.items():
            per_color[(v, t)] = (p, m, N)
        out_v = sum(e[0] for e in counts.values())
        in_v = sum(e[1] for e in counts.values())
        d_plus.append(out_v)
        d_minus.append(in_v)
        slack.append(G.degree(v) - 2 * (k - 1) - (in_v - out_v))
    surplus = 2 * G.m - G.n * (2 * k - 2)
    return FlowReport(k, per_color, tuple(d_plus), tuple(d_minus), tuple(slack), surplus)
