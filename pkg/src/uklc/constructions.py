"""Generators for the graph families used to probe unique list colorability.

Every generator returns a :class:`GeneratedInstance`: the graph with its
declared metadata, optionally a list assignment and the coloring that
assignment is expected to force, and a list of claims that
:func:`check_claims` can evaluate with the solver and the certificate engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .graph import (
    Graph,
    Metadata,
    average_degree,
    build_graph,
    connected_components,
    find_cliques,
    is_k_regular,
)
from .solver import Coloring, ListAssignment, Verdict, uniqueness

__all__ = [
    "GeneratedInstance",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_path",
    "gen_complement_c6",
    "gen_diamond",
    "gen_petersen",
    "gen_T",
    "gen_gadget",
    "gen_strip_triangle",
    "gen_Hn",
    "gen_figure1_chain",
    "check_claims",
    "FAMILIES",
]

UNVERIFIED = "UNVERIFIED"


@dataclass
class GeneratedInstance:
    graph: Graph
    family: str
    params: dict
    lists: ListAssignment | None = None
    predicted_coloring: Coloring | None = None
    claims: list[dict] = field(default_factory=list)

    def claims_json(self) -> dict:
        return {"family": self.family, "params": self.params, "claims": self.claims}


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


def _claim(kind: str, status: str = "predicted", **values) -> dict:
    return {"claim": kind, "status": status, **values}


# --------------------------------------------------------------------------
# standard graphs


def gen_complete(n: int) -> GeneratedInstance:
    _need(n >= 1, "complete graph needs n >= 1")
    G = build_graph(n, itertools.combinations(range(n), 2), Metadata(planar=n <= 4))
    return GeneratedInstance(G, "complete", {"n": n}, claims=[_claim("M", k=2)])


def gen_complete_bipartite(a: int, b: int) -> GeneratedInstance:
    _need(a >= 1 and b >= 1, "complete bipartite graph needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    G = build_graph(a + b, edges, Metadata(planar=min(a, b) <= 2))
    return GeneratedInstance(G, "complete_bipartite", {"a": a, "b": b},
                             claims=[_claim("M", k=2)])


def gen_cycle(n: int) -> GeneratedInstance:
    _need(n >= 3, "cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    G = build_graph(n, edges, Metadata(planar=True, outerplanar=True))
    return GeneratedInstance(G, "cycle", {"n": n},
                             claims=[_claim("M", k=2), _claim("regular", degree=2)])


def gen_path(n: int) -> GeneratedInstance:
    _need(n >= 1, "path needs n >= 1")
    G = build_graph(n, [(i, i + 1) for i in range(n - 1)],
                    Metadata(planar=True, outerplanar=True))
    return GeneratedInstance(G, "path", {"n": n}, claims=[_claim("M", k=2)])


def gen_diamond() -> GeneratedInstance:
    """K4 minus the edge (0, 3)."""
    G = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
                    Metadata(planar=True, outerplanar=True))
    return GeneratedInstance(G, "diamond", {}, claims=[_claim("UkLC", k=2), _claim("m", value=3)])


def gen_petersen() -> GeneratedInstance:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    G = build_graph(10, outer + spokes + inner, Metadata(planar=False))
    return GeneratedInstance(G, "petersen", {},
                             claims=[_claim("regular", degree=3), _claim("M", k=3)])


def gen_complement_c6() -> GeneratedInstance:
    """Complement of the 6-cycle (the triangular prism)."""
    edges = [(u, v) for u, v in itertools.combinations(range(6), 2)
             if (v - u) % 6 not in (1, 5)]
    G = build_graph(6, edges, Metadata(planar=True))
    claims = [_claim("regular", degree=3), _claim("UkLC", k=2), _claim("m", value=3)]
    return GeneratedInstance(G, "complement_c6", {}, claims=claims)


# --------------------------------------------------------------------------
# circulants and the tightness gadget


def _circulant_edges(k: int, n: int, offset: int = 0) -> list[tuple[int, int]]:
    size = k * n
    return [
        (offset + j, offset + jj)
        for j in range(size)
        for jj in range(j + 1, size)
        if jj - j < k or j + size - jj < k
    ]


def gen_T(k: int, n: int) -> GeneratedInstance:
    """Circulant on ``kn`` vertices joining vertices at cyclic distance < k."""
    _need(k >= 2 and n >= 2, "T(k, n) needs k >= 2 and n >= 2")
    G = build_graph(k * n, _circulant_edges(k, n), Metadata(planar=True if k == 2 else None))
    return GeneratedInstance(G, "T", {"k": k, "n": n},
                             claims=[_claim("regular", degree=2 * (k - 1))])


def gadget_vertex(k: int, n: int, copy: int, j: int) -> int:
    """Index of vertex ``j`` (1-based) of copy ``copy`` (1..k+1)."""
    return (copy - 1) * k * n + (j - 1)


def gen_gadget(k: int, n: int) -> GeneratedInstance:
    """k+1 copies of T(k, n) glued so that k-lists force one coloring.

    Copy ``i`` (1..k+1) gets the list ``{1..k+1} - {i}``.  Vertex ``j`` of
    copy ``i`` for ``1 <= j <= k-1`` is joined to vertices ``1..k`` of copy
    ``(i + j) mod (k+1)``, residue 0 meaning copy ``k+1``.  Those vertices
    then see every colour but one, which pins vertex ``j`` and, by the
    circulant structure, the whole copy.  Edges produced twice by the rule
    are kept once.
    """
    _need(k >= 2 and n >= 2, "gadget needs k >= 2 and n >= 2")
    size = k * n
    edges: set[tuple[int, int]] = set()
    lists = []
    coloring = []
    for i in range(1, k + 2):
        for u, v in _circulant_edges(k, n, offset=(i - 1) * size):
            edges.add((u, v))
        palette = [col for col in range(1, k + 2) if col != i]
        for j in range(1, size + 1):
            lists.append(palette)
            coloring.append((i + (j - 1) % k) % (k + 1) + 1)
    for i in range(1, k + 2):
        for j in range(1, k):
            target = (i + j - 1) % (k + 1) + 1
            u = gadget_vertex(k, n, i, j)
            for jj in range(1, k + 1):
                v = gadget_vertex(k, n, target, jj)
                edges.add((min(u, v), max(u, v)))
    G = build_graph((k + 1) * size, sorted(edges))
    measured = average_degree(G)
    stated = Fraction(2 * k - 2) + Fraction(k - 1, n)
    claims = [
        _claim("UkLC", k=k),
        _claim("avg_degree", value=str(measured)),
        _claim("avg_degree_closed_form", status="discrepancy" if stated != measured else "agrees",
               value=str(stated)),
    ]
    return GeneratedInstance(
        G, "gadget", {"k": k, "n": n}, ListAssignment(lists), tuple(coloring), claims
    )


# --------------------------------------------------------------------------
# strip triangles and H_n


def gen_strip_triangle(n: int) -> GeneratedInstance:
    """Path ``0..n`` with apex ``n+1+i`` on each spine edge ``(i, i+1)``."""
    _need(n >= 1, "strip triangle needs n >= 1")
    edges = [(i, i + 1) for i in range(n)]
    for i in range(n):
        t = n + 1 + i
        edges += [(i, t), (i + 1, t)]
    G = build_graph(2 * n + 1, edges, Metadata(planar=True, outerplanar=True))
    return GeneratedInstance(G, "strip_triangle", {"n": n},
                             claims=[_claim("vertices", value=2 * n + 1),
                                     _claim("edges", value=3 * n)])


def gen_Hn(n: int) -> GeneratedInstance:
    """Strip triangle ST_n with a K5 hung on every degree-2 vertex.

    Hanging a K5 ``{x0..x4}`` on ``t`` deletes its edge ``(x0, x1)`` and adds
    ``x0 - t - x1``.  The degree-2 vertices are the apexes and both spine
    ends, so the result is 4-regular.  Each hung copy keeps the induced K4
    ``{x0, x2, x3, x4}`` whose vertices have one neighbour outside it.
    """
    _need(n >= 1, "H_n needs n >= 1")
    base = gen_strip_triangle(n).graph
    edges = list(base.edges)
    hung, k4s = [], []
    nxt = base.n
    for t in range(base.n):
        if base.degree(t) != 2:
            continue
        x = list(range(nxt, nxt + 5))
        nxt += 5
        edges += [(a, b) for a, b in itertools.combinations(x, 2) if (a, b) != (x[0], x[1])]
        edges += [(t, x[0]), (t, x[1])]
        hung.append({"at": t, "vertices": x, "removed_edge": [x[0], x[1]]})
        k4s.append([x[0], x[2], x[3], x[4]])
    G = build_graph(nxt, edges)
    claims = [
        _claim("connected"),
        _claim("regular", degree=4),
        _claim("M", k=3),
        _claim("m", value=3),
    ]
    return GeneratedInstance(G, "H", {"n": n, "hung": hung, "induced_k4": k4s}, claims=claims)


def find_induced_k4(G: Graph, max_outside: int = 1) -> list[int] | None:
    """Least 4-clique whose vertices each have at most ``max_outside`` outside neighbours."""
    for clique in find_cliques(G, 4):
        cs = set(clique)
        if all(sum(1 for w in G.adj[v] if w not in cs) <= max_outside for v in clique):
            return list(clique)
    return None


# --------------------------------------------------------------------------
# the planar chain


_MIDDLE_LISTS = ((1, 2, 4), (1, 2, 4), (1, 3, 4), (1, 3, 4), (2, 3, 4))
_POLE_LISTS = ((2, 3, 4), (1, 2, 4))


def gen_figure1_chain(m: int) -> GeneratedInstance:
    """Chain of ``m`` units, consecutive units sharing a pole.

    A unit has two adjacent poles and five middle vertices forming a path,
    each middle vertex joined to both poles.  Vertex order: pole 0, the
    middles of unit 1, pole 1, the middles of unit 2, ...  The layout is a
    reconstruction from a drawing, so uniqueness is left UNVERIFIED until
    :func:`check_claims` runs the solver.
    """
    _need(m >= 1, "chain needs at least one unit")
    edges = []
    lists = [_POLE_LISTS[0]]
    left = 0
    for unit in range(m):
        mids = list(range(left + 1, left + 6))
        right = left + 6
        edges.append((left, right))
        for a in mids:
            edges += [(left, a), (a, right)]
        edges += list(zip(mids, mids[1:]))
        lists += list(_MIDDLE_LISTS)
        lists.append(_POLE_LISTS[(unit + 1) % 2])
        left = right
    G = build_graph(6 * m + 1, edges, Metadata(planar=True))
    return GeneratedInstance(
        G, "figure1_chain", {"m": m}, ListAssignment(lists), None,
        [_claim("UkLC", status=UNVERIFIED, k=3)],
    )


FAMILIES = {
    "complete": gen_complete,
    "bipartite": gen_complete_bipartite,
    "cycle": gen_cycle,
    "path": gen_path,
    "complement-c6": gen_complement_c6,
    "diamond": gen_diamond,
    "petersen": gen_petersen,
    "T": gen_T,
    "gadget": gen_gadget,
    "strip": gen_strip_triangle,
    "hn": gen_Hn,
    "figure1": gen_figure1_chain,
}


# --------------------------------------------------------------------------
# claim checking


def check_claims(inst: GeneratedInstance, budget=None) -> list[dict]:
    """Evaluate each claim; returns the claims with ``status`` set to
    ``"verified"``, ``"refuted"`` or left as is when it cannot be decided."""
    from .certify import certify
    from .search import SearchBudget, find_witness, m_number_bounds, WitnessStatus

    G = inst.graph
    out = []
    for claim in inst.claims:
        claim = dict(claim)
        kind = claim["claim"]
        verdict = None
        if kind == "regular":
            verdict = is_k_regular(G, claim["degree"])
        elif kind == "connected":
            verdict = len(connected_components(G)) == 1
        elif kind == "vertices":
            verdict = G.n == claim["value"]
        elif kind == "edges":
            verdict = G.m == claim["value"]
        elif kind == "avg_degree":
            verdict = str(average_degree(G)) == claim["value"]
        elif kind == "M":
            verdict = certify(G, claim["k"]).certificate is not None or None
        elif kind == "UkLC":
            if inst.lists is not None and inst.lists.uniform_size(claim["k"]):
                u = uniqueness(G, inst.lists)
                verdict = u.verdict is Verdict.UNIQUE and (
                    inst.predicted_coloring is None or u.coloring == inst.predicted_coloring
                )
                if verdict:
                    claim["coloring"] = list(u.coloring)
            else:
                res = find_witness(G, claim["k"], budget or SearchBudget())
                if res.status is WitnessStatus.FOUND:
                    verdict = True
                elif res.definitive:
                    verdict = False
        elif kind == "m":
            b = m_number_bounds(G, budget or SearchBudget())
            if b.m_lower == b.m_upper:
                verdict = b.m_lower == claim["value"]
            elif not b.m_lower <= claim["value"] <= b.m_upper:
                verdict = False
        if verdict is True:
            claim["status"] = "verified"
        elif verdict is False:
            claim["status"] = "refuted"
        out.append(claim)
    return out
