"""Certificates that a graph has property M(k).

A graph has property M(k) when no assignment of k-element lists gives it
exactly one proper coloring.  Each rule below checks a sufficient condition
and, when it holds, returns a :class:`Certificate` recording the evidence.
:func:`verify_certificate` re-derives that evidence from the graph alone.

Property M(k) is monotone in k, so a rule with threshold k0 certifies every
``k >= k0``; the certificate then records ``base_k = k0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InputError
from .graph import (
    BlockClass,
    Graph,
    _classify_vertex_set,
    average_degree,
    block_decomposition,
    connected_components,
    induced_subgraph,
    is_k_regular,
)
from .solver import Coloring, ListAssignment, Verdict, count_colorings, uniqueness

__all__ = [
    "Rule",
    "Certificate",
    "CertifyResult",
    "certify",
    "verify_certificate",
    "certify_avg_degree",
    "certify_block_m2",
    "certify_planar_family",
    "heawood",
    "surface_index",
    "certify_surface",
    "certify_induced",
    "certify_regular",
    "certify_regular_count",
    "theorem5_bound",
    "audit_theorem5",
    "varying_lists_necessary",
    "certify_lists",
    "tight_equality_audit",
]


class Rule(str, enum.Enum):
    AVG_DEGREE = "AvgDegree"
    BLOCK_M2 = "BlockM2"
    PLANAR_M4 = "PlanarM4"
    TRIANGLE_FREE_PLANAR_M3 = "TriangleFreePlanarM3"
    OUTERPLANAR_M3 = "OuterplanarM3"
    SURFACE = "Surface"
    INDUCED_SUBGRAPH = "InducedSubgraph"
    REGULAR_COROLLARY = "RegularCorollary"
    VARYING_LISTS_NECESSARY = "VaryingListsNecessary"
    KK1_EXCEPTION = "Kk1Exception"


@dataclass(frozen=True)
class Certificate:
    rule: Rule
    k: int
    params: dict = field(default_factory=dict)

    @property
    def conclusion(self) -> str:
        if self.rule is Rule.VARYING_LISTS_NECESSARY:
            return "G has no unique proper L-coloring"
        return f"G has property M({self.k})"

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "k": self.k,
            "params": self.params,
            "conclusion": self.conclusion,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        try:
            return cls(Rule(data["rule"]), int(data["k"]), dict(data.get("params", {})))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"malformed certificate: {exc}") from None


@dataclass
class CertifyResult:
    certificates: list[Certificate]
    notes: list[str]

    @property
    def certificate(self) -> Certificate | None:
        return self.certificates[0] if self.certificates else None

    def to_json(self) -> dict:
        out = {
            "certificate": self.certificate.to_json() if self.certificate else None,
            "notes": list(self.notes),
        }
        if len(self.certificates) > 1:
            out["all"] = [c.to_json() for c in self.certificates]
        return out


def _note(notes, text):
    if notes is not None:
        notes.append(text)


def _lift(rule: Rule, base_k: int, k: int | None, params: dict) -> Certificate:
    k = base_k if k is None else k
    params = dict(params, base_k=base_k)
    if k > base_k:
        params["monotonicity"] = f"M({base_k}) implies M({k})"
    return Certificate(rule, k, params)


# --------------------------------------------------------------------------
# individual rules


def certify_avg_degree(G: Graph, k: int, notes: list | None = None) -> Certificate | None:
    """Average degree strictly below ``2k - 2`` (exact rational comparison)."""
    if k < 2:
        _note(notes, "AvgDegree: no graph has property M(1)")
        return None
    if G.n == 0:
        _note(notes, "AvgDegree: empty graph")
        return None
    avg = average_degree(G)
    if avg < 2 * k - 2:
        return Certificate(
            Rule.AVG_DEGREE, k, {"average_degree": str(avg), "bound": 2 * k - 2}
        )
    _note(notes, f"AvgDegree: average degree {avg} is not below {2 * k - 2}")
    return None


def _component_blocks(G: Graph) -> list[tuple[list[int], list[tuple[tuple[int, ...], BlockClass]]]]:
    blocks = block_decomposition(G).blocks
    out = []
    for comp in connected_components(G):
        cs = set(comp)
        classified = [(b, _classify_vertex_set(G, b)) for b in blocks if b[0] in cs]
        out.append((comp, classified))
    return out


def certify_block_m2(
    G: Graph, k: int | None = None, notes: list | None = None
) -> Certificate | None:
    """Some component has only cycle, complete and complete bipartite blocks.

    A graph is uniquely colorable exactly when each component is, so one
    such component already rules out unique 2-list colorings.
    """
    if k is not None and k < 2:
        _note(notes, "BlockM2: no graph has property M(1)")
        return None
    for comp, blocks in _component_blocks(G):
        if all(cls is not BlockClass.OTHER for _, cls in blocks):
            params = {
                "component": comp,
                "blocks": [{"vertices": list(b), "class": cls.value} for b, cls in blocks],
            }
            return _lift(Rule.BLOCK_M2, 2, k, params)
    _note(notes, "BlockM2: every component has a block that is not a cycle, "
                 "complete graph or complete bipartite graph")
    return None


_PLANAR_RULES = (
    # rule, base k, metadata flag, needs triangle-free, max edges for n >= 3
    (Rule.PLANAR_M4, 4, "planar", False, lambda n: 3 * n - 6),
    (Rule.TRIANGLE_FREE_PLANAR_M3, 3, "planar", True, lambda n: 2 * n - 4),
    (Rule.OUTERPLANAR_M3, 3, "outerplanar", False, lambda n: 2 * n - 3),
)


def _planar_rule(G: Graph, rule: Rule, k: int, notes=None) -> Certificate | None:
    for r, base, flag, needs_tf, max_edges in _PLANAR_RULES:
        if r is not rule:
            continue
        declared = getattr(G.metadata, flag)
        if declared is None:
            _note(notes, f"{rule.value}: {flag} undeclared")
            return None
        if not declared:
            _note(notes, f"{rule.value}: declared not {flag}")
            return None
        if needs_tf and not G.triangle_free:
            _note(notes, f"{rule.value}: graph has a triangle")
            return None
        if k < base:
            _note(notes, f"{rule.value}: k={k} below rule threshold {base}")
            return None
        if G.n >= 3 and G.m > max_edges(G.n):
            _note(notes, f"{rule.value}: declared {flag} contradicts edge count {G.m}")
            return None
        params = {"assumption": f"{flag} (declared)"}
        if needs_tf:
            params["triangle_free"] = True
        return _lift(rule, base, k, params)
    raise InputError(f"{rule} is not a planar-family rule")


def certify_planar_family(G: Graph, k: int, notes: list | None = None) -> Certificate | None:
    """Planar graphs have M(4); triangle-free planar and outerplanar ones M(3).

    Planarity and outerplanarity are taken from the declared metadata.
    """
    for rule, *_ in _PLANAR_RULES:
        cert = _planar_rule(G, rule, k, notes)
        if cert is not None:
            return cert
    return None


def heawood(g: int) -> int:
    """``floor((7 + sqrt(24 g + 1)) / 2)`` in integer arithmetic."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise InputError(f"Heawood number needs Euler genus g >= 1, got {g!r}")
    # floor((7 + sqrt(x)) / 2) == (7 + isqrt(x)) // 2 for integer x
    return (7 + math.isqrt(24 * g + 1)) // 2


def surface_index(g: int) -> int:
    """Largest ``i >= 2`` with ``3g >= 2i^2 - 3i + 1``."""
    if g < 1:
        raise InputError(f"surface rule needs Euler genus g >= 1, got {g}")
    i = 2
    while 3 * g >= 2 * (i + 1) ** 2 - 3 * (i + 1) + 1:
        i += 1
    return i


def certify_surface(G: Graph, k: int, notes: list | None = None) -> Certificate | None:
    g = G.metadata.euler_genus
    if g is None:
        _note(notes, "Surface: euler_genus undeclared")
        return None
    if g < 1:
        _note(notes, "Surface: rule needs euler_genus >= 1")
        return None
    if G.n >= 3 and G.m > 3 * (G.n - 2 + g):
        _note(notes, f"Surface: declared euler_genus={g} contradicts edge count {G.m}")
        return None
    H = heawood(g)
    i = surface_index(g)
    base = H - i
    if k < base:
        _note(notes, f"Surface: k={k} below H({g}) - i* = {H} - {i} = {base}")
        return None
    return _lift(
        Rule.SURFACE, base, k,
        {"g": g, "heawood": H, "i": i, "assumption": "euler_genus (declared)"},
    )


def _outside_degrees(G: Graph, H_vertices: Sequence[int]) -> dict[int, int]:
    hs = set(H_vertices)
    return {v: sum(1 for w in G.adj[v] if w not in hs) for v in sorted(hs)}


def certify_induced(
    G: Graph,
    H_vertices: Sequence[int],
    k: int,
    l: int,
    H_certificate: Certificate,
    notes: list | None = None,
) -> Certificate | None:
    """Lift an M(k) certificate of an induced subgraph to M(k + l) for ``G``.

    Every vertex of the subgraph may have at most ``l`` neighbours outside it.
    ``H_certificate`` refers to the subgraph relabelled ``0..|H|-1`` in
    ascending vertex order.
    """
    H, verts = induced_subgraph(G, H_vertices)
    if H_certificate.k != k or not verify_certificate(H, H_certificate):
        raise InputError(
            f"inner {H_certificate.rule.value} certificate for M({k}) fails re-verification"
        )
    if l < 0:
        raise InputError("l must be non-negative")
    outside = _outside_degrees(G, verts)
    worst = max(outside.values(), default=0)
    if worst > l:
        _note(notes, f"InducedSubgraph: a vertex has {worst} > {l} outside neighbours")
        return None
    if len(verts) == G.n and l == 0:
        return H_certificate
    return Certificate(
        Rule.INDUCED_SUBGRAPH,
        k + l,
        {"H_vertices": verts, "l": l, "inner_k": k, "inner": H_certificate.to_json()},
    )


def regular_threshold(k_reg: int) -> int:
    """``ceil((k_reg + 1) / 2) + 1``."""
    return -(-(k_reg + 1) // 2) + 1


def certify_regular(
    G: Graph, k_reg: int | None = None, k: int | None = None, notes: list | None = None
) -> Certificate | None:
    """A ``k_reg``-regular graph has M(ceil((k_reg+1)/2) + 1)."""
    if G.n == 0:
        return None
    if k_reg is None:
        k_reg = G.degree(0)
    if k_reg < 2 or not is_k_regular(G, k_reg):
        _note(notes, "RegularCorollary: graph is not regular of degree >= 2")
        return None
    base = regular_threshold(k_reg)
    if k is not None and k < base:
        _note(notes, f"RegularCorollary: k={k} below {base}")
        return None
    return _lift(Rule.REGULAR_COROLLARY, base, k, {"regular_degree": k_reg,
                                                   "average_degree": str(k_reg)})


def certify_regular_count(G: Graph, k: int, notes: list | None = None) -> Certificate | None:
    """An r-regular graph with r >= 5 has M(r) by the coloring-count bound.

    Any r-list assignment with one coloring has at least
    ``n(r/4 - 1) + 1 > 1`` of them; the complete graph on r+1 vertices with
    identical lists has none at all.
    """
    if G.n == 0:
        return None
    r = G.degree(0)
    if not is_k_regular(G, r) or r < 5:
        _note(notes, "Kk1Exception: needs an r-regular graph with r >= 5")
        return None
    if k < r:
        _note(notes, f"Kk1Exception: k={k} below regular degree {r}")
        return None
    bound = theorem5_bound(G.n, r)
    return _lift(Rule.KK1_EXCEPTION, r, k, {"regular_degree": r, "count_bound": str(bound)})


# --------------------------------------------------------------------------
# coloring-count bound for regular graphs


def theorem5_bound(n: int, k: int) -> Fraction:
    """``n (k/4 - 1) + 1`` as an exact rational."""
    if n < 1 or k < 1:
        raise InputError("theorem5_bound needs n >= 1 and k >= 1")
    return n * (Fraction(k, 4) - 1) + 1


class T5Audit(NamedTuple):
    bound: Fraction
    count: int  # saturating at ceil(bound) + 1
    satisfied: bool
    complete_identical: bool  # the K_{k+1}, identical lists exception

    def to_json(self) -> dict:
        return {"bound": str(self.bound), "count": self.count, "satisfied": self.satisfied,
                "complete_identical_lists": self.complete_identical}


def audit_theorem5(G: Graph, L: ListAssignment) -> T5Audit:
    if len(L) != G.n or G.n == 0:
        raise InputError("need one list per vertex of a non-empty graph")
    k = len(L[0])
    if not L.uniform_size(k):
        raise InputError("lists must all have the same size")
    if not is_k_regular(G, k):
        raise InputError(f"graph must be {k}-regular for lists of size {k}")
    bound = theorem5_bound(G.n, k)
    cap = max(math.ceil(bound), 0) + 1
    count = count_colorings(G, L, cap=cap)
    satisfied = count == 0 or count >= bound
    complete_identical = G.n == k + 1 and len(set(L)) == 1
    return T5Audit(bound, count, satisfied, complete_identical)


# --------------------------------------------------------------------------
# lists of varying sizes


class ListSizeSum(NamedTuple):
    sum: int
    unique_possible: bool


def varying_lists_necessary(G: Graph, L: ListAssignment) -> ListSizeSum:
    """``sum_i (d_i - 2(k_i - 1))``; negative rules out a unique coloring."""
    if len(L) != G.n:
        raise InputError(f"{len(L)} lists given for a graph with {G.n} vertices")
    total = sum(G.degree(v) - 2 * (len(L[v]) - 1) for v in range(G.n))
    return ListSizeSum(total, total >= 0)


def certify_lists(G: Graph, L: ListAssignment) -> Certificate | None:
    """Certificate that this particular assignment has no unique coloring."""
    total, possible = varying_lists_necessary(G, L)
    if possible:
        return None
    return Certificate(
        Rule.VARYING_LISTS_NECESSARY, max(L.sizes, default=0),
        {"lists": [list(s) for s in L], "sum": total},
    )


class TightColorReport(NamedTuple):
    lhs: int
    rhs: int  # 2 b_t - d_t
    b_t: int
    d_t: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def tight_equality_audit(
    G: Graph, L: ListAssignment, c: Coloring
) -> dict[int, TightColorReport]:
    """Per-colour balance at the boundary case of the list-size inequality.

    Preconditions, both checked: ``c`` is the unique proper L-coloring, and
    ``sum_i (d_i - 2(k_i - 1)) == 0``.
    """
    total, _ = varying_lists_necessary(G, L)
    if total != 0:
        raise InputError(
            f"degree equality fails: sum of d_i - 2(k_i - 1) is {total}, not 0"
        )
    u = uniqueness(G, L)
    if u.verdict is not Verdict.UNIQUE:
        raise InputError(f"coloring is not unique (solver verdict: {u.verdict.value})")
    if tuple(u.coloring) != tuple(c):
        raise InputError(f"the unique coloring is {list(u.coloring)}, not {list(c)}")
    report = {}
    for t in L.colors:
        Vt = {v for v in range(G.n) if c[v] == t}
        lhs = sum(G.degree(v) - 2 * (len(L[v]) - 1) for v in Vt)
        d_t = sum(1 for a, b in G.edges if (a in Vt) != (b in Vt))
        b_t = sum(
            1 for v in range(G.n)
            if v not in Vt and t in L[v] and any(w in Vt for w in G.adj[v])
        )
        report[t] = TightColorReport(lhs, 2 * b_t - d_t, b_t, d_t)
    return report


# --------------------------------------------------------------------------
# chain and verification


def certify(
    G: Graph,
    k: int,
    collect_all: bool = False,
    induced: Sequence[tuple[Sequence[int], int, int, Certificate]] = (),
) -> CertifyResult:
    """Try the rules in a fixed order; first success wins unless ``collect_all``.

    ``induced`` holds ``(H_vertices, inner_k, l, inner_certificate)`` entries
    for the induced-subgraph rule.
    """
    notes: list[str] = []
    attempts = [
        lambda: certify_block_m2(G, k, notes),
        lambda: certify_avg_degree(G, k, notes),
        lambda: certify_planar_family(G, k, notes),
        lambda: certify_surface(G, k, notes),
        lambda: certify_regular(G, None, k, notes),
        lambda: certify_regular_count(G, k, notes),
    ]
    for H_vertices, inner_k, l, inner in induced:
        if inner_k + l <= k:
            attempts.append(
                lambda H=H_vertices, ik=inner_k, ll=l, c=inner: _lifted_induced(
                    G, H, ik, ll, c, k, notes)
            )
    found = []
    for attempt in attempts:
        cert = attempt()
        if cert is not None:
            found.append(cert)
            if not collect_all:
                break
    return CertifyResult(found, [] if found and not collect_all else notes)


def _lifted_induced(G, H, inner_k, l, inner, k, notes):
    cert = certify_induced(G, H, inner_k, l, inner, notes)
    if cert is None or cert.k == k:
        return cert
    params = dict(cert.params, base_k=cert.k, monotonicity=f"M({cert.k}) implies M({k})")
    return Certificate(cert.rule, k, params)


def verify_certificate(G: Graph, cert: Certificate) -> bool:
    """Re-check a certificate's hypothesis against ``G`` and its metadata."""
    p = cert.params
    base = p.get("base_k", cert.k)
    if base > cert.k:
        return False
    rule = cert.rule
    if rule is Rule.AVG_DEGREE:
        return certify_avg_degree(G, cert.k) is not None
    if rule is Rule.BLOCK_M2:
        comp = p.get("component")
        for c, blocks in _component_blocks(G):
            if c == comp:
                return base == 2 and all(cls is not BlockClass.OTHER for _, cls in blocks)
        return False
    if rule in (Rule.PLANAR_M4, Rule.TRIANGLE_FREE_PLANAR_M3, Rule.OUTERPLANAR_M3):
        again = _planar_rule(G, rule, cert.k)
        return again is not None and again.params["base_k"] == base
    if rule is Rule.SURFACE:
        again = certify_surface(G, cert.k)
        return again is not None and again.params["base_k"] == base
    if rule is Rule.REGULAR_COROLLARY:
        again = certify_regular(G, p.get("regular_degree"), cert.k)
        return again is not None and again.params["base_k"] == base
    if rule is Rule.KK1_EXCEPTION:
        again = certify_regular_count(G, cert.k)
        return again is not None and again.params["base_k"] == base
    if rule is Rule.INDUCED_SUBGRAPH:
        try:
            inner = Certificate.from_json(p["inner"])
            again = certify_induced(G, p["H_vertices"], p["inner_k"], p["l"], inner)
        except (InputError, KeyError):
            return False
        return again is not None and again.k == base
    if rule is Rule.VARYING_LISTS_NECESSARY:
        try:
            L = ListAssignment(p["lists"])
        except (InputError, KeyError, TypeError):
            return False
        return len(L) == G.n and not varying_lists_necessary(G, L).unique_possible
    return False
