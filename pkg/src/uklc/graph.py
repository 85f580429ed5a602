"""Simple undirected graphs and the structural queries the certificates need.

Vertices are ``0..n-1``.  A :class:`Graph` is immutable once built; edges are
stored as ``(u, v)`` pairs with ``u < v`` in sorted order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BudgetError, InputError

__all__ = [
    "Metadata",
    "Graph",
    "BlockClass",
    "BlockDecomposition",
    "build_graph",
    "average_degree",
    "block_decomposition",
    "classify_block",
    "chromatic_number",
    "triangle_free",
    "is_k_regular",
    "min_degree",
    "max_degree",
    "connected_components",
    "induced_subgraph",
    "find_cliques",
    "complement",
]

CHROMATIC_CAP = 24


@dataclass(frozen=True)
class Metadata:
    """Caller-declared embedding facts.  None means "not declared".

    These flags are trusted, not tested; certificates that rely on them
    record the assumption.
    """

    planar: bool | None = None
    outerplanar: bool | None = None
    euler_genus: int | None = None

    def __post_init__(self):
        if self.euler_genus is not None and self.euler_genus < 0:
            raise InputError(f"euler_genus must be non-negative, got {self.euler_genus}")

    @classmethod
    def from_dict(cls, data: dict | None) -> "Metadata":
        data = dict(data or {})
        data.pop("triangle_free", None)  # computed; checked by the caller
        unknown = set(data) - {"planar", "outerplanar", "euler_genus"}
        if unknown:
            raise InputError(f"unknown metadata keys: {sorted(unknown)}")
        for key in ("planar", "outerplanar"):
            if key in data and data[key] is not None and not isinstance(data[key], bool):
                raise InputError(f"metadata {key!r} must be a boolean")
        genus = data.get("euler_genus")
        if genus is not None and (isinstance(genus, bool) or not isinstance(genus, int)):
            raise InputError("metadata 'euler_genus' must be an integer")
        return cls(**data)

    def to_dict(self) -> dict:
        return {
            key: value
            for key, value in (
                ("planar", self.planar),
                ("outerplanar", self.outerplanar),
                ("euler_genus", self.euler_genus),
            )
            if value is not None
        }


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    metadata: Metadata = field(default_factory=Metadata)
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _adjset: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_adjset", tuple(frozenset(a) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    @property
    def triangle_free(self) -> bool:
        return triangle_free(self)

    def with_metadata(self, **flags) -> "Graph":
        return Graph(self.n, self.edges, replace(self.metadata, **flags))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, metadata={self.metadata.to_dict()})"


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    metadata: Metadata | dict | None = None,
) -> Graph:
    """Validate an edge list and return a normalized :class:`Graph`."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"vertex count must be a non-negative integer, got {n!r}")
    if not isinstance(metadata, Metadata):
        metadata = Metadata.from_dict(metadata)
    seen: set[tuple[int, int]] = set()
    for edge in edges:
        if len(edge) != 2:
            raise InputError(f"edge {tuple(edge)!r} does not have two endpoints")
        u, v = (int(x) for x in edge)
        if u == v:
            raise InputError(f"self-loop at edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise InputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)), metadata)


def average_degree(G: Graph) -> Fraction:
    """Exact ``2|E|/n``."""
    if G.n == 0:
        raise InputError("average degree of the empty graph is undefined")
    return Fraction(2 * G.m, G.n)


def min_degree(G: Graph) -> int:
    return min(G.degrees) if G.n else 0


def max_degree(G: Graph) -> int:
    return max(G.degrees) if G.n else 0


def is_k_regular(G: Graph, k: int) -> bool:
    return all(d == k for d in G.degrees)


def triangle_free(G: Graph) -> bool:
    for u, v in G.edges:
        # common neighbour above v closes a triangle; checking all is cheap
        if G._adjset[u] & G._adjset[v]:
            return False
    return True


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..len-1`` in ascending order.

    Returns the subgraph and the list mapping new labels to old ones.  The
    embedding metadata is inherited, since it is closed under subgraphs.
    """
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} outside 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return build_graph(len(verts), edges, G.metadata), verts


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(G.n), 2) if not G.has_edge(u, v)]
    return build_graph(G.n, edges)


def find_cliques(G: Graph, size: int) -> list[tuple[int, ...]]:
    """All cliques with exactly ``size`` vertices, as sorted tuples in lex order."""
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], candidates: list[int]):
        if len(clique) == size:
            out.append(tuple(clique))
            return
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i < size:
                break
            extend(clique + [v], [w for w in candidates[i + 1:] if G.has_edge(v, w)])

    if size >= 1:
        extend([], list(range(G.n)))
    return out


# --------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]


class BlockClass(str, enum.Enum):
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    OTHER = "Other"


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices).

    Iterative Hopcroft-Tarjan.  Isolated vertices are reported as one-vertex
    blocks so that every vertex belongs to some block.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not G.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(G.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                verts: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(tuple(sorted(verts)))
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def classify_block(G: Graph, block: Iterable[int]) -> BlockClass:
    """Classify a block of ``G`` by its induced subgraph.

    Priority when several apply: Complete, then CompleteBipartite, then Cycle
    (so K3 is Complete and C4 is CompleteBipartite).
    """
    verts = tuple(sorted(set(block)))
    if verts not in block_decomposition(G).blocks:
        raise InputError(f"{list(verts)} is not a block of the graph")
    return _classify_vertex_set(G, verts)


def _classify_vertex_set(G: Graph, verts: Sequence[int]) -> BlockClass:
    vs = set(verts)
    p = len(verts)
    deg = {v: sum(1 for w in G.adj[v] if w in vs) for v in verts}
    m = sum(deg.values()) // 2
    if m == p * (p - 1) // 2:
        return BlockClass.COMPLETE
    # two-colour the induced subgraph (blocks are connected)
    side = {verts[0]: 0}
    queue = [verts[0]]
    bipartite = True
    while queue and bipartite:
        x = queue.pop()
        for y in G.adj[x]:
            if y not in vs:
                continue
            if y not in side:
                side[y] = 1 - side[x]
                queue.append(y)
            elif side[y] == side[x]:
                bipartite = False
                break
    if bipartite and len(side) == p:
        a = sum(1 for v in verts if side[v] == 0)
        if a * (p - a) == m:
            return BlockClass.COMPLETE_BIPARTITE
    if p >= 3 and m == p and all(d == 2 for d in deg.values()):
        return BlockClass.CYCLE
    return BlockClass.OTHER


# --------------------------------------------------------------------------
# chromatic number


def _max_clique_size(G: Graph) -> int:
    best = 0

    def grow(size: int, candidates: list[int]):
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        for i, v in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            grow(size + 1, [w for w in candidates[i + 1:] if G.has_edge(v, w)])

    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    grow(0, order)
    return best


def _dsatur_upper(G: Graph) -> int:
    color = [0] * G.n
    sat: list[set[int]] = [set() for _ in range(G.n)]
    for _ in range(G.n):
        v = max(
            (u for u in range(G.n) if not color[u]),
            key=lambda u: (len(sat[u]), G.degree(u), -u),
        )
        c = 1
        while c in sat[v]:
            c += 1
        color[v] = c
        for w in G.adj[v]:
            sat[w].add(c)
    return max(color, default=0)


def _colorable(G: Graph, c: int) -> bool:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in G.adj[v] if pos[w] < pos[v]] for v in order]
    color = [0] * G.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in earlier[i]}
        # new colours are interchangeable: only try the next unused one
        for col in range(1, min(used + 1, c) + 1):
            if col not in taken:
                color[v] = col
                if place(i + 1, max(used, col)):
                    return True
        color[v] = 0
        return False

    return place(0, 0)


def chromatic_number(G: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number by branch and bound.

    Raises :class:`BudgetError` when ``G.n`` exceeds ``cap``.
    """
    if G.n > cap:
        raise BudgetError(f"chromatic_number limited to {cap} vertices, graph has {G.n}")
    if G.n == 0:
        return 0
    lower = _max_clique_size(G)
    upper = _dsatur_upper(G)
    for c in range(lower, upper):
        if _colorable(G, c):
            return c
    return upper
