"""Exact enumeration of proper list colorings.

Backtracking visits vertices in index order and colours in ascending order,
so colorings come out lexicographically sorted.  Forward checking removes a
colour from the remaining lists of later neighbours and abandons a branch as
soon as some list runs empty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .graph import Graph

__all__ = [
    "ListAssignment",
    "Coloring",
    "Verdict",
    "Uniqueness",
    "is_proper",
    "iter_colorings",
    "enumerate_colorings",
    "uniqueness",
    "count_colorings",
]

Coloring = tuple  # tuple[int, ...], one positive colour per vertex


class ListAssignment(tuple):
    """One sorted tuple of positive integer colours per vertex."""

    def __new__(cls, lists: Iterable[Iterable[int]]):
        normalized = []
        for v, raw in enumerate(lists):
            items = list(raw)
            for c in items:
                if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                    raise InputError(f"list of vertex {v} contains non-positive colour {c!r}")
            s = tuple(sorted(set(items)))
            if not s:
                raise InputError(f"list of vertex {v} is empty")
            if len(s) != len(items):
                raise InputError(f"list of vertex {v} repeats a colour")
            normalized.append(s)
        return super().__new__(cls, normalized)

    def uniform_size(self, k: int) -> bool:
        return all(len(s) == k for s in self)

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self]

    @property
    def colors(self) -> list[int]:
        return sorted(set().union(*self)) if self else []

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> "ListAssignment":
        colors = tuple(colors)
        return cls([colors] * n)


class Verdict(str, enum.Enum):
    NONE = "none"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class Uniqueness:
    verdict: Verdict
    colorings: tuple[Coloring, ...]  # the sole coloring, or the two least

    @property
    def coloring(self) -> Coloring | None:
        return self.colorings[0] if self.verdict is Verdict.UNIQUE else None


def _check_lists(G: Graph, L: Sequence) -> None:
    if len(L) != G.n:
        raise InputError(f"{len(L)} lists given for a graph with {G.n} vertices")


def is_proper(G: Graph, L: Sequence, c: Sequence[int]) -> bool:
    """Direct check of both propriety conditions."""
    if len(c) != G.n or len(L) != G.n:
        return False
    if any(c[v] not in L[v] for v in range(G.n)):
        return False
    return all(c[u] != c[v] for u, v in G.edges)


def iter_colorings(G: Graph, L: ListAssignment) -> Iterator[Coloring]:
    """Yield every proper L-coloring in lexicographic order."""
    _check_lists(G, L)
    n = G.n
    later = [[w for w in G.adj[v] if w > v] for v in range(n)]
    blocked = [dict.fromkeys(s, 0) for s in L]
    avail = [len(s) for s in L]
    color = [0] * n

    def place(v: int) -> Iterator[Coloring]:
        if v == n:
            yield tuple(color)
            return
        for col in L[v]:
            if blocked[v][col]:
                continue
            touched = []
            dead = False
            for w in later[v]:
                b = blocked[w]
                if col in b:
                    if b[col] == 0:
                        avail[w] -= 1
                    b[col] += 1
                    touched.append(w)
                    if avail[w] == 0:
                        dead = True
            if not dead:
                color[v] = col
                yield from place(v + 1)
            for w in touched:
                b = blocked[w]
                b[col] -= 1
                if b[col] == 0:
                    avail[w] += 1
        color[v] = 0

    return place(0)


def enumerate_colorings(
    G: Graph, L: ListAssignment, cap: int | None = None
) -> tuple[list[Coloring], bool]:
    """Up to ``cap`` colorings plus a flag telling whether all were produced."""
    out: list[Coloring] = []
    it = iter_colorings(G, L)
    for c in it:
        if cap is not None and len(out) >= cap:
            return out, False
        out.append(c)
    return out, True


def uniqueness(G: Graph, L: ListAssignment) -> Uniqueness:
    found, _ = enumerate_colorings(G, L, cap=2)
    verdict = (Verdict.NONE, Verdict.UNIQUE, Verdict.MULTIPLE)[len(found)]
    return Uniqueness(verdict, tuple(found))


def count_colorings(G: Graph, L: ListAssignment, cap: int | None = None) -> int:
    """Number of proper L-colorings, saturating at ``cap``."""
    count = 0
    for _ in iter_colorings(G, L):
        count += 1
        if cap is not None and count >= cap:
            break
    return count
