"""Text and JSON file formats.

Graph files use DIMACS-style ``p``/``e`` lines with 1-based endpoints::

    c optional comment
    p 4 5
    e 1 2
    ...

``p edge <n> <m>`` (the classic DIMACS header) is accepted as well.  JSON
files index vertices from 0.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .errors import InputError
from .graph import Graph, Metadata, build_graph
from .solver import Coloring, ListAssignment


class FileFormatError(InputError):
    def __init__(self, path, line: int | None, message: str):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = str(path)
        self.line = line


def parse_col(text: str, path: str = "<string>") -> tuple[int, list[tuple[int, int]]]:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None:
                    raise FileFormatError(path, lineno, "second 'p' line")
                nums = parts[2:] if len(parts) == 4 and not parts[1].isdigit() else parts[1:]
                if len(nums) != 2:
                    raise FileFormatError(path, lineno, "expected 'p <n> <m>'")
                n, m = int(nums[0]), int(nums[1])
                if n < 0 or m < 0:
                    raise FileFormatError(path, lineno, "negative count in 'p' line")
            elif parts[0] == "e":
                if n is None:
                    raise FileFormatError(path, lineno, "'e' line before 'p' line")
                if len(parts) != 3:
                    raise FileFormatError(path, lineno, "expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise FileFormatError(path, lineno, f"endpoint outside 1..{n}")
                if u == v:
                    raise FileFormatError(path, lineno, f"self-loop at vertex {u}")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise FileFormatError(path, lineno, f"duplicate edge e {u} {v}")
                seen.add(key)
                edges.append((u - 1, v - 1))
            else:
                raise FileFormatError(path, lineno, f"unrecognised line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, FileFormatError):
                raise
            raise FileFormatError(path, lineno, f"non-integer field: {raw.strip()!r}") from None
    if n is None:
        raise FileFormatError(path, None, "missing 'p' line")
    if len(edges) != m:
        raise FileFormatError(path, None, f"header declares {m} edges, found {len(edges)}")
    return n, edges


def format_col(G: Graph) -> str:
    lines = [f"p {G.n} {G.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def _read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(path, None, f"cannot read file ({exc.strerror})") from None


def _read_json(path):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(path, exc.lineno, f"invalid JSON: {exc.msg}") from None


def read_metadata(path) -> Metadata:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise FileFormatError(path, None, "metadata must be a JSON object")
    try:
        return Metadata.from_dict(data)
    except InputError as exc:
        raise FileFormatError(path, None, str(exc)) from None


def read_graph(path, meta_path=None) -> Graph:
    n, edges = parse_col(_read_text(path), str(path))
    metadata = read_metadata(meta_path) if meta_path is not None else Metadata()
    G = build_graph(n, edges, metadata)
    if meta_path is not None:
        declared = _read_json(meta_path).get("triangle_free")
        if declared is not None and declared != G.triangle_free:
            raise FileFormatError(
                meta_path, None, f"declared triangle_free={declared} contradicts the graph"
            )
    return G


def write_graph(G: Graph, path, meta_path=None) -> None:
    Path(path).write_text(format_col(G), encoding="utf-8")
    if meta_path is not None:
        meta = G.metadata.to_dict()
        meta["triangle_free"] = G.triangle_free
        write_json(meta, meta_path)


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_lists(path, n: int | None = None) -> ListAssignment:
    data = _read_json(path)
    if not isinstance(data, dict) or not isinstance(data.get("lists"), list):
        raise FileFormatError(path, None, 'expected {"lists": [[...], ...]}')
    try:
        L = ListAssignment(data["lists"])
    except (InputError, TypeError) as exc:
        raise FileFormatError(path, None, str(exc)) from None
    if n is not None and len(L) != n:
        raise FileFormatError(path, None, f"{len(L)} lists for a graph with {n} vertices")
    return L


def read_coloring(path, n: int | None = None) -> Coloring:
    data = _read_json(path)
    colors = data.get("colors") if isinstance(data, dict) else None
    if not isinstance(colors, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in colors
    ):
        raise FileFormatError(path, None, 'expected {"colors": [int, ...]}')
    if n is not None and len(colors) != n:
        raise FileFormatError(path, None, f"{len(colors)} colors for a graph with {n} vertices")
    return tuple(colors)


def lists_to_json(L: ListAssignment) -> dict:
    return {"lists": [list(s) for s in L]}


def coloring_to_json(c: Coloring) -> dict:
    return {"colors": list(c)}


def iter_graph_files(directory):
    """Graph files (``*.col``) of a directory in name order."""
    for name in sorted(os.listdir(directory)):
        if name.endswith(".col"):
            yield Path(directory) / name
