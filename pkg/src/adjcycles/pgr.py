"""Reading and writing the ``pgr v1`` text format.

::

    # comment
    pgr 3 3
    1: 2 3
    2: 3 1
    3: 1 2
    outer: 1 3

Each vertex line gives its neighbors in clockwise order (parallel edges repeat).
``outer: u v [k]`` names the dart ``u -> v`` (``k``-th parallel copy, default 1)
whose left face is the outer face.  It may be omitted only for edgeless graphs.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import PgrSyntaxError
from .plane import GraphDoc, PlaneGraph, build_from_rotation

_INT = re.compile(r"-?\d+")


def _tokens(text: str, offset: int) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + offset + 1) for m in re.finditer(r"\S+", text)]


def _int(tok: str, line: int, col: int) -> int:
    if not _INT.fullmatch(tok):
        raise PgrSyntaxError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def parse(text: str) -> GraphDoc:
    header = None
    lists: dict[int, tuple[int, ...]] = {}
    outer = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if header is None:
            toks = _tokens(line, 0)
            if len(toks) != 3 or toks[0][0] != "pgr":
                raise PgrSyntaxError("expected header 'pgr <n> <m>'", lineno, toks[0][1] if toks else 1)
            n = _int(toks[1][0], lineno, toks[1][1])
            m = _int(toks[2][0], lineno, toks[2][1])
            if n < 1 or m < 0:
                raise PgrSyntaxError("vertex count must be positive and edge count non-negative", lineno, toks[1][1])
            header = (n, m)
            continue
        if ":" not in line:
            raise PgrSyntaxError("expected '<vertex>: <neighbors>' or 'outer: u v [k]'", lineno, len(line) - len(line.lstrip()) + 1)
        key, rest = line.split(":", 1)
        key_col = len(key) - len(key.lstrip()) + 1
        rest_off = len(key) + 1
        toks = _tokens(rest, rest_off)
        if outer is not None:
            raise PgrSyntaxError("nothing may follow the outer marker", lineno, key_col)
        if key.strip() == "outer":
            if not 2 <= len(toks) <= 3:
                raise PgrSyntaxError("outer marker takes 'u v [k]'", lineno, key_col)
            vals = [_int(t, lineno, c) for t, c in toks]
            outer = (vals[0], vals[1], vals[2] if len(vals) == 3 else 1)
            continue
        v = _int(key.strip(), lineno, key_col)
        if not 1 <= v <= header[0]:
            raise PgrSyntaxError(f"vertex {v} outside 1..{header[0]}", lineno, key_col)
        if v in lists:
            raise PgrSyntaxError(f"vertex {v} listed twice", lineno, key_col)
        nbrs = []
        for t, c in toks:
            w = _int(t, lineno, c)
            if w == v:
                raise PgrSyntaxError(f"vertex {v} lists itself as a neighbor", lineno, c)
            if not 1 <= w <= header[0]:
                raise PgrSyntaxError(f"neighbor {w} outside 1..{header[0]}", lineno, c)
            nbrs.append(w)
        lists[v] = tuple(nbrs)
    if header is None:
        raise PgrSyntaxError("missing header", max(last_line, 1))
    n, m = header
    missing = [v for v in range(1, n + 1) if v not in lists]
    if missing:
        raise PgrSyntaxError(f"no neighbor line for vertex {missing[0]}", max(last_line, 1))
    total = sum(len(x) for x in lists.values())
    if total != 2 * m:
        raise PgrSyntaxError(f"header declares {m} edges but lists contain {total} entries", 1)
    if m > 0 and outer is None:
        raise PgrSyntaxError("missing 'outer:' line", max(last_line, 1))
    return GraphDoc(n, m, tuple(lists[v] for v in range(1, n + 1)), outer)


def serialize(doc: GraphDoc) -> str:
    lines = [f"pgr {doc.n} {doc.m}"]
    for i, nbrs in enumerate(doc.adjacency, start=1):
        lines.append(f"{i}: {' '.join(map(str, nbrs))}".rstrip())
    if doc.outer is not None:
        u, v, k = doc.outer
        lines.append(f"outer: {u} {v}" + (f" {k}" if k != 1 else ""))
    return "\n".join(lines) + "\n"


def loads(text: str) -> PlaneGraph:
    return build_from_rotation(parse(text))


def dumps(g: PlaneGraph) -> str:
    return serialize(g.to_doc())


def load(path: str | Path) -> PlaneGraph:
    return loads(Path(path).read_text())


def dump(g: PlaneGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g))
