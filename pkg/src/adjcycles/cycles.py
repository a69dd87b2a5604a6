"""Short cycles, the adjacency relation between them, and cycle regions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import MultigraphUnsupported, VertexNotInterior, VertexNotOnCycle
from .plane import PlaneGraph


def canonical_key(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of ``seq`` or of its reversal."""
    k = len(seq)
    best = None
    for s in (seq, tuple(reversed(seq))):
        for i in range(k):
            r = s[i:] + s[:i]
            if best is None or r < best:
                best = r
    return best


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...] = field(compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def key(self) -> tuple[int, ...]:
        return canonical_key(self.vertices)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def reversed(self) -> Cycle:
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        es = tuple(reversed(self.edges))
        return Cycle(vs, es)

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))

    @classmethod
    def from_vertices(cls, g: PlaneGraph, seq: Iterable[int]) -> Cycle:
        vs = tuple(seq)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"{vs} is not a simple closed vertex sequence of length >= 3")
        edges = []
        for a, b in zip(vs, vs[1:] + vs[:1]):
            es = g.edges_between(a, b)
            if not es:
                raise ValueError(f"{a}-{b} is not an edge")
            edges.append(min(es))
        return cls(vs, tuple(edges))


# ---------------------------------------------------------------------- nonadjacency specs


@dataclass(frozen=True)
class NonadjacencySpec:
    """Unordered length pairs ``{i, j}`` whose cycles may not share an edge."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = frozenset(tuple(sorted(p)) for p in self.pairs)
        if any(i < 3 for i, _ in norm):
            raise ValueError("cycle lengths start at 3")
        object.__setattr__(self, "pairs", norm)

    @classmethod
    def default(cls) -> NonadjacencySpec:
        pairs = {(i, j) for i in range(3, 8) for j in range(i, 8) if i + j <= 10}
        pairs.add((5, 6))
        return cls(frozenset(pairs))

    @property
    def lmax(self) -> int:
        return max((j for _, j in self.pairs), default=0)

    def forbids(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.pairs

    def to_text(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in sorted(self.pairs))

    @classmethod
    def parse(cls, text: str) -> NonadjacencySpec:
        pairs = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line == "default":
                pairs |= cls.default().pairs
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ValueError(f"line {lineno}: expected 'i j' or 'default', got {raw!r}")
            pairs.add((int(parts[0]), int(parts[1])))
        return cls(frozenset(pairs))

    @classmethod
    def load(cls, source: str | Path) -> NonadjacencySpec:
        if str(source) == "default":
            return cls.default()
        return cls.parse(Path(source).read_text())


DEFAULT_SPEC = NonadjacencySpec.default()


# ---------------------------------------------------------------------- enumeration


def enumerate_cycles(g: PlaneGraph, lmax: int) -> list[Cycle]:
    """All simple cycles with at most ``lmax`` vertices, sorted by (length, key).

    Works on the underlying simple graph: a bundle of parallel edges contributes
    its lowest edge id.
    """
    if lmax < 3:
        raise ValueError("lmax must be at least 3")
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    found: list[Cycle] = []
    for s in g.vertices:
        path = [s]
        on_path = {s}
        # iterative DFS over neighbors larger than the start vertex
        stack = [iter([w for w in adj[s] if w > s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            path.append(nxt)
            on_path.add(nxt)
            if len(path) >= 3 and s in g.adjacency[nxt] and path[1] < nxt:
                found.append(Cycle.from_vertices(g, path))
            if len(path) < lmax:
                stack.append(iter([w for w in adj[nxt] if w > s and w not in on_path]))
            else:
                on_path.discard(path.pop())
    found.sort(key=lambda c: (len(c), c.key))
    return found


def cycles_by_edge(cycles: Iterable[Cycle]) -> dict[int, list[Cycle]]:
    index: dict[int, list[Cycle]] = {}
    for c in cycles:
        for e in c.edges:
            index.setdefault(e, []).append(c)
    return index


@dataclass(frozen=True)
class ClassVerdict:
    member: bool
    witness: tuple[Cycle, Cycle] | None = None

    @property
    def witness_lengths(self) -> tuple[int, int] | None:
        if self.witness is None:
            return None
        a, b = self.witness
        return (min(len(a), len(b)), max(len(a), len(b)))

    def describe(self) -> str:
        if self.member:
            return "member"
        i, j = self.witness_lengths
        a, b = self.witness
        return f"adjacent ({i},{j}) cycles {a} and {b}"


def check_class(g: PlaneGraph, spec: NonadjacencySpec = DEFAULT_SPEC) -> ClassVerdict:
    """Decide whether no two edge-sharing cycles have a forbidden length pair.

    A non-member's witness is the forbidden pair with the smallest total length,
    ties broken by cycle keys, so it does not depend on edge numbering.
    """
    if not g.is_simple:
        raise MultigraphUnsupported("class membership is defined for simple graphs only")
    # graphs are immutable, so the verdict is cached on the instance
    cache = g.__dict__.setdefault("_verdicts", {})
    if spec not in cache:
        cache[spec] = _check_class(g, spec)
    return cache[spec]


def _check_class(g: PlaneGraph, spec: NonadjacencySpec) -> ClassVerdict:
    if not spec.pairs or g.m < 3 or is_member(g, spec):
        return ClassVerdict(True)
    cycles = enumerate_cycles(g, spec.lmax)
    best = None
    for through in cycles_by_edge(cycles).values():
        for i, a in enumerate(through):
            for b in through[i + 1 :]:
                if spec.forbids(len(a), len(b)):
                    x, y = sorted((a, b), key=lambda c: (len(c), c.key))
                    rank = (len(x) + len(y), len(x), x.key, y.key)
                    if best is None or rank < best[0]:
                        best = (rank, x, y)
    if best is None:
        return ClassVerdict(True)
    return ClassVerdict(False, (best[1], best[2]))


def is_member(g: PlaneGraph, spec: NonadjacencySpec = DEFAULT_SPEC) -> bool:
    """Membership only; stops at the first forbidden pair.

    Skips building ``Cycle`` objects: each edge just collects the lengths of the
    cycles through it.
    """
    if not spec.pairs or g.m < 3:
        return True
    lmax = spec.lmax
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    by_edge: dict[tuple[int, int], list[int]] = {}
    for s in g.vertices:
        path = [s]
        on_path = {s}
        stack = [iter([w for w in adj[s] if w > s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            path.append(nxt)
            on_path.add(nxt)
            if len(path) >= 3 and path[1] < nxt and s in g.adjacency[nxt]:
                k = len(path)
                for i in range(k):
                    a, b = path[i], path[(i + 1) % k]
                    lengths = by_edge.setdefault((a, b) if a < b else (b, a), [])
                    if any(spec.forbids(k, x) for x in lengths):
                        return False
                    lengths.append(k)
            if len(path) < lmax:
                stack.append(iter([w for w in adj[nxt] if w > s and w not in on_path]))
            else:
                on_path.discard(path.pop())
    return True


# ---------------------------------------------------------------------- cycle geometry


def chords(g: PlaneGraph, c: Cycle) -> list[tuple[int, int]]:
    """Edges joining two non-consecutive vertices of ``c``."""
    pos = {v: i for i, v in enumerate(c.vertices)}
    k = len(c)
    out = []
    for a, b in g.edges:
        if a in pos and b in pos:
            gap = abs(pos[a] - pos[b])
            if gap not in (1, k - 1):
                out.append((min(a, b), max(a, b)))
    return sorted(out)


@dataclass(frozen=True)
class RegionPartition:
    interior: frozenset[int]
    exterior: frozenset[int]
    interior_faces: frozenset[int]


def region_partition(g: PlaneGraph, c: Cycle) -> RegionPartition:
    """Split ``V(G) - V(c)`` into the two sides of ``c``.

    Faces reachable from the outer face without crossing an edge of ``c`` are
    exterior; the remaining faces are interior.
    """
    cut = c.edge_set
    seen = {g.outer_face}
    queue = deque([g.outer_face])
    while queue:
        f = queue.popleft()
        for d in g.faces[f]:
            if d >> 1 in cut:
                continue
            h = g.face_of(d ^ 1)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    on_c = set(c.vertices)
    inner_faces = frozenset(f for f in range(g.num_faces) if f not in seen)
    interior, exterior = set(), set()
    for f in range(g.num_faces):
        side = exterior if f in seen else interior
        side.update(v for v in g.face_vertices(f) if v not in on_c)
    return RegionPartition(frozenset(interior), frozenset(exterior), inner_faces)


def is_separating(g: PlaneGraph, c: Cycle) -> bool:
    r = region_partition(g, c)
    return bool(r.interior) and bool(r.exterior)


def clockwise(g: PlaneGraph, c: Cycle) -> Cycle:
    """Orient ``c`` so that its interior lies on the right (clockwise traversal)."""
    a, b = c.vertices[0], c.vertices[1]
    e = c.edges[0]
    d = 2 * e if g.tail(2 * e) == a else 2 * e + 1
    assert g.head(d) == b
    r = region_partition(g, c)
    left_is_interior = g.face_of(d) in r.interior_faces
    return c.reversed() if left_is_interior else c


def neighbors_on_cycle(g: PlaneGraph, v: int, c: Cycle) -> tuple[int, bool]:
    """Number of neighbors of interior vertex ``v`` on ``c`` and whether exactly two
    such neighbors are consecutive on ``c``."""
    if v not in region_partition(g, c).interior:
        raise VertexNotInterior(f"vertex {v} is not inside cycle {c}")
    pos = {w: i for i, w in enumerate(c.vertices)}
    hits = sorted(pos[w] for w in g.adjacency[v] if w in pos)
    consecutive = len(hits) == 2 and (hits[1] - hits[0]) in (1, len(c) - 1)
    return len(hits), consecutive


def segment(c: Cycle, u: int, v: int) -> tuple[int, ...]:
    """Vertices of ``c`` from ``u`` to ``v`` following the stored orientation."""
    vs = c.vertices
    if u not in vs:
        raise VertexNotOnCycle(f"{u} is not on {c}")
    if v not in vs:
        raise VertexNotOnCycle(f"{v} is not on {c}")
    i, j = vs.index(u), vs.index(v)
    if j >= i:
        return vs[i : j + 1]
    return vs[i:] + vs[: j + 1]


def facial_face(g: PlaneGraph, c: Cycle) -> int | None:
    """Id of a face whose boundary walk is exactly ``c``, if any."""
    target = set(c.vertices)
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        if len(walk) == len(c) and set(walk) == target and len(set(walk)) == len(walk):
            if {d >> 1 for d in g.faces[f]} == c.edge_set:
                return f
    return None


def shortest_cycle(g: PlaneGraph, lmax: int) -> Cycle | None:
    if g.m < 3 or lmax < 3:
        return None
    cycles = enumerate_cycles(g, lmax)
    return cycles[0] if cycles else None
