"""Plane graphs stored as rotation systems.

Conventions used everywhere in the package:

* every edge ``e`` owns the two darts ``2e`` and ``2e + 1``; ``twin(d) == d ^ 1``;
* ``rotation(v)`` lists the darts leaving ``v`` in clockwise order;
* faces are traced twin-then-rotate, ``next(d) = next_at_tail(twin(d))``, which keeps
  the face on the left of every dart.  Inner faces therefore come out
  counterclockwise and the outer face walk is the outer boundary read clockwise.

Graphs are immutable.  Surgeries return a new graph; vertex ids survive unchanged,
except that an identification keeps the id of its first argument.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    AdjacentEndpoints,
    AsymmetricAdjacency,
    BadOuterMarker,
    DeletesAll,
    Disconnected,
    Disconnects,
    EmbeddingError,
    EulerViolation,
    LoopEdge,
    NotOnCommonFace,
    NotOnFace,
)


@dataclass(frozen=True)
class Dart:
    id: int
    tail: int
    head: int
    twin: int
    next_at_tail: int


@dataclass(frozen=True)
class GraphDoc:
    """Plain-data form of a ``pgr v1`` file (vertices are ``1..n``)."""

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]
    outer: tuple[int, int, int] | None = None


class PlaneGraph:
    """A connected plane (multi)graph without loops, given by its rotation system."""

    def __init__(self, rotation: Mapping[int, Sequence[int]], outer_dart: int | None = None):
        verts = tuple(sorted(rotation))
        if not verts:
            raise EmbeddingError("graph has no vertices")
        ndarts = sum(len(r) for r in rotation.values())
        tail = [-1] * ndarts
        rnext = [0] * ndarts
        rprev = [0] * ndarts
        for v in verts:
            ds = tuple(rotation[v])
            k = len(ds)
            for i, d in enumerate(ds):
                if not 0 <= d < ndarts or tail[d] != -1:
                    raise EmbeddingError(f"dart {d} at vertex {v} is out of range or repeated")
                tail[d] = v
                rnext[d] = ds[(i + 1) % k]
                rprev[d] = ds[i - 1]
        if ndarts % 2:
            raise EmbeddingError("odd number of darts")
        for d in range(0, ndarts, 2):
            if tail[d] == tail[d + 1]:
                raise LoopEdge(f"edge {d // 2} is a loop at vertex {tail[d]}")

        self._verts = verts
        self._tail = tuple(tail)
        self._rnext = tuple(rnext)
        self._rprev = tuple(rprev)
        self._rot = {v: tuple(rotation[v]) for v in verts}
        self._check_connected()

        face_of = [-1] * ndarts
        faces: list[tuple[int, ...]] = []
        for d in range(ndarts):
            if face_of[d] != -1:
                continue
            walk = []
            x = d
            while face_of[x] == -1:
                face_of[x] = len(faces)
                walk.append(x)
                x = rnext[x ^ 1]
            if x != d:
                raise EmbeddingError("face permutation is not a permutation")
            faces.append(tuple(walk))
        if ndarts == 0:
            faces.append(())
        self._faces = tuple(faces)
        self._face_of = tuple(face_of)

        n, m, f = len(verts), ndarts // 2, len(faces)
        if n - m + f != 2:
            raise EulerViolation(f"|V| - |E| + |F| = {n} - {m} + {f} != 2; rotation system is not spherical")

        if ndarts == 0:
            self._outer_dart = None
            self._outer_face = 0
        else:
            if outer_dart is None:
                outer_dart = 0
            if not 0 <= outer_dart < ndarts:
                raise BadOuterMarker(f"outer dart {outer_dart} does not exist")
            self._outer_dart = outer_dart
            self._outer_face = face_of[outer_dart]

    def _check_connected(self) -> None:
        start = self._verts[0]
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for d in self._rot[v]:
                w = self._tail[d ^ 1]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self._verts):
            raise Disconnected(f"graph has {len(self._verts) - len(seen)} vertices unreachable from {start}")

    # ------------------------------------------------------------------ basics

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._verts

    @property
    def n(self) -> int:
        return len(self._verts)

    @property
    def m(self) -> int:
        return len(self._tail) // 2

    @property
    def num_darts(self) -> int:
        return len(self._tail)

    def __contains__(self, v: object) -> bool:
        return v in self._rot

    def tail(self, d: int) -> int:
        return self._tail[d]

    def head(self, d: int) -> int:
        return self._tail[d ^ 1]

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    def next_at_tail(self, d: int) -> int:
        return self._rnext[d]

    def prev_at_tail(self, d: int) -> int:
        return self._rprev[d]

    def dart(self, d: int) -> Dart:
        return Dart(d, self._tail[d], self._tail[d ^ 1], d ^ 1, self._rnext[d])

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Heads of the darts at ``v`` in clockwise order (parallel edges repeat)."""
        return tuple(self._tail[d ^ 1] for d in self._rot[v])

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(self.neighbors(v)) for v in self._verts}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        t = self._tail
        return tuple((t[2 * e], t[2 * e + 1]) for e in range(self.m))

    @cached_property
    def _edge_index(self) -> dict[frozenset[int], tuple[int, ...]]:
        index: dict[frozenset[int], list[int]] = {}
        for e, (a, b) in enumerate(self.edges):
            index.setdefault(frozenset((a, b)), []).append(e)
        return {k: tuple(v) for k, v in index.items()}

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._edge_index.get(frozenset((u, v)), ())

    @cached_property
    def is_simple(self) -> bool:
        return all(len(es) == 1 for es in self._edge_index.values())

    # ------------------------------------------------------------------ faces

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self._faces

    @property
    def num_faces(self) -> int:
        return len(self._faces)

    def face_of(self, d: int) -> int:
        """Face lying to the left of dart ``d``."""
        return self._face_of[d]

    def face_degree(self, f: int) -> int:
        return len(self._faces[f])

    def face_vertices(self, f: int) -> tuple[int, ...]:
        """Boundary walk of face ``f`` as a vertex sequence (cut vertices repeat)."""
        if not self._faces[f]:
            return (self._verts[0],)
        return tuple(self._tail[d] for d in self._faces[f])

    def corners(self, v: int) -> tuple[int, ...]:
        """Faces around ``v`` in clockwise order, one per corner.

        The corner labelled by dart ``d`` sits between ``prev_at_tail(d)`` and ``d``,
        so consecutive corners share the edge of the dart between them.
        """
        if not self._rot[v]:
            return (self._outer_face,)
        return tuple(self._face_of[d] for d in self._rot[v])

    def incident_faces(self, v: int) -> tuple[int, ...]:
        return tuple(dict.fromkeys(self.corners(v)))

    @property
    def outer_face(self) -> int:
        return self._outer_face

    @property
    def outer_dart(self) -> int | None:
        return self._outer_dart

    @cached_property
    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.face_vertices(self._outer_face))

    def is_outer_vertex(self, v: int) -> bool:
        return v in self.outer_vertices

    @cached_property
    def inner_vertices(self) -> frozenset[int]:
        return frozenset(self._verts) - self.outer_vertices

    def inner_faces(self) -> list[int]:
        return [f for f in range(len(self._faces)) if f != self._outer_face]

    @cached_property
    def outer_boundary_is_cycle(self) -> bool:
        walk = self.face_vertices(self._outer_face)
        return len(walk) >= 3 and len(set(walk)) == len(walk)

    def euler_characteristic(self) -> int:
        return self.n - self.m + self.num_faces

    # ------------------------------------------------------------------ derived graphs

    def with_outer_face(self, f: int) -> PlaneGraph:
        """Same embedding with face ``f`` designated as the outer face."""
        if not 0 <= f < len(self._faces):
            raise BadOuterMarker(f"no face {f}")
        if not self._faces[f]:
            return self
        return PlaneGraph(self._rot, outer_dart=self._faces[f][0])

    def to_doc(self) -> GraphDoc:
        label = {v: i + 1 for i, v in enumerate(self._verts)}
        adjacency = tuple(tuple(label[self._tail[d ^ 1]] for d in self._rot[v]) for v in self._verts)
        outer = None
        if self._outer_dart is not None:
            d = self._outer_dart
            u, w = self._tail[d], self._tail[d ^ 1]
            k = 1 + sum(1 for x in self._rot[u][: self._rot[u].index(d)] if self._tail[x ^ 1] == w)
            outer = (label[u], label[w], k)
        return GraphDoc(self.n, self.m, adjacency, outer)

    def relabeled(self) -> tuple[PlaneGraph, dict[int, int]]:
        """Copy with vertices renamed to ``1..n`` in sorted order, plus the renaming."""
        label = {v: i + 1 for i, v in enumerate(self._verts)}
        rot = {label[v]: self._rot[v] for v in self._verts}
        return PlaneGraph(rot, self._outer_dart), label

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self._verts == other._verts
            and self._tail == other._tail
            and self._rot == other._rot
            and self._outer_face_key() == other._outer_face_key()
        )

    def __hash__(self) -> int:
        return hash((self._verts, self._tail, self._outer_face_key()))

    def _outer_face_key(self):
        return frozenset(self._faces[self._outer_face])

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={self.num_faces}, outer={self._outer_face})"


# ---------------------------------------------------------------------- construction


def build_from_rotation(doc: GraphDoc) -> PlaneGraph:
    """Validate a :class:`GraphDoc` and turn it into a :class:`PlaneGraph`.

    Parallel edges are listed with repetition, so the pairing of the copies is
    not written down.  Around ``u`` and ``v`` the copies of a bundle appear in
    mutually reversed cyclic order in any plane embedding; the first cyclic shift
    (per bundle) that yields a spherical rotation system is used.
    """
    n = doc.n
    if len(doc.adjacency) != n:
        raise EmbeddingError(f"expected {n} neighbor lists, got {len(doc.adjacency)}")
    occurrences: dict[tuple[int, int], list[int]] = {}
    total = 0
    for i, nbrs in enumerate(doc.adjacency, start=1):
        for pos, j in enumerate(nbrs):
            if j == i:
                raise LoopEdge(f"vertex {i} lists itself as a neighbor")
            if not 1 <= j <= n:
                raise EmbeddingError(f"vertex {i} lists unknown neighbor {j}")
            occurrences.setdefault((i, j), []).append(pos)
            total += 1
    for (i, j), pos in occurrences.items():
        back = occurrences.get((j, i), ())
        if len(back) != len(pos):
            raise AsymmetricAdjacency(f"{i} lists {j} {len(pos)} time(s) but {j} lists {i} {len(back)} time(s)")
    if total != 2 * doc.m:
        raise EmbeddingError(f"header says {doc.m} edges but lists describe {total // 2}")

    bundles = sorted((i, j) for (i, j), pos in occurrences.items() if i < j and len(pos) > 1)
    shift_choices = [range(len(occurrences[b])) for b in bundles]
    last_error: EmbeddingError | None = None
    for shifts in itertools.product(*shift_choices):
        shift = dict(zip(bundles, shifts))
        try:
            return _build_with_pairing(doc, occurrences, shift)
        except EulerViolation as exc:
            last_error = exc
    assert last_error is not None
    raise last_error


def _build_with_pairing(doc, occurrences, shift) -> PlaneGraph:
    dart_at: dict[tuple[int, int], int] = {}
    next_edge = 0
    for i, nbrs in enumerate(doc.adjacency, start=1):
        for pos, j in enumerate(nbrs):
            if j < i or (i, pos) in dart_at:
                continue
            mine = occurrences[(i, j)]
            theirs = occurrences[(j, i)]
            k = mine.index(pos)
            c = len(mine)
            partner = theirs[(shift.get((i, j), 0) - k) % c] if c > 1 else theirs[0]
            dart_at[(i, pos)] = 2 * next_edge
            dart_at[(j, partner)] = 2 * next_edge + 1
            next_edge += 1
    rotation = {i: [dart_at[(i, pos)] for pos in range(len(nbrs))] for i, nbrs in enumerate(doc.adjacency, start=1)}
    outer_dart = None
    if doc.outer is not None:
        u, v, k = doc.outer
        if not (1 <= u <= doc.n and 1 <= v <= doc.n):
            raise BadOuterMarker(f"outer marker names unknown vertex in {u} {v}")
        positions = [p for p, j in enumerate(doc.adjacency[u - 1]) if j == v]
        if not 1 <= k <= len(positions):
            raise BadOuterMarker(f"no dart {u}->{v} copy {k}")
        outer_dart = dart_at[(u, positions[k - 1])]
    elif doc.m > 0:
        raise BadOuterMarker("graph with edges needs an outer marker")
    return PlaneGraph(rotation, outer_dart)


def from_rotation_lists(rotation: Mapping[int, Sequence[int]], outer: tuple[int, int] | None = None) -> PlaneGraph:
    """Build a simple plane graph from clockwise neighbor lists keyed by vertex id."""
    verts = sorted(rotation)
    dart: dict[tuple[int, int], int] = {}
    e = 0
    for u in verts:
        if len(set(rotation[u])) != len(rotation[u]):
            raise EmbeddingError(f"parallel edges at {u}: use build_from_rotation for multigraphs")
        for w in rotation[u]:
            if w == u:
                raise LoopEdge(f"vertex {u} lists itself")
            if (u, w) in dart:
                continue
            if u not in rotation.get(w, ()):
                raise AsymmetricAdjacency(f"{u} lists {w} but not conversely")
            dart[(u, w)] = 2 * e
            dart[(w, u)] = 2 * e + 1
            e += 1
    rot = {u: [dart[(u, w)] for w in rotation[u]] for u in verts}
    outer_dart = None
    if outer is not None:
        if outer not in dart:
            raise BadOuterMarker(f"no dart {outer[0]}->{outer[1]}")
        outer_dart = dart[outer]
    return PlaneGraph(rot, outer_dart)


# ---------------------------------------------------------------------- surgery helpers


def _rebuild(
    rot: Mapping[int, Sequence[Hashable]],
    twin_of: Mapping[Hashable, Hashable],
    outer_candidates: Iterable[Hashable],
) -> PlaneGraph:
    """Renumber darts compactly and build a graph.

    ``rot`` may use old integer darts (twin ``d ^ 1``) and new hashable keys whose
    twins come from ``twin_of``.  The first surviving outer candidate becomes the
    outer dart.
    """
    number: dict[Hashable, int] = {}
    e = 0
    for v in sorted(rot):
        for key in rot[v]:
            if key in number:
                continue
            other = twin_of[key] if key in twin_of else key ^ 1
            number[key] = 2 * e
            number[other] = 2 * e + 1
            e += 1
    new_rot = {v: [number[k] for k in rot[v]] for v in rot}
    present = {k for ks in rot.values() for k in ks}
    outer = None
    for key in outer_candidates:
        if key in present:
            outer = number[key]
            break
    return PlaneGraph(new_rot, outer)


def _outer_candidates(g: PlaneGraph) -> list[int]:
    if g.outer_dart is None:
        return []
    walk = g.faces[g.outer_face]
    i = walk.index(g.outer_dart)
    return list(walk[i:] + walk[:i])


def _corner_dart(g: PlaneGraph, v: int, f: int) -> int:
    """Dart leaving ``v`` that labels the first corner of ``v`` on face ``f``."""
    for d in g.faces[f]:
        if g.tail(d) == v:
            return d
    raise NotOnFace(f"vertex {v} is not on face {f}")


def _face_check(g: PlaneGraph, f: int) -> None:
    if not 0 <= f < g.num_faces:
        raise NotOnFace(f"no face {f}")


def identify_vertices(g: PlaneGraph, u: int, v: int, bridge_face: int) -> PlaneGraph:
    """Merge ``v`` into ``u`` across ``bridge_face``; the merged vertex keeps id ``u``.

    The rotation of the merged vertex is ``u``'s rotation opened at its corner in
    the bridge face followed by ``v``'s rotation opened the same way.  Parallel
    edges created at the merged vertex are collapsed to one edge.
    """
    _face_check(g, bridge_face)
    if u == v:
        raise AdjacentEndpoints("cannot identify a vertex with itself")
    if u not in g or v not in g:
        raise NotOnCommonFace(f"unknown vertex in {u}, {v}")
    if g.has_edge(u, v):
        raise AdjacentEndpoints(f"{u} and {v} are adjacent; identifying them would create a loop")
    walk = g.face_vertices(bridge_face)
    if u not in walk or v not in walk:
        raise NotOnCommonFace(f"{u} and {v} are not both on face {bridge_face}")
    bu = _corner_dart(g, u, bridge_face)
    bv = _corner_dart(g, v, bridge_face)

    def opened(x: int, b: int) -> list[int]:
        r = g.rotation(x)
        i = r.index(b)
        return list(r[i:] + r[:i])

    merged = opened(u, bu) + opened(v, bv)
    rot: dict[int, list[int]] = {x: list(g.rotation(x)) for x in g.vertices if x != v}
    rot[u] = merged
    kept: dict[int, int] = {}
    dropped: set[int] = set()
    for d in merged:
        w = g.head(d)
        if w in kept:
            dropped.add(d)
        else:
            kept[w] = d
    if dropped:
        rot[u] = [d for d in merged if d not in dropped]
        gone = {d ^ 1 for d in dropped}
        for w in {g.head(d) for d in dropped}:
            rot[w] = [d for d in rot[w] if d not in gone]
    return _rebuild(rot, {}, _outer_candidates(g) + list(range(g.num_darts)))


def delete_vertices(g: PlaneGraph, S: Iterable[int]) -> PlaneGraph:
    """Remove the vertices in ``S`` and their edges; faces around them merge."""
    S = set(S)
    unknown = S - set(g.vertices)
    if unknown:
        raise EmbeddingError(f"unknown vertices {sorted(unknown)}")
    if S >= set(g.vertices):
        raise DeletesAll("cannot delete every vertex")
    keep = [v for v in g.vertices if v not in S]
    rot = {v: [d for d in g.rotation(v) if g.head(d) not in S] for v in keep}
    _require_connected(rot, g, Disconnects)
    removed = [d for d in range(g.num_darts) if g.tail(d) in S or g.head(d) in S]
    return _rebuild(rot, {}, _merged_outer_candidates(g, removed))


def remove_edges(g: PlaneGraph, edges: Iterable[int]) -> PlaneGraph:
    """Delete edges by id; the graph must stay connected."""
    gone = set()
    for e in edges:
        gone.update((2 * e, 2 * e + 1))
    rot = {v: [d for d in g.rotation(v) if d not in gone] for v in g.vertices}
    _require_connected(rot, g, Disconnects)
    return _rebuild(rot, {}, _merged_outer_candidates(g, sorted(gone)))


def _require_connected(rot, g: PlaneGraph, exc) -> None:
    start = next(iter(rot))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for d in rot[v]:
            w = g.head(d)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(rot):
        raise exc("result would be disconnected")


def _merged_outer_candidates(g: PlaneGraph, removed: Sequence[int]) -> list[int]:
    """Outer-dart candidates after deleting darts: old outer darts first, then any
    dart whose face merges with the outer face."""
    parent = list(range(g.num_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in removed:
        a, b = find(g.face_of(d)), find(g.face_of(d ^ 1))
        if a != b:
            parent[a] = b
    root = find(g.outer_face)
    rest = [d for d in range(g.num_darts) if find(g.face_of(d)) == root]
    return _outer_candidates(g) + rest


def insert_edge_at_corners(g: PlaneGraph, du: int, dv: int) -> PlaneGraph:
    """Add an edge joining the corners labelled by darts ``du`` and ``dv``.

    Both corners must lie on the same face.  The new dart at ``tail(du)`` is
    placed immediately before ``du`` in clockwise order, likewise at ``tail(dv)``.
    """
    u, v = g.tail(du), g.tail(dv)
    if u == v:
        raise LoopEdge(f"edge would be a loop at {u}")
    if g.face_of(du) != g.face_of(dv):
        raise NotOnFace("corners are on different faces")
    a, b = ("new", 0), ("new", 1)
    rot: dict[int, list] = {x: list(g.rotation(x)) for x in g.vertices}
    rot[u].insert(rot[u].index(du), a)
    rot[v].insert(rot[v].index(dv), b)
    return _rebuild(rot, {a: b, b: a}, _outer_candidates(g))


def add_edge_in_face(g: PlaneGraph, u: int, v: int, f: int) -> PlaneGraph:
    """Split face ``f`` by a new edge ``uv`` drawn inside it."""
    _face_check(g, f)
    if u == v:
        raise LoopEdge(f"edge would be a loop at {u}")
    walk = g.face_vertices(f)
    if u not in walk or v not in walk or not g.faces[f]:
        raise NotOnFace(f"{u} and {v} are not both on face {f}")
    return insert_edge_at_corners(g, _corner_dart(g, u, f), _corner_dart(g, v, f))


def add_pendant(g: PlaneGraph, corner: int | None = None, u: int | None = None) -> tuple[PlaneGraph, int]:
    """Attach a new degree-1 vertex at a corner (given by its dart, or at ``u`` for edgeless graphs).

    Returns the new graph and the new vertex id (``max(V) + 1``).
    """
    x = max(g.vertices) + 1
    a, b = ("new", 0), ("new", 1)
    rot: dict[int, list] = {w: list(g.rotation(w)) for w in g.vertices}
    if corner is None:
        if g.m:
            raise EmbeddingError("corner dart required when the graph has edges")
        u = g.vertices[0] if u is None else u
        rot[u] = [a]
    else:
        u = g.tail(corner)
        rot[u].insert(rot[u].index(corner), a)
    rot[x] = [b]
    return _rebuild(rot, {a: b, b: a}, _outer_candidates(g) + [a]), x


def subdivide_edge(g: PlaneGraph, e: int) -> tuple[PlaneGraph, int]:
    """Replace edge ``e`` by a path of length two through a new vertex."""
    d0, d1 = 2 * e, 2 * e + 1
    x = max(g.vertices) + 1
    a0, a1, b0, b1 = ("s", 0), ("s", 1), ("s", 2), ("s", 3)
    rot: dict[int, list] = {w: list(g.rotation(w)) for w in g.vertices}
    u, v = g.tail(d0), g.tail(d1)
    rot[u][rot[u].index(d0)] = a0
    rot[v][rot[v].index(d1)] = b0
    rot[x] = [a1, b1]
    twins = {a0: a1, a1: a0, b0: b1, b1: b0}
    cands = [{d0: a0, d1: b0}.get(d, d) for d in _outer_candidates(g)]
    return _rebuild(rot, twins, cands), x


# ---------------------------------------------------------------------- canonical codes


def _traverse_code(rot: tuple[int, ...], start: int, best: list[int] | None) -> list[int] | None:
    """BFS numbering of darts from ``start``; returns the code, or ``None`` as soon as
    it is known not to beat ``best``."""
    number = [-1] * len(rot)
    number[start] = 0
    order = [start]
    code: list[int] = []
    smaller = best is None
    i = 0
    while i < len(order):
        x = order[i]
        for y in (x ^ 1, rot[x]):
            k = number[y]
            if k < 0:
                k = number[y] = len(order)
                order.append(y)
            if not smaller:
                b = best[len(code)]
                if k > b:
                    return None
                if k < b:
                    smaller = True
            code.append(k)
        i += 1
    return code if smaller else None


def canonical_code(g: PlaneGraph, rooted: bool = False) -> tuple:
    """Isomorphism code of the embedding, minimised over start darts and reflections.

    With ``rooted=True`` the outer face is part of the structure: only darts on the
    outer face (or, for the mirror image, darts whose twin is on it) may start.
    """
    if g.m == 0:
        return (g.n,)
    nd = g.num_darts
    face_of = g._face_of
    if rooted:
        of = g.outer_face
        starts = [(d, False) for d in range(nd) if face_of[d] == of]
        starts += [(d, True) for d in range(nd) if face_of[d ^ 1] == of]
    else:
        tail = g._tail
        deg = {v: len(r) for v, r in g._rot.items()}
        fdeg = [len(g._faces[face_of[d]]) for d in range(nd)]
        invs = []
        for d in range(nd):
            a, b = fdeg[d], fdeg[d ^ 1]
            invs.append((deg[tail[d]], deg[tail[d ^ 1]], a, b) if a <= b else (deg[tail[d]], deg[tail[d ^ 1]], b, a))
        low = min(invs)
        starts = [(d, mirror) for d in range(nd) if invs[d] == low for mirror in (False, True)]
    best: list[int] | None = None
    for d, mirror in starts:
        code = _traverse_code(g._rprev if mirror else g._rnext, d, best)
        if code is not None:
            best = code
    assert best is not None
    return (g.n, g.m, tuple(best))


def is_isomorphic(a: PlaneGraph, b: PlaneGraph, rooted: bool = True) -> bool:
    return canonical_code(a, rooted) == canonical_code(b, rooted)


# ---------------------------------------------------------------------- inspection


def trace_faces(g: PlaneGraph) -> list[tuple[int, tuple[int, ...], int]]:
    """``(face id, dart walk, degree)`` for every face; bridges count twice."""
    return [(f, walk, len(walk)) for f, walk in enumerate(g.faces)]


def to_dot(g: PlaneGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        style = ' [shape=doublecircle]' if g.is_outer_vertex(v) else ""
        lines.append(f"  {v}{style};")
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bfs_distances(g: PlaneGraph, source: int, removed: Iterable[int] = ()) -> dict[int, int]:
    removed = set(removed)
    if source in removed:
        return {}
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in dist and w not in removed:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist
