"""Precoloring-extension surgeries with guarded post-checks and coloring pull-backs.

Every step is validated on the reduced graph itself: fewer vertices plus edges,
outer boundary still a chordless cycle of length at most 11 carrying exactly the
transported precolored vertices, the transported precoloring still proper, and
the reduced graph still in the class.  A candidate failing any check is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping

from .cycles import DEFAULT_SPEC, Cycle, NonadjacencySpec, check_class, chords
from .errors import EmbeddingError, GuardFailed, NotInClass, PullBackImproper
from .plane import PlaneGraph, add_edge_in_face, delete_vertices, identify_vertices, remove_edges

COLORS = (1, 2, 3)
MAX_OUTER = 11


class Kind(str, Enum):
    CHORD_DELETE = "ChordDelete"
    FOUR_FACE_IDENTIFY = "FourFaceIdentify"
    SIX_FACE_IDENTIFY = "SixFaceIdentify"
    FIVE_FACE_EDGE_ADD = "FiveFaceEdgeAdd"
    FIVE_FACE_IDENTIFY = "FiveFaceIdentify"


@dataclass(frozen=True)
class ReductionStep:
    kind: Kind
    source: PlaneGraph
    result: PlaneGraph
    # each vertex of the result -> the source vertices it stands for
    correspondence: dict[int, tuple[int, ...]]
    # removed vertices with their source neighbors, in pull-back order
    deleted: tuple[tuple[int, tuple[int, ...]], ...]
    params: tuple[tuple[str, object], ...]
    precoloring: dict[int, int]
    evidence: tuple[str, ...] = field(default=())

    @property
    def reduced_precoloring(self) -> dict[int, int]:
        """The precoloring carried over to the result's outer boundary."""
        out = {}
        for w, group in self.correspondence.items():
            for x in group:
                if x in self.precoloring:
                    out[w] = self.precoloring[x]
        return out

    def trace_line(self) -> str:
        ps = " ".join(f"{k}={_fmt(v)}" for k, v in self.params)
        return (
            f"{self.kind.value} {ps} V {self.source.n}->{self.result.n} "
            f"E {self.source.m}->{self.result.m}"
        )


def _fmt(v: object) -> str:
    if isinstance(v, (tuple, list)):
        return "-".join(map(str, v))
    return str(v)


def _outer_cycle(g: PlaneGraph) -> Cycle | None:
    if not g.outer_boundary_is_cycle:
        return None
    return Cycle.from_vertices(g, g.face_vertices(g.outer_face))


def _redesignate_outer(g: PlaneGraph, vertex_set: frozenset[int]) -> PlaneGraph | None:
    """Make the face whose boundary is a cycle on exactly ``vertex_set`` the outer face."""
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        if len(walk) == len(vertex_set) and set(walk) == vertex_set:
            return g.with_outer_face(f)
    return None


def _proper_on(g: PlaneGraph, coloring: Mapping[int, int]) -> bool:
    return all(coloring[a] != coloring[b] for a, b in g.edges if a in coloring and b in coloring)


# ---------------------------------------------------------------------- candidate builders


def _chord_delete(g: PlaneGraph, c0: Cycle, pre: dict[int, int]) -> Iterator[ReductionStep]:
    ch = chords(g, c0)
    if not ch:
        return
    if any(pre.get(a) == pre.get(b) for a, b in ch):
        return
    edges = [min(g.edges_between(a, b)) for a, b in ch]
    res = remove_edges(g, edges)
    yield ReductionStep(
        Kind.CHORD_DELETE, g, res, {v: (v,) for v in res.vertices}, (), (("chords", [f"{a}/{b}" for a, b in ch]),), pre
    )


def _distinct_inner_faces(g: PlaneGraph, k: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for f in g.inner_faces():
        walk = g.face_vertices(f)
        if len(walk) == k and len(set(walk)) == k:
            yield f, walk


def _four_face(g: PlaneGraph, outer: frozenset[int], pre: dict[int, int]) -> Iterator[ReductionStep]:
    for f, w in _distinct_inner_faces(g, 4):
        for a, b in ((w[0], w[2]), (w[1], w[3])):
            if a in outer and b in outer:
                continue
            keep, gone = (b, a) if a not in outer else (a, b)
            if g.has_edge(keep, gone):
                continue
            res = identify_vertices(g, keep, gone, f)
            corr = {v: (v,) for v in res.vertices}
            corr[keep] = (keep, gone)
            yield ReductionStep(
                Kind.FOUR_FACE_IDENTIFY, g, res, corr, (), (("face", w), ("identify", (keep, gone))), pre
            )


def _six_face(g: PlaneGraph, outer: frozenset[int], pre: dict[int, int]) -> Iterator[ReductionStep]:
    for f, w in _distinct_inner_faces(g, 6):
        for seq in (w, tuple(reversed(w))):
            for s in range(6):
                v1, v2, v3, v4, v5, v6 = (seq[(s + t) % 6] for t in range(6))
                if v1 in outer or v2 in outer:
                    continue
                if g.has_edge(v1, v5) or g.has_edge(v2, v4):
                    continue
                mid = identify_vertices(g, v5, v1, f)
                face2 = next(
                    (
                        h
                        for h in range(mid.num_faces)
                        if mid.face_degree(h) == 4 and {v2, v3, v4, v5} == set(mid.face_vertices(h))
                    ),
                    None,
                )
                if face2 is None or mid.has_edge(v4, v2):
                    continue
                res = identify_vertices(mid, v4, v2, face2)
                corr = {v: (v,) for v in res.vertices}
                corr[v5] = (v5, v1)
                corr[v4] = (v4, v2)
                yield ReductionStep(
                    Kind.SIX_FACE_IDENTIFY,
                    g,
                    res,
                    corr,
                    (),
                    (("face", (v1, v2, v3, v4, v5, v6)), ("identify", (v5, v1)), ("identify2", (v4, v2))),
                    pre,
                )


def _five_face(g: PlaneGraph, outer: frozenset[int], pre: dict[int, int]) -> Iterator[ReductionStep]:
    from .structure import five_face_labelings

    for f, _ in _distinct_inner_faces(g, 5):
        for lab in five_face_labelings(g, f):
            v1, v2, v3, v4, v5 = lab
            params = (("face", lab),)
            if v1 in outer and v3 in outer:
                if v2 not in outer or g.degree(v2) != 2:
                    continue
                try:
                    cut = delete_vertices(g, [v2])
                except EmbeddingError:
                    continue
                target = outer - {v2}
                if pre.get(v1) != pre.get(v3):
                    try:
                        res = add_edge_in_face(cut, v1, v3, cut.outer_face)
                    except EmbeddingError:
                        continue
                    res = _redesignate_outer(res, target)
                    if res is None:
                        continue
                    yield ReductionStep(
                        Kind.FIVE_FACE_EDGE_ADD, g, res, {v: (v,) for v in res.vertices},
                        ((v2, (v1, v3)),), params + (("add", (v1, v3)),), pre,
                    )
                else:
                    if cut.has_edge(v1, v3):
                        continue
                    res = identify_vertices(cut, v1, v3, cut.outer_face)
                    res = _redesignate_outer(res, target - {v3})
                    if res is None:
                        continue
                    corr = {v: (v,) for v in res.vertices}
                    corr[v1] = (v1, v3)
                    yield ReductionStep(
                        Kind.FIVE_FACE_IDENTIFY, g, res, corr, ((v2, (v1, v3)),),
                        params + (("delete", v2), ("identify", (v1, v3))), pre,
                    )
            else:
                keep, gone = (v3, v1) if v1 not in outer else (v1, v3)
                if g.has_edge(keep, gone):
                    continue
                res = identify_vertices(g, keep, gone, f)
                corr = {v: (v,) for v in res.vertices}
                corr[keep] = (keep, gone)
                yield ReductionStep(
                    Kind.FIVE_FACE_IDENTIFY, g, res, corr, (), params + (("identify", (keep, gone)),), pre
                )


# ---------------------------------------------------------------------- guards


def guard(step: ReductionStep, spec: NonadjacencySpec = DEFAULT_SPEC) -> tuple[str, ...] | None:
    """Post-checks on the reduced graph; returns the evidence or ``None`` if any fails."""
    g, h = step.source, step.result
    ev = []
    if h.n + h.m >= g.n + g.m:
        return None
    ev.append(f"size {g.n + g.m}->{h.n + h.m}")
    if not h.is_simple:
        return None
    c0 = _outer_cycle(h)
    if c0 is None:
        return None
    if len(c0) > MAX_OUTER:
        return None
    ev.append(f"outer-cycle {len(c0)}")
    if chords(h, c0):
        return None
    ev.append("outer-chordless")
    pre = step.reduced_precoloring
    if set(pre) != set(c0.vertices):
        return None
    ev.append("precolored-set-preserved")
    if not _proper_on(h, pre):
        return None
    ev.append("precoloring-proper")
    if not check_class(h, spec).member:
        return None
    ev.append("in-class")
    return tuple(ev)


def candidates(
    g: PlaneGraph, precoloring: Mapping[int, int], spec: NonadjacencySpec = DEFAULT_SPEC
) -> Iterator[ReductionStep]:
    """Every guarded step, in priority order ChordDelete, FourFace, SixFace, FiveFace."""
    verdict = check_class(g, spec)
    if not verdict.member:
        raise NotInClass(verdict)
    c0 = _outer_cycle(g)
    if c0 is None:
        return
    pre = dict(precoloring)
    outer = frozenset(c0.vertices)
    for build in (
        lambda: _chord_delete(g, c0, pre),
        lambda: _four_face(g, outer, pre),
        lambda: _six_face(g, outer, pre),
        lambda: _five_face(g, outer, pre),
    ):
        for step in build():
            ev = guard(step, spec)
            if ev is not None:
                yield ReductionStep(
                    step.kind, step.source, step.result, step.correspondence, step.deleted, step.params, pre, ev
                )


def find_reduction(
    g: PlaneGraph, precoloring: Mapping[int, int], spec: NonadjacencySpec = DEFAULT_SPEC
) -> ReductionStep | None:
    return next(candidates(g, precoloring, spec), None)


def apply(step: ReductionStep, g: PlaneGraph | None = None, spec: NonadjacencySpec = DEFAULT_SPEC) -> PlaneGraph:
    """Return the reduced graph after re-checking the step against ``g`` (default: its source)."""
    if g is not None and g != step.source:
        raise GuardFailed("graph differs from the one the step was matched on")
    if guard(step, spec) is None:
        raise GuardFailed(f"{step.kind.value} guard no longer holds")
    return step.result


def pull_back(step: ReductionStep, coloring: Mapping[int, int]) -> dict[int, int]:
    """Turn a proper coloring of ``step.result`` into a proper coloring of ``step.source``."""
    out: dict[int, int] = {}
    for w, group in step.correspondence.items():
        for x in group:
            out[x] = coloring[w]
    for v, nbrs in step.deleted:
        used = {out[u] for u in step.source.adjacency[v] if u in out}
        want = step.precoloring.get(v)
        if want is not None and want not in used:
            out[v] = want
            continue
        free = [c for c in COLORS if c not in used]
        if not free:
            raise PullBackImproper(f"no color left for deleted vertex {v}")
        out[v] = free[0]
    g = step.source
    missing = [v for v in g.vertices if v not in out]
    if missing:
        raise PullBackImproper(f"vertices {missing} received no color")
    for a, b in g.edges:
        if out[a] == out[b]:
            raise PullBackImproper(f"{step.kind.value}: edge {a}-{b} is monochromatic after pull-back")
    return out
