"""Detectors for the local configurations and minimal-counterexample properties.

``checklist`` evaluates properties P1..P15 as decidable predicates on one plane
graph.  On arbitrary inputs most of them fail; a report is a description of the
graph, not a verdict on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .cycles import (
    DEFAULT_SPEC,
    ClassVerdict,
    Cycle,
    NonadjacencySpec,
    check_class,
    chords,
    cycles_by_edge,
    enumerate_cycles,
    facial_face,
    region_partition,
)
from .errors import MultigraphUnsupported, OuterFace
from .plane import PlaneGraph, bfs_distances


# ---------------------------------------------------------------------- bad vertices


def triangle_apexes(g: PlaneGraph, u: int, v: int) -> list[int]:
    """Vertices forming a 3-cycle with the edge ``uv``."""
    return sorted(g.adjacency[u] & g.adjacency[v])


def on_triangle(g: PlaneGraph, v: int) -> bool:
    nb = g.adjacency[v]
    return any(nb & g.adjacency[w] for w in nb)


def bad_vertices(g: PlaneGraph) -> frozenset[int]:
    """Inner vertices of degree 3 lying on a 3-cycle."""
    return frozenset(v for v in g.inner_vertices if g.degree(v) == 3 and on_triangle(g, v))


@dataclass(frozen=True)
class TetradMatch:
    face: int
    vertices: tuple[int, int, int, int]
    first_triangle: tuple[int, int, int]
    second_triangle: tuple[int, int, int]


def _cyclic_windows(walk: tuple[int, ...], size: int):
    k = len(walk)
    for i in range(k):
        yield i, tuple(walk[(i + j) % k] for j in range(size))


def find_tetrads(g: PlaneGraph) -> list[TetradMatch]:
    """Four consecutive bad vertices on a face of degree >= 6 whose first and last
    boundary edges lie on triangles."""
    bad = bad_vertices(g)
    if len(bad) < 4:
        return []
    out = []
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        if len(walk) < 6:
            continue
        for _, quad in _cyclic_windows(walk, 4):
            if len(set(quad)) < 4 or not all(v in bad for v in quad):
                continue
            t1 = triangle_apexes(g, quad[0], quad[1])
            t2 = triangle_apexes(g, quad[2], quad[3])
            if t1 and t2:
                out.append(TetradMatch(f, quad, (quad[0], t1[0], quad[1]), (quad[2], t2[0], quad[3])))
    return out


def max_consecutive_bad(g: PlaneGraph, f: int) -> int:
    """Longest cyclic run of bad vertices along the boundary walk of inner face ``f``."""
    if f == g.outer_face:
        raise OuterFace(f"face {f} is the outer face")
    bad = bad_vertices(g)
    flags = [v in bad for v in g.face_vertices(f)]
    if all(flags):
        return len(flags)
    # rotate so the walk starts right after a non-bad vertex
    start = flags.index(False) + 1
    flags = flags[start:] + flags[:start]
    best = run = 0
    for b in flags:
        run = run + 1 if b else 0
        best = max(best, run)
    return best


@dataclass(frozen=True)
class SimiTetradMatch:
    face: int
    v0: int
    run: tuple[int, ...]
    triangle: tuple[int, int, int]
    w2: int
    distance: int | None
    small_face: int | None

    @property
    def k(self) -> int:
        return len(self.run)

    @property
    def conclusion_holds(self) -> bool:
        return self.distance is not None and self.distance <= 7 and self.k == 3 and self.small_face is not None


def _consecutive_on_small_face(g: PlaneGraph, a: int, b: int, c: int, max_degree: int) -> int | None:
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        if len(walk) > max_degree:
            continue
        for _, tri in _cyclic_windows(walk, 3):
            if tri == (a, b, c) or tri == (c, b, a):
                return f
    return None


def find_simitetrads(g: PlaneGraph) -> list[SimiTetradMatch]:
    """Runs ``v1..vk`` (k >= 3, maximal) of inner 3-vertices along a face, preceded by
    ``v0``, with ``v1v2`` on a triangle.  Both walk directions are scanned."""
    inner3 = {v for v in g.inner_vertices if g.degree(v) == 3}
    if len(inner3) < 3:
        return []
    out = []
    seen = set()
    for f in range(g.num_faces):
        base = g.face_vertices(f)
        k = len(base)
        if k < 4 or len(set(base)) != k:
            continue
        for walk in (base, tuple(reversed(base))):
            for i in range(k):
                v0 = walk[i]
                if v0 in inner3:
                    continue
                run = []
                j = 1
                while j < k and walk[(i + j) % k] in inner3:
                    run.append(walk[(i + j) % k])
                    j += 1
                if len(run) < 3:
                    continue
                apex = triangle_apexes(g, run[0], run[1])
                if not apex:
                    continue
                v2, v3 = run[1], run[2]
                v4 = walk[(i + 4) % k]
                others = sorted(g.adjacency[v3] - {v2, v4})
                if len(others) != 1:
                    continue
                w2 = others[0]
                key = (f, v0, tuple(run))
                if key in seen:
                    continue
                seen.add(key)
                dist = None
                if w2 not in run:
                    dist = bfs_distances(g, v0, removed=run).get(w2)
                small = _consecutive_on_small_face(g, w2, v3, v4, 5)
                out.append(SimiTetradMatch(f, v0, tuple(run), (run[0], apex[0], run[1]), w2, dist, small))
    return out


# ---------------------------------------------------------------------- connectivity


def cut_vertices(g: PlaneGraph) -> list[int]:
    """Articulation points by iterative low-point DFS."""
    root = g.vertices[0]
    disc = {root: 0}
    low = {root: 0}
    parent = {root: None}
    cuts = set()
    root_children = 0
    stack = [(root, iter(sorted(g.adjacency[root])))]
    while stack:
        v, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if parent[p] is not None and low[v] >= disc[p]:
                    cuts.add(p)
            continue
        if w not in disc:
            disc[w] = low[w] = len(disc)
            parent[w] = v
            if v == root:
                root_children += 1
            stack.append((w, iter(sorted(g.adjacency[w]))))
        elif w != parent[v]:
            low[v] = min(low[v], disc[w])
    if root_children > 1:
        cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: PlaneGraph) -> bool:
    return g.n >= 3 and not cut_vertices(g)


# ---------------------------------------------------------------------- checklist


class Status(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class PropertyResult:
    id: str
    status: Status
    witness: Any = None
    note: str = ""

    def to_line(self) -> str:
        parts = [self.id, self.status.value]
        if self.witness is not None:
            parts.append(_fmt_witness(self.witness))
        if self.note:
            parts.append(f"({self.note})")
        return " ".join(parts)


def _fmt_witness(w: Any) -> str:
    if isinstance(w, Cycle):
        return f"cycle={w}"
    if isinstance(w, TetradMatch):
        return f"face={w.face} tetrad={'-'.join(map(str, w.vertices))}"
    if isinstance(w, SimiTetradMatch):
        return f"face={w.face} v0={w.v0} run={'-'.join(map(str, w.run))} w2={w.w2} d={w.distance}"
    if isinstance(w, dict):
        return " ".join(f"{k}={v}" for k, v in w.items())
    return f"witness={w}"


@dataclass
class ChecklistReport:
    results: list[PropertyResult]
    class_verdict: ClassVerdict | None = None
    notes: list[str] = field(default_factory=list)

    def __getitem__(self, pid: str) -> PropertyResult:
        for r in self.results:
            if r.id == pid:
                return r
        raise KeyError(pid)

    @property
    def all_hold(self) -> bool:
        return all(r.status is not Status.VIOLATED for r in self.results)

    def to_text(self) -> str:
        lines = []
        if self.class_verdict is not None:
            lines.append(f"class {self.class_verdict.describe()}")
        lines.extend(r.to_line() for r in self.results)
        lines.extend(f"note {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def _holds(pid, note=""):
    return PropertyResult(pid, Status.HOLDS, None, note)


def _violated(pid, witness, note=""):
    return PropertyResult(pid, Status.VIOLATED, witness, note)


def _na(pid, note):
    return PropertyResult(pid, Status.NOT_APPLICABLE, None, note)


def five_face_labelings(g: PlaneGraph, f: int):
    """For a 5-face, yield ``(v1, v2, v3, v4, v5)`` for each choice of ``v2``."""
    walk = g.face_vertices(f)
    for j in range(5):
        yield tuple(walk[(j - 1 + t) % 5] for t in range(5))


def _far_edges(g: PlaneGraph, lab) -> set[int]:
    v1, _, v3, v4, v5 = lab
    return {e for a, b in ((v3, v4), (v4, v5), (v5, v1)) for e in g.edges_between(a, b)}


def checklist(
    g: PlaneGraph,
    spec: NonadjacencySpec = DEFAULT_SPEC,
    facial_only: bool = False,
    separating_bound: int = 11,
) -> ChecklistReport:
    """Evaluate P1..P15 on ``g``.

    ``facial_only`` restricts P7/P8 to facial cycles, which keeps the check cheap
    on larger graphs.
    """
    results: list[PropertyResult] = []
    notes: list[str] = []
    verdict = None
    try:
        verdict = check_class(g, spec)
    except MultigraphUnsupported:
        notes.append("class membership undefined for multigraphs")

    # P1
    multi = [es for es in (g.edges_between(a, b) for a, b in g.edges) if len(es) > 1]
    results.append(_violated("P1", {"parallel_edges": multi[0]}) if multi else _holds("P1"))

    # P2
    inner = sorted(g.inner_vertices)
    results.append(_holds("P2") if inner else _violated("P2", {"outer_face": g.outer_face}, "no inner vertex"))

    # P3
    low = [v for v in inner if g.degree(v) < 3]
    results.append(_violated("P3", {"vertex": low[0], "degree": g.degree(low[0])}) if low else _holds("P3"))

    # P4
    if g.n < 3:
        results.append(_violated("P4", {"n": g.n}, "fewer than three vertices"))
    else:
        cuts = cut_vertices(g)
        results.append(_violated("P4", {"cut_vertex": cuts[0]}) if cuts else _holds("P4"))

    simple = g.is_simple
    long_cycles = enumerate_cycles(g, separating_bound) if simple and g.m >= 3 else []
    partitions = {c.key: region_partition(g, c) for c in long_cycles}

    # P5
    if not simple:
        results.append(_na("P5", "multigraph"))
    else:
        sep = [c for c in long_cycles if partitions[c.key].interior and partitions[c.key].exterior]
        results.append(_violated("P5", sep[0]) if sep else _holds("P5"))

    # P6
    if not g.outer_boundary_is_cycle:
        results.append(_na("P6", "outer boundary is not a cycle"))
    else:
        c0 = Cycle.from_vertices(g, g.face_vertices(g.outer_face))
        ch = chords(g, c0)
        outer = g.outer_vertices
        covered = [f for f in g.inner_faces() if set(g.face_vertices(f)) <= outer]
        if ch:
            results.append(_violated("P6", {"chord": ch[0]}))
        elif covered:
            results.append(_violated("P6", {"face": covered[0]}, "inner face with all vertices on C0"))
        else:
            results.append(_holds("P6"))

    # P7 / P8
    if not simple:
        results.append(_na("P7", "multigraph"))
        results.append(_na("P8", "multigraph"))
    else:
        pool = [c for c in long_cycles if not facial_only or facial_face(g, c) is not None]
        p7 = p8 = None
        for c in pool:
            if p7 is not None and p8 is not None:
                break
            on_c = set(c.vertices)
            pos = {v: i for i, v in enumerate(c.vertices)}
            for v in sorted(partitions[c.key].interior):
                hits = sorted(pos[w] for w in g.adjacency[v] if w in on_c)
                if p7 is None and len(hits) > 2:
                    p7 = {"cycle": c, "vertex": v, "neighbors_on_cycle": len(hits)}
                if p8 is None and len(hits) >= 2:
                    consecutive = len(hits) == 2 and (hits[1] - hits[0]) in (1, len(c) - 1)
                    if not (len(c) == 11 and consecutive):
                        p8 = {"cycle": c, "vertex": v, "neighbors_on_cycle": len(hits)}
        note = "facial cycles only" if facial_only else ""
        results.append(_violated("P7", p7, note) if p7 else _holds("P7", note))
        results.append(_violated("P8", p8, note) if p8 else _holds("P8", note))

    # P9
    simis = find_simitetrads(g)
    if not simis:
        results.append(_na("P9", "no qualifying run"))
    else:
        bad_simi = [s for s in simis if not s.conclusion_holds]
        results.append(_violated("P9", bad_simi[0]) if bad_simi else _holds("P9"))

    # P10
    tets = find_tetrads(g)
    results.append(_violated("P10", tets[0]) if tets else _holds("P10"))

    # P11
    five = [f for f in g.inner_faces() if max_consecutive_bad(g, f) >= 5]
    results.append(_violated("P11", {"face": five[0]}) if five else _holds("P11"))

    # P12 / P13
    for pid, deg in (("P12", 4), ("P13", 6)):
        hit = [f for f in g.inner_faces() if g.face_degree(f) == deg]
        results.append(_violated(pid, {"face": hit[0]}) if hit else _holds(pid))

    # P14 / P15
    if not simple or not g.outer_boundary_is_cycle:
        results.append(_na("P14", "needs a simple graph with an outer cycle"))
        results.append(_na("P15", "needs a simple graph with an outer cycle"))
    else:
        seven = cycles_by_edge(c for c in enumerate_cycles(g, 7) if len(c) == 7)
        outer = g.outer_vertices
        p14 = p15 = None
        seen14 = seen15 = False
        for f in g.inner_faces():
            if g.face_degree(f) != 5 or len(set(g.face_vertices(f))) != 5:
                continue
            for lab in five_face_labelings(g, f):
                v1, _, v3 = lab[:3]
                hit = any(seven.get(e) for e in _far_edges(g, lab))
                if v1 in outer and v3 in outer:
                    seen14 = True
                    if not hit and p14 is None:
                        p14 = {"face": f, "labeling": "-".join(map(str, lab))}
                else:
                    seen15 = True
                    if not hit and p15 is None:
                        p15 = {"face": f, "labeling": "-".join(map(str, lab))}
        for pid, seen, wit in (("P14", seen14, p14), ("P15", seen15, p15)):
            if not seen:
                results.append(_na(pid, "no matching 5-face"))
            else:
                results.append(_violated(pid, wit, "no 7-cycle through the far edges") if wit else _holds(pid))
    return ChecklistReport(results, verdict, notes)


def verify_witness(g: PlaneGraph, result: PropertyResult, spec: NonadjacencySpec = DEFAULT_SPEC) -> bool:
    """Re-check a violation witness directly against its property's predicate."""
    if result.status is not Status.VIOLATED:
        return True
    w = result.witness
    pid = result.id
    if pid == "P1":
        a, b = w["parallel_edges"][:2]
        return set(g.edges[a]) == set(g.edges[b])
    if pid == "P2":
        return not g.inner_vertices
    if pid == "P3":
        return w["vertex"] in g.inner_vertices and g.degree(w["vertex"]) < 3
    if pid == "P4":
        if "n" in w:
            return g.n < 3
        from .plane import delete_vertices
        from .errors import Disconnects

        try:
            delete_vertices(g, [w["cut_vertex"]])
        except Disconnects:
            return True
        return False
    if pid == "P5":
        r = region_partition(g, w)
        return len(w) <= 11 and bool(r.interior) and bool(r.exterior)
    if pid == "P6":
        if "chord" in w:
            a, b = w["chord"]
            return g.has_edge(a, b) and a in g.outer_vertices and b in g.outer_vertices
        return set(g.face_vertices(w["face"])) <= g.outer_vertices and w["face"] != g.outer_face
    if pid in ("P7", "P8"):
        c, v = w["cycle"], w["vertex"]
        if v not in region_partition(g, c).interior:
            return False
        count = len(g.adjacency[v] & set(c.vertices))
        return count > 2 if pid == "P7" else count >= 2
    if pid == "P9":
        return not w.conclusion_holds
    if pid == "P10":
        bad = bad_vertices(g)
        walk = g.face_vertices(w.face)
        return (
            all(v in bad for v in w.vertices)
            and len(walk) >= 6
            and bool(triangle_apexes(g, *w.vertices[:2]))
            and bool(triangle_apexes(g, *w.vertices[2:]))
        )
    if pid == "P11":
        return max_consecutive_bad(g, w["face"]) >= 5
    if pid == "P12":
        return g.face_degree(w["face"]) == 4 and w["face"] != g.outer_face
    if pid == "P13":
        return g.face_degree(w["face"]) == 6 and w["face"] != g.outer_face
    if pid in ("P14", "P15"):
        lab = tuple(int(x) for x in w["labeling"].split("-"))
        far = _far_edges(g, lab)
        return not any(len(c) == 7 and far & c.edge_set for c in enumerate_cycles(g, 7))
    return False
