"""Proper 3-colorings: verification, exact search, precoloring extension by
reductions, and the shortest-cycle pipeline for whole graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

from .cycles import DEFAULT_SPEC, Cycle, NonadjacencySpec, check_class, facial_face, region_partition, shortest_cycle
from .errors import (
    ColoringFailed,
    InvalidPrecoloring,
    LemmaFalsified,
    NotInClass,
    OuterTooLarge,
    PullBackImproper,
    UncoloredVertex,
)
from .plane import PlaneGraph, delete_vertices
from .reductions import MAX_OUTER, ReductionStep, find_reduction, pull_back

Coloring = dict[int, int]
COLORS = (1, 2, 3)
_ALL = 0b111


@dataclass(frozen=True)
class Verification:
    ok: bool
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify(g: PlaneGraph, c: Mapping[int, int]) -> Verification:
    for v in g.vertices:
        if v not in c:
            raise UncoloredVertex(f"vertex {v} has no color")
    for a, b in g.edges:
        if c[a] == c[b]:
            return Verification(False, (a, b))
    return Verification(True)


def is_proper_partial(g: PlaneGraph, c: Mapping[int, int]) -> bool:
    return all(c[a] != c[b] for a, b in g.edges if a in c and b in c)


# ---------------------------------------------------------------------- exact search


def exact_3color(g: PlaneGraph, partial: Mapping[int, int] | None = None) -> Coloring | None:
    """Complete ``partial`` to a proper 3-coloring, or return ``None`` if impossible.

    Backtracking over bitmask domains with forward checking and most-constrained
    vertex ordering (ties broken by higher degree, then lower id).
    """
    partial = dict(partial or {})
    adj = g.adjacency
    dom = {v: _ALL for v in g.vertices}
    for v, col in partial.items():
        if col not in COLORS:
            raise InvalidPrecoloring(f"color {col} of vertex {v} is not in 1..3")
        dom[v] &= 1 << (col - 1)
        if not dom[v]:
            return None
        for w in adj[v]:
            dom[w] &= ~(1 << (col - 1))
    if any(d == 0 for d in dom.values()):
        return None
    assigned: Coloring = dict(partial)
    free = set(g.vertices) - set(assigned)

    def pick() -> int:
        return min(free, key=lambda v: (bin(dom[v]).count("1"), -len(adj[v]), v))

    # frame: [vertex, remaining color bits, undo list]
    stack: list[list] = []
    if not free:
        return assigned
    v = pick()
    free.discard(v)
    stack.append([v, dom[v], []])
    while stack:
        frame = stack[-1]
        v, todo, undo = frame
        for w, old in undo:
            dom[w] = old
        undo.clear()
        assigned.pop(v, None)
        if not todo:
            stack.pop()
            free.add(v)
            continue
        bit = todo & -todo
        frame[1] = todo & ~bit
        wiped = False
        for w in adj[v]:
            if w in free and dom[w] & bit:
                undo.append((w, dom[w]))
                dom[w] &= ~bit
                if not dom[w]:
                    wiped = True
                    break
        if wiped:
            continue
        assigned[v] = bit.bit_length()
        if not free:
            return assigned
        nv = pick()
        free.discard(nv)
        stack.append([nv, dom[nv], []])
    return None


def iter_3colorings(g: PlaneGraph, partial: Mapping[int, int] | None = None) -> Iterator[Coloring]:
    """Every proper completion of ``partial``, by plain backtracking in BFS order."""
    partial = dict(partial or {})
    if not is_proper_partial(g, partial):
        return
    order = _bfs_order(g, partial)
    adj = g.adjacency
    col = dict(partial)

    def rec(i: int):
        if i == len(order):
            yield dict(col)
            return
        v = order[i]
        for c in COLORS:
            if all(col.get(w) != c for w in adj[v]):
                col[v] = c
                yield from rec(i + 1)
                del col[v]

    yield from rec(0)


def count_3colorings(g: PlaneGraph, partial: Mapping[int, int] | None = None) -> int:
    """Number of proper completions of ``partial``; static vertex order, no pruning
    beyond the neighbor check."""
    partial = dict(partial or {})
    if not is_proper_partial(g, partial):
        return 0
    order = _bfs_order(g, partial)
    earlier = []
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier.append([w for w in g.adjacency[v] if w in partial or pos.get(w, len(order)) < pos[v]])
    col = dict(partial)
    total = 0
    i = 0
    choice = [0] * len(order)
    # iterative odometer over colors
    while i >= 0:
        if i == len(order):
            total += 1
            i -= 1
            continue
        v = order[i]
        c = choice[i] + 1
        while c <= 3 and any(col.get(w) == c for w in earlier[i]):
            c += 1
        if c > 3:
            choice[i] = 0
            col.pop(v, None)
            i -= 1
            continue
        choice[i] = c
        col[v] = c
        i += 1
    return total


def _bfs_order(g: PlaneGraph, partial: Mapping[int, int]) -> list[int]:
    seen = set(partial)
    order: list[int] = []
    roots = list(partial) + list(g.vertices)
    for r in roots:
        queue = deque([r]) if r in partial else deque()
        if r not in seen:
            seen.add(r)
            order.append(r)
            queue.append(r)
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
    return order


def cycle_colorings(c: Cycle) -> Iterator[Coloring]:
    """Proper 3-colorings of the cycle ``c`` in lexicographic order."""
    vs = c.vertices
    for cols in product(COLORS, repeat=len(vs)):
        if all(cols[i] != cols[(i + 1) % len(vs)] for i in range(len(vs))):
            yield dict(zip(vs, cols))


# ---------------------------------------------------------------------- extension


@dataclass
class ExtensionProblem:
    graph: PlaneGraph
    precoloring: dict[int, int]
    spec: NonadjacencySpec = DEFAULT_SPEC

    def validate(self) -> None:
        g = self.graph
        verdict = check_class(g, self.spec)
        if not verdict.member:
            raise NotInClass(verdict)
        if g.face_degree(g.outer_face) > MAX_OUTER:
            raise OuterTooLarge(f"outer face has degree {g.face_degree(g.outer_face)} > {MAX_OUTER}")
        if set(self.precoloring) != set(g.outer_vertices):
            raise InvalidPrecoloring("the precoloring must cover exactly the outer boundary vertices")
        if any(c not in COLORS for c in self.precoloring.values()):
            raise InvalidPrecoloring("colors are 1, 2 and 3")
        if not is_proper_partial(g, self.precoloring):
            raise InvalidPrecoloring("the precoloring is not proper on the outer boundary")


@dataclass
class ExtensionTrace:
    root: PlaneGraph | None = None
    steps: list[ReductionStep] = field(default_factory=list)
    solved_level: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def residual(self) -> PlaneGraph | None:
        return self.steps[-1].result if self.steps else self.root

    def lines(self) -> list[str]:
        out = [f"step {s.trace_line()}" for s in self.steps]
        r = self.residual
        if r is not None:
            out.append(f"residual V {r.n} E {r.m} solved-at-level {self.solved_level}")
        out.extend(f"note {n}" for n in self.notes)
        return out


def extend(p: ExtensionProblem, trace: ExtensionTrace | None = None) -> Coloring:
    """Extend the outer-boundary precoloring to all of ``p.graph``.

    Reduces while a guarded step applies, solves the residual exactly and pulls
    the coloring back.  If some reduced level has no extension the search falls
    back to the previous level; only an unextendable original raises.
    """
    p.validate()
    trace = trace if trace is not None else ExtensionTrace()
    trace.root = p.graph
    g, pre = p.graph, dict(p.precoloring)
    levels: list[tuple[PlaneGraph, dict[int, int]]] = [(g, pre)]
    while True:
        step = find_reduction(g, pre, p.spec)
        if step is None:
            break
        trace.steps.append(step)
        g, pre = step.result, step.reduced_precoloring
        levels.append((g, pre))
    level = len(levels) - 1
    sol = exact_3color(*levels[level])
    while sol is None and level > 0:
        trace.notes.append(f"level {level} has no extension, retrying one level up")
        level -= 1
        sol = exact_3color(*levels[level])
    if sol is None:
        raise LemmaFalsified(f"no proper extension exists for the precoloring {sorted(p.precoloring.items())}")
    trace.solved_level = level
    for step in reversed(trace.steps[:level]):
        sol = pull_back(step, sol)
    check = verify(p.graph, sol)
    if not check:
        raise PullBackImproper(f"edge {check.edge} is monochromatic")
    if any(sol[v] != c for v, c in p.precoloring.items()):
        raise PullBackImproper("result disagrees with the precoloring")
    return sol


# ---------------------------------------------------------------------- whole graphs


def _outer_on(g: PlaneGraph, vs: frozenset[int]) -> PlaneGraph | None:
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        if len(walk) == len(vs) and set(walk) == vs:
            return g.with_outer_face(f)
    return None


def color_planar(g: PlaneGraph, spec: NonadjacencySpec = DEFAULT_SPEC, log: list[str] | None = None) -> Coloring:
    """3-color a class member through a shortest cycle of length at most 5.

    A facial cycle becomes the outer face and its colorings are extended in turn.
    A separating cycle splits the graph into two sides sharing the cycle, and
    each cycle coloring is tried on both.  Without such a cycle exact search is
    used.
    """
    log = log if log is not None else []
    verdict = check_class(g, spec)
    if not verdict.member:
        raise NotInClass(verdict)
    c = shortest_cycle(g, 5)
    if c is None:
        log.append("no cycle of length at most 5, exact search")
        sol = exact_3color(g)
        if sol is None:
            raise ColoringFailed("exact search found no 3-coloring")
        return sol
    vc = frozenset(c.vertices)
    f = facial_face(g, c)
    if f is not None:
        h = g.with_outer_face(f)
        log.append(f"facial cycle {c}, outer face {f}")
        for col in cycle_colorings(c):
            try:
                sol = extend(ExtensionProblem(h, col, spec))
            except LemmaFalsified:
                continue
            return _checked(g, sol)
        raise ColoringFailed(f"no coloring of facial cycle {c} extends")
    part = region_partition(g, c)
    if not (part.interior and part.exterior):
        log.append(f"cycle {c} is neither facial nor separating, exact search")
        sol = exact_3color(g)
        if sol is None:
            raise ColoringFailed("exact search found no 3-coloring")
        return sol
    inside = _outer_on(delete_vertices(g, part.exterior), vc)
    outside = _outer_on(delete_vertices(g, part.interior), vc)
    if inside is None or outside is None:
        raise ColoringFailed(f"could not split along separating cycle {c}")
    log.append(f"separating cycle {c}, interior {len(part.interior)} exterior {len(part.exterior)}")
    for col in cycle_colorings(c):
        try:
            a = extend(ExtensionProblem(inside, col, spec))
            b = extend(ExtensionProblem(outside, col, spec))
        except LemmaFalsified:
            continue
        return _checked(g, {**a, **b})
    raise ColoringFailed(f"no coloring of separating cycle {c} extends to both sides")


def _checked(g: PlaneGraph, sol: Coloring) -> Coloring:
    check = verify(g, sol)
    if not check:
        raise ColoringFailed(f"edge {check.edge} is monochromatic")
    return sol


def format_coloring(c: Mapping[int, int] | None, status: str | None = None) -> str:
    lines = [f"color {v} {c[v]}" for v in sorted(c)] if c else []
    lines.append(f"result: {status or ('colored' if c is not None else 'unsat')}")
    return "\n".join(lines) + "\n"
