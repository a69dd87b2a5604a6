"""Deliberately naive reference implementations used for differential testing.

Nothing here shares code with the production paths it checks.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .cycles import DEFAULT_SPEC, NonadjacencySpec, canonical_key
from .plane import PlaneGraph


def _edge_set(seq) -> frozenset[frozenset[int]]:
    return frozenset(frozenset((seq[i], seq[(i + 1) % len(seq)])) for i in range(len(seq)))


def naive_cycles(g: PlaneGraph, lmax: int) -> set[tuple[int, ...]]:
    """Canonical keys of all simple cycles up to ``lmax``, by trying every vertex sequence."""
    adj = g.adjacency
    found = set()
    vs = list(g.vertices)
    for k in range(3, min(lmax, len(vs)) + 1):
        for subset in combinations(vs, k):
            first = subset[0]
            for rest in permutations(subset[1:]):
                seq = (first,) + rest
                if all(seq[(i + 1) % k] in adj[seq[i]] for i in range(k)):
                    found.add(canonical_key(seq))
    return found


def cycle_space_cycles(g: PlaneGraph) -> set[frozenset[frozenset[int]]]:
    """Edge sets of all simple cycles: every nonzero element of the cycle space
    that is connected and 2-regular.  Exponential in the cyclomatic number."""
    edges = [frozenset(e) for e in dict.fromkeys(frozenset(e) for e in g.edges)]
    parent = {g.vertices[0]: None}
    tree = set()
    order = [g.vertices[0]]
    for v in order:
        for w in sorted(g.adjacency[v]):
            if w not in parent:
                parent[w] = v
                tree.add(frozenset((v, w)))
                order.append(w)

    def path_to_root(v):
        out = []
        while parent[v] is not None:
            out.append(frozenset((v, parent[v])))
            v = parent[v]
        return out

    fundamentals = []
    for e in edges:
        if e in tree:
            continue
        a, b = tuple(e)
        fundamentals.append(frozenset(path_to_root(a)) ^ frozenset(path_to_root(b)) ^ {e})
    out = set()
    for mask in product((0, 1), repeat=len(fundamentals)):
        if not any(mask):
            continue
        s = frozenset()
        for bit, f in zip(mask, fundamentals):
            if bit:
                s = s ^ f
        if _is_simple_cycle(s):
            out.add(s)
    return out


def _is_simple_cycle(es: frozenset[frozenset[int]]) -> bool:
    if len(es) < 3:
        return False
    deg: dict[int, int] = {}
    for e in es:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in es:
            if v in e:
                (w,) = e - {v}
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(deg)


def naive_member(g: PlaneGraph, spec: NonadjacencySpec = DEFAULT_SPEC, use_cycle_space: bool = False) -> bool:
    """All-cycles, all-pairs class check."""
    if use_cycle_space:
        sets = list(cycle_space_cycles(g))
    else:
        sets = [_edge_set(k) for k in naive_cycles(g, max(g.n, 3))]
    for a, b in combinations(sets, 2):
        if a & b and spec.forbids(len(a), len(b)):
            return False
    return True


# ---------------------------------------------------------------------- detectors


def _bad(g: PlaneGraph) -> set[int]:
    out = set()
    outer = set(g.face_vertices(g.outer_face))
    for v in g.vertices:
        if v in outer or len(g.adjacency[v]) != 3 or g.degree(v) != 3:
            continue
        nb = list(g.adjacency[v])
        if any(b in g.adjacency[a] for a, b in combinations(nb, 2)):
            out.add(v)
    return out


def window_tetrads(g: PlaneGraph) -> set[tuple[int, tuple[int, ...]]]:
    """(face, window) for every cyclic 4-window of a face walk of length >= 6 made of
    distinct bad vertices whose first and last pair each close a triangle."""
    bad = _bad(g)
    out = set()
    for f in range(g.num_faces):
        walk = g.face_vertices(f)
        k = len(walk)
        if k < 6:
            continue
        for i in range(k):
            w = tuple(walk[(i + j) % k] for j in range(4))
            if len(set(w)) != 4 or not set(w) <= bad:
                continue
            t1 = any(x in g.adjacency[w[0]] and x in g.adjacency[w[1]] for x in g.vertices)
            t2 = any(x in g.adjacency[w[2]] and x in g.adjacency[w[3]] for x in g.vertices)
            if t1 and t2:
                out.add((f, w))
    return out


def window_max_bad(g: PlaneGraph, f: int) -> int:
    """Longest cyclic run of bad vertices, found by testing every start and length."""
    bad = _bad(g)
    walk = g.face_vertices(f)
    k = len(walk)
    best = 0
    for start in range(k):
        for length in range(1, k + 1):
            if all(walk[(start + j) % k] in bad for j in range(length)):
                best = max(best, length)
    return best


def separating_by_components(g: PlaneGraph, cycle_vertices: tuple[int, ...]) -> bool:
    """Side assignment of the components of ``G - V(C)``: a component is inside
    iff a dual path from the outer face to a face at one of its vertices crosses
    the cycle an odd number of times."""
    cv = set(cycle_vertices)
    k = len(cycle_vertices)
    cedges = {frozenset((cycle_vertices[i], cycle_vertices[(i + 1) % k])) for i in range(k)}
    # dual BFS recording crossing parity; any path works for a Jordan curve
    parity = {g.outer_face: 0}
    queue = [g.outer_face]
    for f in queue:
        for d in g.faces[f]:
            h = g.face_of(d ^ 1)
            if h in parity:
                continue
            crossing = frozenset((g.tail(d), g.head(d))) in cedges
            parity[h] = parity[f] ^ int(crossing)
            queue.append(h)
    rest = [v for v in g.vertices if v not in cv]
    seen: set[int] = set()
    sides = set()
    for v in rest:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in cv and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        face = next(g.face_of(d) for d in g.rotation(v))
        sides.add(parity[face])
    return sides == {0, 1}


def brute_force_colorable(g: PlaneGraph, partial: dict[int, int] | None = None) -> bool:
    partial = partial or {}
    free = [v for v in g.vertices if v not in partial]
    edges = g.edges
    for cols in product((1, 2, 3), repeat=len(free)):
        c = dict(partial)
        c.update(zip(free, cols))
        if all(c[a] != c[b] for a, b in edges):
            return True
    return False
