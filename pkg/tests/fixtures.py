"""Hand-built plane graphs used across the test suite.

Each builder returns a graph from a straight-line drawing; vertex names in
docstrings refer to the integer ids used in the code.
"""

from __future__ import annotations

import math

from adjcycles.plane import PlaneGraph, from_rotation_lists

from geometry import cycle_edges, embed, polygon


def at(radius: float, degrees: float) -> tuple[float, float]:
    a = math.radians(degrees)
    return (radius * math.cos(a), radius * math.sin(a))


def cycle_graph(k: int) -> PlaneGraph:
    """C_k labelled 1..k clockwise, outer dart 1 -> k so the outer walk is clockwise."""
    return embed(polygon(k), cycle_edges(range(1, k + 1)))


def wheel(k: int) -> PlaneGraph:
    """Rim 1..k clockwise, hub k+1."""
    coords = polygon(k)
    coords[k + 1] = (0.0, 0.0)
    return embed(coords, cycle_edges(range(1, k + 1)) + [(i, k + 1) for i in range(1, k + 1)])


def triangle() -> PlaneGraph:
    return cycle_graph(3)


def path3() -> PlaneGraph:
    return from_rotation_lists({1: [2], 2: [1, 3], 3: [2]}, outer=(1, 2))


def k4() -> PlaneGraph:
    return embed({1: (0, 0), 2: (4, 0), 3: (2, 4), 4: (2, 1.5)}, cycle_edges([1, 2, 3]) + [(1, 4), (2, 4), (3, 4)])


def cube() -> PlaneGraph:
    return embed(
        {1: (0, 0), 2: (4, 0), 3: (4, 4), 4: (0, 4), 5: (1, 1), 6: (3, 1), 7: (3, 3), 8: (1, 3)},
        cycle_edges([1, 2, 3, 4]) + cycle_edges([5, 6, 7, 8]) + [(1, 5), (2, 6), (3, 7), (4, 8)],
    )


def diamond() -> PlaneGraph:
    return embed({1: (0, 0), 2: (2, 1), 3: (0, 2), 4: (-2, 1)}, cycle_edges([1, 2, 3, 4]) + [(1, 3)])


def theta(a: int, b: int, c: int) -> PlaneGraph:
    """Vertices 1 and 2 joined by internally disjoint paths of lengths a <= b <= c."""
    coords = {1: (0.0, 0.0), 2: (10.0, 0.0)}
    edges = []
    nxt = 3
    for k, height in zip((a, b, c), (0.0, 4.0, -4.0)):
        if k == 1:
            edges.append((1, 2))
            continue
        prev = 1
        for i in range(1, k):
            x = 10.0 * i / k
            y = height * math.sin(math.pi * i / k) + (0.5 if height == 0 else 0)
            coords[nxt] = (x, y)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    return embed(coords, edges)


# ---------------------------------------------------------------------- discharging fixtures


def triangle_of_4_vertices() -> PlaneGraph:
    """Inner triangle 1-2-3; each corner has two more neighbors on a 15-cycle (ids
    10..24) so its other faces have degrees 4, 6, 6.  Every triangle vertex is an
    inner 4-vertex on exactly one 3-face and no 5-face."""
    coords = {1: at(1, 90), 2: at(1, -30), 3: at(1, 210)}
    ring = list(range(10, 25))
    for i, r in enumerate(ring):
        coords[r] = at(4, 90 + 24 - 24 * i)  # clockwise, starting just left of vertex 1
    edges = cycle_edges([1, 2, 3]) + cycle_edges(ring)
    # vertex 1 -> ring[0], ring[2]; vertex 2 -> ring[5], ring[7]; vertex 3 -> ring[10], ring[12]
    edges += [(1, ring[0]), (1, ring[2]), (2, ring[5]), (2, ring[7]), (3, ring[10]), (3, ring[12])]
    return embed(coords, edges)


def five_face_with_2_vertex() -> PlaneGraph:
    """5-face p q2 x2 x1 q1 where p=1 is an outer 2-vertex, q1=2 and q2=3 are outer
    3-vertices and x1=4, x2=5 are inner 3-vertices with no 3-face."""
    coords = {
        1: (0, 3), 3: (2, 2), 11: (3, 0), 12: (2, -3), 13: (-2, -3), 14: (-3, 0), 2: (-2, 2),
        4: (-1, 1), 5: (1, 1), 6: (-1, -1), 7: (1, -1),
    }
    edges = cycle_edges([1, 3, 11, 12, 13, 14, 2])
    edges += [(2, 4), (4, 5), (5, 3), (4, 6), (5, 7), (6, 7), (6, 14), (7, 11)]
    return embed(coords, edges)


def seven_face_with_spokes() -> PlaneGraph:
    """Central 7-face on 1..7, each vertex with one spoke to an outer ring.  The
    spoke faces after vertices 1, 3, 5, 7 are 5-faces, the other three 6-faces, so
    every 7-face vertex is an inner 3-vertex on a 5-face and no 3-face."""
    coords = {}
    edges = cycle_edges(range(1, 8))
    ring: list[int] = []
    spoke_end = {}
    nxt = 10
    for i in range(7):
        coords[i + 1] = at(1, 90 - 360 * i / 7)
    for i in range(7):
        base = 90 - 360 * i / 7
        coords[nxt] = at(3, base)
        spoke_end[i + 1] = nxt
        ring.append(nxt)
        nxt += 1
        extra = 1 if i % 2 == 0 else 2
        for j in range(extra):
            coords[nxt] = at(3, base - (360 / 7) * (j + 1) / (extra + 1))
            ring.append(nxt)
            nxt += 1
    edges += cycle_edges(ring)
    edges += [(v, spoke_end[v]) for v in range(1, 8)]
    return embed(coords, edges)


def _face_with_ears(k: int, ears: list[tuple[int, int]], degree4: dict[int, int]) -> tuple[dict, list]:
    """A k-face on 1..k (clockwise) with ear triangles on the given boundary
    edges, apexes attached to an outer ring; vertices in ``degree4`` get an extra
    spoke to the ring at the given angle offset."""
    coords = {i + 1: at(2, 90 - 360 * i / k) for i in range(k)}
    edges = cycle_edges(range(1, k + 1))
    anchors: list[tuple[float, int]] = []
    nxt = 100
    for a, b in ears:
        ia, ib = a - 1, b - 1
        mid = 90 - 360 * (ia + ((ib - ia) % k) / 2) / k
        coords[nxt] = at(3, mid)
        edges += [(a, nxt), (b, nxt)]
        anchors.append((mid, nxt))
        nxt += 1
    for v, offset in degree4.items():
        ang = 90 - 360 * (v - 1) / k + offset
        coords[nxt] = at(3.2, ang)
        edges.append((v, nxt))
        anchors.append((ang, nxt))
        nxt += 1
    # ring: one vertex per anchor plus one between consecutive anchors
    anchors.sort(key=lambda t: (90 - t[0]) % 360)
    ring = []
    for i, (ang, apex) in enumerate(anchors):
        coords[nxt] = at(5, ang)
        edges.append((apex, nxt))
        ring.append(nxt)
        nxt += 1
        nxt_ang = anchors[(i + 1) % len(anchors)][0]
        gap = (ang - nxt_ang) % 360
        coords[nxt] = at(5, ang - gap / 2)
        ring.append(nxt)
        nxt += 1
    edges += cycle_edges(ring)
    return coords, edges


def nine_face_four_plus_three() -> PlaneGraph:
    """9-face u1 b1 b2 b3 b4 u2 b5 b6 b7 = 1..9 with ears on u1b1, b2b3, b4u2, b5b6,
    b7u1.  u1 is a 4-vertex on two triangles, u2 a 4-vertex on one triangle whose
    opposite face is not the 9-face; the seven b's are bad."""
    coords, edges = _face_with_ears(9, [(1, 2), (3, 4), (5, 6), (7, 8), (9, 1)], {6: -20})
    return embed(coords, edges)


def eight_face_four_plus_two() -> PlaneGraph:
    """8-face v1..v8 = 1..8 with bad run v1..v4 and v6 v7; ears on v8v1, v2v3, v4v5,
    v6v7; v5 and v8 are 4-vertices on one triangle each."""
    coords, edges = _face_with_ears(8, [(8, 1), (2, 3), (4, 5), (6, 7)], {5: -20, 8: 20})
    return embed(coords, edges)


def outer_eleven_face() -> PlaneGraph:
    """Outer 11-cycle o0..o10 = 1..11; even-indexed o's have a spoke to a hexagon
    p0..p10 (ids 12..17).  The five odd o's are outer 2-vertices on inner 5-faces."""
    coords = {i + 1: at(4, 90 - 360 * i / 11) for i in range(11)}
    edges = cycle_edges(range(1, 12))
    hexagon = []
    for k, i in enumerate(range(0, 11, 2)):
        coords[12 + k] = at(2, 90 - 360 * i / 11)
        edges.append((i + 1, 12 + k))
        hexagon.append(12 + k)
    edges += cycle_edges(hexagon)
    return embed(coords, edges)


# ---------------------------------------------------------------------- structure fixtures


def hexagon_with_capped_triangle() -> PlaneGraph:
    """Outer hexagon 1..6 and inner vertex 7 adjacent to 1, 2 and 4."""
    coords = polygon(6, 3)
    coords[7] = (0.6, 0.9)
    return embed(coords, cycle_edges(range(1, 7)) + [(7, 1), (7, 2), (7, 4)])


def tetrad_graph(promote: int | None = None) -> PlaneGraph:
    """Hexagonal face v1 v2 v3 v4 a b (ids 1..6) with ear triangles v1 v2 t1 and
    v3 v4 t2 (t1=7, t2=8) pointing out of the hexagon, surrounded by a ring.
    a, b and the ear apexes have degree 4.  ``promote`` adds an edge from that
    v_i to the ring."""
    coords = {i + 1: at(2, 90 - 60 * i) for i in range(6)}
    coords[7] = at(3.2, 60)
    coords[8] = at(3.2, -60)
    ring = list(range(20, 32))
    for i, r in enumerate(ring):
        coords[r] = at(6, 90 - 30 * i)
    edges = cycle_edges(range(1, 7)) + [(1, 7), (2, 7), (3, 8), (4, 8)] + cycle_edges(ring)
    edges += [(7, 21), (7, 22), (8, 24), (8, 25), (5, 26), (5, 27), (6, 29), (6, 30)]
    if promote is not None:
        target = {1: 20, 2: 22, 3: 24, 4: 25}[promote]
        edges.append((promote, target))
    return embed(coords, edges)


def simitetrad_graph(k: int = 3) -> PlaneGraph:
    """Hexagonal face v0 v1 v2 v3 v4 a (ids 1..6); v1 v2 v3 are inner 3-vertices, v1 v2
    carries an ear with apex t=7, v3's third neighbor is w2=8.  v0, a and the apex
    have degree 4, v4 too unless ``k=4``, which makes it a 3-vertex extending the run.
    Ring 20..31 surrounds everything."""
    coords = {i + 1: at(2, 90 - 60 * i) for i in range(6)}
    coords[7] = at(3.2, 0)
    coords[8] = at(3.2, -90)
    ring = list(range(20, 32))
    for i, r in enumerate(ring):
        coords[r] = at(6, 90 - 30 * i)
    edges = cycle_edges(range(1, 7)) + [(2, 7), (3, 7), (4, 8)] + cycle_edges(ring)
    edges += [(7, 22), (7, 23), (8, 26), (1, 20), (1, 21), (5, 27), (6, 30), (6, 31)]
    if k == 3:
        edges.append((5, 28))
    return embed(coords, edges)

