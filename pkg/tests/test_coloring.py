from itertools import product

import pytest

from adjcycles.coloring import (
    ExtensionProblem,
    ExtensionTrace,
    color_planar,
    count_3colorings,
    cycle_colorings,
    exact_3color,
    extend,
    format_coloring,
    is_proper_partial,
    iter_3colorings,
    verify,
)
from adjcycles.cycles import Cycle
from adjcycles.errors import InvalidPrecoloring, NotInClass, OuterTooLarge, UncoloredVertex
from adjcycles.oracles import brute_force_colorable

import fixtures as F


def c5_precolored():
    g = F.cycle_graph(5)
    return g, dict(zip(range(1, 6), (1, 2, 1, 2, 3)))


def test_verify():
    g, c = c5_precolored()
    assert verify(g, c).ok
    bad = verify(F.triangle(), {1: 1, 2: 1, 3: 2})
    assert not bad and bad.edge == (1, 2)
    k4 = F.k4()
    for cols in product((1, 2, 3), repeat=4):
        assert not verify(k4, dict(zip(range(1, 5), cols)))
    with pytest.raises(UncoloredVertex):
        verify(F.triangle(), {1: 1, 2: 2})


def test_exact_solver():
    assert exact_3color(F.k4()) is None
    sol = exact_3color(F.cycle_graph(5))
    assert verify(F.cycle_graph(5), sol)
    w = F.wheel(5)
    assert exact_3color(w, dict(zip(range(1, 6), (1, 2, 1, 2, 3)))) is None
    with pytest.raises(InvalidPrecoloring):
        exact_3color(F.triangle(), {1: 4})


def test_counts_follow_cycle_chromatic_polynomial():
    for k in (3, 4, 5, 6, 7):
        assert count_3colorings(F.cycle_graph(k)) == 2**k + 2 * (-1) ** k
    assert count_3colorings(F.cycle_graph(5)) == 30
    assert count_3colorings(F.cycle_graph(7)) == 126
    assert count_3colorings(F.k4()) == 0


def test_iteration_matches_count():
    for g in (F.cube(), F.theta(1, 4, 6), F.wheel(6)):
        cols = list(iter_3colorings(g))
        assert len(cols) == count_3colorings(g)
        assert len({tuple(sorted(c.items())) for c in cols}) == len(cols)
        assert all(verify(g, c) for c in cols)


def test_solver_agrees_with_brute_force_under_partials():
    g = F.wheel(6)
    for pre in ({}, {1: 1, 3: 1, 5: 1}, {1: 1, 2: 2, 3: 1, 4: 3}):
        assert (exact_3color(g, pre) is not None) == brute_force_colorable(g, pre) == (count_3colorings(g, pre) > 0)


def test_cycle_colorings():
    g = F.cycle_graph(6)
    cols = list(cycle_colorings(Cycle.from_vertices(g, range(1, 7))))
    assert len(cols) == 66
    assert all(verify(g, c) for c in cols)


def test_extend_on_bare_c5_returns_precoloring():
    g, pre = c5_precolored()
    assert extend(ExtensionProblem(g, pre)) == pre


def test_extend_theta_boundary_is_everything():
    g = F.theta(1, 4, 6)
    assert g.outer_vertices == set(g.vertices)
    walk = g.face_vertices(g.outer_face)
    for pre in cycle_colorings(Cycle.from_vertices(g, walk)):
        if is_proper_partial(g, pre):
            assert extend(ExtensionProblem(g, pre)) == pre


def test_extend_through_a_reduction_records_trace():
    g = F.embed(F.polygon(11), F.cycle_edges(range(1, 12)) + [(1, 6)])
    walk = g.face_vertices(g.outer_face)
    pre = dict(zip(walk, (1, 2) * 5 + (3,)))
    trace = ExtensionTrace()
    sol = extend(ExtensionProblem(g, pre), trace)
    assert verify(g, sol) and all(sol[v] == c for v, c in pre.items())
    lines = trace.lines()
    assert lines[0].startswith("step ChordDelete")
    assert lines[-1].startswith("residual V 11 E 11")


def test_extend_validation():
    with pytest.raises(NotInClass):
        extend(ExtensionProblem(F.diamond(), {1: 1, 2: 2, 3: 3, 4: 2}))
    big = F.cycle_graph(12)
    with pytest.raises(OuterTooLarge):
        extend(ExtensionProblem(big, {v: 1 + v % 2 for v in big.vertices}))
    g, pre = c5_precolored()
    with pytest.raises(InvalidPrecoloring):
        extend(ExtensionProblem(g, {**pre, 2: 1}))
    with pytest.raises(InvalidPrecoloring):
        extend(ExtensionProblem(g, {1: 1, 2: 2}))


def test_color_planar_examples():
    for g in (F.cycle_graph(5), F.cycle_graph(8), F.theta(1, 4, 6), F.triangle()):
        log = []
        assert verify(g, color_planar(g, log=log))
    with pytest.raises(NotInClass):
        color_planar(F.cube())


def test_color_planar_on_long_girth_member_uses_exact_search():
    g = F.cycle_graph(9)
    log = []
    assert verify(g, color_planar(g, log=log))
    assert any("exact" in line for line in log)


def test_format_coloring():
    assert format_coloring({2: 1, 1: 3}) == "color 1 3\ncolor 2 1\nresult: colored\n"
    assert format_coloring(None) == "result: unsat\n"
