"""Acceptance criteria 1-8.  Each test records one PASS/FAIL line, printed in the
terminal summary by conftest.py."""

import random
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

from adjcycles import pgr
from adjcycles.coloring import (
    ExtensionProblem,
    color_planar,
    count_3colorings,
    extend,
    iter_3colorings,
    verify,
)
from adjcycles.cycles import Cycle, check_class, chords, enumerate_cycles, is_separating
from adjcycles.discharging import audit
from adjcycles.errors import BoundsInfeasible, LemmaFalsified, PullBackImproper
from adjcycles.harness import all_outer_choices, class_keep, enumerate_plane_graphs, random_plane_graph
from adjcycles.oracles import naive_member, separating_by_components, window_max_bad, window_tetrads
from adjcycles.plane import canonical_code
from adjcycles.reductions import Kind, candidates, pull_back
from adjcycles.structure import find_tetrads, max_consecutive_bad

import fixtures as F

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []
DATA = Path(__file__).parent / "data"


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def members10():
    """Every class member with at most 10 vertices, one embedding per class, and
    the time the enumeration took (charged to each criterion using it)."""
    start = time.perf_counter()
    graphs = list(enumerate_plane_graphs(10, 24, keep=class_keep()))
    return graphs, time.perf_counter() - start


def boundary_precolorings(g, orbits=False):
    """Proper colorings of the graph induced on the outer boundary.  With ``orbits``
    only one per orbit of the color permutations is produced."""
    walk = list(dict.fromkeys(g.face_vertices(g.outer_face)))
    adj = g.adjacency
    col: dict[int, int] = {}

    def rec(i, top):
        if i == len(walk):
            yield dict(col)
            return
        v = walk[i]
        for c in range(1, (min(top + 1, 3) if orbits else 3) + 1):
            if all(col.get(w) != c for w in adj[v]):
                col[v] = c
                yield from rec(i + 1, max(top, c))
                del col[v]

    yield from rec(0, 0)


# ---------------------------------------------------------------------- 1


def test_criterion_1_charge_identity():
    rng = random.Random(2024)
    graphs = []
    while len(graphs) < 500:
        n = rng.randint(3, 20)
        m = rng.randint(n - 1, 3 * n - 6)
        graphs.append(random_plane_graph(n, m, seed=rng.randrange(10**9)))
    start = time.perf_counter()
    bad = 0
    for g in graphs:
        g = g.with_outer_face(rng.randrange(g.num_faces))
        rep = audit(g)
        if not (rep.initial_total == 0 and rep.final_total == 0):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    record(1, ok, f"{len(graphs)} graphs, {bad} with nonzero totals, {elapsed:.2f}s (limit 10s)")
    assert ok


# ---------------------------------------------------------------------- 2


def _face_on(g, vertices):
    return next(f for f in g.inner_faces() if set(g.face_vertices(f)) == set(vertices))


def test_criterion_2_quoted_arithmetic():
    start = time.perf_counter()
    cases = [
        ("3-4+3x1/3", F.triangle_of_4_vertices(), [1, 2, 3], Fraction(0)),
        ("5-4-3/5-2x1/5", F.five_face_with_2_vertex(), [1, 2, 3, 4, 5], Fraction(0)),
        ("7-4-7x2/5", F.seven_face_with_spokes(), range(1, 8), Fraction(1, 5)),
        ("9-4-7x2/3-1/3", F.nine_face_four_plus_three(), range(1, 10), Fraction(0)),
        ("8-4-6x2/3", F.eight_face_four_plus_two(), range(1, 9), Fraction(0)),
    ]
    failures = []
    for name, g, face, want in cases:
        got = audit(g).final.face(_face_on(g, face))
        if got != want:
            failures.append(f"{name}={got}")
    g = F.outer_eleven_face()
    rep = audit(g)
    if rep.final.face(g.outer_face) != rep.outer_bound:
        failures.append("outer-11")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1
    record(2, ok, f"{len(cases) + 1} fixtures, mismatches {failures or 'none'}, {elapsed:.2f}s (limit 1s)")
    assert ok


# ---------------------------------------------------------------------- 3


def test_criterion_3_class_checker_vs_brute_force():
    start = time.perf_counter()
    graphs = list(enumerate_plane_graphs(7, 15))
    disagree = [g for g in graphs if check_class(g).member != naive_member(g)]
    elapsed = time.perf_counter() - start
    members = sum(check_class(g).member for g in graphs)
    ok = not disagree and elapsed < 120
    record(3, ok, f"{len(graphs)} graphs n<=7 ({members} members), {len(disagree)} disagreements, {elapsed:.1f}s (limit 120s)")
    assert ok


# ---------------------------------------------------------------------- 4


def random_members(count, n_max, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, n_max)
        m = rng.randint(n - 1, n + n // 3)
        try:
            out.append(random_plane_graph(n, m, rng.randrange(10**9), keep=class_keep(), attempts=5))
        except BoundsInfeasible:
            continue
    return out


def test_criterion_4_theorem_at_desk_scale(members10):
    members10, enum_time = members10
    start = time.perf_counter() - enum_time
    small = [g for g in members10 if g.n <= 9]
    sampled = random_members(300, 25, seed=4)
    failures = 0
    for g in small + sampled:
        try:
            if not verify(g, color_planar(g)):
                failures += 1
        except Exception:
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 300
    record(
        4, ok,
        f"{len(small)} exhaustive members n<=9 + {len(sampled)} random members n<=25, "
        f"{failures} failures, {elapsed:.1f}s (limit 300s, including enumeration)",
    )
    assert ok


# ---------------------------------------------------------------------- 5


def test_criterion_5_extension_lemma(members10):
    members10, enum_time = members10
    start = time.perf_counter() - enum_time
    problems = falsified = mismatched = 0
    for g in members10:
        for h in all_outer_choices(g, max_degree=11):
            for pre in boundary_precolorings(h):
                problems += 1
                try:
                    sol = extend(ExtensionProblem(h, pre))
                    good = verify(h, sol).ok and all(sol[v] == c for v, c in pre.items())
                except LemmaFalsified:
                    falsified += 1
                    good = False
                if not good or count_3colorings(h, pre) == 0:
                    mismatched += 1
    elapsed = time.perf_counter() - start
    ok = falsified == 0 and mismatched == 0 and elapsed < 600
    record(
        5, ok,
        f"{len(members10)} members n<=10, {problems} precolorings, "
        f"{falsified} LemmaFalsified, {mismatched} bad extensions, {elapsed:.1f}s (limit 600s, including enumeration)",
    )
    assert ok


# ---------------------------------------------------------------------- 6


def test_criterion_6_reduction_soundness(members10):
    members10, enum_time = members10
    start = time.perf_counter() - enum_time
    seen = set()
    steps = guard_fail = improper = colorings = 0
    kinds = Counter()
    for g in members10:
        for h in all_outer_choices(g, max_degree=11):
            if not h.outer_boundary_is_cycle:
                continue
            code = canonical_code(h, rooted=True)
            for pre in boundary_precolorings(h, orbits=True):
                for step in candidates(h, pre):
                    # identifications do not depend on the precoloring; check each once
                    key = (code, step.kind, repr(step.params), tuple(sorted(pre.items())) if step.kind in (
                        Kind.CHORD_DELETE, Kind.FIVE_FACE_EDGE_ADD, Kind.FIVE_FACE_IDENTIFY) else None)
                    if key in seen:
                        continue
                    seen.add(key)
                    steps += 1
                    kinds[step.kind.value] += 1
                    r = step.result
                    c0 = Cycle.from_vertices(r, r.face_vertices(r.outer_face)) if r.outer_boundary_is_cycle else None
                    if c0 is None or chords(r, c0) or not naive_member(r, use_cycle_space=True):
                        guard_fail += 1
                    # a deleted chord may join equal colors in arbitrary colorings of G*,
                    # so for ChordDelete only colorings keeping the precoloring qualify
                    partial = step.reduced_precoloring if step.kind is Kind.CHORD_DELETE else None
                    for col in iter_3colorings(r, partial):
                        colorings += 1
                        try:
                            back = pull_back(step, col)
                        except PullBackImproper:
                            improper += 1
                            continue
                        if not verify(h, back):
                            improper += 1
    elapsed = time.perf_counter() - start
    ok = steps > 0 and guard_fail == 0 and improper == 0 and elapsed < 300
    record(
        6, ok,
        f"{steps} distinct firing steps {dict(sorted(kinds.items()))}, {colorings} pulled-back colorings, "
        f"{guard_fail} guard failures, {improper} PullBackImproper, {elapsed:.1f}s (limit 300s, including enumeration)",
    )
    assert ok


# ---------------------------------------------------------------------- 7


def test_criterion_7_detector_oracles(members10):
    members10, _ = members10
    start = time.perf_counter()
    corpus = [h for g in members10 if g.n <= 8 for h in all_outer_choices(g)]
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(6, 14)
        m = rng.randint(n - 1, min(3 * n - 6, 2 * n))
        g = random_plane_graph(n, m, seed=rng.randrange(10**9))
        corpus.append(g.with_outer_face(rng.randrange(g.num_faces)))
    tet = runs = sep = 0
    cycles_checked = 0
    for g in corpus:
        if {(t.face, t.vertices) for t in find_tetrads(g)} != window_tetrads(g):
            tet += 1
        if any(max_consecutive_bad(g, f) != window_max_bad(g, f) for f in g.inner_faces()):
            runs += 1
        for c in enumerate_cycles(g, 11) if g.m >= 3 else []:
            cycles_checked += 1
            if is_separating(g, c) != separating_by_components(g, c.vertices):
                sep += 1
    elapsed = time.perf_counter() - start
    ok = tet == runs == sep == 0
    record(
        7, ok,
        f"{len(corpus)} graphs n<=14, tetrad disagreements {tet}, run disagreements {runs}, "
        f"separating disagreements {sep} over {cycles_checked} cycles, {elapsed:.1f}s",
    )
    assert ok


# ---------------------------------------------------------------------- 8


def _cli(*args, cwd=None):
    res = subprocess.run([sys.executable, "-m", "adjcycles", *map(str, args)], capture_output=True, cwd=cwd)
    return res.returncode, res.stdout


def test_criterion_8_determinism(tmp_path):
    files = sorted(DATA.glob("*.pgr"))
    commands = [
        ("gen", "--seed", "7", "-n", "12", "-m", "16", "--count", "5"),
        ("gen", "--seed", "7", "-n", "10", "-m", "11", "--count", "3", "--members-only"),
        ("gen", "--exhaustive", "-n", "6", "--members-only"),
        ("check", "--lmax", "9", *files),
        ("color", "--trace", *files),
        ("audit", "--trace", *files),
        ("audit", "--trace", "--r4e", "single", "--r4g-target", "5plus", *files),
        ("detect", *files),
        ("detect", "--facial-only", *files),
        ("oracle", *files),
        ("extend", "--trace", "--precoloring", "1:1,2:2,3:1,4:2,5:1,6:2,7:1,8:2,9:1,10:2", DATA / "theta57.pgr"),
    ]
    differing = []
    for cmd in commands:
        if _cli(*cmd) != _cli(*cmd):
            differing.append(cmd[0])
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    _cli("gen", "--seed", "7", "-n", "14", "-m", "18", "--count", "20", "--out", out_a)
    _cli("gen", "--seed", "7", "-n", "14", "-m", "18", "--count", "20", "--out", out_b)
    names = sorted(p.name for p in out_a.iterdir())
    if names != sorted(p.name for p in out_b.iterdir()) or any(
        (out_a / n).read_bytes() != (out_b / n).read_bytes() for n in names
    ):
        differing.append("gen --out")
    ok = not differing
    record(8, ok, f"{len(commands) + 1} commands run twice, differing: {differing or 'none'}")
    assert ok
