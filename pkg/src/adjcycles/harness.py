"""Constructive plane-graph generation, class filtering and on-disk corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import pgr
from .cycles import DEFAULT_SPEC, NonadjacencySpec, check_class, is_member
from .errors import BoundsInfeasible
from .plane import GraphDoc, PlaneGraph, add_pendant, build_from_rotation, canonical_code, from_rotation_lists
from .plane import insert_edge_at_corners, subdivide_edge

Keep = Callable[[PlaneGraph], bool]

PENDANT = "AddVertexInFace"
SPLIT = "SplitFaceWithEdge"
SUBDIVIDE = "SubdivideEdge"


@dataclass(frozen=True)
class GrowthOp:
    kind: str
    params: tuple[int, ...]

    def apply(self, g: PlaneGraph) -> PlaneGraph:
        if self.kind == PENDANT:
            return add_pendant(g, corner=self.params[0])[0]
        if self.kind == SPLIT:
            return insert_edge_at_corners(g, *self.params)
        if self.kind == SUBDIVIDE:
            return subdivide_edge(g, self.params[0])[0]
        raise ValueError(f"unknown growth op {self.kind}")


def single_edge() -> PlaneGraph:
    return from_rotation_lists({1: [2], 2: [1]}, outer=(1, 2))


def growth_ops(g: PlaneGraph, subdivide: bool = False) -> list[GrowthOp]:
    """All ops that keep ``g`` simple: a pendant at any corner, an edge between
    two corners of one face whose vertices are not yet adjacent, and optionally
    the subdivision of any edge."""
    ops = [GrowthOp(PENDANT, (d,)) for d in range(g.num_darts)]
    for walk in g.faces:
        for i, du in enumerate(walk):
            u = g.tail(du)
            for dv in walk[i + 1 :]:
                v = g.tail(dv)
                if u != v and not g.has_edge(u, v):
                    ops.append(GrowthOp(SPLIT, (du, dv)))
    if subdivide:
        ops.extend(GrowthOp(SUBDIVIDE, (e,)) for e in range(g.m))
    return ops


def enumerate_plane_graphs(n_max: int, m_max: int, keep: Keep | None = None) -> Iterator[PlaneGraph]:
    """Every connected simple plane graph with 2 <= n <= n_max and m <= m_max, each
    embedding once up to orientation-preserving or reversing isomorphism of the
    sphere, in order of edge count and then canonical code.

    Any such graph shrinks to a single edge by deleting a leaf or a cycle edge,
    so reversing those deletions (pendants and face splits) reaches all of them.
    ``keep`` prunes the search and must therefore be closed under subgraphs.
    Outer faces are not distinguished; use ``with_outer_face`` to pick one.
    """
    if n_max < 2 or m_max < 1:
        return
    level = {canonical_code(single_edge()): single_edge()}
    m = 1
    while level:
        for code in sorted(level):
            yield level[code]
        if m == m_max:
            return
        nxt: dict[tuple, PlaneGraph] = {}
        for code in sorted(level):
            g = level[code]
            for op in growth_ops(g):
                if op.kind == PENDANT and g.n >= n_max:
                    continue
                h = op.apply(g)
                c = canonical_code(h)
                if c in nxt:
                    continue
                if keep is not None and not keep(h):
                    continue
                nxt[c] = h
        level = nxt
        m += 1


def all_outer_choices(g: PlaneGraph, max_degree: int | None = None) -> Iterator[PlaneGraph]:
    """``g`` once per face, with that face as the outer face."""
    for f in range(g.num_faces):
        if max_degree is None or g.face_degree(f) <= max_degree:
            yield g.with_outer_face(f)


def random_plane_graph(
    n: int, m: int, seed: int, keep: Keep | None = None, attempts: int = 200
) -> PlaneGraph:
    """A random connected simple plane graph with exactly ``n`` vertices and ``m`` edges.

    A random tree is grown by pendants and subdivisions, then faces are split
    until ``m`` edges exist.  ``keep`` filters every intermediate graph.
    """
    if n < 2 or m < n - 1 or (n >= 3 and m > 3 * n - 6) or (n == 2 and m != 1):
        raise BoundsInfeasible(f"no connected simple plane graph has n={n}, m={m}")
    rng = random.Random(seed)
    for _ in range(attempts):
        g = _random_attempt(n, m, rng, keep)
        if g is not None:
            return g
    raise BoundsInfeasible(f"no graph with n={n}, m={m} found in {attempts} attempts")


def _random_attempt(n: int, m: int, rng: random.Random, keep: Keep | None) -> PlaneGraph | None:
    g = single_edge()
    while g.n < n:
        if g.m > 1 and rng.random() < 0.3:
            op = GrowthOp(SUBDIVIDE, (rng.randrange(g.m),))
        else:
            op = GrowthOp(PENDANT, (rng.randrange(g.num_darts),))
        h = op.apply(g)
        if keep is None or keep(h):
            g = h
    while g.m < m:
        ops = [op for op in growth_ops(g) if op.kind == SPLIT]
        rng.shuffle(ops)
        for op in ops:
            h = op.apply(g)
            if keep is None or keep(h):
                g = h
                break
        else:
            return None
    return g


# ---------------------------------------------------------------------- corpora


@dataclass(frozen=True)
class CorpusEntry:
    doc: GraphDoc
    n: int
    m: int
    member: bool
    witness: str = ""
    seed: int | None = None

    @property
    def graph(self) -> PlaneGraph:
        return build_from_rotation(self.doc)


@dataclass
class Corpus:
    entries: list[CorpusEntry] = field(default_factory=list)
    rejects: list[CorpusEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self.entries)

    def graphs(self) -> Iterator[PlaneGraph]:
        for e in self.entries:
            yield e.graph

    @property
    def member_fraction(self) -> float:
        total = len(self.entries) + len(self.rejects)
        return len(self.entries) / total if total else 0.0

    def save(self, directory: str | Path) -> None:
        """Write members and rejects as ``.pgr`` files plus ``manifest.tsv``."""
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        rows = ["filename\tn\tm\tmember\twitness\tseed"]
        for i, e in enumerate(self.entries + self.rejects):
            name = f"g{i:05d}.pgr"
            (d / name).write_text(pgr.serialize(e.doc))
            seed = "" if e.seed is None else str(e.seed)
            rows.append(f"{name}\t{e.n}\t{e.m}\t{int(e.member)}\t{e.witness}\t{seed}")
        (d / "manifest.tsv").write_text("\n".join(rows) + "\n")

    @classmethod
    def load(cls, directory: str | Path, spec: NonadjacencySpec = DEFAULT_SPEC) -> Corpus:
        """Read a corpus, re-parsing every file and re-checking its recorded verdict."""
        d = Path(directory)
        lines = (d / "manifest.tsv").read_text().splitlines()
        out = cls()
        for line in lines[1:]:
            if not line.strip():
                continue
            name, n, m, member, witness, seed = (line.split("\t") + [""] * 6)[:6]
            g = pgr.load(d / name)
            verdict = check_class(g, spec)
            if g.n != int(n) or g.m != int(m) or verdict.member != bool(int(member)):
                raise ValueError(f"{name}: manifest row does not match the file")
            e = CorpusEntry(g.to_doc(), g.n, g.m, verdict.member, witness, int(seed) if seed else None)
            (out.entries if e.member else out.rejects).append(e)
        return out


def _witness_text(verdict) -> str:
    if verdict.member:
        return ""
    i, j = verdict.witness_lengths
    return f"({i},{j})"


def filter_class(
    stream: Iterable[PlaneGraph], spec: NonadjacencySpec = DEFAULT_SPEC, seed: int | None = None
) -> Corpus:
    """Keep class members; rejects are recorded with the lengths of their witness pair."""
    out = Corpus()
    for g in stream:
        verdict = check_class(g, spec)
        e = CorpusEntry(g.to_doc(), g.n, g.m, verdict.member, _witness_text(verdict), seed)
        (out.entries if verdict.member else out.rejects).append(e)
    return out


def class_keep(spec: NonadjacencySpec = DEFAULT_SPEC) -> Keep:
    return lambda g: is_member(g, spec)
