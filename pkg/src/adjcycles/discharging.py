"""Exact-rational charges, the R1..R5 transfer rules and the conservation audit.

Vertices start with ``deg - 4``, inner faces with ``deg - 4`` and the outer face
with ``deg + 4``.  All rules are evaluated against the graph structure in one
simultaneous pass; charges never influence which rule fires.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .plane import PlaneGraph

Entity = tuple[str, int]  # ("v", vertex) or ("f", face)

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
FOUR_THIRDS = Fraction(4, 3)
FIFTH = Fraction(1, 5)
TWO_FIFTHS = Fraction(2, 5)
THREE_FIFTHS = Fraction(3, 5)
SEVEN_FIFTHS = Fraction(7, 5)
FIFTEENTH = Fraction(1, 15)

RULE_IDS = (
    "R1", "R2", "R3",
    "R4a", "R4b", "R4c", "R4d", "R4e", "R4f", "R4g",
    "R5a", "R5b", "R5c", "R5d",
)


@dataclass(frozen=True)
class RuleOptions:
    # which incident faces adjacent to the lone 3-face pay a 4-vertex under R4e
    r4e: Literal["both", "single"] = "both"
    # faces receiving 1/15 from a 4-vertex under R4g
    r4g_target: Literal["7plus", "5plus"] = "7plus"

    def __post_init__(self):
        if self.r4e not in ("both", "single"):
            raise ValueError(f"r4e must be 'both' or 'single', not {self.r4e!r}")
        if self.r4g_target not in ("7plus", "5plus"):
            raise ValueError(f"r4g_target must be '7plus' or '5plus', not {self.r4g_target!r}")

    @property
    def r4g_min_degree(self) -> int:
        return 7 if self.r4g_target == "7plus" else 5


DEFAULT_OPTIONS = RuleOptions()


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Entity
    target: Entity
    amount: Fraction

    def __post_init__(self):
        if self.amount <= 0:
            raise ValueError("transfer amounts are positive")
        if self.rule not in RULE_IDS:
            raise ValueError(f"unknown rule {self.rule}")

    def to_line(self) -> str:
        return f"{self.rule} {_ent(self.source)} {_ent(self.target)} {self.amount}"


def _ent(e: Entity) -> str:
    return f"{'vertex' if e[0] == 'v' else 'face'}:{e[1]}"


@dataclass
class ChargeState:
    charges: dict[Entity, Fraction]

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))

    def __getitem__(self, e: Entity) -> Fraction:
        return self.charges[e]

    def vertex(self, v: int) -> Fraction:
        return self.charges[("v", v)]

    def face(self, f: int) -> Fraction:
        return self.charges[("f", f)]

    def apply(self, transfers: list[Transfer]) -> ChargeState:
        out = dict(self.charges)
        for t in transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return ChargeState(out)


def initial_charges(g: PlaneGraph) -> ChargeState:
    charges: dict[Entity, Fraction] = {}
    for v in g.vertices:
        charges[("v", v)] = Fraction(g.degree(v) - 4)
    for f in range(g.num_faces):
        extra = 8 if f == g.outer_face else 0
        charges[("f", f)] = Fraction(g.face_degree(f) - 4 + extra)
    return ChargeState(charges)


def outer_face_bound(outer_degree: int, l: int) -> Fraction:
    """Lower bound on the outer face's final charge when ``l`` outer vertices take
    7/5 and every other outer vertex takes at most 4/3."""
    return Fraction(outer_degree + 4) - SEVEN_FIFTHS * l - FOUR_THIRDS * (outer_degree - l)


# ---------------------------------------------------------------------- rule engine


class _View:
    """Per-graph lookups shared by the rules and their guard checks."""

    def __init__(self, g: PlaneGraph):
        self.g = g
        self.fdeg = [g.face_degree(f) for f in range(g.num_faces)]
        self.outer = g.outer_face

    def is_inner_face(self, f: int) -> bool:
        return f != self.outer

    def faces_at(self, v: int) -> tuple[int, ...]:
        return self.g.incident_faces(v)

    def count_deg(self, v: int, k: int) -> int:
        return sum(1 for f in self.faces_at(v) if self.fdeg[f] == k)

    def triangle_corner(self, v: int) -> int | None:
        cs = self.g.corners(v)
        for i, f in enumerate(cs):
            if self.fdeg[f] == 3:
                return i
        return None


def _vertex_rules(view: _View, v: int, opts: RuleOptions, out: list[Transfer], notes: list[str]) -> None:
    g = view.g
    deg = g.degree(v)
    V = ("v", v)
    faces = view.faces_at(v)
    fdeg = view.fdeg

    def give(rule, f, amount):
        out.append(Transfer(rule, V, ("f", f), amount))

    def take(rule, f, amount):
        out.append(Transfer(rule, ("f", f), V, amount))

    for f in faces:
        if fdeg[f] == 3 and view.is_inner_face(f):
            give("R1", f, THIRD)
    if deg == 5:
        for f in faces:
            if fdeg[f] >= 7:
                give("R2", f, FIFTEENTH)
    elif deg >= 6:
        for f in faces:
            give("R3", f, THIRD)

    inner = v in g.inner_vertices
    n3 = view.count_deg(v, 3)
    n5 = view.count_deg(v, 5)
    if inner:
        if deg == 3:
            if n3:
                for f in faces:
                    if fdeg[f] != 3:
                        take("R4a", f, TWO_THIRDS)
            elif n5:
                for f in faces:
                    take("R4b", f, FIFTH if fdeg[f] == 5 else TWO_FIFTHS)
            else:
                for f in faces:
                    take("R4c", f, THIRD)
        elif deg == 4:
            cs = g.corners(v)
            if n3 == 1 and len(cs) == 4:
                i = view.triangle_corner(v)
                if n5 == 0:
                    take("R4d", cs[(i + 2) % 4], THIRD)
                else:
                    sides = [cs[(i + 1) % 4]] if opts.r4e == "single" else [cs[(i + 1) % 4], cs[(i - 1) % 4]]
                    for f in dict.fromkeys(sides):
                        if fdeg[f] not in (3, 5):
                            take("R4e", f, FIFTEENTH)
                    for f in faces:
                        if fdeg[f] == 5:
                            take("R4e", f, FIFTH)
            elif n3 == 1:
                notes.append(f"vertex {v}: 4-vertex with a repeated face, R4d/R4e not applied")
            elif n3 >= 2:
                for f in faces:
                    if fdeg[f] != 3:
                        take("R4f", f, THIRD)
            elif n5:
                for f in faces:
                    if fdeg[f] == 5:
                        take("R4g", f, FIFTH)
                for f in faces:
                    if fdeg[f] >= opts.r4g_min_degree:
                        give("R4g", f, FIFTEENTH)
        elif deg < 3:
            notes.append(f"vertex {v}: inner vertex of degree {deg}, no rule")
        return

    o = view.outer
    if deg == 2:
        inner_faces = [f for f in faces if f != o]
        five = [f for f in inner_faces if fdeg[f] == 5]
        big = [f for f in inner_faces if fdeg[f] >= 7]
        if five:
            for f in five:
                take("R5a", f, THREE_FIFTHS)
            take("R5a", o, SEVEN_FIFTHS)
        elif big:
            for f in big:
                take("R5b", f, TWO_THIRDS)
            take("R5b", o, FOUR_THIRDS)
        else:
            kinds = ",".join(str(fdeg[f]) for f in inner_faces) or "none"
            notes.append(f"vertex {v}: outer 2-vertex with inner face degrees {kinds}, no R5 clause")
    elif deg == 3:
        take("R5c", o, FOUR_THIRDS)
    elif deg == 4:
        take("R5d", o, TWO_THIRDS)
    else:
        notes.append(f"vertex {v}: outer vertex of degree {deg}, no R5 clause")


def apply_rules(
    g: PlaneGraph, state: ChargeState | None = None, options: RuleOptions = DEFAULT_OPTIONS
) -> tuple[ChargeState, list[Transfer], list[str]]:
    """One simultaneous pass of every rule.  Returns final charges, the ledger in
    vertex order, and notes about situations no rule covers."""
    if state is None:
        state = initial_charges(g)
    view = _View(g)
    ledger: list[Transfer] = []
    notes: list[str] = []
    for v in g.vertices:
        _vertex_rules(view, v, options, ledger, notes)
    return state.apply(ledger), ledger, notes


# ---------------------------------------------------------------------- guard re-validation


def transfer_justified(g: PlaneGraph, t: Transfer, options: RuleOptions = DEFAULT_OPTIONS) -> bool:
    """Re-derive from the graph alone that ``t`` is an instance of its rule."""
    vert, face = (t.source, t.target) if t.source[0] == "v" else (t.target, t.source)
    if vert[0] != "v" or face[0] != "f":
        return False
    v, f = vert[1], face[1]
    if v not in g or not 0 <= f < g.num_faces or f not in g.incident_faces(v):
        return False
    deg = g.degree(v)
    fd = g.face_degree(f)
    sends = t.source[0] == "v"
    inner = v in g.inner_vertices
    fdegs = [g.face_degree(h) for h in g.incident_faces(v)]
    has3, has5 = 3 in fdegs, 5 in fdegs
    n3 = fdegs.count(3)
    a = t.amount
    r = t.rule
    if r == "R1":
        return sends and fd == 3 and f != g.outer_face and a == THIRD
    if r == "R2":
        return sends and deg == 5 and fd >= 7 and a == FIFTEENTH
    if r == "R3":
        return sends and deg >= 6 and a == THIRD
    if r.startswith("R4"):
        if not inner:
            return False
        if r == "R4a":
            return not sends and deg == 3 and has3 and fd != 3 and a == TWO_THIRDS
        if r == "R4b":
            want = FIFTH if fd == 5 else TWO_FIFTHS
            return not sends and deg == 3 and not has3 and has5 and a == want
        if r == "R4c":
            return not sends and deg == 3 and not has3 and not has5 and a == THIRD
        if r == "R4f":
            return not sends and deg == 4 and n3 >= 2 and fd != 3 and a == THIRD
        if r == "R4g":
            if deg != 4 or has3 or not has5:
                return False
            if sends:
                return fd >= options.r4g_min_degree and a == FIFTEENTH
            return fd == 5 and a == FIFTH
        cs = g.corners(v)
        if deg != 4 or n3 != 1 or len(cs) != 4 or sends:
            return False
        i = next(k for k, h in enumerate(cs) if g.face_degree(h) == 3)
        if r == "R4d":
            return not has5 and f == cs[(i + 2) % 4] and a == THIRD
        if r == "R4e":
            if not has5:
                return False
            if fd == 5:
                return a == FIFTH
            sides = {cs[(i + 1) % 4]} if options.r4e == "single" else {cs[(i + 1) % 4], cs[(i - 1) % 4]}
            return f in sides and fd != 3 and a == FIFTEENTH
        return False
    if r.startswith("R5"):
        if inner or sends:
            return False
        o = g.outer_face
        inner_degs = [g.face_degree(h) for h in g.incident_faces(v) if h != o]
        if r == "R5a":
            if deg != 2 or 5 not in inner_degs:
                return False
            return (f == o and a == SEVEN_FIFTHS) or (f != o and fd == 5 and a == THREE_FIFTHS)
        if r == "R5b":
            if deg != 2 or 5 in inner_degs or not any(x >= 7 for x in inner_degs):
                return False
            return (f == o and a == FOUR_THIRDS) or (f != o and fd >= 7 and a == TWO_THIRDS)
        if r == "R5c":
            return deg == 3 and f == o and a == FOUR_THIRDS
        if r == "R5d":
            return deg == 4 and f == o and a == TWO_THIRDS
    return False


# ---------------------------------------------------------------------- audit


@dataclass
class AuditReport:
    initial_total: Fraction
    final_total: Fraction
    initial: ChargeState
    final: ChargeState
    ledger: list[Transfer]
    notes: list[str] = field(default_factory=list)
    outer_takers_7_5: int = 0
    outer_degree: int = 0

    @property
    def conserved(self) -> bool:
        return self.initial_total == self.final_total

    @property
    def negative(self) -> list[Entity]:
        return [e for e, c in self.final.charges.items() if c < 0]

    def firings_for(self, e: Entity) -> list[Transfer]:
        return [t for t in self.ledger if e in (t.source, t.target)]

    @property
    def outer_bound(self) -> Fraction:
        return outer_face_bound(self.outer_degree, self.outer_takers_7_5)

    def to_text(self) -> str:
        lines = [
            f"initial-total {self.initial_total}",
            f"final-total {self.final_total}",
            f"conserved {'yes' if self.conserved else 'no'}",
            f"outer-face degree {self.outer_degree} takers-7/5 {self.outer_takers_7_5} bound {self.outer_bound}",
        ]
        for e in sorted(self.initial.charges):
            kind = "vertex" if e[0] == "v" else "face"
            fin = self.final.charges[e]
            lines.append(f"entity {kind} {e[1]} {self.initial.charges[e]} {fin}" + (" negative" if fin < 0 else ""))
        for e in sorted(self.negative):
            rules = ",".join(dict.fromkeys(t.rule for t in self.firings_for(e))) or "none"
            lines.append(f"negative {_ent(e)} rules {rules}")
        lines.extend(f"note {n}" for n in self.notes)
        lines.extend(f"transfer {t.to_line()}" for t in self.ledger)
        return "\n".join(lines) + "\n"


def audit(g: PlaneGraph, options: RuleOptions = DEFAULT_OPTIONS) -> AuditReport:
    start = initial_charges(g)
    final, ledger, notes = apply_rules(g, start, options)
    o = ("f", g.outer_face)
    takers = sum(1 for t in ledger if t.source == o and t.amount == SEVEN_FIFTHS)
    return AuditReport(start.total(), final.total(), start, final, ledger, notes, takers, g.face_degree(g.outer_face))
