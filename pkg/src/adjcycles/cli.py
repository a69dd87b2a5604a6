"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import pgr
from .coloring import (
    ExtensionProblem,
    ExtensionTrace,
    color_planar,
    count_3colorings,
    exact_3color,
    extend,
    format_coloring,
)
from .cycles import NonadjacencySpec, check_class, enumerate_cycles, region_partition
from .discharging import RuleOptions, audit
from .errors import (
    AdjCyclesError,
    BoundsInfeasible,
    ColoringFailed,
    InvalidPrecoloring,
    LemmaFalsified,
    MultigraphUnsupported,
    NotInClass,
    OuterTooLarge,
    PgrSyntaxError,
)
from .harness import Corpus, class_keep, enumerate_plane_graphs, filter_class, random_plane_graph
from .structure import Status, checklist, find_simitetrads, find_tetrads, max_consecutive_bad

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Outcome:
    code: int
    text: str
    err: str = ""


# ---------------------------------------------------------------------- per-file commands


def _load(path: str):
    try:
        return pgr.load(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except PgrSyntaxError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.offset}: {exc.msg}") from exc
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_check(path: str, args) -> Outcome:
    g = _load(path)
    try:
        verdict = check_class(g, args.spec)
    except MultigraphUnsupported as exc:
        raise InputError(f"{path}: {exc}") from exc
    lines = [f"class {verdict.describe()}"]
    if verdict.witness_lengths:
        i, j = verdict.witness_lengths
        lines.append(f"witness ({i},{j})")
    if args.lmax:
        counts: dict[int, int] = {}
        for c in enumerate_cycles(g, args.lmax):
            counts[len(c)] = counts.get(len(c), 0) + 1
        lines.extend(f"cycles length {k} count {counts[k]}" for k in sorted(counts))
    lines.append(f"result: {'member' if verdict.member else 'non-member'}")
    return Outcome(OK if verdict.member else NEGATIVE, "\n".join(lines) + "\n")


def cmd_color(path: str, args) -> Outcome:
    g = _load(path)
    log: list[str] = []
    try:
        sol = color_planar(g, args.spec, log)
    except NotInClass as exc:
        return Outcome(NEGATIVE, format_coloring(None, "error"), str(exc))
    except MultigraphUnsupported as exc:
        raise InputError(f"{path}: {exc}") from exc
    except ColoringFailed as exc:
        return Outcome(NEGATIVE, format_coloring(None, "unsat"), str(exc))
    text = "".join(f"trace {line}\n" for line in log) if args.trace else ""
    return Outcome(OK, text + format_coloring(sol))


def _parse_precoloring(text: str) -> dict[int, int]:
    out = {}
    for item in text.replace(",", " ").split():
        v, _, c = item.partition(":")
        if not v.isdigit() or c not in ("1", "2", "3"):
            raise InputError(f"bad precoloring item {item!r}; expected vertex:color")
        out[int(v)] = int(c)
    return out


def cmd_extend(path: str, args) -> Outcome:
    g = _load(path)
    pre = _parse_precoloring(args.precoloring)
    trace = ExtensionTrace()
    try:
        sol = extend(ExtensionProblem(g, pre, args.spec), trace)
    except (InvalidPrecoloring, OuterTooLarge) as exc:
        raise InputError(f"{path}: {exc}") from exc
    except NotInClass as exc:
        return Outcome(NEGATIVE, format_coloring(None, "error"), str(exc))
    except LemmaFalsified as exc:
        return Outcome(NEGATIVE, format_coloring(None, "unsat"), str(exc))
    text = "".join(f"trace {line}\n" for line in trace.lines()) if args.trace else ""
    return Outcome(OK, text + format_coloring(sol))


def cmd_audit(path: str, args) -> Outcome:
    g = _load(path)
    rep = audit(g, RuleOptions(r4e=args.r4e, r4g_target=args.r4g_target))
    text = rep.to_text()
    if not args.trace:
        text = "".join(line + "\n" for line in text.splitlines() if not line.startswith("transfer "))
    return Outcome(OK if rep.conserved else NEGATIVE, text)


def cmd_detect(path: str, args) -> Outcome:
    g = _load(path)
    rep = checklist(g, args.spec, facial_only=args.facial_only)
    lines = rep.to_text().splitlines()
    for t in find_tetrads(g):
        lines.append(f"tetrad face {t.face} vertices {'-'.join(map(str, t.vertices))}")
    for s in find_simitetrads(g):
        d = "inf" if s.distance is None else s.distance
        lines.append(
            f"simitetrad face {s.face} v0 {s.v0} run {'-'.join(map(str, s.run))} w2 {s.w2} "
            f"distance {d} conclusion {'holds' if s.conclusion_holds else 'fails'}"
        )
    for f in g.inner_faces():
        lines.append(f"face {f} degree {g.face_degree(f)} max-consecutive-bad {max_consecutive_bad(g, f)}")
    violated = any(r.status is Status.VIOLATED for r in rep.results)
    lines.append(f"result: {'violations' if violated else 'clean'}")
    return Outcome(NEGATIVE if violated else OK, "\n".join(lines) + "\n")


def cmd_oracle(path: str, args) -> Outcome:
    from . import oracles

    g = _load(path)
    lines = []
    ok = True

    def report(name: str, agree: bool) -> None:
        nonlocal ok
        ok &= agree
        lines.append(f"{name} {'agree' if agree else 'DISAGREE'}")

    if g.is_simple and g.n <= 9:
        report("cycles", {c.key for c in enumerate_cycles(g, 7)} == oracles.naive_cycles(g, 7))
        report("class", check_class(g, args.spec).member == oracles.naive_member(g, args.spec))
    if g.n <= 14:
        report("tetrads", {(t.face, t.vertices) for t in find_tetrads(g)} == oracles.window_tetrads(g))
        report(
            "max-consecutive-bad",
            all(max_consecutive_bad(g, f) == oracles.window_max_bad(g, f) for f in g.inner_faces()),
        )
        if g.is_simple:
            agree = True
            for c in enumerate_cycles(g, min(g.n, 11)) if g.m >= 3 else []:
                r = region_partition(g, c)
                agree &= bool(r.interior and r.exterior) == oracles.separating_by_components(g, c.vertices)
            report("separating", agree)
    if g.n <= 12:
        sol = exact_3color(g)
        report("coloring", (sol is not None) == (count_3colorings(g) > 0))
    lines.append(f"result: {'agree' if ok else 'disagree'}")
    return Outcome(OK if ok else NEGATIVE, "\n".join(lines) + "\n")


PER_FILE = {
    "check": cmd_check,
    "color": cmd_color,
    "extend": cmd_extend,
    "audit": cmd_audit,
    "detect": cmd_detect,
    "oracle": cmd_oracle,
}


def _run_one(job) -> Outcome:
    name, path, args = job
    try:
        return PER_FILE[name](path, args)
    except InputError as exc:
        return Outcome(INPUT_ERROR, "", str(exc))
    except AdjCyclesError as exc:
        return Outcome(INPUT_ERROR, "", f"{path}: {exc}")


# ---------------------------------------------------------------------- gen


def cmd_gen(args) -> int:
    if args.exhaustive:
        keep = class_keep(args.spec) if args.members_only else None
        graphs = list(enumerate_plane_graphs(args.n, args.m or 3 * args.n - 6, keep))
    else:
        if args.n is None:
            raise InputError("gen needs -n")
        m = args.m if args.m is not None else args.n - 1
        keep = class_keep(args.spec) if args.members_only else None
        graphs = []
        for i in range(args.count):
            graphs.append(random_plane_graph(args.n, m, args.seed + i, keep))
    if args.out:
        corpus = filter_class(graphs, args.spec, seed=None if args.exhaustive else args.seed)
        Corpus(corpus.entries, [] if args.members_only else corpus.rejects).save(args.out)
        print(f"wrote {len(graphs)} graphs to {args.out}")
    else:
        sys.stdout.write("\n".join(pgr.dumps(g) for g in graphs))
    return OK


# ---------------------------------------------------------------------- entry point


def _spec(value: str) -> NonadjacencySpec:
    try:
        return NonadjacencySpec.load(value)
    except (OSError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"cannot load spec {value!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", type=_spec, default="default", help="forbidden pairs file or 'default'")
    common.add_argument("--lmax", type=int, default=0, help="also report cycle counts up to this length")
    common.add_argument("--trace", action="store_true", help="print reduction steps and transfers")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--r4g-target", choices=("7plus", "5plus"), default="7plus")
    common.add_argument("--r4e", choices=("both", "single"), default="both")
    common.add_argument("--facial-only", action="store_true", help="restrict cycle-neighbor checks to facial cycles")
    common.add_argument("--jobs", type=int, default=1, help="process input files in parallel")

    p = argparse.ArgumentParser(prog="adjcycles", description="Plane graphs with forbidden adjacent short cycles.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("check", "class membership with a witness pair"),
        ("color", "3-color a class member"),
        ("audit", "discharging audit"),
        ("detect", "structural checklist and configuration detectors"),
        ("oracle", "differential checks against brute force"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("files", nargs="+")
    sp = sub.add_parser("extend", parents=[common], help="extend an outer-boundary precoloring")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--precoloring", required=True, help="vertex:color items, e.g. '1:1,2:2,3:3'")
    sp = sub.add_parser("gen", parents=[common], help="generate random or exhaustive plane graphs")
    sp.add_argument("-n", type=int, help="vertex count (or bound with --exhaustive)")
    sp.add_argument("-m", type=int, help="edge count (or bound with --exhaustive)")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--members-only", action="store_true")
    sp.add_argument("--out", help="write a corpus directory instead of printing")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if isinstance(args.spec, str):
        args.spec = _spec(args.spec)
    if args.command == "gen":
        try:
            return cmd_gen(args)
        except (InputError, BoundsInfeasible) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return INPUT_ERROR
    jobs = [(args.command, f, args) for f in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_run_one, jobs))
    else:
        outcomes = [_run_one(j) for j in jobs]
    multi = len(jobs) > 1
    for (_, path, _), out in zip(jobs, outcomes):
        if multi:
            sys.stdout.write(f"# {path}\n")
        sys.stdout.write(out.text)
        if out.err:
            print(f"error: {out.err}" if out.code == INPUT_ERROR else out.err, file=sys.stderr)
    return max(o.code for o in outcomes)


if __name__ == "__main__":
    sys.exit(main())
