"""Command-line front end: ``smallcovers <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (message on stderr) and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import traceback
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .covers import (
    Coloring,
    enumerate_characteristic,
    equivalence_classes,
    find_orientable,
    is_orientable,
    load_coloring,
    serialize_coloring,
)
from .errors import SmallCoverError
from .gradient import TowerSummary, rgr_ratios
from .homology import betti_mod2, build_quotient_complex, top_cells_orientable
from .hvector import h_vector
from .polytope import Polytope, builtin, f_vector, load_polytope, validate
from .tower import TowerState, build_tower

TOWER_COLUMNS = ["j", "V", "E", "F", "k", "index", "h1"]
RGR_COLUMNS = ["j", "index", "V", "b1_lower", "ratio", "paper_ratio", "commensurable_b1", "atkinson_pass"]


def format_fraction(x: Fraction, places: int = 6) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places)))


def parse_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    return value


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return value


# ---------------------------------------------------------------- inputs


def _add_polytope_source(parser: argparse.ArgumentParser, required: bool = True) -> None:
    g = parser.add_mutually_exclusive_group(required=required)
    g.add_argument("--builtin", metavar="NAME", help="builtin polytope: square, pentagon, cube, dodecahedron, <k>-prism, <k>-gon")
    g.add_argument("--polytope", metavar="PATH", help="polytope file")
    g.add_argument("--seed", metavar="NAME|PATH", help="polytope file, or a builtin name when no such file exists")


def _polytope(args) -> Polytope:
    if args.builtin:
        return builtin(args.builtin)
    if args.polytope:
        return load_polytope(args.polytope)
    if os.path.exists(args.seed):
        return load_polytope(args.seed)
    return builtin(args.seed)


def _default_coloring(p: Polytope) -> Coloring:
    c = find_orientable(p)
    if c is None:
        c = next(enumerate_characteristic(p), None)
    if c is None:
        raise SmallCoverError("polytope has no characteristic coloring")
    return c


def _coloring(args, p: Polytope) -> Coloring:
    if getattr(args, "coloring", None):
        return load_coloring(args.coloring, p.dim)
    return _default_coloring(p)


def _emit(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- subcommands


def cmd_validate(args, out) -> int:
    p = _polytope(args)
    rep = validate(p, strict=args.strict)
    print(str(rep), file=out)
    if rep.ok:
        print("f-vector: " + " ".join(map(str, f_vector(p))), file=out)
    return 0 if rep.ok else 1


def cmd_hvector(args, out) -> int:
    print(" ".join(map(str, h_vector(_polytope(args)))), file=out)
    return 0


def cmd_covers(args, out) -> int:
    p = _polytope(args)
    if args.action == "enumerate":
        count = 0
        for c in enumerate_characteristic(p):
            count += 1
            if not args.count_only:
                print(" ".join(f"{x:0{c.n}b}" for x in c.colors), file=out)
        print(f"count: {count}", file=out)
    elif args.action == "classify":
        cls = equivalence_classes(p)
        print(f"classes: {cls.class_count}", file=out)
        print(f"characteristic colorings: {cls.total_count}", file=out)
        print(f"group order: {cls.group_order_used}", file=out)
        if args.show:
            for c in cls.representatives:
                tag = "orientable" if is_orientable(c) else "non-orientable"
                print(" ".join(f"{x:0{c.n}b}" for x in c.colors) + f"  {tag}", file=out)
    else:
        c = find_orientable(p)
        out.write(serialize_coloring(c) if c is not None else "none\n")
    return 0


def cmd_homology(args, out) -> int:
    p = _polytope(args)
    c = load_coloring(args.coloring, p.dim)
    qc = build_quotient_complex(p, c)
    b = betti_mod2(qc)
    h = h_vector(p)
    print("cells: " + " ".join(map(str, qc.counts())), file=out)
    print("betti: " + " ".join(map(str, b)), file=out)
    print("h-vector: " + " ".join(map(str, h)), file=out)
    print(f"verify_dj: {'true' if b == h else 'false'}", file=out)
    print(f"orientable: {'true' if top_cells_orientable(qc) else 'false'}", file=out)
    return 0


def _tower(args) -> TowerState:
    p = _polytope(args)
    return build_tower(p, _coloring(args, p), args.strategy, args.depth)


def cmd_tower(args, out) -> int:
    t = _tower(args)
    rows = []
    for j, lvl in enumerate(t.levels):
        k = "" if lvl.k is None else lvl.k
        rows.append([j, lvl.V, lvl.E, lvl.F, k, lvl.index_over_base, lvl.V // 2 - 1])
    _emit(_csv_text(TOWER_COLUMNS, rows), args.csv, out)
    return 0


def read_tower_csv(path: str) -> TowerSummary:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = {"j", "V", "k", "index"} - set(reader.fieldnames or [])
        if missing:
            raise SmallCoverError(f"tower CSV lacks columns {sorted(missing)}")
        rows = list(reader)
    if not rows:
        raise SmallCoverError("tower CSV has no rows")
    try:
        if [int(r["j"]) for r in rows] != list(range(len(rows))):
            raise SmallCoverError("tower CSV levels must be 0, 1, 2, ... in order")
        V = tuple(int(r["V"]) for r in rows)
        index = tuple(int(r["index"]) for r in rows)
        ks = tuple(int(r["k"]) for r in rows[:-1])
    except ValueError as exc:
        raise SmallCoverError(f"malformed tower CSV: {exc}")
    return TowerSummary(V, index, ks)


def cmd_rgr(args, out) -> int:
    if args.tower:
        summary = read_tower_csv(args.tower)
    elif args.builtin or args.polytope or args.seed:
        if args.depth is None:
            raise SmallCoverError("--depth is required with a seed polytope")
        t = _tower(args)
        summary = TowerSummary(tuple(l.V for l in t.levels), tuple(l.index_over_base for l in t.levels), tuple(t.ks))
    else:
        raise SmallCoverError("give --tower CSV or a seed polytope")
    rep = rgr_ratios(summary, base_rank=args.base_rank, rho=args.rho)
    header = list(RGR_COLUMNS) + (["rs_upper"] if args.base_rank is not None else [])
    rows = []
    for r in rep.rows:
        atk = "na" if r.atkinson_pass is None else ("true" if r.atkinson_pass else "false")
        row = [r.j, r.index, r.V, r.b1_lower, format_fraction(r.ratio), format_fraction(r.paper_ratio), r.commensurable_b1, atk]
        if args.base_rank is not None:
            row.append(r.rs_upper)
        rows.append(row)
    _emit(_csv_text(header, rows), args.csv, out)
    kind = "closed form" if rep.converged else "last ratio"
    print(f"limit ({kind}): {rep.limit_estimate} = {format_fraction(rep.limit_estimate)}", file=sys.stderr)
    for note in rep.notes:
        print(f"note: {note}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smallcovers", description="Small covers of simple polytopes and doubling towers.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="check simple-polytope invariants")
    _add_polytope_source(p)
    p.add_argument("--strict", action="store_true", help="also require a 3-connected edge graph")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("hvector", help="print the h-vector")
    _add_polytope_source(p)
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("covers", help="enumerate, classify or find characteristic colorings")
    p.add_argument("action", choices=["enumerate", "classify", "orientable"])
    _add_polytope_source(p)
    p.add_argument("--count-only", action="store_true", help="enumerate: print only the count")
    p.add_argument("--show", action="store_true", help="classify: list class representatives")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("homology", help="mod-2 Betti numbers of a small cover")
    _add_polytope_source(p)
    p.add_argument("--coloring", metavar="PATH", required=True, help="coloring file, lines 'facet_id: bits'")
    p.set_defaults(func=cmd_homology)

    for name, func, helptext in (
        ("tower", cmd_tower, "build a doubling tower and write it as CSV"),
        ("rgr", cmd_rgr, "rank-gradient bounds along a tower, as CSV"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_polytope_source(p, required=(name == "tower"))
        p.add_argument("--coloring", metavar="PATH", help="seed coloring (default: first orientable one)")
        p.add_argument("--strategy", default="min-face", help="min-face, round-robin or list:i,j,... (default min-face)")
        p.add_argument("--depth", type=nonneg_int, required=(name == "tower"), help="number of doublings")
        p.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
        if name == "rgr":
            p.add_argument("--tower", metavar="CSV", help="tower CSV produced by the tower subcommand")
            p.add_argument("--rho", type=parse_fraction, metavar="P/Q", help="volume-constant ratio C/D for the vertex-growth check")
            p.add_argument("--base-rank", type=nonneg_int, metavar="R", help="assumed rank of the base group")
        p.set_defaults(func=func)
    return parser


def _origin(exc: BaseException) -> str:
    module = "smallcovers"
    for frame, _ in traceback.walk_tb(exc.__traceback__):
        name = frame.f_globals.get("__name__", "")
        if name.startswith("smallcovers."):
            module = name
    return module


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "tower", None) and (args.builtin or args.polytope or args.seed):
        parser.print_usage(sys.stderr)
        print("smallcovers: error: --tower excludes a seed polytope", file=sys.stderr)
        return 2
    if getattr(args, "base_rank", None) == 0:
        print("smallcovers: error: --base-rank must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (SmallCoverError, OSError) as exc:
        print(f"{_origin(exc)}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
