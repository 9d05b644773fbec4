"""Text formats and the ``nearness`` command line.

Structure files::

    # optional comments
    n=3
    cover: 0,1;1,2

Map files::

    n=3
    m=2
    map: 0->0,1->1,2->1

Exit status is 0 on success, 1 when ``verify`` finds a failing clause and 2
for usage, parse or domain errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from .covers import GroundSet, SetMap, canonicalize, members
from .enumeration import enumerate_canonical_covers, enumerate_structures, find_counterexample
from .errors import NearnessError, ParseError
from .reflection import initial_structure, join, reflect, verify_bireflection
from .structures import MerotopicStructure, generate, interior, is_nearness, uniformly_continuous


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _int_field(line, no, key):
    name, sep, value = line.partition("=")
    if not sep or name.strip() != key:
        raise ParseError(f"expected '{key}=<int>', got {line!r}", no)
    try:
        return int(value.strip())
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {value.strip()!r}", no) from None


def _elements(text, no):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"bad element list {text!r}", no) from None


def parse_structure(text: str) -> MerotopicStructure:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty structure file")
    no, first = lines[0]
    n = _int_field(first, no, "n")
    if n < 1:
        raise ParseError(f"n must be positive, got {n}", no)
    ground = GroundSet(n)
    covers = []
    for no, line in lines[1:]:
        key, sep, body = line.partition(":")
        if not sep or key.strip() != "cover":
            raise ParseError(f"expected 'cover: ...', got {line!r}", no)
        blocks = [_elements(blk, no) for blk in body.split(";")]
        try:
            masks = [ground.subset(b) for b in blocks]
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
        covers.append(canonicalize(masks, ground))
    return generate(ground, covers)


def format_cover(cover) -> str:
    return ";".join(",".join(map(str, blk)) for blk in cover.as_lists())


def serialize_structure(mu: MerotopicStructure) -> str:
    out = [f"n={mu.ground.n}"]
    out.extend(f"cover: {format_cover(c)}" for c in mu.sorted_basis())
    return "\n".join(out) + "\n"


def parse_map(text: str) -> SetMap:
    lines = list(_lines(text))
    if len(lines) != 3:
        raise ParseError("map file needs exactly the lines n=, m= and map:")
    n = _int_field(lines[0][1], lines[0][0], "n")
    m = _int_field(lines[1][1], lines[1][0], "m")
    no, line = lines[2]
    key, sep, body = line.partition(":")
    if not sep or key.strip() != "map":
        raise ParseError(f"expected 'map: ...', got {line!r}", no)
    images = []
    for expected, pair in enumerate(body.split(",")):
        src, arrow, dst = pair.partition("->")
        try:
            src, dst = int(src), int(dst)
        except ValueError:
            raise ParseError(f"bad map entry {pair.strip()!r}", no) from None
        if not arrow or src != expected:
            raise ParseError(f"entry {pair.strip()!r} out of order, expected source {expected}", no)
        images.append(dst)
    try:
        return SetMap(GroundSet(n), GroundSet(m), tuple(images))
    except ValueError as exc:
        raise ParseError(str(exc), no) from None


def serialize_map(f: SetMap) -> str:
    body = ",".join(f"{x}->{y}" for x, y in enumerate(f.images))
    return f"n={f.domain.n}\nm={f.codomain.n}\nmap: {body}\n"


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    return parse_structure(_read(path))


def _cmd_check(args, out):
    mu = _load(args.file)
    out.write("nearness\n" if is_nearness(mu) else "merotopic\n")
    return 0


def _cmd_reflect(args, out):
    out.write(serialize_structure(reflect(_load(args.file), args.algorithm)))
    return 0


def _cmd_interior(args, out):
    mu = _load(args.file)
    try:
        a = mu.ground.subset(_elements(args.set, None))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    out.write(",".join(map(str, members(interior(mu, a)))) + "\n")
    return 0


def _cmd_join(args, out):
    out.write(serialize_structure(join(_load(args.file1), _load(args.file2))))
    return 0


def _cmd_initial(args, out):
    f = parse_map(_read(args.map))
    out.write(serialize_structure(initial_structure(f, _load(args.codomain))))
    return 0


def _cmd_uc(args, out):
    f = parse_map(_read(args.map))
    ok = uniformly_continuous(f, _load(args.domain), _load(args.codomain))
    out.write("true\n" if ok else "false\n")
    return 0


def _cmd_enumerate(args, out):
    ground = GroundSet(args.n)
    if args.covers:
        covers = enumerate_canonical_covers(ground).covers
        out.write(f"{len(covers)}\n")
        for c in covers:
            out.write(format_cover(c) + "\n")
    else:
        structures = enumerate_structures(ground)
        out.write(f"{len(structures)}\n")
        for mu in structures:
            out.write(" | ".join(format_cover(c) for c in mu.sorted_basis()) + "\n")
    return 0


def _cmd_verify(args, out):
    ground = GroundSet(args.n)
    rows = []
    for mu in enumerate_structures(ground):
        report = verify_bireflection(mu, args.bound)
        rows.append(report)
    names = [name for name, _, _ in rows[0].checks]
    header = ["structure", "reflection", "rounds"] + names
    table = [header]
    for r in rows:
        table.append(
            [
                " | ".join(format_cover(c) for c in r.input.sorted_basis()),
                " | ".join(format_cover(c) for c in r.reflection.sorted_basis()),
                str(r.iterations),
            ]
            + ["pass" if ok else "FAIL" for _, ok, _ in r.checks]
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    for row in table:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
    failed = sum(not r.passed for r in rows)
    out.write(f"{len(rows)} structures, {failed} failing\n")
    return 1 if failed else 0


def _cmd_counterexample(args, out):
    found = find_counterexample(GroundSet(args.n))
    if found is None:
        out.write("none\n")
        return 0
    f, nu, mu_f = found
    out.write("map: " + ",".join(f"{x}->{y}" for x, y in enumerate(f.images)) + "\n")
    out.write("nu:\n" + serialize_structure(nu))
    out.write("mu_f:\n" + serialize_structure(mu_f))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nearness", description="Finite merotopic and nearness structures."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report whether a structure is nearness")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("reflect", help="nearness reflection of a structure")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=["iterative", "maximal", "both"], default="iterative")
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("interior", help="interior of a subset")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated element indices")
    p.set_defaults(func=_cmd_interior)

    p = sub.add_parser("join", help="join of two structures")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_join)

    p = sub.add_parser("initial", help="initial structure induced by a map")
    p.add_argument("--map", required=True)
    p.add_argument("--codomain", required=True)
    p.set_defaults(func=_cmd_initial)

    p = sub.add_parser("uc", help="uniform continuity of a map")
    p.add_argument("--map", required=True)
    p.add_argument("--domain", required=True)
    p.add_argument("--codomain", required=True)
    p.set_defaults(func=_cmd_uc)

    p = sub.add_parser("enumerate", help="list canonical covers or structures")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--covers", action="store_true")
    kind.add_argument("--structures", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive bireflectivity sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=3, help="largest codomain size (default 3)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("counterexample", help="search for a non-nearness initial structure")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_counterexample)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (NearnessError, ValueError, OSError) as exc:
        err.write(f"nearness {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
