"""Command-line entry point.

Exit codes: 0 success, 1 a requested check failed, 2 bad flags or input.
"""

from __future__ import annotations

import argparse
import sys

from icnic import analysis, constructions, interchange, search
from icnic.drawing import DrawingClass, census, planarize, validate
from icnic.errors import BudgetExceeded, IcnicError
from icnic.saturation import SaturationPolicy, format_log, is_maximal, saturate

CLASS_CHOICES = [c.value for c in DrawingClass]


class _UsageError(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(path: str):
    try:
        if path == "-":
            return interchange.loads(sys.stdin.read())
        return interchange.load(path)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    except IcnicError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def _cls(text: str | None) -> DrawingClass | None:
    return None if text is None else DrawingClass.parse(text)


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family in ("hstar", "mstar"):
        d = constructions.generate(args.family)
    else:
        if args.k is None or args.k < 1:
            raise _UsageError(f"--k >= 1 is required for family {args.family}")
        d = constructions.generate(args.family, args.k)
    _write(args.output, interchange.dumps(d))
    return 0


def cmd_validate(args) -> int:
    d = _load(args.file)
    k = _cls(args.cls)
    rep = validate(d, k)
    if rep.ok:
        print(f"VALID class={k.value}")
        return 0
    for v in rep.violations:
        print("INVALID crossing " + " ".join(map(str, v)) if len(v) == 1 else f"INVALID crossings {v[0]} {v[1]}")
    return 1


def cmd_census(args) -> int:
    cen = census(_load(args.file))
    print(cen.line())
    for size, (tr, fa) in cen.face_histogram.items():
        print(f"face {size} true={tr} false={fa}")
    return 0


def cmd_saturate(args) -> int:
    d = _load(args.file)
    k = _cls(args.cls)
    if not validate(d, k).ok:
        print(f"error: input is not a {k.value} drawing", file=sys.stderr)
        return 1
    out, log = saturate(d, k, SaturationPolicy(args.order, args.seed))
    _write(args.output, interchange.dumps(out))
    text = format_log(log)
    if args.log:
        _write(args.log, text)
    elif args.output not in (None, "-"):
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    d = _load(args.file)
    k = _cls(args.cls)
    st = analysis.verify_structure(d, args.maximal, k)
    lines = st.lines()
    failed = bool(st.failures)
    if args.maximal:
        mx = is_maximal(d, st.cls)
        lines.append(f"CHECK maximal {'PASS' if mx else 'FAIL'}")
        failed |= not mx
    if args.all:
        bd = analysis.verify_bounds(census(d), st.cls, args.maximal)
        lines.extend(bd.lines())
        failed |= not bd.ok
        cs = analysis.detect_c_star(d)
        members = ",".join(map(str, cs.members)) or "none"
        lines.append(f"INFO c_star members={members}")
        for x, r in cs.r_star.items():
            lines.append(f"INFO r_star crossing={x} value={r}")
    print("\n".join(lines))
    return 1 if failed else 0


def cmd_search(args) -> int:
    k = _cls(args.cls)
    if args.enum:
        try:
            res = search.enumerate_maximal_small(args.n, k, args.cmax, args.budget, workers=args.workers)
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        print(res.line())
        if args.output and res.witness is not None:
            _write(args.output, interchange.dumps(res.witness))
        low = analysis.lower_bound(args.n, k)
        return 0 if res.min_edges is None or low is None or res.min_edges >= low else 1
    if args.n < 3:
        raise _UsageError("--n must be at least 3")
    d = search.random_saturated(args.n, k, args.seed)
    _write(args.output, interchange.dumps(d))
    if args.output not in (None, "-"):
        print(census(d).line())
    return 0


def cmd_export(args) -> int:
    d = _load(args.file)
    text = planarize(d).to_dot() if args.format == "dot" else interchange.dumps(d)
    _write(args.output, text)
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="icnic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a drawing from one of the extremal families")
    g.add_argument("--family", required=True, choices=constructions.FAMILIES)
    g.add_argument("--k", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check membership in a drawing class")
    v.add_argument("--class", dest="cls", choices=CLASS_CHOICES, default="1p")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("census", help="print vertex, edge, crossing, hermit and face counts")
    c.add_argument("file")
    c.set_defaults(func=cmd_census)

    s = sub.add_parser("saturate", help="add edges until no more fit the class")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", choices=CLASS_CHOICES, required=True)
    s.add_argument("--order", choices=["lex", "random"], default="lex")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.add_argument("--log", help="write the insertion log here")
    s.set_defaults(func=cmd_saturate)

    r = sub.add_parser("verify", help="run the structural and bound checks")
    r.add_argument("file")
    r.add_argument("--all", action="store_true", help="include bound checks and C* details")
    r.add_argument("--class", dest="cls", choices=CLASS_CHOICES)
    r.add_argument("--maximal", action="store_true", help="assert maximality (checked)")
    r.set_defaults(func=cmd_verify)

    q = sub.add_parser("search", help="exhaustive or random search for small maximal drawings")
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--enum", action="store_true")
    mode.add_argument("--random", action="store_true")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--class", dest="cls", choices=CLASS_CHOICES, required=True)
    q.add_argument("--cmax", type=int, default=1)
    q.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_search)

    e = sub.add_parser("export", help="write the planarization as DOT or re-serialize")
    e.add_argument("file")
    e.add_argument("--format", choices=["dot", "drawing"], default="dot")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
