"""Command-line front end.

Exit status: 0 on success, 1 on input errors, 2 when ``paper-report`` records
failures or ``check`` finds the Jacobi identity violated.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import families
from .algebra_io import read_algebra_file, serialize_report
from .expr import ParseError
from .lie import LieAlgebraSpec
from .report import build_report, render_text

COMMANDS = {
    "check": ("checks",),
    "connection": ("connection",),
    "curvature": ("curvature",),
    "einstein": ("einstein",),
    "hermitian": ("hermitian",),
    "foliation": ("foliation",),
    "eval": None,
}
NEEDS_SPLIT = {"hermitian", "foliation"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invgeo", description="Exact curvature of left-invariant metrics on Lie groups.")
    p.add_argument("command", choices=sorted(list(COMMANDS) + ["paper-report"]))
    p.add_argument("file", nargs="?", help="algebra description file")
    p.add_argument("--family", help="built-in family: " + ", ".join(families.FAMILIES + ("abelian4",)))
    p.add_argument("--j", dest="j", choices=["J1", "J2"], help="restrict hermitian output to one structure")
    p.add_argument("--vertical", help="vertical basis names, e.g. Z,W")
    p.add_argument("--set", dest="assign", help="exact substitutions, e.g. z2=1,theta1=1/2")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write output to this path instead of standard output")
    return p


def parse_assignment(text: str) -> dict[str, Fraction]:
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"--set entry {item!r} is not name=value")
        try:
            out[name.strip()] = Fraction(value.strip())
        except ValueError:
            raise UsageError(f"--set value {value!r} is not an exact rational") from None
    return out


def _load(args) -> LieAlgebraSpec:
    if (args.file is None) == (args.family is None):
        raise UsageError("give exactly one of an algebra file or --family")
    if args.family is not None:
        if args.family == "abelian4":
            return families.abelian(4)
        try:
            return families.build(args.family)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        doc = read_algebra_file(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{args.file}:{exc}") from None
    return doc.to_spec(name=args.file)


def _resolve_vertical(g: LieAlgebraSpec, option: Optional[str]) -> LieAlgebraSpec:
    requested = None
    if option:
        names = option.replace(",", " ").split()
        try:
            requested = tuple(sorted(g.index(n) for n in names))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        if not requested or len(requested) >= g.dim:
            raise UsageError("--vertical must name a nonempty proper subset of the basis")
    if g.vertical is not None:
        if requested is not None and tuple(sorted(g.vertical)) != requested:
            raise UsageError("--vertical conflicts with the algebra's declared vertical split")
        return g
    if requested is not None:
        return g.with_vertical(requested)
    if g.dim == 4:
        return g.with_vertical((2, 3))
    return g


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        text, status = _execute(args)
    except UsageError as exc:
        print(f"invgeo: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def _execute(args) -> tuple[str, int]:
    if args.command == "paper-report":
        if args.file or args.family or args.assign or args.vertical or args.j:
            raise UsageError("paper-report takes no input or substitution options")
        rep = families.paper_report()
        return _render(rep, args.format), (2 if rep.failures else 0)

    if args.j and args.command != "hermitian":
        raise UsageError("--j only applies to the hermitian command")
    if args.command == "eval" and not args.assign:
        raise UsageError("eval needs --set")

    g = _load(args)
    g = _resolve_vertical(g, args.vertical)
    if args.command in NEEDS_SPLIT and g.vertical is None:
        raise UsageError(f"{args.command} needs a vertical split (use --vertical)")
    if args.command == "hermitian" and (g.dim != 4 or len(g.vertical) != 2):
        raise UsageError("hermitian needs a 4-dimensional algebra with a (2,2) split")
    if args.assign:
        values = parse_assignment(args.assign)
        unknown = [n for n in values if n not in g.params]
        if unknown:
            raise UsageError(f"--set names unknown parameters: {', '.join(unknown)}")
        g = g.substitute(values)

    rep = build_report(g, COMMANDS[args.command], family=g.name)
    if args.j:
        drop = "J2" if args.j == "J1" else "J1"
        rep.sections = {k: v for k, v in rep.sections.items() if not k.endswith("." + drop)}
    status = 0
    if args.command == "check" and rep.sections["checks"]["jacobi"] != "ok":
        status = 2
    return _render(rep, args.format), status


def _render(rep, fmt: str) -> str:
    return serialize_report(rep, "json") if fmt == "json" else render_text(rep)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
