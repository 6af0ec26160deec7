"""Command-line front end: ``evenclifford table | compute | verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import octonion, sedenion, verify
from .algebra import _dump_coeff, _parse_coeff
from .errors import DimensionMismatch, NotOrthogonal, OrientationMismatch, SingularElement
from .octonion import OctonionLike
from .sedenion import SedenionLike

EXIT_OK, EXIT_FAIL, EXIT_SINGULAR, EXIT_NOT_ORTHOGONAL, EXIT_INPUT = 0, 1, 2, 3, 4

ALGEBRAS = {OctonionLike.ALGEBRA: OctonionLike, SedenionLike.ALGEBRA: SedenionLike}
OPS = ("product", "dagger", "inverse", "norm", "split", "defect")


class InputError(ValueError):
    pass


class Parser(argparse.ArgumentParser):
    # Usage errors share the input-error exit code; 2 is reserved for singular elements.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = Parser(add_help=False)
    common.add_argument("--algebra", choices=sorted(ALGEBRAS), default=OctonionLike.ALGEBRA)
    common.add_argument("--lambda", dest="lam", type=int, choices=(1, -1), default=1)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the result to this path instead of stdout")

    parser = Parser(prog="evenclifford", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    sub.add_parser("table", parents=[common], help="emit the derived multiplication table")

    p = sub.add_parser("compute", parents=[common], help="apply one operation to JSON operands")
    p.add_argument("op", choices=OPS)
    p.add_argument("operands", nargs="+", help="JSON element, @path, or - for stdin")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=verify.SUITES + ("all",),
                   help="may be repeated; default all")
    p.add_argument("--strict", action="store_true", help="fail on differences from the printed tables")
    return parser


# -- table --------------------------------------------------------------------

def _cell(t, i, j) -> str:
    k, s = t.product(i, j)
    name = "1" if k == 0 else t.names[k]
    return ("-" if s < 0 else "") + name


def render_table(cls, lam: int, fmt: str) -> str:
    t = cls.table(lam)
    if fmt == "json":
        data = {"algebra": cls.ALGEBRA, **t.to_dict()}
        return json.dumps(data, indent=1) + "\n"
    header = [""] + list(t.names)
    rows = [[t.names[i]] + [_cell(t, i, j) for j in range(t.dim)] for i in range(t.dim)]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([header] + rows)
        return buf.getvalue()
    width = max(len(c) for r in rows + [header] for c in r)

    def line(cells):
        return "| " + " | ".join(c.rjust(width) for c in cells) + " |"

    out = [line(header), "|" + "|".join(["-" * (width + 2)] * len(header)) + "|"]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


# -- compute ------------------------------------------------------------------

def _read_operand(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"operand is not valid JSON: {exc}") from None


def parse_element(data, cls, lam: int, mode: str):
    """Accept the element JSON form or a bare coefficient list."""
    if isinstance(data, list):
        data = {"coeffs": data}
    if not isinstance(data, dict) or "coeffs" not in data:
        raise InputError("an element needs a 'coeffs' list")
    if data.get("algebra", cls.ALGEBRA) != cls.ALGEBRA:
        raise InputError(f"operand is {data['algebra']}, expected {cls.ALGEBRA}")
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != cls.DIM:
        raise DimensionMismatch(f"{cls.ALGEBRA} needs {cls.DIM} coefficients")
    try:
        values = [_parse_coeff(c) for c in coeffs]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient: {exc}") from None
    if mode == "float":
        values = [float(v) for v in values]
    return cls(values, data.get("lambda", lam))


def compute(op: str, operands: list, cls, lam: int, mode: str) -> dict:
    xs = [parse_element(d, cls, lam, mode) for d in operands]
    need = 2 if op == "product" else 1
    if len(xs) != need:
        raise InputError(f"{op} takes {need} operand(s), got {len(xs)}")
    x = xs[0]
    if op == "product":
        return (x * xs[1]).to_json()
    if op == "dagger":
        return x.dagger().to_json()
    if op == "inverse":
        return (octonion.inverse(x) if cls is OctonionLike else sedenion.inverse(x)).to_json()
    if op == "norm":
        if cls is OctonionLike:
            return {
                "seminorm_sq_1": _dump_coeff(octonion.seminorm_sq(x, 1)),
                "seminorm_sq_2": _dump_coeff(octonion.seminorm_sq(x, 2)),
                "covariant_seminorm_sq_1": _dump_coeff(octonion.covariant_seminorm_sq(x, 1)),
                "covariant_seminorm_sq_2": _dump_coeff(octonion.covariant_seminorm_sq(x, 2)),
            }
        return {"norm_sq": _dump_coeff(sedenion.norm_sq(x))}
    if cls is not SedenionLike:
        raise InputError(f"{op} is defined for the sedenion-like algebra only")
    if op == "split":
        return sedenion.split(x).to_json()
    d = sedenion.orthogonality_defect(x)
    return {"defect": [_dump_coeff(c) for c in d.coeffs], "orthogonal": not d}


def _error(kind: str, exc: Exception, **extra) -> dict:
    return {"error": kind, "message": str(exc), **extra}


# -- entry point --------------------------------------------------------------

def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=1) + "\n"
    rows = [(r.suite, r.algebra, r.lam, r.cases, len(r.failures), len(r.table_diff)) for r in reports]
    header = ("suite", "algebra", "lambda", "cases", "failures", "table_diff")
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([header, *rows])
        return buf.getvalue()
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    notes = [f"- {r.suite}: {n}" for r in reports for n in r.notes]
    return "\n".join(out + ([""] + notes if notes else [])) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cls = ALGEBRAS[args.algebra]

    if args.command == "table":
        _emit(render_table(cls, args.lam, args.format), args.out)
        return EXIT_OK

    if args.command == "verify":
        reports = verify.run(args.suite or ["all"], cls, args.lam, args.seed, args.mode, args.strict)
        _emit(_render_reports(reports, args.format), args.out)
        for r in reports:
            print(f"{r.suite}: {r.wall_time:.3f}s", file=sys.stderr)
        return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL

    code = EXIT_OK
    try:
        result = compute(args.op, [_read_operand(o) for o in args.operands], cls, args.lam, args.mode)
    except SingularElement as exc:
        result, code = _error("SingularElement", exc, which=list(exc.which)), EXIT_SINGULAR
    except NotOrthogonal as exc:
        defect = [_dump_coeff(c) for c in exc.defect.coeffs]
        result, code = _error("NotOrthogonal", exc, defect=defect), EXIT_NOT_ORTHOGONAL
    except (InputError, DimensionMismatch, OrientationMismatch, ValueError, TypeError, OSError) as exc:
        result, code = _error(type(exc).__name__, exc), EXIT_INPUT
    _emit(json.dumps(result) + "\n", args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
