"""Command-line front end and fixture replay."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import bounds, cohomology, hilbert, surfaces, zeroscheme
from .lattice import parse_class

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def canonical(obj):
    """Convert to JSON-ready data; rationals become strings, floats are refused."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError(f"floating point value {obj!r} in output")
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2)


def _markdown_kv(data: dict) -> str:
    lines = ["| key | value |", "|---|---|"]
    lines += [f"| {k} | {json.dumps(v, sort_keys=True)} |" for k, v in sorted(data.items())]
    return "\n".join(lines) + "\n"


def _markdown_list(items: list[dict]) -> str:
    if not items:
        return "(none)\n"
    keys = sorted({k for item in items for k in item if not isinstance(item[k], (dict, list))})
    lines = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    lines += ["| " + " | ".join(str(item.get(k, "")) for k in keys) + " |" for item in items]
    return "\n".join(lines) + "\n"


def _emit(obj, fmt: str, markdown=None):
    if fmt == "md":
        if markdown is not None:
            text = markdown
        else:
            data = canonical(obj)
            text = _markdown_list(data) if isinstance(data, list) else _markdown_kv(data)
        sys.stdout.write(text)
    else:
        sys.stdout.write(dumps(obj) + "\n")


def parse_g_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise InputError(f"genus range must look like 10..18, got {text!r}") from None


# ------------------------------------------------------------- subcommands

def cmd_bounds(args):
    _emit(bounds.bounds_report(args.d, args.r, args.g), args.format)


def cmd_cohom(args):
    if args.surface == "hirzebruch":
        result = cohomology.h_hirzebruch(args.e, args.a, args.b)
    else:
        result = cohomology.h_quadric(args.a, args.b)
    _emit(result, args.format)


def cmd_classes(args):
    if args.surface == "scroll":
        if args.g is None:
            raise InputError("--g is required for scroll classes")
        sols = surfaces.scroll_classes(args.d, args.g, args.r)
    elif args.surface == "delpezzo":
        if args.g is None:
            raise InputError("--g is required for del Pezzo classes")
        sols = surfaces.del_pezzo_classes(args.d, args.g, args.g, args.r)
    else:
        enum = (surfaces.rational_cone_classes if args.surface == "cone"
                else surfaces.elliptic_cone_classes)
        sols = [s for s in enum(args.d, args.r) if args.g is None or s.genus == args.g]
    _emit(sols, args.format)


def cmd_analyze(args):
    row = hilbert.analyze(args.d, args.g, args.r)
    md = None
    if args.format == "md":
        md = "\n".join(["| g | verdict | expected dim | components | source |",
                        "|---|---|---|---|---|", hilbert.row_markdown(row)]) + "\n"
    _emit(row, args.format, md)


def cmd_table(args):
    table = hilbert.classification_table(args.d, args.r, parse_g_range(args.g_range))
    _emit(table, args.format, hilbert.table_markdown(table) if args.format == "md" else None)


def cmd_zscheme(args):
    try:
        data = json.loads(Path(args.points).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read points file: {exc}") from None
    Z = zeroscheme.ZeroScheme.from_json(data["points"] if isinstance(data, dict) else data)
    _emit(zeroscheme.h_ideal(Z, args.t), args.format)


# --------------------------------------------------------------- fixtures

def _solutions(sols):
    return sorted(str(s.cls) for s in sols)


def _analyze_summary(d, g, r):
    row = hilbert.analyze(d, g, r)
    return {"verdict": row.verdict, "n_components": row.n_components, "dims": row.dims,
            "expected_dim": row.expected_dim,
            "gonalities": sorted(c.gonality for c in row.components if c.gonality is not None),
            "moduli_image_dims": sorted(c.moduli_image_dim for c in row.components
                                        if c.moduli_image_dim is not None)}


def _second_bound(d, r):
    sb = bounds.pi_1(d, r)
    return {"value": sb.value, "attained_by": sorted(str(s.cls) for s in sb.attained_by)}


def _obstruction(s, C, M):
    v = surfaces.contraction_obstruction(s, parse_class(C), parse_class(M))
    return {"status": v.status, "witness": None if v.witness is None else str(v.witness)}


def _fixed_part(e, c):
    return [str(x) for x in surfaces.fixed_part(e, parse_class(c))]


def _h_ideal(points, t):
    return zeroscheme.h_ideal(zeroscheme.ZeroScheme.from_json(points), t).to_json()


# op name -> callable taking the fixture's "args" as keywords
OPS = {
    "pi": bounds.pi,
    "pi_1": _second_bound,
    "chi": bounds.chi_expected,
    "rho": bounds.rho,
    "lambda": bounds.lam,
    "max_birational_dim": bounds.max_birational_dim,
    "castelnuovo_severi": bounds.castelnuovo_severi,
    "gonality_bn": bounds.gonality_bn,
    "h_hirzebruch": lambda e, a, b: cohomology.h_hirzebruch(e, a, b).to_json(),
    "h_quadric": lambda a, b: cohomology.h_quadric(a, b).to_json(),
    "scrollar_invariant": lambda e, C: list(cohomology.scrollar_invariant(e, parse_class(C))),
    "expected_dim_blowup": lambda C: cohomology.expected_dim_blowup(parse_class(C)).dim,
    "dim_linear_system_scroll": cohomology.dim_linear_system_scroll,
    "scroll_classes": lambda d, g, r: _solutions(surfaces.scroll_classes(d, g, r)),
    "del_pezzo_classes": lambda d, g_lo, g_hi, r: _solutions(
        surfaces.del_pezzo_classes(d, g_lo, g_hi, r)),
    "elliptic_cone_classes": lambda d, r: sorted(
        [s.cls.a, s.vertex_multiplicity, s.genus] for s in surfaces.elliptic_cone_classes(d, r)),
    "contraction_obstruction": _obstruction,
    "fixed_part": _fixed_part,
    "family_dim_scroll": hilbert.family_dim_scroll,
    "family_dim_delpezzo": lambda r, C: hilbert.family_dim_delpezzo(r, parse_class(C)),
    "analyze": _analyze_summary,
    "plane_model_genus": zeroscheme.plane_model_genus,
    "h_ideal": _h_ideal,
}


def default_fixture_dir() -> Path:
    return Path(str(resources.files("hilbcurves") / "fixtures"))


def run_fixture_file(path: Path) -> tuple[int, list[str]]:
    """Replay one fixture file; returns (number of checks, failure messages)."""
    data = json.loads(path.read_text())
    failures = []
    checks = data.get("checks", [])
    for i, check in enumerate(checks):
        op = OPS.get(check["op"])
        if op is None:
            failures.append(f"{path.name}[{i}]: unknown op {check['op']!r}")
            continue
        try:
            got = canonical(op(**check.get("args", {})))
        except Exception as exc:  # a raising op is a drift like any other
            failures.append(f"{path.name}[{i}] {check['op']}: raised {exc!r}")
            continue
        if got != check["expect"]:
            failures.append(f"{path.name}[{i}] {check['op']}{check.get('args')}: "
                            f"expected {check['expect']!r}, got {got!r} "
                            f"({check.get('anchor', data.get('anchor', ''))})")
    return len(checks), failures


def cmd_selftest(args):
    root = Path(args.fixtures) if args.fixtures else default_fixture_dir()
    if not root.is_dir():
        raise InputError(f"fixture directory {root} does not exist")
    files = sorted(root.glob("*.json"))
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(run_fixture_file, files))
    total, failed = 0, 0
    for path, (n, failures) in zip(files, results):
        total += n
        failed += len(failures)
        status = "ok" if not failures else "FAIL"
        print(f"{path.name}: {n} checks {status}")
        for msg in failures:
            print(f"  {msg}")
    print(f"{total} checks, {failed} failures")
    return EXIT_MISMATCH if failed else EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hilbcurves", description="Hilbert schemes of space curves")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "md"), default=default)

    sp = sub.add_parser("bounds", help="genus bounds and expected dimensions")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--g", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("cohom", help="line bundle cohomology")
    csub = sp.add_subparsers(dest="surface", required=True, parser_class=_Parser)
    hz = csub.add_parser("hirzebruch")
    hz.add_argument("--e", type=int, required=True)
    for sp2 in (hz, csub.add_parser("quadric")):
        sp2.add_argument("--a", type=int, required=True)
        sp2.add_argument("--b", type=int, required=True)
        fmt(sp2)
        sp2.set_defaults(func=cmd_cohom)

    sp = sub.add_parser("classes", help="enumerate curve classes on a surface type")
    sp.add_argument("--surface", choices=("scroll", "cone", "elliptic-cone", "delpezzo"), required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--g", type=int)
    sp.add_argument("--r", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("analyze", help="components of one Hilbert scheme")
    for flag in ("--d", "--g", "--r"):
        sp.add_argument(flag, type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("table", help="classification table over a genus range")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--g-range", required=True)
    fmt(sp, default="md")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("zscheme", help="zero-dimensional schemes in the plane")
    zsub = sp.add_subparsers(dest="zcommand", required=True, parser_class=_Parser)
    zh = zsub.add_parser("h", help="cohomology of the twisted ideal sheaf")
    zh.add_argument("--points", required=True)
    zh.add_argument("--t", type=int, required=True)
    fmt(zh)
    zh.set_defaults(func=cmd_zscheme)

    sp = sub.add_parser("selftest", help="replay the fixture corpus")
    sp.add_argument("--fixtures")
    sp.set_defaults(func=cmd_selftest)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        code = args.func(args)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
