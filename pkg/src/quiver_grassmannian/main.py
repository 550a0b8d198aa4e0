"""CLI entry point for quiver Grassmannian computations."""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from .ar_quiver import knit, vertex_by_dim
from .cluster import cc, g_vector, initial_variables
from .dimvector import format_vector, parse_vector
from .errors import QuiverError, UsageError
from .export import (
    ar_to_dict,
    ar_to_dot,
    cc_entry,
    dumps,
    fpoly_to_dict,
    homext_to_csv,
    homext_to_dict,
    module_to_dict,
    poincare_to_dict,
    quiver_to_dict,
    roots_to_dict,
)
from .grassmann import f_polynomial, f_table, poincare
from .graph import verify_quiver
from .homalg import generic_decomposition, generic_min_dimension, hom_ext_table
from .models import ARQuiver, ModuleExpr, Quiver
from .oracle import count_subreps, d4_fixture, interpolate_count, load_rep, reduce_mod
from .quiver_core import load_quiver, matrices
from .utils.config import get_config

EXIT_OK, EXIT_ERROR, EXIT_VERIFY_FAILED = 0, 1, 2

COMMANDS = ("show", "roots", "ar", "homext", "decomp", "nonempty", "fpoly", "poincare", "cc", "verify", "oracle-count")


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors become exit code 1 instead of 2."""

    def error(self, message):
        raise UsageError(message)


def _resolve_quiver(name: str | None) -> Quiver:
    if not name:
        raise UsageError("--quiver is required")
    path = Path(name)
    if not path.exists():
        bundled = get_config().data_file("quivers", name if name.endswith(".quiver") else f"{name}.quiver")
        if bundled.exists():
            path = bundled
    return load_quiver(path)


def _module(ar: ARQuiver, args) -> ModuleExpr | None:
    """The module named by --m (summand dimension vectors) or --d (the rigid module)."""
    if args.m:
        parts = [p for p in args.m.split(";") if p.strip()]
        return ModuleExpr.of(ar.n, [vertex_by_dim(ar, parse_vector(p, ar.n)) for p in parts])
    if args.d:
        return generic_decomposition(ar, parse_vector(args.d, ar.n))
    return None


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


def _show(args) -> tuple[dict, str]:
    q = _resolve_quiver(args.quiver)
    data = quiver_to_dict(q)
    mats = matrices(q)
    lines = [q.describe(), f"canonical labels: {list(q.canonical_labels)}"]
    for name in ("H", "C", "B", "Phi"):
        lines.append(f"{name}:")
        lines.extend("  " + " ".join(f"{x:>3}" for x in row) for row in getattr(mats, name))
    return data, "\n".join(lines)


def _roots(args) -> tuple[dict, str]:
    data = roots_to_dict(_resolve_quiver(args.quiver))
    return data, "\n".join(format_vector(r) for r in data["roots"])


def _ar(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    if args.dot:
        args.format = "dot"
    data = ar_to_dict(ar)
    text = "\n".join(str(v) for v in ar.vertices)
    return data, text if args.format != "dot" else ar_to_dot(ar)


def _homext(args) -> tuple[dict, str]:
    table = hom_ext_table(knit(_resolve_quiver(args.quiver)))
    data = homext_to_dict(table)
    return data, homext_to_csv(table) if args.format == "csv" else _table_text(table)


def _table_text(table) -> str:
    width = max(len(label) for label in table.labels)
    lines = []
    for name, rows in (("hom", table.hom), ("ext", table.ext)):
        lines.append(f"{name}:")
        for label, row in zip(table.labels, rows):
            lines.append(f"  {label:<{width}} " + " ".join(str(x) for x in row))
    return "\n".join(lines)


def _decomp(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    m = generic_decomposition(ar, parse_vector(_need(args.d, "--d"), ar.n))
    return module_to_dict(m), m.describe()


def _nonempty(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    e = parse_vector(_need(args.e, "--e"), ar.n)
    d = parse_vector(_need(args.d, "--d"), ar.n)
    dimension = generic_min_dimension(ar, e, d)
    data = {
        "e": list(e),
        "d": list(d),
        "result": "empty" if dimension is None else "nonempty",
        "dimension": dimension,
    }
    text = "empty" if dimension is None else f"nonempty, dimension {dimension}"
    return data, text


def _fpoly(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    ft = f_table(ar)
    m = _module(ar, args)
    if m is not None:
        f = f_polynomial(ft, m)
        return fpoly_to_dict(m, f), str(f)
    entries = [fpoly_to_dict(ModuleExpr.of(ar.n, [v]), ft.of(v)) for v in ar.vertices]
    text = "\n".join(f"{v.label}: {ft.of(v)}" for v in ar.vertices)
    return {"quiver": ar.quiver.type_label, "polynomials": entries}, text


def _poincare(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    m = _module(ar, args)
    if m is None:
        raise UsageError("--m or --d is required for this command")
    e = parse_vector(_need(args.e, "--e"), ar.n)
    p = poincare(ar, f_table(ar), m, e)
    return poincare_to_dict(m, e, p), p.render()


def _cc(args) -> tuple[dict, str]:
    ar = knit(_resolve_quiver(args.quiver))
    ft, mats = f_table(ar), matrices(ar.quiver)
    m = _module(ar, args)
    if m is not None:
        poly = cc(ar, ft, mats, m)
        entry = cc_entry(m.describe(), m.dim, g_vector(mats, m), poly)
        return entry, poly.render()
    entries = [cc_entry(f"x{i}", None, None, x) for i, x in enumerate(initial_variables(ar.n), start=1)]
    for v in ar.vertices:
        entries.append(cc_entry(v.label, v.dim, g_vector(mats, v), cc(ar, ft, mats, v)))
    text = "\n".join(f"{e['vertex']}: {e['text']}" for e in entries)
    return {"quiver": ar.quiver.type_label, "cluster_variables": entries}, text


def _verify(args) -> tuple[dict, str]:
    q = _resolve_quiver(args.quiver)
    summary = verify_quiver(q)
    lines = [f"{summary['quiver']}: {'passed' if summary['passed'] else 'FAILED'}"]
    lines += [f"  {kind}: {count}" for kind, count in summary["checks_run"].items()]
    lines += [f"  failed {c['kind']} {c['subject']}: {c['detail']}" for c in summary["failures"]]
    return summary, "\n".join(lines)


def _oracle_count(args) -> tuple[dict, str]:
    if args.rep:
        rep = load_rep(args.rep)
    elif args.fixture:
        rep = d4_fixture(args.fixture)
    else:
        raise UsageError("--rep or --fixture is required for this command")
    e = parse_vector(_need(args.e, "--e"), rep.quiver.n)
    primes = list(parse_vector(args.primes)) if args.primes else list(get_config().default_primes)
    counts = [(p, count_subreps(reduce_mod(rep, p), e)) for p in primes]
    degree = args.degree if args.degree is not None else len(primes) - 1
    result = interpolate_count(counts, degree)
    data = {
        "e": list(e),
        "counts": [{"prime": p, "count": c} for p, c in counts],
        "polynomial": result.polynomial.to_json() if result.ok else None,
        "text": result.polynomial.render("t") if result.ok else None,
        "diagnostic": result.diagnostic,
    }
    text = result.polynomial.render("t") if result.ok else result.diagnostic
    return data, text


HANDLERS = {
    "show": _show,
    "roots": _roots,
    "ar": _ar,
    "homext": _homext,
    "decomp": _decomp,
    "nonempty": _nonempty,
    "fpoly": _fpoly,
    "poincare": _poincare,
    "cc": _cc,
    "verify": _verify,
    "oracle-count": _oracle_count,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quiver-grassmannian",
        description="Auslander-Reiten and cluster invariants of Dynkin quivers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # List the positive roots of a bundled quiver
  quiver-grassmannian roots --quiver a2

  # Poincare polynomial of a quiver Grassmannian
  quiver-grassmannian poincare --quiver d4 --m "1,1,0,1;1,0,1,1;0,1,1,1" --e 1,1,1,2 --format text

  # Check every exchange relation (exit code 2 on failure)
  quiver-grassmannian verify --quiver e6

  # Count points of Gr_e over finite fields and interpolate
  quiver-grassmannian oracle-count --fixture E --e 1,1,1,2 --primes 2,3,5
        """,
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("--quiver", "-q", help="Quiver description file, or the name of a bundled quiver")
    parser.add_argument("--out", "-o", help="Write output to this file instead of stdout")
    parser.add_argument(
        "--format", choices=("json", "csv", "dot", "text"), default="json", help="Output format (default: json)"
    )
    parser.add_argument("--compact", action="store_true", help="Output compact JSON (no pretty-printing)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    parser.add_argument("--dot", action="store_true", help="ar: emit Graphviz DOT")
    parser.add_argument("--e", help="Dimension vector of the subrepresentation, e.g. 1,1,1,2")
    parser.add_argument("--d", help="Dimension vector of the rigid module")
    parser.add_argument("--m", help="Module as ';'-separated summand dimension vectors")
    parser.add_argument("--rep", help="oracle-count: representation file")
    parser.add_argument("--fixture", help="oracle-count: bundled D4 fixture E or F")
    parser.add_argument("--primes", help="oracle-count: comma-separated primes")
    parser.add_argument("--degree", type=int, help="oracle-count: degree bound for interpolation")
    return parser


def _render(args, data: dict, text: str) -> str:
    if args.format == "json":
        return dumps(data, compact=args.compact)
    if args.format == "csv" and args.command != "homext":
        raise UsageError("csv output is only available for homext")
    if args.format == "dot" and args.command != "ar":
        raise UsageError("dot output is only available for ar")
    return text if text.endswith("\n") else text + "\n"


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        config = get_config()
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else config.log_level,
            format="%(name)s:%(levelname)s:%(message)s",
        )
        data, text = HANDLERS[args.command](args)
        output = _render(args, data, text)
        if args.out:
            Path(args.out).write_text(output)
        else:
            sys.stdout.write(output)
    except (QuiverError, ValidationError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.command == "verify" and not data.get("passed", False):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
