"""Command-line front end: ``chorn <verb> [options]``.

Exit status is 0 on success, 1 on a usage or input error and 2 when a
computation is refused by a size guard (raise it with ``CHORN_GUARD``).
Errors are written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .chromatic import (
    generalized_chromatic,
    generalized_chromatic_via_interpolation,
    generalized_chromatic_via_join,
)
from .closed_forms import (
    cycle_diagonal_q1,
    family_chromatic,
    peo_chromatic,
    read_cycle_polynomial,
)
from .errors import ChornError, GuardExceeded
from .graphs import Kind, find_peo, parse_graph_spec
from .horn import horn_verdict
from .series import (
    ExponentVector,
    format_rational,
    independence_series,
    series_int_power,
)
from .verify import SUITES

VERDICT_NOTE = (
    "Verdicts are bounded evidence. HornConsistent: no zero coefficient up to the degree "
    "bound and every sampled ray fits a rational function within the caps. RatioFitFailed: "
    "some ray fits no rational function within the caps. For chordal graphs I^-q is Horn "
    "hypergeometric; for non-chordal graphs it is not, but no finite run proves either."
)


REFUTATION_RAY_LENGTH = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage().strip()}")


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _caps(text: str) -> tuple[int, int]:
    vals = _csv_ints(text)
    if len(vals) != 2 or min(vals) < 0:
        raise argparse.ArgumentTypeError(f"caps must be two non-negative integers, got {text!r}")
    return vals[0], vals[1]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chorn", description="Independence polynomials, multi-coloured chromatic polynomials and Horn checks.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, *, q=False, maxdeg=False, coeff=False):
        p.add_argument("--graph", required=True, help="P:n, C:n, S:n, K:n, Pinf, Sinf or file:<path>")
        p.add_argument("--window", type=_csv_ints, help="vertex labels to restrict to (needed for Pinf/Sinf)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if q:
            p.add_argument("--q", type=int, required=q == "required")
        if maxdeg:
            p.add_argument("--maxdeg", type=int)
        if coeff:
            p.add_argument("--coeff", type=_csv_ints, required=coeff == "required",
                           help="exponent vector, comma-separated in vertex order over the window")

    p = sub.add_parser("series", help="the independence series I(G, x)")
    common(p, maxdeg=True, coeff=True)
    p.add_argument("--signed", action="store_true", help="use I(G, -x)")

    p = sub.add_parser("power", help="integer powers I(G, x)^q")
    common(p, q="required", maxdeg=True, coeff=True)
    p.add_argument("--signed", action="store_true", help="use I(G, -x)")

    p = sub.add_parser("chromatic", help="generalized chromatic polynomial pi^m_G(q)")
    common(p, q=True, coeff="required")
    p.add_argument("--route", choices=("partitions", "join", "interpolation"), default="partitions")

    p = sub.add_parser("peo", help="perfect elimination ordering by maximum-cardinality search")
    common(p)

    p = sub.add_parser("closed-form", help="closed-form pi^m_G(q) and I(G, x)^-q coefficients")
    common(p, q=True, coeff=True)
    p.add_argument("--diagonal", type=int, help="for cycles: coefficient of x^(a,...,a) in I(C_n, x)^-1")

    p = sub.add_parser("horn", help="bounded Horn hypergeometric analysis of I(G, x)^-q", epilog=VERDICT_NOTE)
    common(p, q=True, maxdeg=True)
    p.add_argument("--caps", type=_caps, default=(2, 2), help="numerator,denominator degree caps")
    p.add_argument("--rays", type=int,
                   help="diagonal ratios to compute exactly past the table "
                        "(default: table only for caps 2,2; 10 for larger caps)")

    p = sub.add_parser("verify", help="run the cross-module identity suites")
    p.add_argument("suite", nargs="?", default="all", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


# ----------------------------------------------------------------------------


def _graph_and_window(args):
    family = parse_graph_spec(args.graph)
    if family.is_infinite and not args.window:
        raise UsageError(f"{args.graph} is infinite: pass --window")
    graph = family.materialize(args.window) if (args.window or family.is_infinite) else family.materialize()
    return family, graph


def _exponent(args, graph) -> ExponentVector:
    vals = args.coeff
    if len(vals) > graph.n:
        raise UsageError(f"--coeff has {len(vals)} entries but the window has {graph.n} vertices")
    if min(vals, default=0) < 0:
        raise UsageError("--coeff entries must be non-negative")
    return ExponentVector.from_dense(vals, graph.vertices)


def _dump(obj, fmt: str, rows: list[list] | None = None) -> str:
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return json.dumps(obj, sort_keys=True) + "\n"


def _series_output(series, graph, args) -> str:
    if args.coeff is not None:
        value = format_rational(series.coefficient(_exponent(args, graph)))
        return _dump({"value": value}, args.format, [["value"], [value]])
    rows = [[str(v) for v in graph.vertices] + ["value"]]
    for m, c in series.items():
        rows.append([m.get(v) for v in graph.vertices] + [format_rational(c)])
    return _dump(series.to_json_obj(), args.format, rows)


def cmd_series(args) -> str:
    _, graph = _graph_and_window(args)
    D = args.maxdeg if args.maxdeg is not None else graph.n
    if args.coeff is not None:
        D = max(D, sum(args.coeff))
    return _series_output(independence_series(graph, None, D, alternating=args.signed), graph, args)


def cmd_power(args) -> str:
    _, graph = _graph_and_window(args)
    D = args.maxdeg if args.maxdeg is not None else graph.n
    if args.coeff is not None and args.maxdeg is None:
        D = sum(args.coeff)
    s = independence_series(graph, None, D, alternating=args.signed)
    return _series_output(series_int_power(s, args.q), graph, args)


def _poly_output(poly, args, extra: dict | None = None) -> str:
    obj = poly.to_json_obj()
    if extra:
        obj.update(extra)
    rows = [["power", "coefficient"]] + [[k, format_rational(c)] for k, c in enumerate(poly.coeffs)]
    return _dump(obj, args.format, rows)


def cmd_chromatic(args) -> str:
    _, graph = _graph_and_window(args)
    m = _exponent(args, graph)
    route = {
        "partitions": generalized_chromatic,
        "join": generalized_chromatic_via_join,
        "interpolation": generalized_chromatic_via_interpolation,
    }[args.route]
    poly = route(graph, m)
    extra = {"value": format_rational(poly(args.q))} if args.q is not None else None
    return _poly_output(poly, args, extra)


def cmd_peo(args) -> str:
    _, graph = _graph_and_window(args)
    peo = find_peo(graph)
    order = list(peo.order) if peo else None
    rows = [["position", "vertex"]] + [[k + 1, v] for k, v in enumerate(order or [])]
    return _dump({"peo": order}, args.format, rows)


def cmd_closed_form(args) -> str:
    family, graph = _graph_and_window(args)
    out: dict = {}
    if args.diagonal is not None:
        if family.kind is not Kind.CYCLE:
            raise UsageError("--diagonal applies to cycle graphs C:n")
        out["diagonal"] = str(cycle_diagonal_q1(family.n, args.diagonal))
        out["formula"] = "cycle-diagonal"
        return _dump(out, args.format, [["a", "value"], [args.diagonal, out["diagonal"]]])
    if args.coeff is None:
        raise UsageError("closed-form needs --coeff (or --diagonal for cycles)")
    m = _exponent(args, graph)
    whole = not args.window
    if family.kind is Kind.CYCLE and whole:
        poly, formula = read_cycle_polynomial(family.n, m), "read-cycle"
    elif family.kind in (Kind.PATH, Kind.STAR, Kind.COMPLETE, Kind.PATH_INF, Kind.STAR_INF) and (whole or family.is_infinite):
        poly, formula = family_chromatic(family, m), "family-product"
    else:
        peo = find_peo(graph)
        if peo is None:
            raise UsageError("no closed form: the graph is neither chordal nor a cycle")
        poly, formula = peo_chromatic(graph, peo, m), "peo-product"
        out["peo"] = list(peo.order)
    out["formula"] = formula
    if args.q is not None:
        # I(G, x)^{-q} [x^m] = pi^m(-q)
        out["inverse_coefficient"] = format_rational(poly(-args.q))
    return _poly_output(poly, args, out)


def cmd_horn(args) -> str:
    family, graph = _graph_and_window(args)
    q = args.q if args.q is not None else 1
    D = args.maxdeg if args.maxdeg is not None else 8
    target = family if family.is_infinite else graph
    rays = args.rays
    if rays is None and args.caps != (2, 2):
        rays = REFUTATION_RAY_LENGTH
    verdict = horn_verdict(target, q, graph.vertices, D, args.caps, ray_length=rays)
    obj = verdict.to_json_obj()
    rows = [["graph", "q", "status"], [verdict.graph, verdict.q, verdict.status]]
    return _dump(obj, args.format, rows)


def cmd_verify(args) -> tuple[str, int]:
    results = SUITES[args.suite](args.max_n, args.seed)
    ok = all(r.ok for r in results)
    obj = {"ok": ok, "suites": [r.to_json_obj() for r in results]}
    rows = [["suite", "passed", "failed"]] + [[r.name, r.passed, r.failed] for r in results]
    return _dump(obj, args.format, rows), 0 if ok else 1


COMMANDS = {
    "series": cmd_series,
    "power": cmd_power,
    "chromatic": cmd_chromatic,
    "peo": cmd_peo,
    "closed-form": cmd_closed_form,
    "horn": cmd_horn,
    "verify": cmd_verify,
}


def run_command(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit_code, stdout_text, stderr_text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        result = COMMANDS[args.verb](args)
        if isinstance(result, tuple):
            return result[1], result[0], ""
        return 0, result, ""
    except UsageError as exc:
        return 1, "", json.dumps({"error": str(exc), "kind": "usage"}, sort_keys=True) + "\n"
    except GuardExceeded as exc:
        return 2, "", json.dumps({"error": str(exc), "kind": "guard", "estimate": exc.estimate}, sort_keys=True) + "\n"
    except (ChornError, ValueError, KeyError) as exc:
        return 1, "", json.dumps({"error": str(exc), "kind": type(exc).__name__}, sort_keys=True) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
