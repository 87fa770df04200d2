"""Command-line interface.

Usage:
    alphaenergy gen C5
    alphaenergy op splitting:2 C4
    alphaenergy spectrum op:middle:C4 --alpha 0.25
    alphaenergy energy op:closed-shadow:C4 --alpha 0.5
    alphaenergy sweep K8 op:splitting:1:C4 --alphas 0:0.9:0.1 --format csv
    alphaenergy verify ebd C6 --alphas 0:0.75:0.25
    alphaenergy classify op:closed-shadow:C4 --alpha 0.3 --peers K8
    alphaenergy table1

Graph sources: C<n>, P<n>, K<n>, K<a>,<b>, petersen, file:<path>,
op:<operation>:<source> (operations nest).

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import (format_csv, format_table_json, energy_report_json,
                       classify, sweep_table, table1)
from .closed_forms import CLOSED_FORM_OPS, verify_closed_form
from .graphs import (EdgeListError, Graph, complete, complete_bipartite, cycle,
                     degree_info, path, petersen, read_edge_list, write_edge_list)
from .ops import PARAM_OPS, OpDescriptor, apply_op, op_label, parse_op
from .spectra import AlphaValue, alpha_energy, alpha_spectrum, a_alpha_exact
from .linalg import CHARPOLY_MAX_N, charpoly_exact, make_spectrum, poly_roots_real


class UsageError(Exception):
    pass


_FAMILY_RE = re.compile(r"^(C|P|K)(\d+)(?:,(\d+))?$")


def parse_graph_source(text: str) -> tuple[str, Graph]:
    """Resolve a source string to (label, graph)."""
    if text == "petersen":
        return text, petersen()
    if text.startswith("file:"):
        p = Path(text[5:])
        if not p.is_file():
            raise UsageError(f"no such file: {p}")
        try:
            return text, read_edge_list(p.read_bytes())
        except EdgeListError as e:
            raise UsageError(f"bad edge list in {p}: {e}") from None
    if text.startswith("op:"):
        op, rest = _split_op_source(text[3:])
        label, g = parse_graph_source(rest)
        try:
            return f"op:{op_label(op)}:{label}", apply_op(op, g)
        except ValueError as e:
            raise UsageError(str(e)) from None
    m = _FAMILY_RE.match(text)
    if not m:
        raise UsageError(f"cannot parse graph source {text!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    try:
        if b is not None:
            if kind != "K":
                raise UsageError(f"cannot parse graph source {text!r}")
            return text, complete_bipartite(a, int(b))
        if kind == "C":
            return text, cycle(a)
        if kind == "P":
            return text, path(a)
        return text, complete(a)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _split_op_source(text: str) -> tuple[OpDescriptor, str]:
    """Split '<opdesc>:<source>' resolving the parameterised-op ambiguity."""
    name, sep, rest = text.partition(":")
    if not sep or not rest:
        raise UsageError(f"operation source needs 'op:<operation>:<source>', got {text!r}")
    if name in PARAM_OPS:
        param, sep2, rest2 = rest.partition(":")
        if not sep2 or not rest2:
            raise UsageError(f"operation {name!r} needs ':<{PARAM_OPS[name]}>:<source>'")
        try:
            return OpDescriptor(name, int(param)), rest2
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        return OpDescriptor(name), rest
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_alpha(text: str) -> AlphaValue:
    try:
        return AlphaValue.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_alpha_grid(text: str) -> list[AlphaValue]:
    """Parse 'lo:hi:step' into an inclusive grid of exact weights."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"alpha grid must be lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"alpha grid must be lo:hi:step, got {text!r}") from None
    if step <= 0 or lo > hi:
        raise UsageError(f"empty alpha grid {text!r}")
    out = []
    a = lo
    while a <= hi:
        out.append(AlphaValue.from_fraction(a))
        a += step
    return out


def _cmd_gen(args) -> int:
    _, g = parse_graph_source(args.source)
    sys.stdout.write(write_edge_list(g).decode("ascii"))
    return 0


def _cmd_op(args) -> int:
    try:
        op = parse_op(args.operation)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _, g = parse_graph_source(args.source)
    try:
        out = apply_op(op, g)
    except ValueError as e:
        raise UsageError(str(e)) from None
    sys.stdout.write(write_edge_list(out).decode("ascii"))
    return 0


def _cmd_spectrum(args) -> int:
    _, g = parse_graph_source(args.source)
    a = _parse_alpha(args.alpha)
    if g.p < 1:
        raise UsageError("spectrum needs at least one vertex")
    if args.exact:
        if a.exact is None:
            raise UsageError("--exact needs a rational alpha")
        if g.p > CHARPOLY_MAX_N:
            raise UsageError(f"--exact supports at most {CHARPOLY_MAX_N} vertices")
        spec = make_spectrum(poly_roots_real(charpoly_exact(a_alpha_exact(g, a))))
    else:
        spec = alpha_spectrum(g, a)
    for value, mult in spec.groups:
        if abs(value) < 5e-11:   # keep "-0.0000000000" out of the output
            value = 0.0
        print(f"{value:.10f} {mult}")
    return 0


def _cmd_energy(args) -> int:
    label, g = parse_graph_source(args.source)
    a = _parse_alpha(args.alpha)
    if a.numeric >= 1.0:
        raise UsageError("energy needs alpha < 1")
    if g.p < 1:
        raise UsageError("energy needs at least one vertex")
    if args.json:
        rep = alpha_energy(g, a, graph_id=label)
        sys.stdout.write(energy_report_json(rep, degree_info(g).regular))
    else:
        print(round(alpha_energy(g, a).energy, 6))
    return 0


def _cmd_sweep(args) -> int:
    rows = [parse_graph_source(s) for s in args.sources]
    for label, g in rows:
        if g.p < 1:
            raise UsageError(f"{label}: energy needs at least one vertex")
    alphas = _parse_alpha_grid(args.alphas)
    if any(a.numeric >= 1.0 for a in alphas):
        raise UsageError("energy sweep needs alpha < 1")
    table = sweep_table(rows, alphas)
    sys.stdout.write(format_csv(table) if args.format == "csv"
                     else format_table_json(table))
    return 0


def _cmd_verify(args) -> int:
    try:
        op = parse_op(args.operation)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if op.name not in CLOSED_FORM_OPS:
        raise UsageError(f"no closed form for operation {args.operation!r}")
    label, g = parse_graph_source(args.source)
    alphas = _parse_alpha_grid(args.alphas)
    ok = True
    for a in alphas:
        try:
            rec = verify_closed_form(op, g, a, tol=args.tol, base_id=label)
        except ValueError as e:
            raise UsageError(str(e)) from None
        print(json.dumps(rec.to_json_dict()))
        ok = ok and rec.passed
    return 0 if ok else 1


def _cmd_classify(args) -> int:
    label, g = parse_graph_source(args.source)
    a = _parse_alpha(args.alpha)
    if a.numeric >= 1.0:
        raise UsageError("classification needs alpha < 1")
    peers = [parse_graph_source(s) for s in args.peers]
    res = classify(g, a, peers=peers, tol=args.tol, graph_id=label)
    print(json.dumps({
        "graph": res.graph_id, "alpha": res.alpha, "energy": res.energy,
        "reference": res.reference, "verdict": res.verdict,
        "equal_partners": list(res.equal_partners)}, indent=2))
    return 0


def _cmd_table1(args) -> int:
    table = table1()
    sys.stdout.write(format_csv(table) if args.format == "csv"
                     else format_table_json(table))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alphaenergy",
                                 description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a graph as an edge list")
    p.add_argument("source")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("op", help="apply an operation and print the edge list")
    p.add_argument("operation")
    p.add_argument("source")
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("spectrum", help="print eigenvalues with multiplicities")
    p.add_argument("source")
    p.add_argument("--alpha", required=True)
    p.add_argument("--exact", action="store_true",
                   help="use the rational characteristic polynomial route")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("energy", help="print the energy at one weight")
    p.add_argument("source")
    p.add_argument("--alpha", required=True)
    p.add_argument("--json", action="store_true", help="full report as JSON")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("sweep", help="energy table over a weight grid")
    p.add_argument("sources", nargs="+")
    p.add_argument("--alphas", default="0:0.9:0.1", help="grid lo:hi:step")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="closed form vs. numeric spectrum")
    p.add_argument("operation")
    p.add_argument("source")
    p.add_argument("--alphas", default="0:0.75:0.25", help="grid lo:hi:step")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="borderenergetic/hyperenergetic verdict")
    p.add_argument("source")
    p.add_argument("--alpha", required=True)
    p.add_argument("--peers", nargs="*", default=[])
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table1", help="headline energy table")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table1)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
