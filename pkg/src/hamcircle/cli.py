"""Command-line front end.

Vectors are written as "lambda_f,lambda_b;d1,d2,...,dk" where each scalar is
an integer, a fraction "p/q", or a finite decimal (parsed exactly).  k = 0 is
written "lambda_f,lambda_b" or "lambda_f,lambda_b;".

Subcommands::

    hamcircle check      -v "3,3;2,2"                 cone membership and reduced status
    hamcircle reduce     -v "2,10;1.9,1.9,1.9,1.9"    normal form with the step trace
    hamcircle count      -v "1,1;1/4,1/16"            number of inequivalent circle actions
    hamcircle enumerate  -v "1,1;1/4" --format dot    the decorated graphs themselves
    hamcircle invariants -v "2,1;1"                   volume, width, packing, minimal classes

Exit codes: 0 success, 1 the vector does not encode a blowup form (or was
rejected under --no-reduce), 2 usage or I/O error, 3 internal consistency
failure between the enumerator and a closed-form count.

All numeric output is exact; decimal approximations appear only in fields
named "approx".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .enumeration import CountReport, count_actions, enumerate_actions
from .formulas import count_equal_sizes, count_ruled
from .graphs import DecoratedGraph, to_json_dict
from .vectors import (
    BlowupVector,
    BundleType,
    NotBlowupFormError,
    check_cone,
    cremona_reduce,
    defect,
    emin,
    gromov_width,
    is_g_reduced,
    packing_number,
    qstr,
    volume,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUG = 3


def parse_scalar(text: str) -> Fraction:
    """Parse an integer, "p/q" fraction, or finite decimal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc


def parse_vector(
    text: str, bundle: BundleType = BundleType.TRIVIAL, genus: int = 1
) -> BlowupVector:
    """Parse "lambda_f,lambda_b;d1,...,dk" into an exact vector (k = 0 allowed)."""
    head, _, tail = text.partition(";")
    parts = head.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'lambda_f,lambda_b;deltas', got {text!r}")
    lf, lb = parse_scalar(parts[0]), parse_scalar(parts[1])
    deltas = tuple(parse_scalar(p) for p in tail.split(",")) if tail.strip() else ()
    return BlowupVector(lf, lb, deltas, bundle, genus)


def format_vector(v: BlowupVector) -> str:
    head = f"{qstr(v.lambda_f)},{qstr(v.lambda_b)}"
    if not v.deltas:
        return head
    return head + ";" + ",".join(qstr(d) for d in v.deltas)


def to_dot(graphs: list[DecoratedGraph]) -> str:
    """Render graphs in Graphviz dot: fat vertices as labeled boxes, interior
    vertices as nodes labeled by height, edges annotated with their isotropy."""
    lines = ["graph actions {"]
    for gi, g in enumerate(graphs):
        lines.append(f"  subgraph cluster_{gi} {{")
        lines.append(f'    label="graph {gi}";')
        bot, top = f"g{gi}_bottom", f"g{gi}_top"
        lines.append(f'    {bot} [shape=box, label="area {qstr(g.bottom.area)}, genus {g.bottom.genus}"];')
        lines.append(f'    {top} [shape=box, label="area {qstr(g.top.area)}, genus {g.top.genus}"];')
        for pos, ci in enumerate(g.by_start):
            chain = g.chains[ci]
            names = [f"g{gi}_c{pos}_v{vi}" for vi in range(len(chain.heights))]
            for name, h in zip(names, chain.heights):
                lines.append(f'    {name} [label="{qstr(h)}"];')
            lines.append(f'    {bot} -- {names[0]} [label="1"];')
            for vi, label in enumerate(chain.labels):
                lines.append(f'    {names[vi]} -- {names[vi + 1]} [label="{label}"];')
            lines.append(f'    {names[-1]} -- {top} [label="1"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _report_json(report: CountReport) -> dict:
    return {
        "input": format_vector(report.input_vector),
        "bundle": report.input_vector.bundle.value,
        "genus": report.input_vector.genus,
        "reduced": format_vector(report.reduced_vector),
        "auto_reduced": report.auto_reduced,
        "initial_twists": list(report.initial_twists),
        "stage_counts": list(report.stage_counts),
        "count": report.count,
    }


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    v = args.vector
    report = check_cone(v)
    print(f"vector: {format_vector(v)} ({v.bundle.value}, genus {v.genus})")
    print(f"in cone: {'yes' if report else 'no'}")
    if not report:
        print("violated: " + ", ".join(report.violations))
    reduced = is_g_reduced(v)
    if v.k >= 2:
        print(f"g-reduced: {'yes' if reduced else 'no'} (defect {qstr(defect(v))})")
    else:
        print("g-reduced: yes (vacuous for k <= 1)")
    return EXIT_OK if report else EXIT_DOMAIN


def cmd_reduce(args: argparse.Namespace) -> int:
    v = args.vector
    if v.k < 2:
        report = check_cone(v)
        if not report:
            print("error: not a blowup form: " + ", ".join(report.violations), file=sys.stderr)
            return EXIT_DOMAIN
        steps = (v,)
        reduced = v
    else:
        try:
            result = cremona_reduce(v)
        except NotBlowupFormError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        steps = result.steps
        reduced = result.vector
    if args.format == "json":
        payload = {
            "input": format_vector(v),
            "reduced": format_vector(reduced),
            "steps": [format_vector(s) for s in steps],
            "iterations": len(steps) - 1,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"input:   {format_vector(v)}")
        print(f"reduced: {format_vector(reduced)}")
        print(f"iterations: {len(steps) - 1}")
        for i, step in enumerate(steps):
            print(f"  {i}: {format_vector(step)}")
    return EXIT_OK


def _crosscheck(report: CountReport) -> tuple[int | None, str]:
    """Closed-form count for the reduced vector, when one applies."""
    w = report.reduced_vector
    if w.k == 0:
        return count_ruled(w.lambda_f, w.lambda_b, w.bundle), "ruled"
    if len(set(w.deltas)) == 1 and 2 * w.deltas[0] <= w.lambda_f:
        value = count_equal_sizes(w.lambda_f, w.lambda_b, w.deltas[0], w.k, w.bundle)
        return value, "equal sizes"
    return None, "no closed form applies (unequal sizes or 2*delta > lambda_f)"


def cmd_count(args: argparse.Namespace) -> int:
    v = args.vector
    if args.no_reduce and v.k >= 2 and not is_g_reduced(v):
        print("error: vector is not g-reduced and --no-reduce was given", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        report = count_actions(v, jobs=args.jobs)
    except NotBlowupFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    formula_value: int | None = None
    formula_kind = ""
    if args.formula_crosscheck:
        formula_value, formula_kind = _crosscheck(report)
    if args.format == "json":
        payload = _report_json(report)
        if args.formula_crosscheck:
            payload["formula_count"] = formula_value
            payload["formula_kind"] = formula_kind
        print(json.dumps(payload, indent=2))
    else:
        print(f"input: {format_vector(v)} ({v.bundle.value}, genus {v.genus})")
        print(f"reduced: {format_vector(report.reduced_vector)} (auto-reduced: {'yes' if report.auto_reduced else 'no'})")
        print(f"initial twists: {list(report.initial_twists)}")
        print(f"stage counts: {list(report.stage_counts)}")
        print(f"actions: {report.count}")
        if args.formula_crosscheck:
            if formula_value is None:
                print(f"crosscheck: {formula_kind}")
            else:
                print(f"crosscheck ({formula_kind}): {formula_value}")
    if formula_value is not None and formula_value != report.count:
        print(
            f"error: enumerator found {report.count} actions but the closed form gives {formula_value}",
            file=sys.stderr,
        )
        return EXIT_BUG
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    v = args.vector
    try:
        graphs, report = enumerate_actions(v, jobs=args.jobs)
    except NotBlowupFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "dot":
        return _emit(to_dot(graphs), args.out)
    payload = _report_json(report)
    payload["count"] = len(graphs)
    payload["graphs"] = [to_json_dict(g) for g in graphs]
    return _emit(json.dumps(payload, indent=2), args.out)


def cmd_invariants(args: argparse.Namespace) -> int:
    v = args.vector
    report = check_cone(v)
    if not report:
        print("error: not a blowup form: " + ", ".join(report.violations), file=sys.stderr)
        return EXIT_DOMAIN
    width = gromov_width(v)
    packing = packing_number(v)
    emin_vector = v
    emin_notice = ""
    if v.k >= 2 and not is_g_reduced(v):
        emin_vector = cremona_reduce(v).vector
        emin_notice = f" (computed on auto-reduced {format_vector(emin_vector)})"
    minimal = emin(emin_vector) if v.k >= 1 else None
    if args.format == "json":
        payload = {
            "vector": format_vector(v),
            "bundle": v.bundle.value,
            "genus": v.genus,
            "volume": qstr(volume(v)),
            "width_squared": qstr(width.width_squared),
            "width_capped_by_fiber": width.capped_by_fiber,
            "width_approx": width.approx,
            "packing_number": packing,
            "emin": None
            if minimal is None
            else {
                "classes": sorted(str(c) for c in minimal.classes),
                "case": minimal.case.value,
                "tail_start": minimal.tail_start,
                "vector": format_vector(emin_vector),
            },
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"vector: {format_vector(v)} ({v.bundle.value}, genus {v.genus})")
    print(f"volume: {qstr(volume(v))}")
    branch = "capped by fiber" if width.capped_by_fiber else "volume bound"
    print(f"gromov width^2: {qstr(width.width_squared)} ({branch}, approx {width.approx:.6f})")
    print(f"packing number: {packing}")
    if minimal is None:
        print("E_min: none (no blowups)")
    else:
        classes = "{" + ", ".join(sorted(str(c) for c in minimal.classes)) + "}"
        print(f"E_min: {classes} (case {minimal.case.value}, tail start {minimal.tail_start}){emin_notice}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcircle",
        description="Count and classify Hamiltonian circle actions on blowups of ruled surfaces over positive-genus curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("-v", "--vector", required=True, help='encoding vector, e.g. "3,3;2,2"')
        p.add_argument(
            "-b",
            "--bundle",
            choices=["trivial", "nontrivial"],
            default="trivial",
            help="bundle type (default: trivial)",
        )
        p.add_argument("-g", "--genus", type=int, default=1, help="genus of the base surface (default: 1)")

    p_check = sub.add_parser("check", help="cone membership and reduced status")
    add_common(p_check)
    p_check.set_defaults(handler=cmd_check)

    p_reduce = sub.add_parser("reduce", help="bring a vector to reduced normal form")
    add_common(p_reduce)
    p_reduce.add_argument("--format", choices=["text", "json"], default="text")
    p_reduce.set_defaults(handler=cmd_reduce)

    p_count = sub.add_parser("count", help="count the inequivalent circle actions")
    add_common(p_count)
    p_count.add_argument("--format", choices=["text", "json"], default="text")
    p_count.add_argument("--no-reduce", action="store_true", help="reject non-reduced input instead of reducing")
    p_count.add_argument(
        "--formula-crosscheck",
        action="store_true",
        help="also evaluate the applicable closed form and fail on mismatch",
    )
    p_count.add_argument("--jobs", type=int, default=1, help="parallel workers per stage (same output)")
    p_count.set_defaults(handler=cmd_count)

    p_enum = sub.add_parser("enumerate", help="emit every inequivalent decorated graph")
    add_common(p_enum)
    p_enum.add_argument("--format", choices=["json", "dot"], default="json")
    p_enum.add_argument("--out", default=None, help="write to this path instead of stdout")
    p_enum.add_argument("--jobs", type=int, default=1, help="parallel workers per stage (same output)")
    p_enum.set_defaults(handler=cmd_enumerate)

    p_inv = sub.add_parser("invariants", help="volume, Gromov width, packing number, minimal classes")
    add_common(p_inv)
    p_inv.add_argument("--format", choices=["text", "json"], default="text")
    p_inv.set_defaults(handler=cmd_invariants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        args.vector = parse_vector(args.vector, BundleType(args.bundle), args.genus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.handler(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
