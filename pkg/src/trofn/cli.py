"""Command-line front end.

Reads a JSON operand file, runs one operation and writes a table or a JSON
report. Exit codes: 0 ok, 1 parse error, 2 validation error, 3 Kosiński sum
does not exist, 4 cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import core, spectrum
from .core import NonexistentKosinskiSum, NonMonotonicQuadruple, TrOFN, exact, format_exact
from .spectrum import CapExceeded, Spectrum, Witness

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_NO_KOSINSKI_SUM = 3
EXIT_CAP = 4

COMMANDS = ("add", "kosinski", "fold", "assoc", "perms", "full", "membership", "validate")
ARROWS = {
    core.Orientation.POSITIVE: "→",
    core.Orientation.NEGATIVE: "←",
    core.Orientation.NONE: " ",
}
_RECORD_KEYS = {"a", "b", "c", "d", "label", "orientation"}


class CliError(Exception):
    exit_code = EXIT_PARSE


class ParseError(CliError):
    exit_code = EXIT_PARSE


class ValidationError(CliError):
    exit_code = EXIT_VALIDATION


def _coordinate(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{where}: coordinate must be an integer or a decimal string, got {value!r}")
    try:
        return exact(value)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_document(text: str) -> dict:
    try:
        # JSON reals arrive as their source text so nothing is rounded.
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("operands"), list):
        raise ParseError('document must be an object with an "operands" list')
    return doc


def parse_records(doc: dict) -> tuple[list[TrOFN], list[Optional[str]]]:
    operands, labels = [], []
    for i, record in enumerate(doc["operands"]):
        where = f"operand {i}"
        if not isinstance(record, dict):
            raise ParseError(f"{where}: expected an object")
        unknown = set(record) - _RECORD_KEYS
        if unknown:
            raise ParseError(f"{where}: unknown keys {sorted(unknown)}")
        missing = [k for k in "abc" if k not in record]
        if missing:
            raise ParseError(f"{where}: missing {missing}")
        coords = [_coordinate(record[k], f"{where}.{k}") for k in "abc"]
        if "d" in record:
            coords.append(_coordinate(record["d"], f"{where}.d"))
        else:
            coords.insert(2, coords[1])
        try:
            operands.append(TrOFN(*coords))
        except NonMonotonicQuadruple as exc:
            raise ValidationError(f"{where}: {exc}") from None
        label = record.get("label")
        if label is not None and not isinstance(label, str):
            raise ParseError(f"{where}: label must be a string")
        labels.append(label)
    return operands, labels


def parse_operands(text: str) -> list[TrOFN]:
    """Parse an operand document into validated TrOFN, in document order.

    Records without ``"d"`` are triangular and expand to ``Tr(a, b, b, c)``.
    """
    return parse_records(parse_document(text))[0]


def render_value(x: TrOFN) -> dict:
    return {k: format_exact(v) for k, v in zip("abcd", x.quadruple)}


def render_operands(operands: Sequence[TrOFN]) -> str:
    """Inverse of :func:`parse_operands`, as canonical JSON text."""
    return json.dumps({"operands": [render_value(x) for x in operands]}, indent=2) + "\n"


def _render_witness(w: Witness) -> dict:
    tree = "left-fold" if w.tree is None else spectrum.tree_to_nested(w.tree)
    return {"permutation": list(w.permutation), "tree": tree}


def _render_spectrum(spec: Spectrum) -> list[dict]:
    return [
        {
            "value": render_value(e.value),
            "orientation": e.value.orientation.value,
            "multiplicity": e.multiplicity,
            "witnesses": [_render_witness(w) for w in e.witnesses],
        }
        for e in spec.entries
    ]


def _require(name: str, operands: Sequence[TrOFN], count: Optional[int] = None) -> None:
    if count is not None and len(operands) != count:
        raise ValidationError(f"{name} needs exactly {count} operand(s), got {len(operands)}")
    if not operands:
        raise ValidationError(f"{name} needs at least one operand")


def run_command(
    name: str,
    operands: Sequence[TrOFN],
    cap: int = spectrum.DEFAULT_CAP,
    budget: int = spectrum.DEFAULT_BUDGET,
    points: Sequence = (),
) -> dict:
    """Run one command and return its report as a JSON-ready dict.

    Raises :class:`CliError` subclasses or :class:`CapExceeded`. A missing
    Kosiński sum is not an error here; it is reported with ``exists: false``.
    """
    if name not in COMMANDS:
        raise ParseError(f"unknown command {name!r}")
    operands = list(operands)
    options: dict = {"cap": cap, "budget": budget}
    results: list[dict]

    if name == "add":
        _require(name, operands, 2)
        value = core.revised_sum(*operands)
        spec = Spectrum([spectrum.SpectrumEntry(value, 1, [Witness((0, 1), spectrum.left_comb(2), 0)])], 1)
        results, total = _render_spectrum(spec), 1
    elif name == "kosinski":
        _require(name, operands, 2)
        try:
            value = core.kosinski_sum(*operands)
        except NonexistentKosinskiSum as exc:
            results = [{"exists": False, "quadruple": dict(zip("abcd", map(format_exact, exc.quadruple)))}]
        else:
            results = [{"exists": True, "value": render_value(value), "orientation": value.orientation.value}]
        total = 1
    elif name == "fold":
        _require(name, operands)
        value = spectrum.left_fold_sum(operands)
        spec = Spectrum([spectrum.SpectrumEntry(value, 1, [Witness(tuple(range(len(operands))))])], 1)
        results, total = _render_spectrum(spec), 1
    elif name in ("assoc", "perms", "full"):
        _require(name, operands)
        if name == "assoc":
            spec = spectrum.association_spectrum(operands, cap=cap)
        elif name == "perms":
            spec = spectrum.permutation_spectrum(operands, cap=cap)
        else:
            spec = spectrum.full_spectrum(operands, cap=cap, budget=budget)
        results, total = _render_spectrum(spec), spec.total
    elif name == "membership":
        _require(name, operands, 1)
        if not points:
            raise ValidationError("membership needs at least one sample point (--points)")
        ts = [exact(t) for t in points]
        options["points"] = [format_exact(t) for t in ts]
        results = [{"t": format_exact(t), "membership": format_exact(core.membership(operands[0], t))} for t in ts]
        total = len(ts)
    else:  # validate
        results = [
            {"index": i, "value": render_value(x), "orientation": x.orientation.value}
            for i, x in enumerate(operands)
        ]
        total = len(operands)

    return {
        "command": name,
        "options": options,
        "operands": [dict(render_value(x), orientation=x.orientation.value) for x in operands],
        "results": results,
        "total_evaluations": total,
    }


def report_exit_code(report: dict) -> int:
    if report["command"] == "kosinski" and not report["results"][0]["exists"]:
        return EXIT_NO_KOSINSKI_SUM
    return EXIT_OK


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _names(n: int, labels: Sequence[Optional[str]]) -> list[str]:
    default = [chr(ord("A") + i) for i in range(n)] if n <= 26 else [f"x{i}" for i in range(n)]
    return [label or fallback for label, fallback in zip(labels, default)]


def _show(value: dict) -> str:
    return "Tr(%s)" % ", ".join(str(value[k]) for k in "abcd")


def _witness_text(w: dict, names: Sequence[str]) -> str:
    order = [names[i] for i in w["permutation"]]
    if w["tree"] == "left-fold":
        return " ⊞ ".join(order)
    return spectrum.format_tree(spectrum.tree_from_nested(w["tree"]), order)


def render_table(report: dict, labels: Sequence[Optional[str]] = (), max_witnesses: int = 6) -> str:
    operands = report["operands"]
    labels = list(labels) + [None] * (len(operands) - len(labels))
    names = _names(len(operands), labels)
    arrow = {o.value: g for o, g in ARROWS.items()}
    lines = [f"command: {report['command']}    evaluations: {report['total_evaluations']}", "operands:"]
    for name, x in zip(names, operands):
        lines.append(f"  {name:>3} = {_show(x)} {arrow[x['orientation']]}")
    lines.append("results:")
    for r in report["results"]:
        if "exists" in r:
            if r["exists"]:
                lines.append(f"  {_show(r['value'])} {arrow[r['orientation']]}")
            else:
                lines.append(f"  sum does not exist: quadruple {_show(r['quadruple'])} is not monotonic")
        elif "membership" in r:
            lines.append(f"  mu({r['t']}) = {r['membership']}")
        elif "index" in r:
            lines.append(f"  {names[r['index']]:>3}  {_show(r['value'])} {arrow[r['orientation']]}  {r['orientation']}")
        else:
            ws = [_witness_text(w, names) for w in r["witnesses"]]
            shown = "; ".join(ws[:max_witnesses])
            if len(ws) > max_witnesses:
                shown += f"; ... (+{len(ws) - max_witnesses} more)"
            lines.append(f"  {_show(r['value'])} {arrow[r['orientation']]}  x{r['multiplicity']}  {shown}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=spectrum.DEFAULT_CAP, help="maximum operand count")
    common.add_argument("--budget", type=int, default=spectrum.DEFAULT_BUDGET, help="evaluation budget for full")
    common.add_argument("--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="trofn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "add": "revised sum of two operands",
        "kosinski": "Kosiński sum of two operands (exit 3 if it does not exist)",
        "fold": "left-fold revised sum in document order",
        "assoc": "all bracketings in document order",
        "perms": "left fold over all orderings",
        "full": "all orderings times all bracketings",
        "membership": "membership degrees of one operand at --points",
        "validate": "check operands and report orientation",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        p.add_argument("input", help='operand JSON file, or "-" for stdin')
        if name == "membership":
            p.add_argument("--points", nargs="+", default=[], help="sample points, e.g. 2 4.5 9/2")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"trofn: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        operands, labels = parse_records(parse_document(text))
        points = [_coordinate(t, f"point {i}") for i, t in enumerate(getattr(args, "points", []))]
        report = run_command(args.command, operands, cap=args.cap, budget=args.budget, points=points)
    except CliError as exc:
        print(f"trofn: {exc}", file=sys.stderr)
        return exc.exit_code
    except CapExceeded as exc:
        print(f"trofn: {exc}", file=sys.stderr)
        return EXIT_CAP

    out = dumps_report(report) if args.format == "json" else render_table(report, labels)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return report_exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
