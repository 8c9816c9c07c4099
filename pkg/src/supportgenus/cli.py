"""Command line front end.

Five data commands (``tb``, ``rot``, ``snf``, ``hf``, ``sg-bounds``)
each read one input document and report on every record the relevant
section contains; ``verify-paper`` runs the bundled acceptance suite.
``--input`` accepts a file path, the name of a bundled fixture, or
inline JSON.  ``--format machine`` switches the report to JSON, and
``--out`` writes it to a file instead of standard output.

Exit codes: 0 on success, 1 when a computation or derivation fails
(including failed verify criteria), 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .errors import ToolkitError
from .fixtures import FIXTURE_NAMES, load_fixture
from .hfbook import hf_hat, hf_red_rank
from .inputdoc import InputDocument, InputFormatError, parse_text
from .seifert import page_framing_self_linking
from .sgengine import derive_bounds
from .stein import boundary_matrix, format_cycle, rotation_number
from .verify import run_all
from .zlinalg import IntMatrix, smith_normal_form

Report = Tuple[str, dict]


def _resolve_document(value: str) -> InputDocument:
    # inline JSON first: probing it as a path fails for long documents
    if value.lstrip().startswith("{"):
        return parse_text(value)
    path = Path(value)
    if path.exists():
        return parse_text(path.read_text())
    if value in FIXTURE_NAMES or value.endswith(".json") and value[:-5] in FIXTURE_NAMES:
        return load_fixture(value)
    raise InputFormatError(
        "document",
        f"{value!r} is not a file, inline JSON, or a bundled fixture "
        f"(bundled: {', '.join(FIXTURE_NAMES)})",
    )


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cmd_tb(doc: InputDocument) -> Report:
    results = []
    for name, record in doc.curves.items():
        surface = doc.surfaces[record.surface_name]
        results.append(
            {
                "curve": name,
                "surface": record.surface_name,
                "tb": page_framing_self_linking(surface, record.curve),
            }
        )
    if not results:
        return "no curves in document\n", {"command": "tb", "results": []}
    rows = [[r["curve"], r["surface"], str(r["tb"])] for r in results]
    return _table(("curve", "surface", "tb"), rows), {"command": "tb", "results": results}


def _cmd_rot(doc: InputDocument) -> Report:
    results = []
    rows = []
    for name, problem in doc.stein_problems.items():
        outcome = rotation_number(problem)
        formatted = format_cycle(problem, outcome.cycle)
        results.append(
            {
                "problem": name,
                "rotation": outcome.rotation,
                "cycle": list(outcome.cycle),
                "formatted": formatted,
                "base_rotations": list(outcome.c1),
            }
        )
        rows.append([name, str(outcome.rotation), formatted])
    if not results:
        return "no stein problems in document\n", {"command": "rot", "results": []}
    return _table(("problem", "rotation", "cycle"), rows), {"command": "rot", "results": results}


def _cmd_snf(doc: InputDocument) -> Report:
    matrices: List[Tuple[str, IntMatrix]] = []
    for name, surface in doc.surfaces.items():
        matrices.append((f"intersection({name})", IntMatrix(surface.intersection, cols=surface.band_count)))
    for name, problem in doc.stein_problems.items():
        matrices.append((f"boundary({name})", boundary_matrix(problem)))
    results = []
    rows = []
    for label, matrix in matrices:
        snf = smith_normal_form(matrix)
        results.append(
            {
                "matrix": label,
                "rows": matrix.rows,
                "cols": matrix.cols,
                "rank": snf.rank,
                "diagonal": list(snf.diagonal),
                "kernel_rank": matrix.cols - snf.rank,
            }
        )
        rows.append(
            [
                label,
                f"{matrix.rows}x{matrix.cols}",
                str(snf.rank),
                ", ".join(map(str, snf.diagonal)) or "-",
                str(matrix.cols - snf.rank),
            ]
        )
    if not results:
        return "no matrices in document\n", {"command": "snf", "results": []}
    return (
        _table(("matrix", "size", "rank", "diagonal", "kernel rank"), rows),
        {"command": "snf", "results": results},
    )


def _cmd_hf(doc: InputDocument) -> Report:
    results = []
    rows = []
    for name, module in doc.hf_modules.items():
        hat = hf_hat(module)
        results.append(
            {
                "module": name,
                "spinc_count": module.spinc_count,
                "hat_ranks": list(hat),
                "red_rank": hf_red_rank(module),
                "total_towers": module.total_towers,
            }
        )
        rows.append(
            [
                name,
                str(module.spinc_count),
                ", ".join(map(str, hat)),
                str(hf_red_rank(module)),
                str(module.total_towers),
            ]
        )
    if not results:
        return "no hf modules in document\n", {"command": "hf", "results": []}
    return (
        _table(("module", "slots", "hat ranks", "reduced rank", "towers"), rows),
        {"command": "hf", "results": results},
    )


def _cmd_sg_bounds(doc: InputDocument) -> Report:
    bounds = derive_bounds(doc.fact_base())
    results = []
    lines = []
    for desc, interval in bounds.items():
        results.append(
            {
                "type": desc.topo_type,
                "tb": desc.tb,
                "rot": desc.rot,
                "lo": interval.lo,
                "hi": interval.hi,
                "trace": [
                    {"rule": s.rule, "bound": s.bound, "value": s.value, "reason": s.reason}
                    for s in interval.trace
                ],
            }
        )
        lines.append(f"{desc.label()}: {interval}")
        for step in interval.trace:
            lines.append(f"  {step}")
    if not results:
        return "no facts in document\n", {"command": "sg-bounds", "results": []}
    return "\n".join(lines) + "\n", {"command": "sg-bounds", "results": results}


def _cmd_verify() -> Tuple[str, dict, int]:
    outcomes = run_all()
    lines = [result.line() for result in outcomes]
    passed = sum(1 for r in outcomes if r.passed)
    lines.append(f"verify-paper: {passed}/{len(outcomes)} criteria passed")
    machine = {
        "command": "verify-paper",
        "results": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
            for r in outcomes
        ],
        "all_passed": passed == len(outcomes),
    }
    return "\n".join(lines) + "\n", machine, 0 if passed == len(outcomes) else 1


_COMMANDS = {
    "tb": _cmd_tb,
    "rot": _cmd_rot,
    "snf": _cmd_snf,
    "hf": _cmd_hf,
    "sg-bounds": _cmd_sg_bounds,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supportgenus",
        description="exact computations on open book pages, framings, and support-genus bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("human", "machine"), default="human", help="report format")
    output.add_argument("--out", metavar="PATH", default=None, help="write the report to a file")
    needs_input = argparse.ArgumentParser(add_help=False, parents=[output])
    needs_input.add_argument(
        "--input",
        required=True,
        metavar="DOC",
        help="input document: a file path, a bundled fixture name, or inline JSON",
    )

    sub.add_parser("tb", parents=[needs_input], help="page framing of every declared curve")
    sub.add_parser("rot", parents=[needs_input], help="rotation number of every stein problem")
    sub.add_parser("snf", parents=[needs_input], help="Smith data of the document's matrices")
    sub.add_parser("hf", parents=[needs_input], help="rank summary of every hf module")
    sub.add_parser("sg-bounds", parents=[needs_input], help="derived support-genus intervals with traces")
    sub.add_parser("verify-paper", parents=[output], help="run the bundled acceptance suite")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify-paper":
            text, machine, code = _cmd_verify()
        else:
            document = _resolve_document(args.input)
            text, machine = _COMMANDS[args.command](document)
            code = 0
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = text if args.format == "human" else json.dumps(machine, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(report)
    else:
        sys.stdout.write(report)
    return code


def console() -> None:
    sys.exit(main())
