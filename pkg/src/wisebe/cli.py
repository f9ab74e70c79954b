"""Command line front end.

Exit codes: 0 on success, 1 when some documents failed to evaluate,
2 on a corpus-level or usage error.  Failures are written to stderr
as a JSON object {"errors": [{"doc_id", "kind", "message"}, ...]}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .aggregation import DEFAULT_WINDOW_LIMIT
from .corpus import SYS_PREFIX, DocumentFiles, load_corpus, load_document
from .errors import WisebeError
from .report import (REPORT_FORMATS, EvalConfig, evaluate_agreement,
                     evaluate_corpus, evaluate_single, render_agreement,
                     render_report)

ENV_WINDOW_LIMIT = "WISEBE_WINDOW_LIMIT"


def _resolve_window_limit(flag_value: int | None) -> int:
    """Flag beats environment beats built-in default."""
    if flag_value is not None:
        value = flag_value
    else:
        raw = os.environ.get(ENV_WINDOW_LIMIT)
        if raw is None:
            return DEFAULT_WINDOW_LIMIT
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_WINDOW_LIMIT}={raw!r} is not an integer") from None
    if value < 0:
        raise ValueError(f"window limit must be >= 0, got {value}")
    return value


def _emit_errors(errors: list[dict]):
    print(json.dumps({"errors": errors}), file=sys.stderr)


def _warn(warnings):
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)


def _write(data: bytes, output: Path | None):
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        output.write_bytes(data)


def _config(args) -> EvalConfig:
    return EvalConfig(
        window_limit=_resolve_window_limit(args.window_limit),
        baselines=args.baselines,
        consensus_threshold=args.threshold,
    )


def _cmd_eval(args) -> int:
    config = _config(args)
    layout = load_corpus(args.root)
    _warn(layout.warnings)
    report = evaluate_corpus(layout, config)
    _write(render_report(report, args.format), args.output)
    if report.errors:
        _emit_errors([{"doc_id": e.doc_id, "kind": e.kind, "message": e.message}
                      for e in report.errors])
        return 1
    return 0


def _cmd_agreement(args) -> int:
    layout = load_corpus(args.root)
    _warn(layout.warnings)
    report = evaluate_agreement(layout)
    _write(render_agreement(report, args.format), args.output)
    if report.errors:
        _emit_errors([{"doc_id": e.doc_id, "kind": e.kind, "message": e.message}
                      for e in report.errors])
        return 1
    return 0


def _system_label(path: Path) -> str:
    stem = path.stem
    if stem.startswith(SYS_PREFIX) and len(stem) > len(SYS_PREFIX):
        return stem[len(SYS_PREFIX):]
    return stem


def _cmd_score(args) -> int:
    config = _config(args)
    files = DocumentFiles(
        args.doc_id,
        tuple((path.stem, path) for path in args.ref_files),
        tuple((_system_label(path), path) for path in args.system_files or ()),
    )
    doc = load_document(files)
    report = evaluate_single(doc, config)
    _write(render_report(report, args.format), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wisebe",
        description="Evaluate sentence boundary detection against several "
                    "references at once.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=REPORT_FORMATS, default="table",
                        help="report format (default: table)")
    common.add_argument("--output", type=Path, default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")

    scoring = argparse.ArgumentParser(add_help=False)
    scoring.add_argument("--window-limit", type=int, default=None, metavar="N",
                         help="max non-boundary tokens between members of one "
                              f"window (default: ${ENV_WINDOW_LIMIT} or "
                              f"{DEFAULT_WINDOW_LIMIT})")
    scoring.add_argument("--baselines", action="store_true",
                         help="also report mean SER and lenient scores")
    scoring.add_argument("--threshold", type=int, default=None, metavar="K",
                         help="also score against the boundaries at least K "
                              "references voted for")

    p_eval = sub.add_parser("eval", parents=[common, scoring],
                            help="evaluate every document under a corpus root")
    p_eval.add_argument("root", type=Path, help="corpus root directory")
    p_eval.set_defaults(func=_cmd_eval)

    p_agree = sub.add_parser("agreement", parents=[common],
                             help="reference agreement statistics only")
    p_agree.add_argument("root", type=Path, help="corpus root directory")
    p_agree.set_defaults(func=_cmd_agreement)

    p_score = sub.add_parser("score", parents=[common, scoring],
                             help="score one document given explicit files")
    p_score.add_argument("--ref", dest="ref_files", action="append", type=Path,
                         required=True, metavar="PATH",
                         help="reference transcript (repeat, at least twice)")
    p_score.add_argument("--sys", dest="system_files", action="append", type=Path,
                         metavar="PATH", help="system output (repeatable)")
    p_score.add_argument("--doc-id", default="doc", help="document id for the report")
    p_score.set_defaults(func=_cmd_score)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WisebeError, ValueError, OSError) as exc:
        _emit_errors([{"doc_id": None, "kind": type(exc).__name__, "message": str(exc)}])
        return 2


if __name__ == "__main__":
    sys.exit(main())
