"""Corpus evaluation and report rendering (table, json, csv)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from statistics import fmean

from .aggregation import (DEFAULT_WINDOW_LIMIT, build_general_reference,
                          consensus_reference)
from .agreement import AgreementStats, CorrelationResult, fleiss_kappa, pearson
from .baselines import PRF, lenient_prf, mean_prf, mean_ser, strict_prf
from .corpus import CorpusLayout, Document, load_document
from .errors import ConstantSequence, UnknownFormat, WisebeError
from .scoring import WisebeScore, wisebe_score

REPORT_FIELDS = ("doc_id", "system", "precision", "recall", "f1",
                 "f1_mean", "f1_rw", "agreement_ratio", "wisebe", "kappa")
BASELINE_FIELDS = ("mean_ser", "lenient_precision", "lenient_recall", "lenient_f1")
CONSENSUS_FIELDS = ("consensus_precision", "consensus_recall", "consensus_f1")

MEAN_ROW_ID = "mean"


@dataclass(frozen=True)
class EvalConfig:
    window_limit: int = DEFAULT_WINDOW_LIMIT
    baselines: bool = False
    consensus_threshold: int | None = None


@dataclass(frozen=True)
class SystemRow:
    """All scores of one system on one document, at full precision."""

    doc_id: str
    system: str
    per_reference: tuple[tuple[str, PRF], ...]
    mean: PRF
    score: WisebeScore
    kappa: float
    candidate_boundaries: int
    mean_ser: float | None = None
    lenient: PRF | None = None
    consensus: PRF | None = None


@dataclass(frozen=True)
class AggregateRow:
    """Arithmetic means of one system's rows across all scored documents."""

    system: str
    precision: float
    recall: float
    f1_mean: float
    f1_rw: float
    agreement_ratio: float
    wisebe: float
    kappa: float
    mean_ser: float | None = None
    lenient: PRF | None = None
    consensus: PRF | None = None


@dataclass(frozen=True)
class DocumentSummary:
    doc_id: str
    token_count: int
    agreement_ratio: float
    kappa: float
    reference_boundaries: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class DocumentError:
    doc_id: str
    kind: str
    message: str


@dataclass(frozen=True)
class EvaluationReport:
    rows: tuple[SystemRow, ...]
    documents: tuple[DocumentSummary, ...]
    aggregates: tuple[AggregateRow, ...]
    correlation: CorrelationResult | None
    errors: tuple[DocumentError, ...] = ()


@dataclass(frozen=True)
class AgreementReport:
    documents: tuple[AgreementStats, ...]
    correlation: CorrelationResult | None
    errors: tuple[DocumentError, ...] = ()


def evaluate_document(doc: Document,
                      config: EvalConfig = EvalConfig()) -> tuple[DocumentSummary, list[SystemRow]]:
    """Score every candidate of one loaded document."""
    refs = doc.references
    general = build_general_reference(refs)
    kappa = fleiss_kappa(refs)
    summary = DocumentSummary(
        doc.doc_id, doc.transcript.n, general.ar, kappa,
        tuple((ref.label, ref.boundary_count) for ref in refs.references),
    )
    consensus = (consensus_reference(refs, config.consensus_threshold)
                 if config.consensus_threshold is not None else None)
    rows = []
    for name, cand in sorted(doc.candidates):
        rows.append(SystemRow(
            doc_id=doc.doc_id,
            system=name,
            per_reference=tuple((ref.label, strict_prf(cand, ref)) for ref in refs.references),
            mean=mean_prf(cand, refs),
            score=wisebe_score(cand, refs, config.window_limit),
            kappa=kappa,
            candidate_boundaries=cand.boundary_count,
            mean_ser=mean_ser(cand, refs) if config.baselines else None,
            lenient=lenient_prf(cand, refs) if config.baselines else None,
            consensus=strict_prf(cand, consensus) if consensus is not None else None,
        ))
    return summary, rows


def _mean_prf_of(values: list[PRF]) -> PRF:
    return PRF(
        fmean(v.precision for v in values),
        fmean(v.recall for v in values),
        fmean(v.f1 for v in values),
    )


def _aggregate(rows: tuple[SystemRow, ...]) -> tuple[AggregateRow, ...]:
    by_system: dict[str, list[SystemRow]] = {}
    for row in rows:
        by_system.setdefault(row.system, []).append(row)
    aggregates = []
    for system in sorted(by_system):
        group = by_system[system]
        aggregates.append(AggregateRow(
            system=system,
            precision=fmean(r.mean.precision for r in group),
            recall=fmean(r.mean.recall for r in group),
            f1_mean=fmean(r.mean.f1 for r in group),
            f1_rw=fmean(r.score.f1_rw for r in group),
            agreement_ratio=fmean(r.score.agreement_ratio for r in group),
            wisebe=fmean(r.score.wisebe for r in group),
            kappa=fmean(r.kappa for r in group),
            mean_ser=(fmean(r.mean_ser for r in group)
                      if all(r.mean_ser is not None for r in group) else None),
            lenient=(_mean_prf_of([r.lenient for r in group])
                     if all(r.lenient is not None for r in group) else None),
            consensus=(_mean_prf_of([r.consensus for r in group])
                       if all(r.consensus is not None for r in group) else None),
        ))
    return tuple(aggregates)


def _correlate(pairs: list[tuple[float, float]]) -> CorrelationResult | None:
    if len(pairs) < 2:
        return None
    try:
        return pearson([p[0] for p in pairs], [p[1] for p in pairs])
    except ConstantSequence:
        return None


def evaluate_corpus(layout: CorpusLayout,
                    config: EvalConfig = EvalConfig()) -> EvaluationReport:
    """Score a whole corpus, collecting per-document failures instead of
    aborting the run."""
    rows: list[SystemRow] = []
    summaries: list[DocumentSummary] = []
    errors: list[DocumentError] = []
    for files in layout.documents:
        try:
            doc = load_document(files)
            summary, doc_rows = evaluate_document(doc, config)
        except (WisebeError, ValueError, OSError) as exc:
            errors.append(DocumentError(files.doc_id, type(exc).__name__, str(exc)))
            continue
        summaries.append(summary)
        rows.extend(doc_rows)
    correlation = _correlate([(s.agreement_ratio, s.kappa) for s in summaries])
    return EvaluationReport(tuple(rows), tuple(summaries), _aggregate(tuple(rows)),
                            correlation, tuple(errors))


def evaluate_single(doc: Document, config: EvalConfig = EvalConfig()) -> EvaluationReport:
    """Report for one already-loaded document (no cross-document correlation)."""
    summary, rows = evaluate_document(doc, config)
    return EvaluationReport(tuple(rows), (summary,), _aggregate(tuple(rows)), None, ())


def evaluate_agreement(layout: CorpusLayout) -> AgreementReport:
    """Reference-only pass: agreement ratio and kappa per document."""
    stats: list[AgreementStats] = []
    errors: list[DocumentError] = []
    for files in layout.documents:
        try:
            doc = load_document(files)
            refs = doc.references
            stats.append(AgreementStats(doc.doc_id,
                                        build_general_reference(refs).ar,
                                        fleiss_kappa(refs)))
        except (WisebeError, ValueError, OSError) as exc:
            errors.append(DocumentError(files.doc_id, type(exc).__name__, str(exc)))
    correlation = _correlate([(s.agreement_ratio, s.kappa) for s in stats])
    return AgreementReport(tuple(stats), correlation, tuple(errors))


# ---------------------------------------------------------------------------
# rendering

def _round3(x: float) -> float:
    """Display rounding: bankers' rounding at three decimals."""
    return round(x, 3)


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{_round3(x):.3f}"
    return str(x)


def _fields_for(report: EvaluationReport) -> tuple[str, ...]:
    fields = REPORT_FIELDS
    if any(r.mean_ser is not None or r.lenient is not None for r in report.rows):
        fields += BASELINE_FIELDS
    if any(r.consensus is not None for r in report.rows):
        fields += CONSENSUS_FIELDS
    return fields


def _row_record(row: SystemRow) -> dict:
    record = {
        "doc_id": row.doc_id,
        "system": row.system,
        "precision": row.mean.precision,
        "recall": row.mean.recall,
        "f1": row.mean.f1,
        "f1_mean": row.mean.f1,
        "f1_rw": row.score.f1_rw,
        "agreement_ratio": row.score.agreement_ratio,
        "wisebe": row.score.wisebe,
        "kappa": row.kappa,
    }
    if row.mean_ser is not None or row.lenient is not None:
        record["mean_ser"] = row.mean_ser
        record["lenient_precision"] = row.lenient.precision if row.lenient else None
        record["lenient_recall"] = row.lenient.recall if row.lenient else None
        record["lenient_f1"] = row.lenient.f1 if row.lenient else None
    if row.consensus is not None:
        record["consensus_precision"] = row.consensus.precision
        record["consensus_recall"] = row.consensus.recall
        record["consensus_f1"] = row.consensus.f1
    return record


def _aggregate_record(agg: AggregateRow) -> dict:
    record = {
        "doc_id": MEAN_ROW_ID,
        "system": agg.system,
        "precision": agg.precision,
        "recall": agg.recall,
        "f1": agg.f1_mean,
        "f1_mean": agg.f1_mean,
        "f1_rw": agg.f1_rw,
        "agreement_ratio": agg.agreement_ratio,
        "wisebe": agg.wisebe,
        "kappa": agg.kappa,
    }
    if agg.mean_ser is not None or agg.lenient is not None:
        record["mean_ser"] = agg.mean_ser
        record["lenient_precision"] = agg.lenient.precision if agg.lenient else None
        record["lenient_recall"] = agg.lenient.recall if agg.lenient else None
        record["lenient_f1"] = agg.lenient.f1 if agg.lenient else None
    if agg.consensus is not None:
        record["consensus_precision"] = agg.consensus.precision
        record["consensus_recall"] = agg.consensus.recall
        record["consensus_f1"] = agg.consensus.f1
    return record


def _records(report: EvaluationReport) -> list[dict]:
    return [_row_record(r) for r in report.rows] + \
           [_aggregate_record(a) for a in report.aggregates]


def _render_json(report: EvaluationReport) -> bytes:
    records = []
    for record in _records(report):
        records.append({k: _round3(v) if isinstance(v, float) else v
                        for k, v in record.items()})
    return (json.dumps(records, indent=2) + "\n").encode("utf-8")


def _render_csv(report: EvaluationReport) -> bytes:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=_fields_for(report), lineterminator="\n")
    writer.writeheader()
    for record in _records(report):
        writer.writerow({k: _fmt(v) for k, v in record.items()})
    return out.getvalue().encode("utf-8")


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _render_table(report: EvaluationReport) -> bytes:
    lines: list[str] = []

    if report.documents:
        lines.append("== boundary counts ==")
        counts = []
        rows_by_doc = {}
        for row in report.rows:
            rows_by_doc.setdefault(row.doc_id, []).append(row)
        for doc in report.documents:
            for label, count in doc.reference_boundaries:
                counts.append([doc.doc_id, label, str(count)])
            for row in rows_by_doc.get(doc.doc_id, []):
                counts.append([doc.doc_id, row.system, str(row.candidate_boundaries)])
        lines += _table(["doc", "source", "boundaries"], counts)
        lines.append("")

    if report.rows:
        lines.append("== exact-position scores ==")
        per_ref = []
        for row in report.rows:
            for label, prf in row.per_reference:
                per_ref.append([row.doc_id, row.system, label,
                                _fmt(prf.precision), _fmt(prf.recall), _fmt(prf.f1)])
            per_ref.append([row.doc_id, row.system, MEAN_ROW_ID,
                            _fmt(row.mean.precision), _fmt(row.mean.recall),
                            _fmt(row.mean.f1)])
        lines += _table(["doc", "system", "reference", "precision", "recall", "f1"],
                        per_ref)
        lines.append("")

        lines.append("== windowed scores ==")
        windowed = [[r.doc_id, r.system, _fmt(r.mean.f1), _fmt(r.score.f1_rw),
                     _fmt(r.score.agreement_ratio), _fmt(r.score.wisebe)]
                    for r in report.rows]
        windowed += [[MEAN_ROW_ID, a.system, _fmt(a.f1_mean), _fmt(a.f1_rw),
                      _fmt(a.agreement_ratio), _fmt(a.wisebe)]
                     for a in report.aggregates]
        lines += _table(["doc", "system", "f1_mean", "f1_rw", "agreement_ratio", "wisebe"],
                        windowed)
        lines.append("")

    if any(r.mean_ser is not None or r.lenient is not None or r.consensus is not None
           for r in report.rows):
        lines.append("== baseline scores ==")
        header = ["doc", "system", "mean_ser",
                  "lenient_p", "lenient_r", "lenient_f1"]
        with_consensus = any(r.consensus is not None for r in report.rows)
        if with_consensus:
            header += ["consensus_p", "consensus_r", "consensus_f1"]
        base_rows = []
        for r in report.rows:
            cells = [r.doc_id, r.system, _fmt(r.mean_ser),
                     _fmt(r.lenient.precision if r.lenient else None),
                     _fmt(r.lenient.recall if r.lenient else None),
                     _fmt(r.lenient.f1 if r.lenient else None)]
            if with_consensus:
                cells += [_fmt(r.consensus.precision if r.consensus else None),
                          _fmt(r.consensus.recall if r.consensus else None),
                          _fmt(r.consensus.f1 if r.consensus else None)]
            base_rows.append(cells)
        lines += _table(header, base_rows)
        lines.append("")

    if report.documents:
        lines.append("== reference agreement ==")
        agreement = [[d.doc_id, _fmt(d.agreement_ratio), _fmt(d.kappa)]
                     for d in report.documents]
        lines += _table(["doc", "agreement_ratio", "kappa"], agreement)
        if report.correlation is not None:
            lines.append(f"pearson r = {_fmt(report.correlation.pcc)} "
                         f"over {report.correlation.sample_count} documents")
        else:
            lines.append("pearson r: not computed (needs two varying documents)")
        lines.append("")

    if report.errors:
        lines.append("== document errors ==")
        lines += _table(["doc", "kind", "message"],
                        [[e.doc_id, e.kind, e.message] for e in report.errors])
        lines.append("")

    if not lines:
        lines = ["(empty corpus: nothing evaluated)", ""]
    return ("\n".join(lines).rstrip("\n") + "\n").encode("utf-8")


_RENDERERS = {"table": _render_table, "json": _render_json, "csv": _render_csv}
REPORT_FORMATS = tuple(sorted(_RENDERERS))


def render_report(report: EvaluationReport, fmt: str = "table") -> bytes:
    """Render an evaluation report; byte output is deterministic per input."""
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise UnknownFormat(f"unknown report format {fmt!r}, "
                            f"expected one of {REPORT_FORMATS}") from None
    return renderer(report)


def render_agreement(report: AgreementReport, fmt: str = "table") -> bytes:
    if fmt not in _RENDERERS:
        raise UnknownFormat(f"unknown report format {fmt!r}, "
                            f"expected one of {REPORT_FORMATS}")
    if fmt == "json":
        payload = {
            "documents": [{"doc_id": s.doc_id,
                           "agreement_ratio": _round3(s.agreement_ratio),
                           "kappa": _round3(s.kappa)} for s in report.documents],
            "pcc": _round3(report.correlation.pcc) if report.correlation else None,
            "sample_count": report.correlation.sample_count if report.correlation else 0,
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["doc_id", "agreement_ratio", "kappa"])
        for s in report.documents:
            writer.writerow([s.doc_id, _fmt(s.agreement_ratio), _fmt(s.kappa)])
        return out.getvalue().encode("utf-8")
    lines = ["== reference agreement =="]
    lines += _table(["doc", "agreement_ratio", "kappa"],
                    [[s.doc_id, _fmt(s.agreement_ratio), _fmt(s.kappa)]
                     for s in report.documents])
    if report.correlation is not None:
        lines.append(f"pearson r = {_fmt(report.correlation.pcc)} "
                     f"over {report.correlation.sample_count} documents")
    else:
        lines.append("pearson r: not computed (needs two varying documents)")
    return ("\n".join(lines) + "\n").encode("utf-8")
