"""Exact-position metrics: single-reference PRF, SER, and the older
multi-reference workarounds (averaging, lenient union/intersection)."""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean

from .errors import AlignmentError, NoBoundaries
from .model import BoundaryVector, ReferenceSet
from .scoring import harmonic_f1


@dataclass(frozen=True)
class PRF:
    """Precision/recall/F1, with raw counts when they come from one pairing."""

    precision: float
    recall: float
    f1: float
    tp: int | None = None
    fp: int | None = None
    fn: int | None = None

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "PRF":
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        return cls(precision, recall, harmonic_f1(precision, recall), tp, fp, fn)


@dataclass(frozen=True)
class SerScore:
    insertions: int
    deletions: int
    ser: float


def _check_pair(cand: BoundaryVector, ref: BoundaryVector):
    if cand.n != ref.n:
        raise AlignmentError(
            f"candidate has {cand.n} positions, reference {ref.label!r} has {ref.n}",
            position=min(cand.n, ref.n),
        )
    if cand.doc_id and ref.doc_id and cand.doc_id != ref.doc_id:
        raise AlignmentError(
            f"candidate for {cand.doc_id!r} scored against reference of {ref.doc_id!r}"
        )


def strict_prf(cand: BoundaryVector, ref: BoundaryVector) -> PRF:
    """Position-exact precision/recall/F1 against a single reference."""
    _check_pair(cand, ref)
    tp = fp = fn = 0
    for c, r in zip(cand.bits, ref.bits):
        if c and r:
            tp += 1
        elif c:
            fp += 1
        elif r:
            fn += 1
    return PRF.from_counts(tp, fp, fn)


def mean_prf(cand: BoundaryVector, refs: ReferenceSet) -> PRF:
    """Component-wise arithmetic mean of strict PRF over all references.

    Note the mean F1 is the mean of the per-reference F1 values, not
    the harmonic mean of the averaged precision and recall.
    """
    scores = [strict_prf(cand, ref) for ref in refs.references]
    return PRF(
        fmean(s.precision for s in scores),
        fmean(s.recall for s in scores),
        fmean(s.f1 for s in scores),
    )


def slot_error_rate(cand: BoundaryVector, ref: BoundaryVector) -> SerScore:
    """Insertions plus deletions over the number of reference boundaries."""
    prf = strict_prf(cand, ref)
    slots = ref.boundary_count
    if slots == 0:
        raise NoBoundaries(f"reference {ref.label or ref.doc_id!r} marks no boundaries")
    return SerScore(prf.fp, prf.fn, (prf.fp + prf.fn) / slots)


def mean_ser(cand: BoundaryVector, refs: ReferenceSet) -> float:
    return fmean(slot_error_rate(cand, ref).ser for ref in refs.references)


def lenient_prf(cand: BoundaryVector, refs: ReferenceSet) -> PRF:
    """Generous multi-reference PRF: a candidate boundary is correct if
    any reference has it; only boundaries all references share can be
    missed."""
    for ref in refs.references:
        _check_pair(cand, ref)
    tp = fp = fn = 0
    for j, c in enumerate(cand.bits):
        votes = sum(ref.bits[j] for ref in refs.references)
        if c:
            if votes:
                tp += 1
            else:
                fp += 1
        elif votes == refs.m:
            fn += 1
    return PRF.from_counts(tp, fp, fn)
