"""Window-based precision/recall and the agreement-scaled score."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .aggregation import (DEFAULT_WINDOW_LIMIT, WindowReference,
                          build_general_reference, build_window_reference)
from .errors import AlignmentError, NoBoundaries
from .model import BoundaryVector, ReferenceSet


def harmonic_f1(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0.0 when both are zero."""
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class WisebeScore:
    """Windowed precision/recall/F1 and the final agreement-scaled value."""

    precision_rw: float
    recall_rw: float
    f1_rw: float
    agreement_ratio: float
    wisebe: float


def _check_aligned(cand: BoundaryVector, windows: WindowReference):
    if cand.n != windows.n:
        raise AlignmentError(
            f"candidate has {cand.n} positions, window reference has {windows.n}",
            position=min(cand.n, windows.n),
        )
    if cand.doc_id and windows.doc_id and cand.doc_id != windows.doc_id:
        raise AlignmentError(
            f"candidate for {cand.doc_id!r} scored against windows of {windows.doc_id!r}"
        )


def windowed_precision(cand: BoundaryVector, windows: WindowReference) -> float:
    """Fraction of candidate boundaries falling inside some window span.

    Spans are inclusive between the first and last voted position of a
    window, so unvoted tokens inside a window still count as inside.
    A candidate without boundaries scores 0.0.
    """
    _check_aligned(cand, windows)
    total = cand.boundary_count
    if total == 0:
        return 0.0
    inside = [False] * cand.n
    for lo, hi in windows.spans:
        for j in range(lo, hi + 1):
            inside[j] = True
    hits = sum(1 for p in cand.positions if inside[p])
    return hits / total


def windowed_recall(cand: BoundaryVector, windows: WindowReference) -> float:
    """Fraction of windows containing at least one candidate boundary."""
    _check_aligned(cand, windows)
    if windows.p == 0:
        raise NoBoundaries(f"window reference for {windows.doc_id!r} is empty")
    # prefix[j] = number of candidate boundaries strictly before position j
    prefix = [0, *accumulate(cand.bits)]
    hit = sum(1 for lo, hi in windows.spans if prefix[hi + 1] > prefix[lo])
    return hit / windows.p


def combine_score(f1_rw: float, agreement_ratio: float) -> float:
    """Scale windowed F1 by how much the references agree with each other."""
    return f1_rw * agreement_ratio


def wisebe_score(cand: BoundaryVector, refs: ReferenceSet,
                 separation_limit: int = DEFAULT_WINDOW_LIMIT) -> WisebeScore:
    """Score a candidate against several references at once."""
    if cand.n != refs.n:
        raise AlignmentError(
            f"candidate has {cand.n} positions, references have {refs.n}",
            position=min(cand.n, refs.n),
        )
    if cand.doc_id and refs.doc_id and cand.doc_id != refs.doc_id:
        raise AlignmentError(
            f"candidate for {cand.doc_id!r} scored against references of {refs.doc_id!r}"
        )
    general = build_general_reference(refs)
    windows = build_window_reference(general, separation_limit)
    precision = windowed_precision(cand, windows)
    recall = windowed_recall(cand, windows)
    f1 = harmonic_f1(precision, recall)
    return WisebeScore(precision, recall, f1, general.ar, combine_score(f1, general.ar))
