"""Fusing several reference segmentations into general and window references."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadThreshold, NoBoundaries
from .model import REFERENCE, BoundaryVector, ReferenceSet

# Default number of non-boundary tokens allowed between members of one window.
DEFAULT_WINDOW_LIMIT = 2


def _vote_counts(refs: ReferenceSet) -> tuple[int, ...]:
    return tuple(sum(ref.bits[j] for ref in refs.references) for j in range(refs.n))


@dataclass(frozen=True)
class GeneralReference:
    """Per-position boundary votes plus the agreement ratio they induce.

    pb counts every vote on positions marked by at least two references;
    ha is the vote total if all m references had agreed on every position
    anyone marked.  ar = pb / ha, in [0, 1].
    """

    doc_id: str
    counts: tuple[int, ...]
    m: int
    pb: int
    ha: int
    ar: float

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def nonzero_positions(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.counts) if c)


def build_general_reference(refs: ReferenceSet) -> GeneralReference:
    counts = _vote_counts(refs)
    voted = sum(1 for c in counts if c)
    if voted == 0:
        raise NoBoundaries(f"no reference marks any boundary in {refs.doc_id!r}")
    pb = sum(c for c in counts if c >= 2)
    ha = refs.m * voted
    return GeneralReference(refs.doc_id, counts, refs.m, pb, ha, pb / ha)


@dataclass(frozen=True)
class WindowReference:
    """Voted positions grouped into windows under a token-gap limit.

    Consecutive voted positions join the same window while the number
    of unvoted tokens between them is at most separation_limit.
    """

    doc_id: str
    windows: tuple[tuple[int, ...], ...]
    separation_limit: int
    n: int

    @property
    def p(self) -> int:
        return len(self.windows)

    @property
    def spans(self) -> tuple[tuple[int, int], ...]:
        """Inclusive (first, last) position of every window."""
        return tuple((w[0], w[-1]) for w in self.windows)


def build_window_reference(general: GeneralReference,
                           separation_limit: int = DEFAULT_WINDOW_LIMIT) -> WindowReference:
    if separation_limit < 0:
        raise ValueError(f"separation limit must be >= 0, got {separation_limit}")
    windows: list[tuple[int, ...]] = []
    current: list[int] = []
    for pos in general.nonzero_positions:
        if current and pos - current[-1] - 1 > separation_limit:
            windows.append(tuple(current))
            current = []
        current.append(pos)
    if current:
        windows.append(tuple(current))
    return WindowReference(general.doc_id, tuple(windows), separation_limit, general.n)


def consensus_reference(refs: ReferenceSet, threshold: int) -> BoundaryVector:
    """Majority-style fused reference: keep positions with >= threshold votes."""
    if not 1 <= threshold <= refs.m:
        raise BadThreshold(f"threshold {threshold} outside 1..{refs.m}")
    counts = _vote_counts(refs)
    bits = tuple(1 if c >= threshold else 0 for c in counts)
    return BoundaryVector(refs.doc_id, bits, REFERENCE, f"consensus>={threshold}")
