from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from wisebe import (BadThreshold, BoundaryVector, GeneralReference,
                    NoBoundaries, ReferenceSet, build_general_reference,
                    build_window_reference, consensus_reference)
from oracles import agreement_ratio_by_counting, windows_by_regex
from strategies import reference_sets


def _refs(*rows):
    return ReferenceSet("d", tuple(
        BoundaryVector("d", row, label=f"ref_{i + 1}") for i, row in enumerate(rows)
    ))


def test_general_reference_counts_votes():
    general = build_general_reference(_refs((1, 0, 1, 1), (1, 0, 1, 0), (1, 0, 0, 0)))
    assert general.counts == (3, 0, 2, 1)
    assert general.nonzero_positions == (0, 2, 3)
    # position 3 has a single vote: it widens ha but adds nothing to pb
    assert general.pb == 5
    assert general.ha == 9
    assert general.ar == pytest.approx(5 / 9)


def test_general_reference_identical_references_reach_one():
    general = build_general_reference(_refs((0, 1, 0, 1), (0, 1, 0, 1)))
    assert general.ar == 1.0


def test_general_reference_requires_some_boundary():
    with pytest.raises(NoBoundaries):
        build_general_reference(_refs((0, 0, 0), (0, 0, 0)))


def test_window_grouping_respects_gap_limit():
    general = GeneralReference("d", (0, 0, 0, 0, 1, 0, 0, 0, 2), 2, 2, 4, 0.5)
    assert build_window_reference(general, 2).windows == ((4,), (8,))
    assert build_window_reference(general, 3).windows == ((4, 8),)


def test_window_limit_zero_still_joins_adjacent_positions():
    general = GeneralReference("d", (0, 0, 0, 1, 2, 1), 2, 4, 6, 4 / 6)
    windows = build_window_reference(general, 0)
    assert windows.windows == ((3, 4, 5),)
    assert windows.spans == ((3, 5),)
    assert windows.p == 1


def test_window_reference_rejects_negative_limit():
    general = GeneralReference("d", (1,), 2, 0, 2, 0.0)
    with pytest.raises(ValueError):
        build_window_reference(general, -1)


@given(reference_sets(), st.integers(0, 5))
def test_windows_match_regex_oracle(refs, limit):
    general = build_general_reference(refs)
    windows = build_window_reference(general, limit)
    assert list(windows.windows) == windows_by_regex(general.counts, limit)


@given(reference_sets(), st.integers(0, 5))
def test_windows_partition_voted_positions(refs, limit):
    general = build_general_reference(refs)
    windows = build_window_reference(general, limit)
    flat = [p for w in windows.windows for p in w]
    assert tuple(flat) == general.nonzero_positions
    for window in windows.windows:
        assert all(b - a - 1 <= limit for a, b in zip(window, window[1:]))
    for prev, nxt in zip(windows.windows, windows.windows[1:]):
        assert nxt[0] - prev[-1] - 1 > limit


@given(reference_sets())
def test_agreement_ratio_matches_counting_oracle(refs):
    general = build_general_reference(refs)
    pb, ha, ratio = agreement_ratio_by_counting([r.bits for r in refs.references])
    assert (general.pb, general.ha) == (pb, ha)
    assert general.ar == pytest.approx(float(ratio), abs=1e-15)
    assert 0.0 <= general.ar <= 1.0


def test_consensus_thresholds():
    refs = _refs((1, 0, 1, 0), (1, 0, 0, 1), (1, 0, 0, 1))
    assert consensus_reference(refs, 1).bits == (1, 0, 1, 1)
    assert consensus_reference(refs, 2).bits == (1, 0, 0, 1)
    assert consensus_reference(refs, 3).bits == (1, 0, 0, 0)
    assert consensus_reference(refs, 2).label == "consensus>=2"


@pytest.mark.parametrize("threshold", [0, 4, -1])
def test_consensus_rejects_bad_threshold(threshold):
    refs = _refs((1, 0), (0, 1), (1, 1))
    with pytest.raises(BadThreshold):
        consensus_reference(refs, threshold)
