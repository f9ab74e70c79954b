"""Transcripts, boundary vectors, and parsing of segmented text.

A segmentation of an n-token transcript is a binary vector of length n:
bit j is 1 when a sentence-like unit ends immediately after token j.
The final token of a transcript always closes a unit, but that last
bit is kept explicit rather than implied so vectors stay comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AlignmentError, EmptyTranscript, MissingReferences

# Punctuation that closes a sentence-like unit when it follows a token.
SU_DELIMITERS = frozenset(".?!;")
# Punctuation stripped during normalization; never closes a unit.
INTERNAL_MARKS = frozenset(":,")

REFERENCE = "reference"
CANDIDATE = "candidate"
_ORIGINS = (REFERENCE, CANDIDATE)


@dataclass(frozen=True)
class Transcript:
    """Normalized token sequence shared by every segmentation of a document."""

    doc_id: str
    tokens: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise EmptyTranscript(f"transcript {self.doc_id!r} has no tokens")
        for j, token in enumerate(self.tokens):
            if not token:
                raise ValueError(f"transcript {self.doc_id!r}: empty token at position {j}")
            if SU_DELIMITERS.intersection(token):
                raise ValueError(
                    f"transcript {self.doc_id!r}: token {token!r} at position {j} "
                    "contains unit-final punctuation"
                )

    @property
    def n(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class BoundaryVector:
    """Binary boundary marks over the token positions of one transcript."""

    doc_id: str
    bits: tuple[int, ...]
    origin: str = REFERENCE
    label: str = ""

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if not bits:
            raise EmptyTranscript(f"boundary vector {self.label or self.doc_id!r} has no positions")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("boundary bits must be 0 or 1")
        if self.origin not in _ORIGINS:
            raise ValueError(f"origin must be one of {_ORIGINS}, got {self.origin!r}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def boundary_count(self) -> int:
        return sum(self.bits)

    @property
    def positions(self) -> tuple[int, ...]:
        """0-based positions of the marked boundaries, in increasing order."""
        return tuple(j for j, b in enumerate(self.bits) if b)

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int], doc_id: str = "",
                       origin: str = REFERENCE, label: str = "") -> "BoundaryVector":
        bits = [0] * n
        for p in positions:
            if not 0 <= p < n:
                raise ValueError(f"boundary position {p} outside 0..{n - 1}")
            bits[p] = 1
        return cls(doc_id, tuple(bits), origin, label)


@dataclass(frozen=True)
class ReferenceSet:
    """Two or more aligned reference segmentations of one document."""

    doc_id: str
    references: tuple[BoundaryVector, ...]

    def __post_init__(self):
        refs = tuple(self.references)
        object.__setattr__(self, "references", refs)
        if len(refs) < 2:
            raise MissingReferences(
                f"document {self.doc_id!r} has {len(refs)} reference(s), need at least 2"
            )
        first = refs[0]
        for ref in refs:
            if ref.origin != REFERENCE:
                raise ValueError(f"{ref.label!r} is not a reference segmentation")
            if ref.doc_id != self.doc_id:
                raise AlignmentError(
                    f"reference {ref.label!r} belongs to {ref.doc_id!r}, not {self.doc_id!r}"
                )
            if ref.n != first.n:
                raise AlignmentError(
                    f"reference {ref.label!r} has {ref.n} positions, expected {first.n}",
                    position=min(ref.n, first.n),
                )

    @property
    def m(self) -> int:
        return len(self.references)

    @property
    def n(self) -> int:
        return self.references[0].n


def _scan(raw_text: str) -> tuple[list[str], list[int]]:
    """Single pass over raw text: lowercase tokens plus boundary bits."""
    tokens: list[str] = []
    bits: list[int] = []
    buf: list[str] = []

    def flush():
        if buf:
            tokens.append("".join(buf))
            bits.append(0)
            buf.clear()

    for ch in raw_text:
        if ch.isspace():
            flush()
        elif ch in SU_DELIMITERS:
            flush()
            # A delimiter with no token before it (or after another
            # delimiter) marks nothing new.
            if bits:
                bits[-1] = 1
        elif ch in INTERNAL_MARKS:
            continue
        else:
            buf.append(ch.lower())
    flush()
    return tokens, bits


def normalize_and_tokenize(raw_text: str, doc_id: str = "") -> Transcript:
    """Lowercase, split on whitespace, and drop all segmentation punctuation."""
    tokens, _ = _scan(raw_text)
    if not tokens:
        raise EmptyTranscript(f"document {doc_id!r} normalized to zero tokens")
    return Transcript(doc_id, tuple(tokens))


def parse_segmented_text(raw_text: str, doc_id: str = "", label: str = "",
                         origin: str = REFERENCE) -> tuple[Transcript, BoundaryVector]:
    """Split punctuated text into its transcript and boundary vector.

    A unit-final mark (. ? ! ;) closes the unit after the preceding
    token; runs of delimiters collapse into a single boundary.  Commas
    and colons are removed without effect.
    """
    tokens, bits = _scan(raw_text)
    if not tokens:
        raise EmptyTranscript(f"document {doc_id!r} normalized to zero tokens")
    transcript = Transcript(doc_id, tuple(tokens))
    vector = BoundaryVector(doc_id, tuple(bits), origin, label)
    return transcript, vector


def to_segmented_text(transcript: Transcript, vector: BoundaryVector,
                      delimiter: str = ".") -> str:
    """Inverse of parse_segmented_text up to whitespace and case."""
    if delimiter not in SU_DELIMITERS:
        raise ValueError(f"{delimiter!r} does not close a unit")
    if vector.n != transcript.n:
        raise AlignmentError(
            f"vector has {vector.n} positions, transcript {transcript.n}",
            position=min(vector.n, transcript.n),
        )
    parts = [tok + delimiter if b else tok for tok, b in zip(transcript.tokens, vector.bits)]
    return " ".join(parts)


def align(transcripts: Sequence[Transcript]) -> Transcript:
    """Check that all transcripts carry the same tokens; return the first.

    Segmentations are only comparable position by position, so any
    token mismatch is a hard error, never repaired silently.
    """
    if not transcripts:
        raise ValueError("nothing to align")
    first = transcripts[0]
    for other in transcripts[1:]:
        if other.tokens == first.tokens:
            continue
        limit = min(first.n, other.n)
        for j in range(limit):
            if first.tokens[j] != other.tokens[j]:
                raise AlignmentError(
                    f"token mismatch at position {j}: "
                    f"{first.tokens[j]!r} != {other.tokens[j]!r}",
                    position=j, left=first.tokens[j], right=other.tokens[j],
                )
        # Same prefix, different length.
        raise AlignmentError(
            f"length mismatch: {first.n} vs {other.n} tokens",
            position=limit,
            left=first.tokens[limit] if first.n > limit else None,
            right=other.tokens[limit] if other.n > limit else None,
        )
    return first
