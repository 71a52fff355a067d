"""Token/subword alignment and mean pooling.

``segment`` turns pre-tokenized words into one subword id sequence (with
sentence delimiters) plus an alignment map; ``pool_subwords`` collapses
per-subword vectors back to one vector per token by arithmetic mean.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import Error, SpanOutOfRange


@dataclass(frozen=True)
class AlignmentMap:
    """Per token, a contiguous [start, end) span over subword positions.

    Spans cover every non-special position exactly once, in order; special
    positions (sentence delimiters) belong to no span.
    """

    spans: tuple[tuple[int, int], ...]
    n_positions: int
    special_positions: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "spans", tuple(tuple(s) for s in self.spans))
        object.__setattr__(self, "special_positions", frozenset(self.special_positions))
        covered = []
        for start, end in self.spans:
            if end <= start:
                raise Error(f"empty span [{start}, {end}): every token needs >= 1 subword")
            if start < 0 or end > self.n_positions:
                raise SpanOutOfRange(f"span [{start}, {end}) outside 0..{self.n_positions}")
            covered.extend(range(start, end))
        expected = [i for i in range(self.n_positions) if i not in self.special_positions]
        if covered != expected:
            raise Error("spans must cover all non-special positions exactly once, in order")

    def __len__(self):
        return len(self.spans)


def segment(tokens: list[str], backbone) -> tuple[list[int], AlignmentMap]:
    """Encode tokens into subword ids wrapped in delimiters.

    A token the backbone cannot encode gets the unknown-piece id; tokens are
    never dropped.
    """
    if not tokens:
        raise Error("cannot segment an empty token list")
    bos, eos, unk = backbone.special_ids()
    ids = [bos]
    spans = []
    for i, token in enumerate(tokens):
        pieces = backbone.encode_pieces(token, first=(i == 0))
        if not pieces:
            pieces = [unk]
        spans.append((len(ids), len(ids) + len(pieces)))
        ids.extend(pieces)
    ids.append(eos)
    alignment = AlignmentMap(tuple(spans), len(ids),
                             frozenset({0, len(ids) - 1}))
    return ids, alignment


def pool_subwords(subword_vectors, alignment: AlignmentMap) -> np.ndarray:
    """Mean-pool subword vectors into token vectors.

    Accumulates each span left to right (then divides), so results are
    bit-identical to a naive summation loop over the same dtype.
    """
    vectors = np.asarray(subword_vectors)
    if vectors.ndim != 2:
        raise Error(f"expected a (n_subwords, width) array, got shape {vectors.shape}")
    if vectors.shape[0] < alignment.n_positions:
        raise SpanOutOfRange(
            f"{vectors.shape[0]} vectors for {alignment.n_positions} positions")
    width = vectors.shape[1]
    out = np.empty((len(alignment), width), dtype=vectors.dtype)
    for t, (start, end) in enumerate(alignment.spans):
        acc = np.zeros(width, dtype=vectors.dtype)
        for row in range(start, end):
            acc += vectors[row]
        out[t] = acc / (end - start)
    return out
