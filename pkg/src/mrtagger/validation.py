"""Input validation helpers shared by the estimator-style interfaces."""

from __future__ import annotations

from .corpus import Corpus, TaggedSentence, sentence_from_pairs, tokenize
from .errors import Error
from .labels import is_valid_label


def as_token_lists(X) -> list[list[str]]:
    """Normalize predict-side input: raw strings are tokenized, token lists
    are validated (non-empty, all strings)."""
    if isinstance(X, str):
        raise Error("X must be a sequence of sentences, not a single string")
    out = []
    for i, item in enumerate(X):
        if isinstance(item, str):
            tokens = tokenize(item)
        elif isinstance(item, TaggedSentence):
            tokens = item.surfaces()
        else:
            tokens = list(item)
        if not tokens:
            raise Error(f"sentence {i} is empty")
        if not all(isinstance(t, str) and t for t in tokens):
            raise Error(f"sentence {i} must contain non-empty strings")
        out.append(tokens)
    return out


def as_corpus(X, y=None, split: str = "train") -> Corpus:
    """Normalize fit-side input into a labeled Corpus.

    Accepts a Corpus, a sequence of TaggedSentence, or parallel sequences of
    token lists and tag lists.
    """
    if isinstance(X, Corpus):
        return X
    items = list(X)
    if items and all(isinstance(s, TaggedSentence) for s in items):
        return Corpus(tuple(items), split)
    if y is None:
        raise Error("y (tag sequences) is required unless X is already tagged")
    ys = list(y)
    if len(items) != len(ys):
        raise Error(f"X has {len(items)} sentences but y has {len(ys)}")
    sentences = []
    for i, (tokens, tags) in enumerate(zip(items, ys)):
        tokens = list(tokens)
        tags = list(tags)
        if len(tokens) != len(tags):
            raise Error(f"sentence {i}: {len(tokens)} tokens vs {len(tags)} tags")
        for tag in tags:
            if not is_valid_label(tag):
                raise Error(f"sentence {i}: unknown tag {tag!r}")
        sentences.append(sentence_from_pairs(zip(tokens, tags), f"s{i + 1}"))
    return Corpus(tuple(sentences), split)
