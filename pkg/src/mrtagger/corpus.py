"""Core data types for tagged sentences and corpora, plus their file format.

The on-disk format is one ``token<TAB>tag`` pair per line, sentences
separated by a single blank line, with a ``# id = <string>`` comment line
carrying the sentence id.  It is UTF-8 and bit-exact under
``serialize -> parse -> serialize``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyCorpus, MalformedLine, UnknownTag
from .labels import is_valid_label

SPLITS = ("train", "dev", "test", "unlabeled")

_TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Whitespace+punctuation word splitting used everywhere outside the
    subword layer (the tagger owns its own segmentation)."""
    return _TOKEN_RE.findall(text)


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str
    index: int

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")
        if not is_valid_label(self.tag):
            raise UnknownTag(f"not in the tag inventory: {self.tag!r}")
        if self.index < 0:
            raise ValueError("token index must be >= 0")


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[TaggedToken, ...]
    sentence_id: str
    source: str = "user"

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError(f"sentence {self.sentence_id!r} has no tokens")
        for i, tok in enumerate(self.tokens):
            if tok.index != i:
                raise ValueError(
                    f"sentence {self.sentence_id!r}: token indices must be "
                    f"contiguous from 0, found {tok.index} at position {i}"
                )

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def tags(self) -> list[str]:
        return [t.tag for t in self.tokens]

    def with_tags(self, tags: list[str]) -> "TaggedSentence":
        if len(tags) != len(self.tokens):
            raise ValueError("tag count must equal token count")
        new = tuple(
            TaggedToken(t.surface, tag, t.index)
            for t, tag in zip(self.tokens, tags)
        )
        return TaggedSentence(new, self.sentence_id, self.source)


def sentence_from_pairs(pairs, sentence_id, source="user") -> TaggedSentence:
    """Build a sentence from (surface, tag) pairs."""
    tokens = tuple(
        TaggedToken(surface, tag, i) for i, (surface, tag) in enumerate(pairs)
    )
    return TaggedSentence(tokens, sentence_id, source)


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[TaggedSentence, ...]
    split: str = "unlabeled"

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        if self.split not in SPLITS:
            raise ValueError(f"split must be one of {SPLITS}, got {self.split!r}")
        seen = set()
        for sent in self.sentences:
            if sent.sentence_id in seen:
                raise ValueError(f"duplicate sentence_id {sent.sentence_id!r}")
            seen.add(sent.sentence_id)

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def sentence_ids(self) -> set[str]:
        return {s.sentence_id for s in self.sentences}

    def total_tokens(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)


def parse_column_format(text: str, split: str = "unlabeled",
                        source: str = "user") -> Corpus:
    """Parse the column file format into a Corpus.

    ``# id = <string>`` lines set the following sentence's id; sentences
    without one get sequential ids ``s1``, ``s2``, ...  Raises
    MalformedLine / UnknownTag / EmptyCorpus.
    """
    sentences = []
    pending_id = None
    current: list[tuple[str, str]] = []

    def flush():
        nonlocal pending_id, current
        if current:
            sid = pending_id if pending_id is not None else f"s{len(sentences) + 1}"
            sentences.append(sentence_from_pairs(current, sid, source))
        pending_id = None
        current = []

    for line_no, line in enumerate(text.split("\n"), start=1):
        if line.startswith("# id ="):
            pending_id = line[len("# id ="):].strip()
            continue
        if line.startswith("#"):
            continue
        if line.strip() == "":
            flush()
            continue
        columns = line.split("\t")
        if len(columns) != 2 or not columns[0] or not columns[1]:
            raise MalformedLine(line_no, line)
        surface, tag = columns
        if not is_valid_label(tag):
            raise UnknownTag(f"line {line_no}: not in the tag inventory: {tag!r}")
        current.append((surface, tag))
    flush()

    if not sentences:
        raise EmptyCorpus("input contains no sentences")
    return Corpus(tuple(sentences), split)


def serialize_column_format(corpus: Corpus) -> str:
    """Inverse of :func:`parse_column_format` (up to the corpus split, which
    lives outside the file).  Exactly one blank line between sentences."""
    blocks = []
    for sent in corpus.sentences:
        lines = [f"# id = {sent.sentence_id}"]
        lines.extend(f"{t.surface}\t{t.tag}" for t in sent.tokens)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def label_histogram(corpus: Corpus) -> dict[str, int]:
    """Counts per tag over all tokens; values sum to the total token count."""
    counts: Counter[str] = Counter()
    for sent in corpus.sentences:
        for tok in sent.tokens:
            counts[tok.tag] += 1
    return dict(counts)


def concat(corpora: list[Corpus], split: str = "unlabeled") -> Corpus:
    sentences = []
    for c in corpora:
        sentences.extend(c.sentences)
    return Corpus(tuple(sentences), split)
