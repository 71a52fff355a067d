"""Rule-based manner/result classification.

Four diagnostics, applied in a fixed priority order:

* D4 scalar class (lexicon): two-point or gradable change -> result,
  non-scalar -> manner.  Root knowledge, so it outranks clause cues.
* D2 causative/inchoative alternation (lexicon): attested -> result.
* D1 object omission (sentence): no object after the verb in its clause,
  with a subject present -> one manner vote.
* D3 telicity adjunct (sentence): "in <duration>" -> one result vote,
  "for <duration>" -> one manner vote.

D1/D3 votes are combined only when the lexicon is silent; ties stay unknown.
Used as a baseline classifier and as a consistency checker for annotated
corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .corpus import Corpus, TaggedSentence, TaggedToken, tokenize
from .errors import Error, NotAVerb
from .lemmas import lemma_candidates

SCALAR_CLASSES = ("two_point", "gradable", "nonscalar", "unknown")
ALTERNATION = ("yes", "no", "unknown")

# Nouns that head duration adjuncts, not objects ("wept all day").
_DURATION_NOUNS = frozenset("""
day days hour hours minute minutes second seconds week weeks month months
year years morning afternoon evening night nights moment moments while time
times decade decades century winter summer spring fall
""".split())

_NOMINAL_TAGS = ("NOUN", "PROPN", "PRON")
_CLAUSE_BOUNDARY_TAGS = ("PUNCT", "SCONJ", "CCONJ")
_VERB_TAGS = ("VERB", "result", "manner")


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    scalar_class: str = "unknown"
    alternates_causative_inchoative: str = "unknown"
    provenance: str = ""

    @property
    def result_votes(self) -> int:
        votes = 0
        if self.scalar_class in ("two_point", "gradable"):
            votes += 1
        if self.alternates_causative_inchoative == "yes":
            votes += 1
        return votes

    @property
    def manner_votes(self) -> int:
        return 1 if self.scalar_class == "nonscalar" else 0


class DiagnosticLexicon:
    """Verb-root knowledge: scalar class and alternation behavior per lemma."""

    def __init__(self, entries: "dict[str, LexiconEntry] | None" = None):
        self.entries = dict(entries or {})

    def __contains__(self, lemma):
        return lemma in self.entries

    def __len__(self):
        return len(self.entries)

    def get(self, lemma) -> "LexiconEntry | None":
        return self.entries.get(lemma)

    def lookup_surface(self, surface: str) -> "LexiconEntry | None":
        """Resolve an inflected surface against the lexicon."""
        for cand in lemma_candidates(surface):
            if cand in self.entries:
                return self.entries[cand]
        return None

    def add(self, entry: LexiconEntry):
        self.entries[entry.lemma] = entry

    @classmethod
    def from_table(cls, text: str) -> "DiagnosticLexicon":
        """Parse the tab-separated lexicon table (header row required)."""
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        header = lines[0].split("\t")
        if header[:4] != ["lemma", "scalar_class", "alternation", "provenance"]:
            raise Error(f"unexpected lexicon header: {header}")
        entries = {}
        for ln in lines[1:]:
            cols = ln.split("\t")
            if len(cols) != 4:
                raise Error(f"lexicon row needs 4 columns: {ln!r}")
            lemma, scalar, alt, prov = cols
            if scalar not in SCALAR_CLASSES:
                raise Error(f"bad scalar_class {scalar!r} for {lemma!r}")
            if alt not in ALTERNATION:
                raise Error(f"bad alternation {alt!r} for {lemma!r}")
            entries[lemma] = LexiconEntry(lemma, scalar, alt, prov)
        return cls(entries)

    @classmethod
    def bundled(cls) -> "DiagnosticLexicon":
        text = resources.files("mrtagger.data").joinpath("lexicon.tsv").read_text("utf-8")
        return cls.from_table(text)


@dataclass
class DiagnosticTrace:
    lemma: str
    verdicts: dict = field(default_factory=dict)  # "D1".."D4" -> (vote, evidence)
    final_label: str = "unknown"                  # manner | result | unknown
    confidence: str = "default"                   # lexicon | syntactic | default


def _find_verb_position(sentence: TaggedSentence, token: TaggedToken) -> int:
    for i, t in enumerate(sentence.tokens):
        if t is token or (t.index == token.index and t.surface == token.surface):
            return i
    raise Error(f"token {token.surface!r} not found in sentence {sentence.sentence_id!r}")


def _has_subject(sentence, verb_pos) -> bool:
    return any(t.tag in _NOMINAL_TAGS for t in sentence.tokens[:verb_pos])


def _object_after(sentence, verb_pos) -> "str | None":
    """Nearest nominal after the verb before a clause boundary, skipping
    duration adjuncts.  Shallow on purpose; no parsing here."""
    for t in sentence.tokens[verb_pos + 1:]:
        if t.tag in _CLAUSE_BOUNDARY_TAGS:
            return None
        if t.tag in _NOMINAL_TAGS:
            if t.surface.lower() in _DURATION_NOUNS:
                continue
            return t.surface
    return None


def _duration_adjunct(sentence, verb_pos) -> "str | None":
    """Returns 'in' or 'for' when the verb carries an in/for duration
    adjunct after it, else None."""
    toks = sentence.tokens
    for i in range(verb_pos + 1, len(toks)):
        w = toks[i].surface.lower()
        if w in ("in", "for"):
            for j in range(i + 1, min(i + 4, len(toks))):
                nxt = toks[j]
                if nxt.surface.lower() in _DURATION_NOUNS:
                    return w
                if nxt.tag not in ("NUM", "DET", "ADJ"):
                    break
    return None


def diagnose(verb_token: TaggedToken, sentence: TaggedSentence,
             lexicon: DiagnosticLexicon) -> DiagnosticTrace:
    """Classify one verb occurrence, recording which diagnostics fired."""
    if verb_token.tag not in _VERB_TAGS:
        raise NotAVerb(f"{verb_token.surface!r} is tagged {verb_token.tag}, not a verb")

    entry = lexicon.lookup_surface(verb_token.surface)
    lemma = entry.lemma if entry else lemma_candidates(verb_token.surface)[0]
    trace = DiagnosticTrace(lemma=lemma)

    if entry is not None and entry.scalar_class != "unknown":
        if entry.scalar_class in ("two_point", "gradable"):
            trace.verdicts["D4"] = ("result", f"scalar_class={entry.scalar_class}")
            trace.final_label = "result"
        else:
            trace.verdicts["D4"] = ("manner", "scalar_class=nonscalar")
            trace.final_label = "manner"
        trace.confidence = "lexicon"
        return trace

    if entry is not None and entry.alternates_causative_inchoative == "yes":
        trace.verdicts["D2"] = ("result", "causative/inchoative alternation attested")
        trace.final_label = "result"
        trace.confidence = "lexicon"
        return trace

    verb_pos = _find_verb_position(sentence, verb_token)
    manner_votes = 0
    result_votes = 0

    obj = _object_after(sentence, verb_pos)
    if obj is None and _has_subject(sentence, verb_pos):
        trace.verdicts["D1"] = ("manner", "no object in clause, subject present")
        manner_votes += 1
    elif obj is not None:
        trace.verdicts["D1"] = (None, f"object {obj!r} present")

    adjunct = _duration_adjunct(sentence, verb_pos)
    if adjunct == "in":
        trace.verdicts["D3"] = ("result", "'in <duration>' adjunct (telic)")
        result_votes += 1
    elif adjunct == "for":
        trace.verdicts["D3"] = ("manner", "'for <duration>' adjunct (atelic)")
        manner_votes += 1

    if manner_votes > result_votes:
        trace.final_label = "manner"
        trace.confidence = "syntactic"
    elif result_votes > manner_votes:
        trace.final_label = "result"
        trace.confidence = "syntactic"
    else:
        trace.final_label = "unknown"
        trace.confidence = "default"
    return trace


def denial_test_sentence(verb: str, sentence: str, negated_outcome: str) -> str:
    """Build the denial-of-result probe for human inspection.

    No truth judgment is computed; a contradiction on reading indicates the
    verb encodes a result.
    """
    if not verb or not sentence or not negated_outcome:
        raise ValueError("verb, sentence and negated_outcome must be non-empty")
    trimmed = sentence.rstrip()
    if trimmed.endswith("."):
        trimmed = trimmed[:-1]
    return f"{trimmed}, but {negated_outcome}."


@dataclass(frozen=True)
class ConsistencyFlag:
    sentence_id: str
    token_index: int
    surface: str
    corpus_label: str
    lexicon_label: str
    margin: int


def consistency_check(corpus: Corpus, lexicon: DiagnosticLexicon) -> list[ConsistencyFlag]:
    """Flag result/manner tokens whose label contradicts the lexicon by a
    vote margin of at least one.  Sorted by (sentence_id, token_index)."""
    flags = []
    for sent in corpus.sentences:
        for tok in sent.tokens:
            if tok.tag not in ("result", "manner"):
                continue
            entry = lexicon.lookup_surface(tok.surface)
            if entry is None:
                continue
            margin = entry.result_votes - entry.manner_votes
            if margin >= 1 and tok.tag == "manner":
                flags.append(ConsistencyFlag(sent.sentence_id, tok.index, tok.surface,
                                             "manner", "result", margin))
            elif margin <= -1 and tok.tag == "result":
                flags.append(ConsistencyFlag(sent.sentence_id, tok.index, tok.surface,
                                             "result", "manner", -margin))
    flags.sort(key=lambda f: (f.sentence_id, f.token_index))
    return flags
