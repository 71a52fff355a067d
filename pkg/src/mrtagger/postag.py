"""POS pre-tagging: the step before the external annotator sees a sentence.

A POS tagger here is any callable ``list[str] -> list[str]`` returning one
of the 17 POS labels per token.  :class:`HeuristicPOSTagger` is the built-in
default: closed-class word lists plus morphology and a few context rules.
Swap in a stronger tagger (spaCy, a fine-tuned transformer, ...) by passing
any conforming callable to :func:`pretag`.
"""

from __future__ import annotations

import re

from . import wordlists as wl
from .corpus import TaggedSentence, sentence_from_pairs, tokenize
from .errors import EmptySentence, TaggerFailure
from .labels import UPOS_LABELS
from .lemmas import IRREGULAR_FORMS, lemma_candidates

_NUM_RE = re.compile(r"^\d+([.,:]\d+)*$")
_SYMBOLS = set("$%#&+=@€£§~^|<>*/\\")

_VERBISH_SUFFIX = re.compile(r"(ing|ed|en)$")


def _is_verbal(word: str) -> bool:
    return any(c in wl.VERB_BASES for c in lemma_candidates(word))


def _is_nominal(word: str) -> bool:
    if word in wl.NOUN_BASES:
        return True
    if word.endswith("s") and not word.endswith("ss"):
        if word[:-1] in wl.NOUN_BASES or word[:-2] in wl.NOUN_BASES:
            return True
        if word.endswith("ies") and word[:-3] + "y" in wl.NOUN_BASES:
            return True
    return False


class HeuristicPOSTagger:
    """Rule-based tagger over the 17 POS labels.

    Not a linguistic showpiece: it exists so the pipeline runs end to end
    without external models. Unknown words default to NOUN.
    """

    identifier = "heuristic-en-v1"

    def __call__(self, tokens: list[str]) -> list[str]:
        tags: list[str] = []
        for i, surface in enumerate(tokens):
            tags.append(self._tag_one(surface, i, tokens, tags))
        return tags

    def _next_word(self, tokens, i):
        return tokens[i + 1].lower() if i + 1 < len(tokens) else ""

    def _looks_verbal_ahead(self, tokens, i):
        # Is there a verb-ish word shortly after position i?
        for j in range(i + 1, min(i + 3, len(tokens))):
            w = tokens[j].lower()
            if w in wl.ADVERBS or w in wl.PARTICLES:
                continue
            return _is_verbal(w) or bool(_VERBISH_SUFFIX.search(w))
        return False

    def _tag_one(self, surface, i, tokens, tags):
        w = surface.lower()
        prev = tags[-1] if tags else ""

        if not any(ch.isalnum() for ch in surface):
            return "SYM" if surface in _SYMBOLS else "PUNCT"
        if _NUM_RE.match(surface) or w in wl.NUMBER_WORDS:
            return "NUM"

        if w == "no":
            nxt = self._next_word(tokens, i)
            return "INTJ" if nxt in {"", ",", ".", "!", "?"} else "DET"
        if w == "to":
            return "PART" if _is_verbal(self._next_word(tokens, i)) else "ADP"
        if w == "that":
            nxt = self._next_word(tokens, i)
            if _is_nominal(nxt) or nxt in wl.ADJECTIVES:
                return "DET"
            return "PRON" if i == 0 else "SCONJ"
        if w in wl.DETERMINERS:
            return "DET"
        if w in wl.ADPOSITIONS:
            return "ADP"
        if w in wl.AUX_ALWAYS:
            return "AUX"
        if w in wl.AUX_HAVE_DO or IRREGULAR_FORMS.get(w) in ("have", "do"):
            return "AUX" if self._looks_verbal_ahead(tokens, i) else "VERB"
        if w in wl.CCONJS:
            return "CCONJ"
        if w in wl.SCONJS:
            return "SCONJ"
        if w in wl.PRONOUNS:
            return "PRON"
        if w in wl.PARTICLES:
            return "PART"
        if w in wl.INTERJECTIONS:
            return "INTJ"
        if w in wl.ADVERBS:
            return "ADV"

        verbal = _is_verbal(w)
        nominal = _is_nominal(w)
        adjectival = w in wl.ADJECTIVES

        if surface[0].isupper():
            if w in wl.PROPER_NAMES:
                return "PROPN"
            if i > 0 and not (verbal or nominal or adjectival):
                return "PROPN"

        if adjectival and not verbal:
            return "ADJ"
        if verbal and not nominal:
            return "VERB"
        if nominal and not verbal:
            return "NOUN"
        if verbal and nominal:
            if prev in ("DET", "ADJ", "NUM", "ADP"):
                return "NOUN"
            if prev in ("PRON", "NOUN", "PROPN", "AUX", "PART"):
                return "VERB"
            if i == 0 and len(tokens) > 1:
                nxt = self._next_word(tokens, i)
                if nxt in wl.DETERMINERS or _is_nominal(nxt):
                    return "VERB"
            return "NOUN"

        # Unknown word: fall back on morphology, then NOUN.
        if w.endswith("ly") and len(w) > 3:
            return "ADV"
        if prev == "AUX" and _VERBISH_SUFFIX.search(w):
            return "VERB"
        if prev in ("NOUN", "PROPN", "PRON") and w.endswith("s") and not w.endswith("ss"):
            return "VERB"
        if w.endswith(("ness", "ment", "tion", "sion", "ity")):
            return "NOUN"
        if w.endswith(("ous", "ful", "ish", "able", "ible")):
            return "ADJ"
        return "NOUN"


_POS_ONLY = frozenset(UPOS_LABELS)


def pretag(raw_sentence: str, pos_tagger=None, sentence_id: str = "s1",
           source: str = "user") -> TaggedSentence:
    """Tokenize a raw sentence and tag it with the 17 POS labels.

    The result never contains result/manner labels; those come later from
    the annotator.  Raises EmptySentence / TaggerFailure.
    """
    tokens = tokenize(raw_sentence)
    if not tokens:
        raise EmptySentence(f"no tokens in {raw_sentence!r}")
    tagger = pos_tagger if pos_tagger is not None else HeuristicPOSTagger()
    tags = tagger(tokens)
    if not isinstance(tags, (list, tuple)) or len(tags) != len(tokens):
        raise TaggerFailure(
            f"tagger returned {len(tags) if isinstance(tags, (list, tuple)) else type(tags)} "
            f"tags for {len(tokens)} tokens"
        )
    bad = [t for t in tags if t not in _POS_ONLY]
    if bad:
        raise TaggerFailure(f"tagger emitted labels outside the POS inventory: {bad}")
    return sentence_from_pairs(zip(tokens, tags), sentence_id, source)
