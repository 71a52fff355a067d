"""The closed 19-label tag inventory.

Seventeen Universal POS labels plus the two verb-semantics labels ``result``
and ``manner``.  Non-stative lexical verbs get relabeled as result/manner;
auxiliaries, modals and stative verbs keep AUX/VERB.
"""

from .errors import UnknownTag

UPOS_LABELS = (
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
)

RESULT = "result"
MANNER = "manner"

ALL_LABELS = UPOS_LABELS + (RESULT, MANNER)

LABEL_TO_INDEX = {label: i for i, label in enumerate(ALL_LABELS)}
INDEX_TO_LABEL = dict(enumerate(ALL_LABELS))

N_LABELS = len(ALL_LABELS)

assert N_LABELS == 19


def label_index(label: str) -> int:
    """Stable integer index of a label, 0..18."""
    try:
        return LABEL_TO_INDEX[label]
    except KeyError:
        raise UnknownTag(f"not in the tag inventory: {label!r}") from None


def index_label(index: int) -> str:
    """Inverse of :func:`label_index`."""
    try:
        return INDEX_TO_LABEL[index]
    except KeyError:
        raise UnknownTag(f"no label with index {index}") from None


def is_valid_label(label: str) -> bool:
    return label in LABEL_TO_INDEX


def require_label(label: str) -> str:
    if label not in LABEL_TO_INDEX:
        raise UnknownTag(f"not in the tag inventory: {label!r}")
    return label
