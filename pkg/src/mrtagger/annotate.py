"""Training-data generation: prompt construction, external annotation,
response parsing, and label merging.

Flow: raw sentences are POS pre-tagged, batched into prompts built from one
of two rule templates (``semantic`` or ``syntactic``), sent to an external
LLM annotator, and the returned verb judgments are merged into the tagged
sentences, relabeling non-stative lexical verbs as result/manner.  Every
(sentence, variant, model) key is cached append-only so reruns make no
external calls.
"""

from __future__ import annotations

import json
import logging
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from threading import Lock

from .corpus import Corpus, TaggedSentence
from .errors import (
    AnnotatorUnavailable,
    BatchTooLarge,
    Error,
    IndexMismatch,
    SchemaViolation,
    UnparseableResponse,
)
from .postag import pretag

log = logging.getLogger(__name__)

VARIANT_IDS = ("semantic", "syntactic")
DEFAULT_BATCH_SIZE = 10
MAX_BATCH_SIZE = 50


@dataclass(frozen=True)
class PromptVariant:
    id: str
    template_text: str

    def __post_init__(self):
        if self.id not in VARIANT_IDS:
            raise ValueError(f"variant id must be one of {VARIANT_IDS}")


def load_variant(variant_id: str) -> PromptVariant:
    """Load one of the two bundled rule templates."""
    if variant_id not in VARIANT_IDS:
        raise ValueError(f"variant id must be one of {VARIANT_IDS}")
    text = resources.files("mrtagger.data.prompts").joinpath(
        f"{variant_id}.txt").read_text("utf-8")
    return PromptVariant(variant_id, text)


@dataclass(frozen=True)
class VerbJudgment:
    sentence_id: str
    token_index: int
    surface: str
    label: str                       # result | manner
    raw_justification: "str | None" = None

    def __post_init__(self):
        if self.label not in ("result", "manner"):
            raise ValueError(f"judgment label must be result/manner, got {self.label!r}")


@dataclass(frozen=True)
class DroppedJudgment:
    """Audit record for a judgment discarded during parsing."""
    sentence_id: str
    token_index: int
    surface: str
    label: str
    reason: str


class LLMClient:
    """Interface for external annotators.

    Implementations provide ``model_id`` and ``complete(prompt) -> str``.
    Decoding should be deterministic (temperature 0) so annotation runs are
    reproducible.
    """

    model_id: str = "unconfigured"

    def complete(self, prompt: str) -> str:
        raise NotImplementedError


class StubLLMClient(LLMClient):
    """Deterministic test client: a fixed prompt -> response table.

    Records every prompt it is asked to complete, so tests can assert that
    cached keys trigger no calls.
    """

    def __init__(self, responses: dict[str, str], model_id: str = "stub"):
        self.responses = dict(responses)
        self.model_id = model_id
        self.calls: list[str] = []

    def complete(self, prompt: str) -> str:
        self.calls.append(prompt)
        try:
            return self.responses[prompt]
        except KeyError:
            raise AnnotatorUnavailable(
                "stub has no response for this prompt") from None


class OpenAICompatClient(LLMClient):
    """Minimal chat-completions client for OpenAI-compatible endpoints.

    Credentials come from the environment (``MRTAGGER_API_KEY`` by default);
    decoding is fully deterministic unless a temperature is supplied.
    """

    def __init__(self, model_id: str, base_url: str = "https://api.openai.com/v1",
                 api_key_env: str = "MRTAGGER_API_KEY", temperature: float = 0.0,
                 timeout: float = 60.0, max_retries: int = 2, backoff: float = 1.0,
                 transport=None):
        import os

        self.model_id = model_id
        self.base_url = base_url.rstrip("/")
        self.api_key = os.environ.get(api_key_env, "")
        self.temperature = temperature
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff = backoff
        self._transport = transport  # injectable for tests

    def complete(self, prompt: str) -> str:
        import httpx

        payload = {
            "model": self.model_id,
            "temperature": self.temperature,
            "messages": [{"role": "user", "content": prompt}],
        }
        headers = {"Authorization": f"Bearer {self.api_key}"}
        last_error = None
        for attempt in range(self.max_retries + 1):
            try:
                with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
                    response = client.post(f"{self.base_url}/chat/completions",
                                           json=payload, headers=headers)
                response.raise_for_status()
                return response.json()["choices"][0]["message"]["content"]
            except Exception as exc:  # transport-level; retried with backoff
                last_error = exc
                if attempt < self.max_retries:
                    time.sleep(self.backoff * (attempt + 1))
        raise AnnotatorUnavailable(f"annotator failed after "
                                   f"{self.max_retries + 1} attempts: {last_error}")


@dataclass
class CacheEntry:
    sentence_id: str
    variant_id: str
    model_id: str
    raw: str
    judgments: list[VerbJudgment]
    timestamp: float

    def key(self) -> tuple:
        return (self.sentence_id, self.variant_id, self.model_id)

    def to_record(self) -> dict:
        return {
            "sentence_id": self.sentence_id,
            "variant_id": self.variant_id,
            "model_id": self.model_id,
            "raw": self.raw,
            "judgments": [
                {"sentence_id": j.sentence_id, "token_index": j.token_index,
                 "surface": j.surface, "label": j.label,
                 "justification": j.raw_justification}
                for j in self.judgments
            ],
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "CacheEntry":
        judgments = [
            VerbJudgment(j["sentence_id"], j["token_index"], j["surface"],
                         j["label"], j.get("justification"))
            for j in rec["judgments"]
        ]
        return cls(rec["sentence_id"], rec["variant_id"], rec["model_id"],
                   rec["raw"], judgments, rec["timestamp"])


class AnnotationCache:
    """Append-only annotation store keyed by (sentence_id, variant, model).

    With a path, every put appends one self-describing JSON record to the
    file; loading replays the file (last record per key wins).
    """

    def __init__(self, path=None):
        self.path = path
        self.entries: dict[tuple, CacheEntry] = {}
        self._lock = Lock()
        if path is not None:
            try:
                with open(path, encoding="utf-8") as fh:
                    for line in fh:
                        if line.strip():
                            entry = CacheEntry.from_record(json.loads(line))
                            self.entries[entry.key()] = entry
            except FileNotFoundError:
                pass

    def get(self, sentence_id, variant_id, model_id) -> "CacheEntry | None":
        return self.entries.get((sentence_id, variant_id, model_id))

    def put(self, entry: CacheEntry):
        with self._lock:
            self.entries[entry.key()] = entry
            if self.path is not None:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(entry.to_record(), ensure_ascii=False) + "\n")

    def __len__(self):
        return len(self.entries)


_OUTPUT_INSTRUCTION = """\
Answer with a JSON array only, inside a ```json code fence. Emit one record
per labeled verb, in this exact shape:

```json
[{"sentence_id": "<id>", "token_index": <number>, "surface": "<verb token>",
  "label": "manner"}]
```

"label" must be "manner" or "result". "token_index" is the number shown
before the token. Include every non-stative lexical verb of every sentence;
do not include auxiliaries, modals, or stative verbs. Output nothing besides
the fenced JSON array.
"""


def build_prompt(variant: PromptVariant, sentences: list[TaggedSentence],
                 max_batch_size: int = MAX_BATCH_SIZE) -> str:
    """Assemble one annotation prompt: rule text, then the batch of
    sentences with ids and numbered tokens, then the output contract."""
    if not sentences:
        raise BatchTooLarge("prompt batch is empty")
    if len(sentences) > max_batch_size:
        raise BatchTooLarge(f"{len(sentences)} sentences exceeds the "
                            f"maximum batch of {max_batch_size}")
    parts = [variant.template_text.rstrip(), "", "Sentences to annotate:", ""]
    for sent in sentences:
        numbered = " ".join(f"{t.index}:{t.surface}" for t in sent.tokens)
        parts.append(f"[{sent.sentence_id}] {numbered}")
    parts.extend(["", _OUTPUT_INSTRUCTION])
    return "\n".join(parts)


_FENCE_RE = re.compile(r"```(?:json)?\s*(\[.*?\])\s*```", re.DOTALL)
_REQUIRED_FIELDS = ("sentence_id", "token_index", "surface", "label")


def _extract_records(raw: str) -> list[dict]:
    match = _FENCE_RE.search(raw)
    candidate = match.group(1) if match else None
    if candidate is None:
        # tolerate a bare array with no fence
        start, end = raw.find("["), raw.rfind("]")
        if start != -1 and end > start:
            candidate = raw[start:end + 1]
    if candidate is None:
        raise UnparseableResponse("no JSON array found in annotator reply", raw)
    try:
        records = json.loads(candidate)
    except json.JSONDecodeError as exc:
        raise UnparseableResponse(f"judgment block is not valid JSON: {exc}", raw)
    if not isinstance(records, list):
        raise UnparseableResponse("judgment block is not a JSON array", raw)
    return records


def parse_llm_response(raw: str, batch: list[TaggedSentence],
                       dropped: "list[DroppedJudgment] | None" = None
                       ) -> list[VerbJudgment]:
    """Validate an annotator reply against its batch.

    Structural problems raise UnparseableResponse/SchemaViolation with the
    raw text preserved for audit.  Judgments addressing tokens that are not
    pre-tagged VERB (or whose surface disagrees) are dropped, with a record
    appended to ``dropped`` and a log warning - the annotator mislabeling an
    auxiliary must not fail the batch.  Output is sorted by
    (sentence_id, token_index).
    """
    by_id = {s.sentence_id: s for s in batch}
    records = _extract_records(raw)
    judgments = []
    for rec in records:
        if not isinstance(rec, dict):
            raise SchemaViolation(f"judgment record is not an object: {rec!r}", raw)
        missing = [f for f in _REQUIRED_FIELDS if f not in rec]
        if missing:
            raise SchemaViolation(f"judgment record missing fields {missing}: {rec!r}", raw)
        sid, idx, surface, label = (rec["sentence_id"], rec["token_index"],
                                    rec["surface"], rec["label"])
        if sid not in by_id:
            raise SchemaViolation(f"unknown sentence_id {sid!r}", raw)
        if not isinstance(idx, int) or isinstance(idx, bool):
            raise SchemaViolation(f"token_index must be an integer: {rec!r}", raw)
        sentence = by_id[sid]
        if not 0 <= idx < len(sentence.tokens):
            raise SchemaViolation(
                f"token_index {idx} out of range for sentence {sid!r}", raw)
        if label not in ("result", "manner"):
            raise SchemaViolation(f"label must be result/manner: {rec!r}", raw)
        token = sentence.tokens[idx]
        if token.tag != "VERB":
            record = DroppedJudgment(sid, idx, str(surface), label,
                                     f"token {token.surface!r} is tagged {token.tag}")
            if dropped is not None:
                dropped.append(record)
            log.warning("dropping judgment: %s", record)
            continue
        if str(surface).lower() != token.surface.lower():
            record = DroppedJudgment(sid, idx, str(surface), label,
                                     f"surface mismatch against {token.surface!r}")
            if dropped is not None:
                dropped.append(record)
            log.warning("dropping judgment: %s", record)
            continue
        judgments.append(VerbJudgment(sid, idx, token.surface, label,
                                      rec.get("justification")))
    judgments.sort(key=lambda j: (j.sentence_id, j.token_index))
    return judgments


def merge_labels(sentence: TaggedSentence,
                 judgments: list[VerbJudgment]) -> TaggedSentence:
    """Apply verb judgments to one sentence.

    Only the addressed tokens change; everything else is carried over
    bit-identically.  Idempotent: re-applying the same judgments is a
    no-op (an already-relabeled token may be re-addressed).
    """
    tags = list(sentence.tags())
    for j in judgments:
        if j.sentence_id != sentence.sentence_id:
            raise IndexMismatch(
                f"judgment for {j.sentence_id!r} applied to {sentence.sentence_id!r}")
        if not 0 <= j.token_index < len(sentence.tokens):
            raise IndexMismatch(f"token_index {j.token_index} out of range")
        token = sentence.tokens[j.token_index]
        if token.tag not in ("VERB", "result", "manner"):
            raise IndexMismatch(
                f"token {token.surface!r} at {j.token_index} is tagged "
                f"{token.tag}, refusing to relabel")
        if token.surface.lower() != j.surface.lower():
            raise IndexMismatch(
                f"judgment surface {j.surface!r} does not match token "
                f"{token.surface!r} at {j.token_index}")
        tags[j.token_index] = j.label
    return sentence.with_tags(tags)


@dataclass
class AnnotationStats:
    result_count: int = 0
    manner_count: int = 0
    other_count: int = 0
    dropped_judgments: list = field(default_factory=list)
    failed_sentences: list = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "result": self.result_count,
            "manner": self.manner_count,
            "other": self.other_count,
            "dropped_judgments": len(self.dropped_judgments),
            "failed_sentences": len(self.failed_sentences),
        }


def _chunk(items, size):
    for i in range(0, len(items), size):
        yield items[i:i + size]


def annotate_corpus(raw_sentences, client: "LLMClient | None",
                    variant: PromptVariant, cache: AnnotationCache,
                    pos_tagger=None, batch_size: int = DEFAULT_BATCH_SIZE,
                    max_retries: int = 2, backoff: float = 1.0,
                    max_concurrency: int = 1, model_id: "str | None" = None,
                    source: str = "user") -> tuple[Corpus, AnnotationStats]:
    """Run the full data-generation pipeline over raw sentences.

    ``raw_sentences`` is a list of strings or (sentence_id, text) pairs.
    With ``client=None`` every key must already be cached (pass ``model_id``
    for the lookup); uncached sentences are reported as failed.  Failed
    sentences are excluded from the output corpus, never retained with
    partial tags.  Deterministic for a deterministic client and fixed input
    order.
    """
    if client is None and model_id is None:
        raise ValueError("model_id is required when no client is given")
    model = model_id if model_id is not None else client.model_id

    stats = AnnotationStats()
    pretagged: list[TaggedSentence] = []
    for i, item in enumerate(raw_sentences):
        sid, text = item if isinstance(item, tuple) else (f"s{i + 1}", item)
        try:
            pretagged.append(pretag(text, pos_tagger, sentence_id=sid, source=source))
        except Error as exc:
            stats.failed_sentences.append(sid)
            log.warning("pre-tagging failed for %s: %s", sid, exc)

    todo = [s for s in pretagged
            if cache.get(s.sentence_id, variant.id, model) is None]
    batches = list(_chunk(todo, batch_size))

    def annotate_batch(batch):
        """Call the annotator for one batch; returns failed sentence ids."""
        if client is None:
            return [s.sentence_id for s in batch]
        prompt = build_prompt(variant, batch)
        last_error = None
        for attempt in range(max_retries + 1):
            try:
                raw = client.complete(prompt)
                break
            except Error as exc:
                last_error = exc
                if attempt < max_retries and backoff:
                    time.sleep(backoff * (attempt + 1))
        else:
            log.warning("annotator unavailable for batch %s: %s",
                        [s.sentence_id for s in batch], last_error)
            return [s.sentence_id for s in batch]
        try:
            judgments = parse_llm_response(raw, batch, dropped=stats.dropped_judgments)
        except Error as exc:
            log.warning("unusable annotator reply for batch %s: %s",
                        [s.sentence_id for s in batch], exc)
            return [s.sentence_id for s in batch]
        now = time.time()
        by_sid = {}
        for j in judgments:
            by_sid.setdefault(j.sentence_id, []).append(j)
        for sent in batch:
            cache.put(CacheEntry(sent.sentence_id, variant.id, model, raw,
                                 by_sid.get(sent.sentence_id, []), now))
        return []

    if max_concurrency > 1 and len(batches) > 1:
        with ThreadPoolExecutor(max_workers=max_concurrency) as pool:
            failed_lists = list(pool.map(annotate_batch, batches))
    else:
        failed_lists = [annotate_batch(b) for b in batches]
    for failed in failed_lists:
        stats.failed_sentences.extend(failed)

    failed_set = set(stats.failed_sentences)
    merged = []
    for sent in pretagged:  # deterministic input order, always
        if sent.sentence_id in failed_set:
            continue
        entry = cache.get(sent.sentence_id, variant.id, model)
        if entry is None:
            stats.failed_sentences.append(sent.sentence_id)
            continue
        try:
            merged.append(merge_labels(sent, entry.judgments))
        except Error as exc:
            stats.failed_sentences.append(sent.sentence_id)
            log.warning("stale cached judgments for %s: %s", sent.sentence_id, exc)

    corpus = Corpus(tuple(merged), "train" if merged else "unlabeled")
    for sent in corpus.sentences:
        for tok in sent.tokens:
            if tok.tag == "result":
                stats.result_count += 1
            elif tok.tag == "manner":
                stats.manner_count += 1
            else:
                stats.other_count += 1
    return corpus, stats


def judgment_disagreements(a: list[VerbJudgment], b: list[VerbJudgment]) -> list[dict]:
    """Diff two judgment sets (e.g. the two prompt variants) by token.

    Returns one record per (sentence_id, token_index) where the labels
    differ or only one side labeled the token.
    """
    am = {(j.sentence_id, j.token_index): j for j in a}
    bm = {(j.sentence_id, j.token_index): j for j in b}
    diffs = []
    for key in sorted(set(am) | set(bm)):
        ja, jb = am.get(key), bm.get(key)
        if ja is not None and jb is not None and ja.label == jb.label:
            continue
        diffs.append({
            "sentence_id": key[0],
            "token_index": key[1],
            "surface": (ja or jb).surface,
            "label_a": ja.label if ja else None,
            "label_b": jb.label if jb else None,
        })
    return diffs
