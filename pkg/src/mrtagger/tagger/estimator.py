"""scikit-learn estimator facade over the tagger.

``MannerResultTagger`` exposes fit/predict/score plus get_params/set_params
so the model slots into sklearn pipelines and model selection.  The heavy
lifting stays in :mod:`mrtagger.tagger.training`.
"""

from __future__ import annotations

import hashlib

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ..corpus import Corpus
from ..labels import ALL_LABELS
from ..validation import as_corpus, as_token_lists
from .backbone import create_backbone
from .checkpoint import Checkpoint, tag
from .config import TrainingConfig
from .training import train


def hash_split(corpus: Corpus, dev_fraction: float) -> tuple[Corpus, Corpus]:
    """Deterministic train/dev split keyed on sentence-id hashes, so the
    same sentence always lands on the same side regardless of order."""
    train_sents, dev_sents = [], []
    for sent in corpus:
        digest = hashlib.md5(sent.sentence_id.encode("utf-8")).digest()
        fraction = int.from_bytes(digest[:4], "big") / 2 ** 32
        (dev_sents if fraction < dev_fraction else train_sents).append(sent)
    return Corpus(tuple(train_sents), "train"), Corpus(tuple(dev_sents), "dev")


class MannerResultTagger(BaseEstimator):
    """Token-level tagger over the 19-label inventory.

    Parameters mirror :class:`TrainingConfig`; ``backbone`` is a backbone
    name ("tiny", "tiny:hidden_width=32", "hf:roberta-base") or an
    :class:`EncoderBackbone` instance.
    """

    def __init__(self, backbone="tiny", learning_rate=5e-5, beta1=0.9,
                 beta2=0.999, weight_decay=0.01, gradient_clip_norm=1.0,
                 max_steps=20000, eval_every=200, patience=1600,
                 batcher_start=100, batcher_stop=1000, batcher_compound=1.001,
                 declared_batch_size=128, label_smoothing=0.05,
                 projection_dim=300, dev_fraction=0.1, freeze_backbone=False,
                 seed=0):
        self.backbone = backbone
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.weight_decay = weight_decay
        self.gradient_clip_norm = gradient_clip_norm
        self.max_steps = max_steps
        self.eval_every = eval_every
        self.patience = patience
        self.batcher_start = batcher_start
        self.batcher_stop = batcher_stop
        self.batcher_compound = batcher_compound
        self.declared_batch_size = declared_batch_size
        self.label_smoothing = label_smoothing
        self.projection_dim = projection_dim
        self.dev_fraction = dev_fraction
        self.freeze_backbone = freeze_backbone
        self.seed = seed

    def _config(self) -> TrainingConfig:
        return TrainingConfig(
            learning_rate=self.learning_rate, beta1=self.beta1, beta2=self.beta2,
            weight_decay=self.weight_decay, gradient_clip_norm=self.gradient_clip_norm,
            max_steps=self.max_steps, eval_every=self.eval_every,
            patience=self.patience, batcher_start=self.batcher_start,
            batcher_stop=self.batcher_stop, batcher_compound=self.batcher_compound,
            declared_batch_size=self.declared_batch_size,
            label_smoothing=self.label_smoothing, projection_dim=self.projection_dim,
            dev_fraction=self.dev_fraction, freeze_backbone=self.freeze_backbone,
            seed=self.seed,
        ).validate()

    def fit(self, X, y=None, dev=None):
        """Fit on labeled sentences.

        X may be a Corpus, a sequence of TaggedSentence, or token lists with
        y as parallel tag lists.  Without an explicit ``dev`` corpus, a
        ``dev_fraction`` split is carved off by sentence hash.
        """
        corpus = as_corpus(X, y, split="train")
        if dev is not None:
            train_corpus, dev_corpus = corpus, as_corpus(dev, split="dev")
        else:
            train_corpus, dev_corpus = hash_split(corpus, self.dev_fraction)
        backbone = (self.backbone if not isinstance(self.backbone, str)
                    else create_backbone(self.backbone))
        self.checkpoint_ = train(self._config(), train_corpus, dev_corpus, backbone)
        self.classes_ = list(ALL_LABELS)
        return self

    def predict(self, X) -> list[list[str]]:
        """Tag sequences for each input sentence (raw strings or token lists)."""
        check_is_fitted(self, "checkpoint_")
        return [tag(self.checkpoint_, tokens, sentence_id=f"s{i + 1}").tags()
                for i, tokens in enumerate(as_token_lists(X))]

    def predict_sentences(self, X):
        """Like predict, but returns TaggedSentence objects."""
        check_is_fitted(self, "checkpoint_")
        return [tag(self.checkpoint_, tokens, sentence_id=f"s{i + 1}")
                for i, tokens in enumerate(as_token_lists(X))]

    def score(self, X, y) -> float:
        """Token accuracy against gold tag sequences."""
        predictions = self.predict(X)
        gold = [list(tags) for tags in y]
        correct = total = 0
        for pred, g in zip(predictions, gold):
            correct += sum(p == q for p, q in zip(pred, g))
            total += len(g)
        return correct / total if total else 0.0

    def save(self, directory):
        check_is_fitted(self, "checkpoint_")
        self.checkpoint_.save(directory)

    @classmethod
    def from_checkpoint(cls, directory) -> "MannerResultTagger":
        checkpoint = Checkpoint.load(directory)
        cfg = checkpoint.config
        est = cls(backbone=checkpoint.backbone, **cfg.to_dict())
        est.checkpoint_ = checkpoint
        est.classes_ = list(ALL_LABELS)
        return est
