"""Trained-model artifacts: a weights blob plus a human-readable manifest
(config, tag-index map, backbone identity, best dev score), and inference."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch

from ..corpus import TaggedSentence, sentence_from_pairs
from ..errors import Error
from .backbone import EncoderBackbone, create_backbone
from .config import TrainingConfig
from .head import TaggerHead

MANIFEST_NAME = "manifest.json"
WEIGHTS_NAME = "weights.pt"


@dataclass
class Checkpoint:
    backbone: EncoderBackbone
    head: TaggerHead
    tag_index: dict[str, int]
    config: TrainingConfig
    best_dev_accuracy: float
    step_of_best: int
    eval_log: list[tuple[int, float]]
    steps_run: int

    def index_to_tag(self) -> dict[int, str]:
        return {i: label for label, i in self.tag_index.items()}

    def save(self, directory):
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        manifest = {
            "format": "mrtagger-checkpoint",
            "version": 1,
            "backbone": self.backbone.spec(),
            "tag_index": self.tag_index,
            "config": self.config.to_dict(),
            "best_dev_accuracy": self.best_dev_accuracy,
            "step_of_best": self.step_of_best,
            "steps_run": self.steps_run,
            "eval_log": [[step, acc] for step, acc in self.eval_log],
            "head": {"hidden_width": self.head.hidden_width,
                     "projection_dim": self.head.projection_dim,
                     "n_labels": self.head.n_labels},
        }
        with open(directory / MANIFEST_NAME, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
        torch.save({"backbone": self.backbone.state_dict(),
                    "head": self.head.state_dict()},
                   directory / WEIGHTS_NAME)

    @classmethod
    def load(cls, directory) -> "Checkpoint":
        directory = Path(directory)
        manifest_path = directory / MANIFEST_NAME
        if not manifest_path.exists():
            raise Error(f"no {MANIFEST_NAME} in {directory}")
        with open(manifest_path, encoding="utf-8") as fh:
            manifest = json.load(fh)
        if manifest.get("format") != "mrtagger-checkpoint":
            raise Error(f"{manifest_path} is not a tagger checkpoint manifest")
        backbone = create_backbone(manifest["backbone"])
        head_cfg = manifest["head"]
        head = TaggerHead(head_cfg["hidden_width"], head_cfg["projection_dim"],
                          head_cfg["n_labels"])
        weights = torch.load(directory / WEIGHTS_NAME, weights_only=True)
        backbone.load_state_dict(weights["backbone"])
        head.load_state_dict(weights["head"])
        backbone.eval()
        head.eval()
        return cls(
            backbone=backbone,
            head=head,
            tag_index={k: int(v) for k, v in manifest["tag_index"].items()},
            config=TrainingConfig.from_dict(manifest["config"]),
            best_dev_accuracy=manifest["best_dev_accuracy"],
            step_of_best=manifest["step_of_best"],
            eval_log=[tuple(e) for e in manifest["eval_log"]],
            steps_run=manifest["steps_run"],
        )


def tag(checkpoint: Checkpoint, tokens: list[str], sentence_id: str = "s1",
        source: str = "user") -> TaggedSentence:
    """Tag pre-tokenized text with a trained checkpoint.

    One tag per token, argmax over the 19 labels; ties break toward the
    lowest label index.  Deterministic.
    """
    from .alignment import pool_subwords, segment

    if not tokens:
        raise Error("cannot tag an empty token list")
    ids, alignment = segment(list(tokens), checkpoint.backbone)
    vectors = checkpoint.backbone.encode(ids)
    token_vectors = pool_subwords(vectors.detach().numpy(), alignment)
    with torch.no_grad():
        logits = checkpoint.head(torch.as_tensor(token_vectors, dtype=torch.float32))
    predicted = np.argmax(logits.numpy(), axis=1)  # first max -> lowest index
    inverse = checkpoint.index_to_tag()
    pairs = [(tok, inverse[int(i)]) for tok, i in zip(tokens, predicted)]
    return sentence_from_pairs(pairs, sentence_id, source)


def tag_text(checkpoint: Checkpoint, text: str, sentence_id: str = "s1",
             source: str = "user") -> TaggedSentence:
    """Tokenize raw text and tag it."""
    from ..corpus import tokenize

    return tag(checkpoint, tokenize(text), sentence_id, source)
