"""Sequence tagger: subword encoding, mean pooling, classification head,
training loop with early stopping, and checkpointed inference."""

from .alignment import AlignmentMap, pool_subwords, segment
from .backbone import EncoderBackbone, TinyBackbone, create_backbone
from .config import TrainingConfig
from .head import TaggerHead, smoothed_cross_entropy
from .checkpoint import Checkpoint, tag
from .training import train
from .estimator import MannerResultTagger

__all__ = [
    "AlignmentMap", "pool_subwords", "segment",
    "EncoderBackbone", "TinyBackbone", "create_backbone",
    "TrainingConfig", "TaggerHead", "smoothed_cross_entropy",
    "Checkpoint", "tag", "train", "MannerResultTagger",
]
