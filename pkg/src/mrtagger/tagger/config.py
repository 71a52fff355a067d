"""Training hyperparameters.

Defaults are the reference regime: Adam-style optimizer at 5e-5 with decay
0.01, gradient clipping at 1.0, up to 20k steps with dev evaluation every
200 and a patience of 1,600, and a compounding word batcher (100 -> 1000,
factor 1.001).  ``declared_batch_size`` is recorded metadata only; the word
batcher governs actual batching.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from ..errors import BadConfig


@dataclass(frozen=True)
class TrainingConfig:
    learning_rate: float = 5e-5
    beta1: float = 0.9
    beta2: float = 0.999
    weight_decay: float = 0.01
    gradient_clip_norm: float = 1.0
    max_steps: int = 20000
    eval_every: int = 200
    patience: int = 1600
    batcher_start: float = 100
    batcher_stop: float = 1000
    batcher_compound: float = 1.001
    declared_batch_size: int = 128
    label_smoothing: float = 0.05
    projection_dim: int = 300
    dev_fraction: float = 0.1
    freeze_backbone: bool = False
    seed: int = 0

    def validate(self) -> "TrainingConfig":
        if self.eval_every <= 0 or self.max_steps <= 0 or self.patience <= 0:
            raise BadConfig("max_steps, eval_every and patience must be positive")
        if self.patience % self.eval_every != 0:
            raise BadConfig(
                f"patience ({self.patience}) must be a multiple of "
                f"eval_every ({self.eval_every})")
        if not 0.0 <= self.label_smoothing < 1.0:
            raise BadConfig("label_smoothing must be in [0, 1)")
        if not 0.0 <= self.dev_fraction < 1.0:
            raise BadConfig("dev_fraction must be in [0, 1)")
        if self.batcher_start <= 0 or self.batcher_stop < self.batcher_start:
            raise BadConfig("word batcher needs 0 < start <= stop")
        if self.batcher_compound < 1.0:
            raise BadConfig("batcher_compound must be >= 1.0")
        if self.learning_rate <= 0:
            raise BadConfig("learning_rate must be positive")
        return self

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "TrainingConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise BadConfig(f"unknown config fields: {sorted(unknown)}")
        return cls(**data).validate()

    @classmethod
    def from_file(cls, path) -> "TrainingConfig":
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise BadConfig(f"config file is not valid JSON: {exc}")
        return cls.from_dict(data)

    def to_file(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
