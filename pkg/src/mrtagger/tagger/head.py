"""Classification head and the smoothed cross-entropy loss."""

from __future__ import annotations

import numpy as np
import torch
from torch import nn

from ..errors import InvalidEpsilon
from ..labels import N_LABELS


class TaggerHead(nn.Module):
    """Projection to a reduced feature space, then per-token logits.

    The projection is a plain affine map (no nonlinearity); the classifier
    maps the reduced features to the 19 tag logits.
    """

    def __init__(self, hidden_width: int, projection_dim: int = 300,
                 n_labels: int = N_LABELS, init_seed: int = 0):
        super().__init__()
        self.hidden_width = hidden_width
        self.projection_dim = projection_dim
        self.n_labels = n_labels
        with torch.random.fork_rng():
            torch.manual_seed(init_seed)
            self.projection = nn.Linear(hidden_width, projection_dim)
            self.classifier = nn.Linear(projection_dim, n_labels)

    def forward(self, token_vectors: torch.Tensor) -> torch.Tensor:
        return self.classifier(self.projection(token_vectors))

    def predict_proba(self, token_vectors: torch.Tensor) -> torch.Tensor:
        return torch.softmax(self.forward(token_vectors), dim=-1)


def smoothed_cross_entropy(logits, gold_index: int, epsilon: float = 0.05) -> float:
    """Cross-entropy against a label-smoothed target.

    The target distribution is (1 - eps) on the gold label plus eps spread
    uniformly over all K classes (the gold class included), so
    q_gold = 1 - eps + eps/K.  With eps = 0 this is plain cross-entropy.
    """
    if not 0.0 <= epsilon < 1.0:
        raise InvalidEpsilon(f"epsilon must be in [0, 1), got {epsilon}")
    z = np.asarray(logits, dtype=np.float64).reshape(-1)
    k = z.shape[0]
    if not 0 <= gold_index < k:
        raise IndexError(f"gold index {gold_index} out of range for {k} logits")
    log_probs = z - (np.max(z) + np.log(np.sum(np.exp(z - np.max(z)))))
    q = np.full(k, epsilon / k, dtype=np.float64)
    q[gold_index] += 1.0 - epsilon
    return float(-(q * log_probs).sum())
