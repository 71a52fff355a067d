"""Encoder backbones: the contextual subword encoders behind the tagger.

A backbone owns its vocabulary and subword segmentation and maps a sequence
of subword ids to one vector per subword.  ``TinyBackbone`` is a small
randomly initialized transformer for desk-scale experiments and tests;
``HFBackbone`` adapts a pretrained Hugging Face encoder (RoBERTa and
friends) when the optional ``transformers`` dependency and weights are
available.
"""

from __future__ import annotations

import hashlib

import torch
from torch import nn

from ..errors import Error

PAD_ID, BOS_ID, EOS_ID, UNK_ID = 0, 1, 2, 3
N_SPECIAL = 4

# Frequent English chunks for greedy longest-match segmentation; everything
# else falls back to single characters.
_MERGES = (
    "tion sion ment ness able ible ing ed er est ly th ch sh ph wh qu ck "
    "ou ow ee oo ea ai ay oi oy au aw ar or er ir ur an en in on un at et "
    "it ot ut al el il ol ul as es is os us ss ll ff zz nd nt st mp nk ng"
).split()
_MERGES_BY_LEN = sorted(set(_MERGES), key=len, reverse=True)


def _piece_id(piece: str, vocab_size: int) -> int:
    digest = hashlib.md5(piece.encode("utf-8")).digest()
    return N_SPECIAL + int.from_bytes(digest[:8], "big") % (vocab_size - N_SPECIAL)


class EncoderBackbone(nn.Module):
    """Interface: subword segmentation plus contextual encoding.

    Subclasses set ``identifier`` and ``hidden_width`` and implement
    ``encode_pieces`` and ``encode``.  ``encode`` must be deterministic in
    eval mode.
    """

    identifier: str = "abstract"
    hidden_width: int = 0

    def encode_pieces(self, token: str, first: bool = False) -> list[int]:
        """Subword ids for one pre-tokenized word; may be empty (the
        caller substitutes the unknown-piece id, tokens are never dropped)."""
        raise NotImplementedError

    def encode(self, subword_ids: list[int]) -> torch.Tensor:
        """(n_subwords, hidden_width) vectors for one id sequence; the
        inference path (no gradients)."""
        raise NotImplementedError

    def special_ids(self) -> tuple[int, int, int]:
        """(bos, eos, unk) ids used to delimit sequences."""
        return BOS_ID, EOS_ID, UNK_ID

    def spec(self) -> dict:
        """Constructor recipe, serialized into checkpoints."""
        raise NotImplementedError


class TinyBackbone(EncoderBackbone):
    """Small randomly initialized transformer encoder.

    Deterministic for a given ``init_seed``: construction forks the torch
    RNG so it neither depends on nor disturbs global state.
    """

    def __init__(self, hidden_width: int = 32, vocab_size: int = 4096,
                 layers: int = 1, heads: int = 4, max_len: int = 512,
                 init_seed: int = 0):
        super().__init__()
        if hidden_width % heads != 0:
            raise Error("hidden_width must be divisible by heads")
        self.hidden_width = hidden_width
        self.vocab_size = vocab_size
        self.n_layers = layers
        self.heads = heads
        self.max_len = max_len
        self.init_seed = init_seed
        self.identifier = f"tiny-h{hidden_width}-v{vocab_size}-l{layers}-s{init_seed}"

        with torch.random.fork_rng():
            torch.manual_seed(init_seed)
            self.embedding = nn.Embedding(vocab_size, hidden_width, padding_idx=PAD_ID)
            self.positions = nn.Embedding(max_len, hidden_width)
            layer = nn.TransformerEncoderLayer(
                d_model=hidden_width, nhead=heads, dim_feedforward=2 * hidden_width,
                dropout=0.0, batch_first=True)
            self.encoder = nn.TransformerEncoder(layer, num_layers=layers,
                                                 enable_nested_tensor=False)

    def encode_pieces(self, token: str, first: bool = False) -> list[int]:
        word = token.lower()
        pieces = []
        i = 0
        while i < len(word):
            for merge in _MERGES_BY_LEN:
                if word.startswith(merge, i):
                    pieces.append(merge)
                    i += len(merge)
                    break
            else:
                pieces.append(word[i])
                i += 1
        return [_piece_id(p, self.vocab_size) for p in pieces]

    def forward(self, ids: torch.Tensor, padding_mask: "torch.Tensor | None" = None
                ) -> torch.Tensor:
        # ids: (B, L) long; padding_mask: (B, L) bool, True at pad positions
        B, L = ids.shape
        if L > self.max_len:
            raise Error(f"sequence of {L} subwords exceeds max_len {self.max_len}")
        pos = torch.arange(L, device=ids.device).unsqueeze(0).expand(B, L)
        x = self.embedding(ids) + self.positions(pos)
        return self.encoder(x, src_key_padding_mask=padding_mask)

    def encode(self, subword_ids: list[int]) -> torch.Tensor:
        ids = torch.as_tensor(subword_ids, dtype=torch.long).unsqueeze(0)
        was_training = self.training
        self.eval()
        with torch.no_grad():
            out = self.forward(ids)
        if was_training:
            self.train()
        return out.squeeze(0)

    def spec(self) -> dict:
        return {
            "kind": "tiny",
            "identifier": self.identifier,
            "options": {
                "hidden_width": self.hidden_width,
                "vocab_size": self.vocab_size,
                "layers": self.n_layers,
                "heads": self.heads,
                "max_len": self.max_len,
                "init_seed": self.init_seed,
            },
        }


class HFBackbone(EncoderBackbone):
    """Adapter over a pretrained Hugging Face masked-LM encoder.

    Requires the ``transformers`` extra and locally available weights
    (``roberta-base`` is the reference configuration, hidden width 768).
    """

    def __init__(self, model_name: str = "roberta-base"):
        super().__init__()
        try:
            from transformers import AutoModel, AutoTokenizer
        except ImportError as exc:
            raise Error("HFBackbone needs the 'transformers' extra "
                        "(pip install mrtagger[hf])") from exc
        self.model_name = model_name
        self.identifier = f"hf-{model_name}"
        self.tokenizer = AutoTokenizer.from_pretrained(model_name)
        self.model = AutoModel.from_pretrained(model_name)
        self.hidden_width = self.model.config.hidden_size
        self._bos = self.tokenizer.bos_token_id
        self._eos = self.tokenizer.eos_token_id

    def encode_pieces(self, token: str, first: bool = False) -> list[int]:
        text = token if first else " " + token
        return self.tokenizer(text, add_special_tokens=False)["input_ids"]

    def forward(self, ids: torch.Tensor, padding_mask: "torch.Tensor | None" = None
                ) -> torch.Tensor:
        attention = None if padding_mask is None else (~padding_mask).long()
        return self.model(input_ids=ids, attention_mask=attention).last_hidden_state

    def encode(self, subword_ids: list[int]) -> torch.Tensor:
        ids = torch.as_tensor(subword_ids, dtype=torch.long).unsqueeze(0)
        with torch.no_grad():
            out = self.forward(ids)
        return out.squeeze(0)

    def special_ids(self) -> tuple[int, int, int]:
        return self._bos, self._eos, self.tokenizer.unk_token_id or 3

    def spec(self) -> dict:
        return {"kind": "hf", "identifier": self.identifier,
                "options": {"model_name": self.model_name}}


def create_backbone(spec) -> EncoderBackbone:
    """Build a backbone from a name ("tiny", "hf:roberta-base") or a spec
    dict as stored in checkpoints."""
    if isinstance(spec, str):
        if spec == "tiny":
            return TinyBackbone()
        if spec.startswith("tiny:"):
            opts = {}
            for part in spec[5:].split(","):
                key, _, value = part.partition("=")
                opts[key] = int(value)
            return TinyBackbone(**opts)
        if spec.startswith("hf:"):
            return HFBackbone(spec[3:])
        raise Error(f"unknown backbone {spec!r}; use 'tiny', 'tiny:k=v,...' or 'hf:<name>'")
    kind = spec.get("kind")
    if kind == "tiny":
        return TinyBackbone(**spec["options"])
    if kind == "hf":
        return HFBackbone(**spec["options"])
    raise Error(f"unknown backbone kind {kind!r}")
