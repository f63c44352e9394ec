"""Byte-level tokenization.

Payload bytes map to token ids by identity (byte value b -> id b); two
specials are appended to the alphabet: CLS, prepended to every sequence
and pooled by the classifier, and PAD, which fills unused capacity and is
excluded from attention via the mask.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadHexDigit, MalformedSequence, OddLength

CLS_ID = 256
PAD_ID = 257
VOCAB_SIZE = 258

_HEX_DIGITS = set("0123456789abcdef")


@dataclass
class TokenSequence:
    """Fixed-capacity token ids with an attention mask.

    ids[0] is CLS, ids[1:true_length] are payload bytes, the rest PAD;
    mask[i] = 1 iff i < true_length.
    """

    ids: list[int]
    mask: list[int]
    true_length: int

    @property
    def capacity(self) -> int:
        return len(self.ids)


def encode(payload: bytes, max_positions: int) -> TokenSequence:
    """Encode a payload as [CLS] + bytes, truncated to max_positions - 1 and padded."""
    if max_positions < 2:
        raise ValueError(f"max_positions must be >= 2, got {max_positions}")
    body = payload[: max_positions - 1]
    true_length = len(body) + 1
    ids = [CLS_ID] + list(body) + [PAD_ID] * (max_positions - true_length)
    mask = [1] * true_length + [0] * (max_positions - true_length)
    return TokenSequence(ids=ids, mask=mask, true_length=true_length)


def decode(seq: TokenSequence) -> bytes:
    """Recover the payload bytes of a well-formed sequence."""
    _validate(seq)
    return bytes(seq.ids[1 : seq.true_length])


def _validate(seq: TokenSequence) -> None:
    n = len(seq.ids)
    if len(seq.mask) != n:
        raise MalformedSequence(f"mask length {len(seq.mask)} != ids length {n}")
    if not 1 <= seq.true_length <= n:
        raise MalformedSequence(f"true_length {seq.true_length} outside [1, {n}]")
    if not seq.ids or seq.ids[0] != CLS_ID:
        raise MalformedSequence("first token is not CLS")
    for i, t in enumerate(seq.ids):
        if i < seq.true_length:
            if i > 0 and not 0 <= t <= 255:
                raise MalformedSequence(f"non-byte token {t} at position {i}")
            if seq.mask[i] != 1:
                raise MalformedSequence(f"mask 0 inside real-token region at {i}")
        else:
            if t != PAD_ID:
                raise MalformedSequence(f"non-PAD token {t} in padding region at {i}")
            if seq.mask[i] != 0:
                raise MalformedSequence(f"mask 1 inside padding region at {i}")


def encode_batch(payloads, cap_limit: int):
    """Encode payloads into rectangular id/mask arrays.

    Capacity is the longest payload in the batch plus the CLS slot, capped
    at cap_limit; every sequence shares it.  Returns int64 arrays of shape
    (batch, capacity).
    """
    if not payloads:
        return np.zeros((0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64)
    capacity = min(max(len(p) for p in payloads) + 1, cap_limit)
    capacity = max(capacity, 2)
    ids = np.full((len(payloads), capacity), PAD_ID, dtype=np.int64)
    mask = np.zeros((len(payloads), capacity), dtype=np.int64)
    for row, payload in enumerate(payloads):
        seq = encode(payload, capacity)
        ids[row] = seq.ids
        mask[row] = seq.mask
    return ids, mask


def hex_to_bytes(text: str) -> bytes:
    """Strict lowercase-hex decoder: two chars per byte."""
    if len(text) % 2:
        raise OddLength(f"hex string has odd length {len(text)}")
    bad = set(text) - _HEX_DIGITS
    if bad:
        raise BadHexDigit(f"invalid hex characters: {sorted(bad)}")
    return bytes.fromhex(text)


def bytes_to_hex(data: bytes) -> str:
    """Lowercase hex, two chars per byte."""
    return data.hex()
