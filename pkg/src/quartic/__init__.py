"""Quartic public-key transformation with side information."""

from .core import (
    Envelope,
    KeyMode,
    PrivateKey,
    PublicKey,
    associates,
    decrypt,
    derive_exponent,
    encrypt,
    extract_quartic_root,
    keygen,
    rank_of,
    select_alpha,
    unity_roots_composite,
    unity_roots_prime,
)
from .errors import QuarticError
from .groups import GroupPartition, RootGroup, partition_groups, sample_event
from .protocol import (
    ReceiverSession,
    SenderSession,
    parse_envelope,
    parse_private,
    parse_public,
    serialize_envelope,
    serialize_private,
    serialize_public,
)

__all__ = [
    "Envelope", "KeyMode", "PrivateKey", "PublicKey",
    "associates", "decrypt", "derive_exponent", "encrypt",
    "extract_quartic_root", "keygen", "rank_of", "select_alpha",
    "unity_roots_composite", "unity_roots_prime",
    "QuarticError",
    "GroupPartition", "RootGroup", "partition_groups", "sample_event",
    "ReceiverSession", "SenderSession",
    "parse_envelope", "parse_private", "parse_public",
    "serialize_envelope", "serialize_private", "serialize_public",
]
