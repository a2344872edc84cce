"""Sender/receiver sessions and the on-disk key/envelope formats.

File format (.qpub, .qpriv, .qmsg): ASCII, one `key = value` pair per line,
decimal integers, comma-separated root lists, header line `quartic-pkt v1`.
Field order is fixed: version, mode, n, roots; private keys add p, q, a, d
(fields that do not apply to the mode are omitted). Envelopes carry c and
rank — the rank travels in cleartext, exactly as the protocol prescribes.
"""

from __future__ import annotations

from . import core
from .core import Envelope, KeyMode, PrivateKey, PublicKey
from .errors import FormatSyntaxError, InvariantViolation, SessionStateError
from .numtheory import is_probable_prime

HEADER = "quartic-pkt v1"

_ROOT_COUNT = {KeyMode.PRIME: 4, KeyMode.COMPOSITE4: 4, KeyMode.COMPOSITE16: 16}


class SenderSession:
    """One-shot sender: encrypt a message and attach its rank."""

    def __init__(self, public_key: PublicKey):
        self.public_key = public_key
        self.sent = False

    def send(self, m: int) -> Envelope:
        if self.sent:
            raise SessionStateError("sender session already used")
        envelope = Envelope(core.encrypt(m, self.public_key),
                            core.rank_of(m, self.public_key))
        self.sent = True
        return envelope


class ReceiverSession:
    """One-shot receiver: decrypt exactly one envelope."""

    def __init__(self, private_key: PrivateKey):
        self.private_key = private_key
        self.recovered: int | None = None
        self.done = False

    def receive(self, envelope: Envelope) -> int:
        if self.done:
            raise SessionStateError("receiver session already used")
        self.recovered = core.decrypt(envelope, self.private_key)
        self.done = True
        return self.recovered


# --- serialization ---

def serialize_public(key: PublicKey) -> str:
    lines = [HEADER,
             f"mode = {key.mode.value}",
             f"n = {key.n}",
             "roots = " + ",".join(str(r) for r in key.unity_roots)]
    return "\n".join(lines) + "\n"


def serialize_private(key: PrivateKey) -> str:
    lines = [HEADER,
             f"mode = {key.mode.value}",
             f"n = {key.n}",
             "roots = " + ",".join(str(r) for r in key.unity_roots),
             f"p = {key.p}"]
    if key.q is not None:
        lines.append(f"q = {key.q}")
    if key.a is not None:
        lines.append(f"a = {key.a}")
    if key.d is not None:
        lines.append(f"d = {key.d}")
    return "\n".join(lines) + "\n"


def serialize_envelope(envelope: Envelope) -> str:
    return f"{HEADER}\nc = {envelope.cipher}\nrank = {envelope.rank}\n"


def _parse_fields(text: str, allowed: tuple[str, ...]) -> dict[str, str]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise FormatSyntaxError(f"missing header line '{HEADER}'")
    fields: dict[str, str] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        if "=" not in line:
            raise FormatSyntaxError(f"malformed line (no '='): {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in allowed:
            raise FormatSyntaxError(f"unknown field {key!r}")
        if key in fields:
            raise FormatSyntaxError(f"duplicate field {key!r}")
        fields[key] = value
    return fields


def _int_field(fields: dict[str, str], name: str) -> int:
    if name not in fields:
        raise FormatSyntaxError(f"missing field {name!r}")
    try:
        return int(fields[name])
    except ValueError:
        raise FormatSyntaxError(f"field {name!r} is not a decimal integer: "
                                f"{fields[name]!r}") from None


def _roots_field(fields: dict[str, str], n: int, mode: KeyMode) -> tuple[int, ...]:
    if "roots" not in fields:
        raise FormatSyntaxError("missing field 'roots'")
    try:
        roots = tuple(int(part) for part in fields["roots"].split(","))
    except ValueError:
        raise FormatSyntaxError(f"field 'roots' is not a comma-separated "
                                f"integer list: {fields['roots']!r}") from None
    if len(roots) != _ROOT_COUNT[mode]:
        raise InvariantViolation(
            f"roots: mode {mode.value} requires {_ROOT_COUNT[mode]} roots, "
            f"got {len(roots)}")
    if list(roots) != sorted(set(roots)):
        raise InvariantViolation("roots: list must be strictly ascending")
    for r in roots:
        if not 1 <= r < n:
            raise InvariantViolation(f"roots: {r} outside [1, {n})")
        if pow(r, 4, n) != 1:
            raise InvariantViolation(f"roots: {r}^4 != 1 (mod {n})")
    if 1 not in roots or n - 1 not in roots:
        raise InvariantViolation("roots: must contain 1 and n-1")
    return roots


def _mode_field(fields: dict[str, str]) -> KeyMode:
    if "mode" not in fields:
        raise FormatSyntaxError("missing field 'mode'")
    try:
        return KeyMode(fields["mode"])
    except ValueError:
        raise InvariantViolation(f"mode: unknown mode {fields['mode']!r}") from None


def parse_public(text: str) -> PublicKey:
    fields = _parse_fields(text, ("mode", "n", "roots"))
    mode = _mode_field(fields)
    n = _int_field(fields, "n")
    if n < 2:
        raise InvariantViolation(f"n: modulus {n} < 2")
    roots = _roots_field(fields, n, mode)
    return PublicKey(mode, n, roots)


def parse_private(text: str) -> PrivateKey:
    fields = _parse_fields(text, ("mode", "n", "roots", "p", "q", "a", "d"))
    mode = _mode_field(fields)
    n = _int_field(fields, "n")
    if n < 2:
        raise InvariantViolation(f"n: modulus {n} < 2")
    roots = _roots_field(fields, n, mode)
    p = _int_field(fields, "p")
    if not is_probable_prime(p):
        raise InvariantViolation(f"p: {p} is not prime")

    if mode is KeyMode.PRIME:
        if "q" in fields:
            raise InvariantViolation("q: not allowed in prime mode")
        if p != n:
            raise InvariantViolation(f"p: prime mode requires p = n, got {p} != {n}")
        q = None
        totient = p - 1
    else:
        q = _int_field(fields, "q")
        if not is_probable_prime(q):
            raise InvariantViolation(f"q: {q} is not prime")
        if p * q != n:
            raise InvariantViolation(f"n: p*q = {p * q} != {n}")
        totient = (p - 1) * (q - 1)

    if mode is KeyMode.COMPOSITE16:
        if "a" in fields or "d" in fields:
            raise InvariantViolation("d: no inverse exponent in composite16 mode")
        a = d = None
    else:
        a = _int_field(fields, "a")
        d = _int_field(fields, "d")
        if (a * totient + 4) % 16 != 0 or d != (a * totient + 4) // 16:
            raise InvariantViolation(f"d: {d} != (a*totient + 4)/16")
    return PrivateKey(mode, n, p, q, a, d, roots)


def parse_envelope(text: str) -> Envelope:
    fields = _parse_fields(text, ("c", "rank"))
    c = _int_field(fields, "c")
    rank = _int_field(fields, "rank")
    if c < 0:
        raise InvariantViolation(f"c: cipher {c} < 0")
    if rank < 1:
        raise InvariantViolation(f"rank: {rank} < 1")
    return Envelope(c, rank)
