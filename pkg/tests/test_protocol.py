import random

import pytest

from quartic import core, protocol
from quartic.core import Envelope, KeyMode
from quartic.errors import (
    FormatSyntaxError,
    InvariantViolation,
    QuarticError,
    SessionStateError,
)


def make_key(mode, primes):
    return core.keygen(mode, 8, random.Random(0), primes=primes)


class TestSessions:
    def test_example1_exchange(self):
        pub, priv = make_key(KeyMode.PRIME, (37,))
        env = protocol.SenderSession(pub).send(7)
        assert env == Envelope(33, 2)
        assert protocol.ReceiverSession(priv).receive(env) == 7

    def test_example2_exchange(self):
        pub, priv = make_key(KeyMode.COMPOSITE16, (17, 13))
        env = protocol.SenderSession(pub).send(24)
        assert env == Envelope(55, 4)
        assert protocol.ReceiverSession(priv).receive(env) == 24

    def test_message_one(self):
        pub, priv = make_key(KeyMode.PRIME, (37,))
        env = protocol.SenderSession(pub).send(1)
        assert env == Envelope(1, 1)
        assert protocol.ReceiverSession(priv).receive(env) == 1

    def test_sessions_are_one_shot(self):
        pub, priv = make_key(KeyMode.PRIME, (37,))
        sender = protocol.SenderSession(pub)
        env = sender.send(7)
        with pytest.raises(SessionStateError):
            sender.send(9)
        receiver = protocol.ReceiverSession(priv)
        receiver.receive(env)
        assert receiver.recovered == 7
        with pytest.raises(SessionStateError):
            receiver.receive(env)

    def test_end_to_end_through_serialization(self):
        # everything crossing the channel goes through text and back
        rng = random.Random(21)
        for mode in KeyMode:
            pub, priv = core.keygen(mode, 12, rng)
            pub2 = protocol.parse_public(protocol.serialize_public(pub))
            priv2 = protocol.parse_private(protocol.serialize_private(priv))
            import math
            m = next(x for x in range(2, pub.n) if math.gcd(x, pub.n) == 1)
            env = protocol.SenderSession(pub2).send(m)
            env2 = protocol.parse_envelope(protocol.serialize_envelope(env))
            assert protocol.ReceiverSession(priv2).receive(env2) == m


class TestSerialization:
    @pytest.mark.parametrize("mode,primes", [
        (KeyMode.PRIME, (37,)),
        (KeyMode.COMPOSITE4, (7, 11)),
        (KeyMode.COMPOSITE16, (17, 13)),
    ])
    def test_key_round_trip(self, mode, primes):
        pub, priv = make_key(mode, primes)
        assert protocol.parse_public(protocol.serialize_public(pub)) == pub
        assert protocol.parse_private(protocol.serialize_private(priv)) == priv

    def test_envelope_round_trip(self):
        env = Envelope(55, 4)
        text = protocol.serialize_envelope(env)
        assert protocol.parse_envelope(text) == env

    def test_envelope_text_shape(self):
        text = protocol.serialize_envelope(Envelope(55, 4))
        assert text == "quartic-pkt v1\nc = 55\nrank = 4\n"

    def test_no_trailing_whitespace(self):
        pub, priv = make_key(KeyMode.COMPOSITE16, (17, 13))
        for text in (protocol.serialize_public(pub),
                     protocol.serialize_private(priv),
                     protocol.serialize_envelope(Envelope(55, 4))):
            assert text.endswith("\n")
            for line in text.splitlines():
                assert line == line.rstrip()


class TestParseRejections:
    def test_missing_header(self):
        with pytest.raises(FormatSyntaxError):
            protocol.parse_envelope("c = 55\nrank = 4\n")

    def test_malformed_line(self):
        with pytest.raises(FormatSyntaxError):
            protocol.parse_envelope("quartic-pkt v1\nc 55\n")

    def test_unknown_field(self):
        with pytest.raises(FormatSyntaxError):
            protocol.parse_envelope("quartic-pkt v1\nc = 55\nrank = 4\nextra = 1\n")

    def test_duplicate_field(self):
        with pytest.raises(FormatSyntaxError):
            protocol.parse_envelope("quartic-pkt v1\nc = 55\nc = 56\nrank = 4\n")

    def test_non_integer_field(self):
        with pytest.raises(FormatSyntaxError):
            protocol.parse_envelope("quartic-pkt v1\nc = fifty\nrank = 4\n")

    def test_bad_rank(self):
        with pytest.raises(InvariantViolation, match="rank"):
            protocol.parse_envelope("quartic-pkt v1\nc = 55\nrank = 0\n")

    def test_tampered_root(self):
        # replacing one root by 2 breaks r^4 = 1 (2^4 = 16 mod 221)
        pub, _ = make_key(KeyMode.COMPOSITE16, (17, 13))
        text = protocol.serialize_public(pub)
        tampered = text.replace("1,18,", "1,2,")
        with pytest.raises(InvariantViolation, match="roots"):
            protocol.parse_public(tampered)

    def test_wrong_root_count_for_mode(self):
        text = ("quartic-pkt v1\nmode = composite16\nn = 221\n"
                "roots = 1,220\n")
        with pytest.raises(InvariantViolation, match="roots"):
            protocol.parse_public(text)

    def test_unknown_mode(self):
        with pytest.raises(InvariantViolation, match="mode"):
            protocol.parse_public("quartic-pkt v1\nmode = quintic\nn = 37\n"
                                  "roots = 1,6,31,36\n")

    def test_private_consistency_checks(self):
        _, priv = make_key(KeyMode.COMPOSITE16, (17, 13))
        text = protocol.serialize_private(priv)
        with pytest.raises(InvariantViolation, match="n"):
            protocol.parse_private(text.replace("p = 17", "p = 29"))
        with pytest.raises(InvariantViolation, match="p"):
            protocol.parse_private(text.replace("p = 17", "p = 15"))

    def test_private_exponent_check(self):
        _, priv = make_key(KeyMode.PRIME, (37,))
        text = protocol.serialize_private(priv)
        with pytest.raises(InvariantViolation, match="d"):
            protocol.parse_private(text.replace("d = 7", "d = 8"))

    def test_fuzz_random_bytes_never_crash(self):
        rng = random.Random(77)
        parsers = (protocol.parse_public, protocol.parse_private,
                   protocol.parse_envelope)
        for _ in range(500):
            blob = bytes(rng.randrange(256) for _ in range(rng.randrange(200)))
            text = blob.decode("latin-1")
            for parse in parsers:
                try:
                    parse(text)
                except QuarticError:
                    pass
