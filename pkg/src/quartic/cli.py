"""Command-line front end.

Thin wrappers over the library: every subcommand formats library results
and nothing else. Exit codes: 0 success, 1 usage error, 2 domain error
(error class name on stderr).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import core, groups, oracle, protocol
from .core import Envelope, KeyMode
from .errors import OracleBound, QuarticError

# verify --exhaustive is quadratic in n (one O(n) oracle scan per unit)
_EXHAUSTIVE_BOUND = 3000


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this artifact reserves 2 for domain
    # errors, so remap usage problems to exit code 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="quartic",
                     description="Quartic public-key transformation with side information")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--mode", required=True,
                   choices=[m.value for m in KeyMode])
    p.add_argument("--bits", type=int, default=16,
                   help="bit length per prime (default 16)")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed for reproducible keys")
    p.add_argument("--out", required=True, metavar="PREFIX",
                   help="writes PREFIX.qpub and PREFIX.qpriv")

    p = sub.add_parser("roots", help="print the roots of unity of a public key")
    p.add_argument("--pub", required=True)

    p = sub.add_parser("table", help="print the 4-to-1 mapping table for a prime")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)

    p = sub.add_parser("encrypt", help="encrypt a message and compute its rank")
    p.add_argument("--pub", required=True)
    p.add_argument("--message", type=int, required=True)
    p.add_argument("--out", default=None, metavar="FILE.qmsg",
                   help="also write the envelope to a file")

    p = sub.add_parser("decrypt", help="recover a message from cipher and rank")
    p.add_argument("--priv", required=True)
    p.add_argument("--cipher", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("groups", help="print the six root groups (composite16 keys)")
    p.add_argument("--priv", required=True)

    p = sub.add_parser("demo", help="replay a worked example end to end")
    p.add_argument("--example", type=int, required=True, choices=[1, 2])

    p = sub.add_parser("verify", help="cross-check fast paths against the brute-force oracle")
    p.add_argument("--priv", required=True)
    p.add_argument("--exhaustive", action="store_true",
                   help="check every unit message instead of a sample")
    return parser


def _read_public(path: str) -> core.PublicKey:
    return protocol.parse_public(Path(path).read_text())


def _read_private(path: str) -> core.PrivateKey:
    return protocol.parse_private(Path(path).read_text())


def _cmd_keygen(args) -> int:
    rng = random.Random(args.seed)
    mode = KeyMode(args.mode)
    pub, priv = core.keygen(mode, args.bits, rng)
    pub_path = Path(args.out + ".qpub")
    priv_path = Path(args.out + ".qpriv")
    pub_path.write_text(protocol.serialize_public(pub))
    priv_path.write_text(protocol.serialize_private(priv))
    print(f"wrote {pub_path}")
    print(f"wrote {priv_path}")
    return 0


def _cmd_roots(args) -> int:
    pub = _read_public(args.pub)
    for r in pub.unity_roots:
        print(r)
    return 0


def _cmd_table(args) -> int:
    for row in oracle.table_for_prime(args.prime, args.alpha):
        print("\t".join(str(v) for v in row))
    return 0


def _cmd_encrypt(args) -> int:
    pub = _read_public(args.pub)
    envelope = protocol.SenderSession(pub).send(args.message)
    print(f"c={envelope.cipher}")
    print(f"rank={envelope.rank}")
    if args.out:
        Path(args.out).write_text(protocol.serialize_envelope(envelope))
        print(f"wrote {args.out}")
    return 0


def _cmd_decrypt(args) -> int:
    priv = _read_private(args.priv)
    m = protocol.ReceiverSession(priv).receive(Envelope(args.cipher, args.rank))
    print(f"recovered={m}")
    return 0


def _cmd_groups(args) -> int:
    priv = _read_private(args.priv)
    partition = groups.partition_groups(priv.unity_roots, priv.n)
    for i, grp in enumerate(partition.groups, 1):
        print(f"group {i}: " + ", ".join(str(v) for v in grp.members))
    print("involutions: " + ", ".join(str(v) for v in partition.involutions))
    return 0


def _cmd_demo(args) -> int:
    rng = random.Random(0)
    if args.example == 1:
        pub, priv = core.keygen(KeyMode.PRIME, 6, rng, primes=(37,))
        m = 7
        print("example 1: quartic transformation mod the prime 37")
        print("roots of unity: " + ", ".join(str(r) for r in pub.unity_roots))
        print(f"alpha = {core.select_alpha(pub.unity_roots, pub.n)}")
        print(f"a = {priv.a}, d = {priv.d}")
    else:
        pub, priv = core.keygen(KeyMode.COMPOSITE16, 5, rng, primes=(17, 13))
        m = 24
        print("example 2: quartic transformation mod 221 = 17 * 13")
        print("sixteen roots of unity: " + ", ".join(str(r) for r in pub.unity_roots))

    print(f"message m = {m}")
    print("associates: " + ", ".join(str(v) for v in core.associates(m, pub)))
    envelope = protocol.SenderSession(pub).send(m)
    print(f"c={envelope.cipher}")
    print(f"rank={envelope.rank}")
    root = core.extract_quartic_root(envelope.cipher, priv)
    print(f"receiver's quartic root of c: {root}")
    recovered = protocol.ReceiverSession(priv).receive(envelope)
    print(f"recovered={recovered}")
    return 0


def _cmd_verify(args) -> int:
    priv = _read_private(args.priv)
    pub = priv.public()
    failures = 0

    expected = oracle.brute_roots_of_unity(priv.n)
    if list(priv.unity_roots) == expected:
        print(f"roots of unity mod {priv.n}: OK ({len(expected)} roots)")
    else:
        print(f"roots of unity mod {priv.n}: MISMATCH", file=sys.stderr)
        failures += 1

    import math
    if args.exhaustive:
        if priv.n > _EXHAUSTIVE_BOUND:
            raise OracleBound(
                f"--exhaustive scans all units against an O(n) oracle each; "
                f"refusing for n = {priv.n} > {_EXHAUSTIVE_BOUND}")
        units = [m for m in range(1, priv.n) if math.gcd(m, priv.n) == 1]
    else:
        # each preimage check costs one O(n) oracle scan; keep total work flat
        rng = random.Random(0)
        sample_size = max(1, min(50, 20_000_000 // priv.n))
        units = []
        while len(units) < sample_size:
            m = rng.randrange(1, priv.n)
            if math.gcd(m, priv.n) == 1:
                units.append(m)
    bad = 0
    for m in units:
        c = core.encrypt(m, pub)
        if core.associates(m, pub) != oracle.brute_preimages(c, priv.n):
            bad += 1
        if core.decrypt(Envelope(c, core.rank_of(m, pub)), priv) != m:
            bad += 1
    if bad:
        print(f"associate sets / round trips: {bad} MISMATCHES", file=sys.stderr)
        failures += 1
    else:
        print(f"associate sets and round trips for {len(units)} messages: OK")
    return 2 if failures else 0


_COMMANDS = {
    "keygen": _cmd_keygen,
    "roots": _cmd_roots,
    "table": _cmd_table,
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "groups": _cmd_groups,
    "demo": _cmd_demo,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except QuarticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
