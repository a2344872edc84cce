"""Key generation, the quartic map c = m^4 mod n, and its inversion.

Three modulus regimes:

  PRIME       n = p with p = 5 (mod 8); four roots of unity, 4-to-1 map.
  COMPOSITE4  n = pq, p = q = 3 (mod 4); phi(n) = 4 (mod 8), the four
              "quartic" roots of unity coincide with the square roots of 1.
  COMPOSITE16 n = pq, p = q = 1 (mod 4); sixteen roots of unity, 16-to-1.

The PRIME condition is deliberately p = 5 (mod 8) rather than just
p = 1 (mod 4): the inverse exponent (a(p-1)+4)/16 has no integer solution
when 8 | p-1, so divisibility by 4 but not 8 is what the algebra forces.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from . import numtheory
from .errors import (
    ExponentUnavailable,
    MessageNotUnit,
    NoGenerator,
    NoQuarticStructure,
    NotAQuarticResidue,
    PrimesNotDistinct,
    RankOutOfRange,
)


class KeyMode(str, Enum):
    PRIME = "prime"
    COMPOSITE4 = "composite4"
    COMPOSITE16 = "composite16"


@dataclass(frozen=True)
class PublicKey:
    mode: KeyMode
    n: int
    unity_roots: tuple[int, ...]  # ascending, full solution set of x^4 = 1


@dataclass(frozen=True)
class PrivateKey:
    mode: KeyMode
    n: int
    p: int
    q: int | None            # absent in PRIME mode
    a: int | None            # Eq.-style multiplier; absent in COMPOSITE16
    d: int | None            # inverse exponent; absent in COMPOSITE16
    unity_roots: tuple[int, ...]

    def public(self) -> PublicKey:
        return PublicKey(self.mode, self.n, self.unity_roots)


@dataclass(frozen=True)
class Envelope:
    """What crosses the channel: the cipher plus the 1-indexed rank of the
    true message inside its ascending associate set."""
    cipher: int
    rank: int


def unity_roots_prime(p: int) -> list[int]:
    """The four solutions of x^4 = 1 mod p: {1, p-1, r, p-r} with r^2 = -1."""
    if p % 4 != 1:
        raise NoQuarticStructure(f"p = {p} is not 1 (mod 4); only +-1 solve x^4 = 1")
    pair = numtheory.sqrt_mod_prime(p - 1, p)
    assert pair is not None  # -1 is a QR whenever p = 1 (mod 4)
    r, pr = pair
    return sorted([1, p - 1, r, pr])


def _prime_fourth_roots_of_unity(p: int) -> list[int]:
    """Solution set of x^4 = 1 mod p for any odd prime (size gcd(4, p-1))."""
    if p % 4 == 1:
        return unity_roots_prime(p)
    return [1, p - 1]


def unity_roots_composite(p: int, q: int) -> list[int]:
    """CRT product of the per-prime solution sets of x^4 = 1.

    Size gcd(4, p-1) * gcd(4, q-1): sixteen when both primes are 1 (mod 4),
    four when both are 3 (mod 4).
    """
    if p == q:
        raise PrimesNotDistinct(f"p and q must differ, both are {p}")
    roots_p = _prime_fourth_roots_of_unity(p)
    roots_q = _prime_fourth_roots_of_unity(q)
    return sorted(numtheory.crt_combine(rp, p, rq, q)
                  for rp in roots_p for rq in roots_q)


def select_alpha(roots: list[int] | tuple[int, ...], n: int) -> int:
    """Smallest root of multiplicative order exactly 4 (so alpha^2 != 1)."""
    for r in sorted(roots):
        if pow(r, 2, n) != 1 and pow(r, 4, n) == 1:
            return r
    raise NoGenerator(f"no order-4 root of unity mod {n}")


def derive_exponent(totient: int) -> tuple[int, int]:
    """Smallest a with 16 | a*totient + 4, and d = (a*totient + 4) / 16.

    Requires totient = 4 (mod 8); then a = 3*(totient/4)^-1 (mod 4) always
    exists and d satisfies (c^d)^4 = c for every fourth-power unit c.
    """
    if totient % 8 != 4:
        raise ExponentUnavailable(
            f"totient {totient} is not 4 (mod 8); (a*totient+4)/16 is never integral")
    for a in range(1, 17):
        if (a * totient + 4) % 16 == 0:
            return a, (a * totient + 4) // 16
    raise ExponentUnavailable(f"no multiplier a found for totient {totient}")


def keygen(mode: KeyMode, bits: int, rng: random.Random,
           primes: tuple[int, ...] | None = None) -> tuple[PublicKey, PrivateKey]:
    """Generate a key pair; deterministic under a fixed rng seed.

    `primes` forces the prime(s) instead of searching, for reproducing
    fixed-parameter examples.
    """
    if mode is KeyMode.PRIME:
        p = primes[0] if primes else numtheory.generate_prime(bits, (5, 8), rng)
        roots = tuple(unity_roots_prime(p))
        a, d = derive_exponent(p - 1)
        priv = PrivateKey(mode, p, p, None, a, d, roots)
        return priv.public(), priv

    cls = (3, 4) if mode is KeyMode.COMPOSITE4 else (1, 4)
    if primes:
        p, q = primes
        if p == q:
            raise PrimesNotDistinct(f"p and q must differ, both are {p}")
    else:
        p = numtheory.generate_prime(bits, cls, rng)
        q = p
        while q == p:
            q = numtheory.generate_prime(bits, cls, rng)
    n = p * q
    roots = tuple(unity_roots_composite(p, q))
    if mode is KeyMode.COMPOSITE4:
        a, d = derive_exponent((p - 1) * (q - 1))
    else:
        a = d = None
    priv = PrivateKey(mode, n, p, q, a, d, roots)
    return priv.public(), priv


def _require_unit(m: int, n: int) -> None:
    # For composite n a non-unit message would expose a factor of n; refuse
    # without computing or reporting it.
    if not 1 <= m < n or math.gcd(m, n) != 1:
        raise MessageNotUnit(f"message must be a unit in [1, {n})")


def encrypt(m: int, key: PublicKey) -> int:
    """The quartic map c = m^4 mod n (4-to-1 or 16-to-1 on units)."""
    _require_unit(m, key.n)
    return pow(m, 4, key.n)


def associates(m: int, key: PublicKey) -> list[int]:
    """Ascending coset {m*r mod n : r a root of unity} = all preimages of
    encrypt(m)."""
    _require_unit(m, key.n)
    return sorted(m * r % key.n for r in key.unity_roots)


def rank_of(m: int, key: PublicKey) -> int:
    """1-indexed position of m in its own ascending associate set."""
    return associates(m, key).index(m) + 1


def extract_quartic_root(c: int, key: PrivateKey) -> int:
    """Some x with x^4 = c (mod n).

    PRIME and COMPOSITE4: x = c^d mod n. COMPOSITE16: two iterated square
    roots per prime, recombined by CRT; any branch works since decryption
    re-canonicalizes through the sorted associate set.
    """
    n = key.n
    c %= n
    if key.mode is KeyMode.COMPOSITE16:
        x = numtheory.crt_combine(_fourth_root_mod_prime(c % key.p, key.p), key.p,
                                  _fourth_root_mod_prime(c % key.q, key.q), key.q)
    else:
        x = pow(c, key.d, n)
    if pow(x, 4, n) != c:
        raise NotAQuarticResidue(f"{c} has no quartic root mod {n}")
    return x


def _fourth_root_mod_prime(c: int, p: int) -> int:
    pair = numtheory.sqrt_mod_prime(c, p)
    if pair is None:
        raise NotAQuarticResidue(f"{c} is not a square mod {p}")
    # For p = 1 (mod 4) both square roots of a fourth power are themselves
    # squares, so either branch admits a second root.
    pair2 = numtheory.sqrt_mod_prime(pair[0], p)
    if pair2 is None:
        pair2 = numtheory.sqrt_mod_prime(pair[1], p)
    if pair2 is None:
        raise NotAQuarticResidue(f"{c} is not a fourth power mod {p}")
    return pair2[0]


def decrypt(envelope: Envelope, key: PrivateKey) -> int:
    """Recover the message: extract one root, expand it to the full
    ascending associate set, and pick the member at the envelope's rank."""
    if not 1 <= envelope.rank <= len(key.unity_roots):
        raise RankOutOfRange(
            f"rank {envelope.rank} outside 1..{len(key.unity_roots)}")
    x = extract_quartic_root(envelope.cipher, key)
    members = sorted(x * r % key.n for r in key.unity_roots)
    return members[envelope.rank - 1]
