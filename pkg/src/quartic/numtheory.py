"""Arbitrary-precision modular arithmetic primitives.

All functions are pure and operate on Python ints (never floats), so every
result is exact at any size. Randomness is always passed in explicitly.
"""

from __future__ import annotations

import math
import random

from .errors import (
    GenerationFailed,
    InvalidModulus,
    ModuliNotCoprime,
    NotAUnit,
    NotInvertible,
    NotPrime,
    OrderNotFound,
    UndefinedGcd,
)

# These witnesses decide primality deterministically for all n < 3.3 * 10^24,
# which comfortably covers the 2^64 contract.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIME_SEARCH_BUDGET = 10_000


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base^exponent mod modulus by square-and-multiply (O(log exponent))."""
    if modulus < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {modulus}")
    return pow(base, exponent, modulus)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    if a == 0 and b == 0:
        raise UndefinedGcd("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """The b in (0, m) with a*b = 1 (mod m); requires gcd(a, m) = 1."""
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible mod {m} (gcd = {g})")
    return x % m


def crt_combine(r_p: int, p: int, r_q: int, q: int) -> int:
    """The unique x in [0, pq) with x = r_p (mod p) and x = r_q (mod q).

    Uses the direct reconstruction
        x = (r_p * q * inv(q mod p) + r_q * p * inv(p mod q)) mod pq,
    with each inverse taken modulo the other prime.
    """
    if math.gcd(p, q) != 1:
        raise ModuliNotCoprime(f"moduli {p} and {q} are not coprime")
    n = p * q
    x = r_p * q * mod_inverse(q, p) + r_q * p * mod_inverse(p, q)
    return x % n


def crt_combine_euclid(r_p: int, p: int, r_q: int, q: int) -> int:
    """Same contract as crt_combine, solved via Bezout coefficients.

    Kept as an independent path so the two CRT implementations can be
    cross-checked against each other.
    """
    g, x, y = ext_gcd(p, q)
    if g != 1:
        raise ModuliNotCoprime(f"moduli {p} and {q} are not coprime")
    n = p * q
    # p*x = 1 (mod q) and q*y = 1 (mod p)
    return (r_p * q * y + r_q * p * x) % n


def sqrt_mod_prime(a: int, p: int) -> tuple[int, int] | None:
    """Square roots of a modulo an odd prime p, via Tonelli-Shanks.

    Returns the pair (r, p - r) sorted ascending if a is a quadratic
    residue, (0, 0) if a = 0, and None for a non-residue.
    """
    if not is_probable_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return (0, 0)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return (min(r, p - r), max(r, p - r))
    # Tonelli-Shanks: write p - 1 = s * 2^e with s odd.
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    # Any quadratic non-residue serves as the generator z.
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(z, s, p)
    r = e
    while b != 1:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        x = x * gs % p
        g = gs * gs % p
        b = b * g % p
        r = m
    return (min(x, p - x), max(x, p - x))


def is_probable_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin test; deterministic for n < 2^64, else error < 4^-rounds."""
    if n < 2:
        return False
    for sp in _MR_WITNESSES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1

    def composite_witness(a: int) -> bool:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    bases: list[int] = list(_MR_WITNESSES)
    if n >= 1 << 64:
        bases += [random.randrange(2, n - 1) for _ in range(rounds)]
    return not any(composite_witness(a) for a in bases)


def generate_prime(bits: int, residue_class: tuple[int, int],
                   rng: random.Random) -> int:
    """A probable prime of exactly `bits` bits with p = r (mod modulus).

    Rejection-samples candidates in the residue class; deterministic for a
    fixed rng seed. Gives up after a bounded number of attempts.
    """
    if bits < 4:
        raise GenerationFailed(f"need bits >= 4, got {bits}")
    r, modulus = residue_class
    lo, hi = 1 << (bits - 1), 1 << bits
    for _ in range(_PRIME_SEARCH_BUDGET):
        cand = rng.randrange(lo, hi)
        cand += (r - cand) % modulus
        if not lo <= cand < hi:
            continue
        if is_probable_prime(cand):
            return cand
    raise GenerationFailed(
        f"no {bits}-bit prime = {r} (mod {modulus}) found in "
        f"{_PRIME_SEARCH_BUDGET} attempts")


def multiplicative_order(x: int, n: int, cap: int = 16) -> int:
    """Smallest k <= cap with x^k = 1 (mod n)."""
    if math.gcd(x, n) != 1:
        raise NotAUnit(f"gcd({x}, {n}) != 1")
    acc = 1
    for k in range(1, cap + 1):
        acc = acc * x % n
        if acc == 1:
            return k
    raise OrderNotFound(f"order of {x} mod {n} exceeds {cap}")
