"""Brute-force reference implementations.

Plain exhaustive loops, deliberately sharing no code with the fast paths,
so the two cannot fail the same way. Desk scale only.
"""

from __future__ import annotations

import math

from .errors import NoGenerator, OracleBound

LIMIT = 10 ** 7


def _check_bound(n: int) -> None:
    if n >= LIMIT:
        raise OracleBound(f"modulus {n} exceeds oracle bound {LIMIT}")


def brute_roots_of_unity(n: int) -> list[int]:
    """All x in [1, n) with x^4 = 1 (mod n), by direct scan."""
    _check_bound(n)
    return [x for x in range(1, n) if x * x % n * x % n * x % n == 1]


def brute_preimages(c: int, n: int) -> list[int]:
    """All units x in [1, n) with x^4 = c (mod n), by direct scan."""
    _check_bound(n)
    c %= n
    return [x for x in range(1, n)
            if math.gcd(x, n) == 1 and x * x % n * x % n * x % n == c]


def table_for_prime(p: int, alpha: int) -> list[tuple[int, int, int, int, int]]:
    """Rows (m, m*alpha, m*alpha^2, m*alpha^3, m^4 mod p), one per 4-to-1
    class, each headed by its smallest not-yet-emitted representative."""
    _check_bound(p)
    a2, a3 = alpha * alpha % p, alpha * alpha % p * alpha % p
    if alpha % p in (0, 1) or a2 == 1 or pow(alpha, 4, p) != 1:
        raise NoGenerator(f"{alpha} does not have order 4 mod {p}")
    rows = []
    seen: set[int] = set()
    for m in range(1, p):
        if m in seen:
            continue
        row = (m, m * alpha % p, m * a2 % p, m * a3 % p, pow(m, 4, p))
        seen.update(row[:4])
        rows.append(row)
    return rows
