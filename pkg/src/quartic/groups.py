"""Partition of the sixteen roots of unity into six order-4 cyclic groups.

Each order-4 root x shares its cyclic group {1, x, x^2, x^3} with its
inverse x^3; the twelve order-4 roots therefore collapse into six groups.
The three involutions (x != 1 with x^2 = 1) appear only as the repeated
middle elements, each showing up in exactly two groups. Drawing one of the
six groups uniformly gives a 1/6 probability event.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotSixteenRoots


@dataclass(frozen=True)
class RootGroup:
    generator: int
    members: tuple[int, int, int, int]  # (1, g, g^2, g^3) mod n


@dataclass(frozen=True)
class GroupPartition:
    n: int
    groups: tuple[RootGroup, ...]   # exactly 6, ascending by generator
    involutions: tuple[int, ...]    # the 3 repeated squares, ascending


def partition_groups(roots: list[int] | tuple[int, ...], n: int) -> GroupPartition:
    """Group the 16 unity roots into the six order-4 cyclic subgroups.

    Groups are keyed by their smaller order-4 generator (x vs x^3), making
    the partition deterministic. Roots with x^2 = 1 would only yield the
    degenerate pattern {1, x, 1, x} and are excluded from generating.
    """
    roots = sorted(roots)
    if len(roots) != 16 or any(pow(r, 4, n) != 1 for r in roots):
        raise NotSixteenRoots(f"expected the 16 roots of x^4 = 1 mod {n}")
    order4 = [r for r in roots if r * r % n != 1]
    involutions = tuple(r for r in roots if r != 1 and r * r % n == 1)

    groups = []
    seen: set[int] = set()
    for g in order4:
        if g in seen:
            continue
        inv = pow(g, 3, n)
        seen.update((g, inv))
        groups.append(RootGroup(g, (1, g, g * g % n, inv)))
    groups.sort(key=lambda grp: grp.generator)
    return GroupPartition(n, tuple(groups), involutions)


def sample_event(partition: GroupPartition, rng: random.Random) -> int:
    """Uniform 1-indexed draw over the six groups (a 1/6 event)."""
    return rng.randrange(len(partition.groups)) + 1
