"""Ordinary partitions with the infinite-sequence conventions (lambda_0 = inf)."""

from __future__ import annotations

import json
import math


class Partition(tuple):
    """Weakly decreasing tuple of positive integers, trailing zeros trimmed."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not a partition: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def part(self, i: int):
        """1-based part; 0 beyond the length, +inf at i = 0."""
        if i <= 0:
            return math.inf
        return self[i - 1] if i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def add_box(self, i: int) -> "Partition":
        parts = list(self) + [0] * (i - len(self))
        parts[i - 1] += 1
        return Partition(parts)

    def remove_box(self, i: int) -> "Partition":
        parts = list(self)
        parts[i - 1] -= 1
        return Partition(parts)


EMPTY = Partition()


def corners2d(lam: Partition):
    """Concave and convex corners (i, j), 1-based."""
    lam = Partition(lam)
    concave = {(i, lam.part(i) + 1) for i in range(1, len(lam) + 2)
               if lam.part(i) < lam.part(i - 1)}
    convex = {(i, lam.part(i)) for i in range(1, len(lam) + 1)
              if lam.part(i) > lam.part(i + 1)}
    return concave, convex


def transpose(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def interlace_elevated(lam, mu, a: int, b: int) -> bool:
    """lam_i + a >= mu_{i+b} for all i >= 1."""
    lam, mu = Partition(lam), Partition(mu)
    return all(lam.part(i) + a >= mu.part(i + b) for i in range(1, len(mu) + 1))


def partitions_of(n: int, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text.startswith("["):
        return Partition(json.loads(text))
    text = text.strip("()").strip()
    if not text:
        return EMPTY
    return Partition(int(t) for t in text.split(","))


def format_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"
