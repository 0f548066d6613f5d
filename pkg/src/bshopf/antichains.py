"""Enumeration and sampling of antichains (generating families for sweeps)."""
from __future__ import annotations

import random
from typing import Iterator

from .core import SetFamily


def all_antichains(n: int, min_size: int = 2) -> Iterator[SetFamily]:
    """Every antichain of subsets of ``0..n-1`` with at least ``min_size`` elements.

    The empty antichain is included.
    """
    cands = [m for m in range(1 << n) if m.bit_count() >= min_size]
    cands.sort(key=lambda m: (m.bit_count(), m))

    def walk(i: int, chosen: tuple[int, ...]):
        if i == len(cands):
            yield SetFamily(n, chosen)
            return
        yield from walk(i + 1, chosen)
        c = cands[i]
        # candidates come in increasing size, so only c can contain a chosen set
        if not any(s & c == s for s in chosen):
            yield from walk(i + 1, chosen + (c,))

    yield from walk(0, ())


def random_antichain(rng: random.Random, max_n: int = 8, min_n: int = 2,
                     max_sets: int = 8) -> SetFamily:
    """A random antichain of subsets of size >= 2 on ``min_n..max_n`` elements."""
    n = rng.randint(min_n, max_n)
    chosen: list[int] = []
    for _ in range(rng.randint(1, max_sets)):
        k = rng.randint(2, n)
        s = 0
        for e in rng.sample(range(n), k):
            s |= 1 << e
        if all(s & t != t and s & t != s for t in chosen):
            chosen.append(s)
    return SetFamily(n, tuple(chosen))


def sweep(exhaustive_n: int = 5, random_count: int = 1000, max_n: int = 8,
          seed: int = 20240611) -> Iterator[SetFamily]:
    """Every antichain on ``exhaustive_n`` elements, then seeded random ones."""
    yield from all_antichains(exhaustive_n)
    rng = random.Random(seed)
    for _ in range(random_count):
        yield random_antichain(rng, max_n=max_n)
