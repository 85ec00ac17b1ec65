"""Partitions, colored partitions and the crank-type statistics on them.

These are brute-force oracles: every count here comes from listing the
objects one by one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import OracleBoundExceeded

# Largest weight each enumeration will accept unless the caller overrides it.
DEFAULT_BOUNDS = {"crank": 30, 2: 24, 3: 20}
DEFAULT_BOUND_MANY_COLORS = 16


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class ColoredPartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c))
                      for c in self.components)
        if len(comps) < 2:
            raise ValueError("a colored partition needs at least two components")
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def weight(self) -> int:
        return sum(c.weight for c in self.components)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as nonincreasing tuples."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def crank(p: Partition) -> int:
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    if not parts:
        raise ValueError("the crank is defined for partitions of n >= 1")
    ones = parts.count(1)
    if ones == 0:
        return parts[0]
    return sum(1 for x in parts if x > ones) - ones


def birank(pair: ColoredPartition) -> int:
    if pair.k != 2:
        raise ValueError(f"birank needs a pair of partitions, got {pair.k} components")
    return len(pair.components[0]) - len(pair.components[1])


def k_crank(tup: ColoredPartition) -> int:
    return len(tup.components[0]) - len(tup.components[1])


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def colored_partitions(n: int, k: int):
    """Yield every k-colored partition of n as a tuple of part tuples."""
    for weights in _compositions(n, k):
        yield from product(*(partitions_of(w) for w in weights))


def _bound(statistic: str, k: int | None) -> int:
    if statistic == "crank":
        return DEFAULT_BOUNDS["crank"]
    return DEFAULT_BOUNDS.get(k, DEFAULT_BOUND_MANY_COLORS)


def brute_counts(statistic: str, n: int, k: int | None = None,
                 bound: int | None = None) -> dict[int, int]:
    """Tally of the statistic over every object of weight n, by exhaustive listing.

    ``statistic`` is "crank", "birank" or "k_crank" (the last needs ``k``).
    At n = 0 the empty object is counted once with statistic 0.
    """
    if statistic == "birank":
        k = 2
    elif statistic == "k_crank":
        if k is None or k < 2:
            raise ValueError("k_crank needs k >= 2")
    elif statistic != "crank":
        raise ValueError(f"unknown statistic {statistic!r}")
    limit = _bound(statistic, k) if bound is None else bound
    if n > limit:
        raise OracleBoundExceeded(f"n={n} exceeds the enumeration bound {limit}")
    if n < 0:
        return {}
    if n == 0:
        return {0: 1}
    if statistic == "crank":
        tally = Counter(crank(p) for p in partitions_of(n))
    else:
        tally = Counter(len(c[0]) - len(c[1]) for c in colored_partitions(n, k))
    return dict(sorted(tally.items()))
