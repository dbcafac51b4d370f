"""Generated test families: hypersimplices, Schubert matroids, greedy sparse paving matroids."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from matroidvol.descent import enumerate_sequences
from matroidvol.matroid import Matroid, schubert, sparse_paving, uniform

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def hypersimplices(max_n: int) -> Iterator[tuple[int, int, Matroid]]:
    """``(n, d, U_{d+1,n+1})`` for ``1 <= n <= max_n`` and ``0 <= d < n``."""
    for n in range(1, max_n + 1):
        for d in range(n):
            yield n, d, uniform(d + 1, n + 1)


def schubert_matroids(max_n: int):
    for n in range(1, max_n + 1):
        for d in range(n):
            for b in enumerate_sequences(n, d):
                yield b, schubert(b)


def greedy_circuit_hyperplanes(n: int, d: int, order: Sequence[Sequence[int]] | None = None) -> list[tuple[int, ...]]:
    """Scan ``(d+1)``-subsets and keep each one meeting every kept set in at most ``d-1`` elements."""
    if order is None:
        order = list(combinations(range(n + 1), d + 1))
    chosen: list[tuple[int, ...]] = []
    for cand in order:
        s = set(cand)
        if all(len(s & set(c)) <= d - 1 for c in chosen):
            chosen.append(tuple(sorted(cand)))
    return chosen


def random_circuit_hyperplanes(n: int, d: int, alpha: int, seed: int) -> list[tuple[int, ...]]:
    """Greedy family over a seeded shuffle, truncated to ``alpha`` members."""
    order = list(combinations(range(n + 1), d + 1))
    random.Random(seed).shuffle(order)
    family = greedy_circuit_hyperplanes(n, d, order)
    if alpha > len(family):
        raise ValueError(f"greedy scan found only {len(family)} circuit-hyperplanes, asked for {alpha}")
    return family[:alpha]


@dataclass(frozen=True)
class SparsePavingInstance:
    n: int
    d: int
    hyperplanes: tuple[tuple[int, ...], ...]
    matroid: Matroid

    @property
    def alpha(self) -> int:
        return len(self.hyperplanes)


def sparse_paving_instances(max_n: int, seeds: Sequence[int] = (1, 2, 3)) -> list[SparsePavingInstance]:
    """Every prefix of the lexicographic greedy family and of a few seeded greedy families.

    Only connected instances with ``d >= 1`` are returned; duplicates are dropped.
    """
    out = []
    seen = set()
    for n in range(2, max_n + 1):
        for d in range(1, n):
            orders = [None]
            for seed in seeds:
                order = list(combinations(range(n + 1), d + 1))
                random.Random(seed * 1000 + 10 * n + d).shuffle(order)
                orders.append(order)
            for order in orders:
                family = greedy_circuit_hyperplanes(n, d, order)
                for k in range(len(family) + 1):
                    key = (n, d, frozenset(family[:k]))
                    if key in seen:
                        continue
                    seen.add(key)
                    m = sparse_paving(n, d, family[:k])
                    if m.is_connected():
                        out.append(SparsePavingInstance(n, d, tuple(family[:k]), m))
    return out
