"""Brute-force volume of a matroid base polytope by counting lattice points.

The dilate ``t * P_M`` is cut out by ``0 <= x_i <= t``, ``sum x_i = t * rank``
and ``x(F) <= t * rank(F)`` for every subset ``F``. Counting its lattice
points for ``t = 0..D`` and taking the ``D``-th finite difference gives
``D!`` times the leading Ehrhart coefficient, i.e. the normalized volume
scaled by ``D!``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from matroidvol import kernels
from matroidvol.matroid import Matroid

DEFAULT_BUDGET = 10
BUDGET_ENV = "VOLUME_ORACLE_BUDGET"


class BudgetExceeded(RuntimeError):
    """The matroid is too large for lattice-point counting."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class OracleVolume:
    volume: Fraction
    scaled: int  # dimension! * volume
    dimension: int
    counts: tuple[int, ...]  # ehrhart counts at t = 0..dimension


def contains_lattice_point(m: Matroid, x: Sequence[int], t: int) -> bool:
    """Membership of ``x`` in ``t * P_M`` checked against every subset inequality."""
    if len(x) != m.ground_size:
        raise ValueError(f"point has {len(x)} coordinates, ground set has {m.ground_size}")
    if sum(x) != t * m.rank or any(v < 0 or v > t for v in x):
        return False
    for mask in range(1, 1 << m.ground_size):
        s = sum(x[i] for i in range(m.ground_size) if mask >> i & 1)
        if s > t * m.rank_mask(mask):
            return False
    return True


def _constraints(m: Matroid) -> tuple[list[int], list[int]]:
    """Proper dependent flats with their ranks.

    The other subset inequalities are implied: a non-flat is dominated by its
    closure, an independent set by the box, the ground set by the equation.
    """
    masks, ranks = [], []
    full = m.full_mask
    for mask in range(1, full):
        r = m.rank_mask(mask)
        if r < mask.bit_count() and m.is_flat(mask):
            masks.append(mask)
            ranks.append(r)
    return masks, ranks


def ehrhart_count(m: Matroid, t: int) -> int:
    """Number of lattice points in ``t * P_M``."""
    if t < 0:
        raise ValueError("dilation must be non-negative")
    masks, ranks = _constraints(m)
    return kernels.count_lattice_points(
        m.ground_size, t, t * m.rank, masks, [t * r for r in ranks]
    )


def _components(m: Matroid) -> int:
    # union-find on "share a circuit"
    parent = list(range(m.ground_size))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for c in m.circuit_masks:
        elems = [e for e in range(m.ground_size) if c >> e & 1]
        for e in elems[1:]:
            a, b = find(elems[0]), find(e)
            if a != b:
                parent[b] = a
    return len({find(e) for e in range(m.ground_size)})


def polytope_dimension(m: Matroid) -> int:
    return m.ground_size - _components(m)


def oracle_volume(m: Matroid, budget: int | None = None, threads: int = 1,
                  extra_level: bool = False) -> OracleVolume:
    """Normalized volume from the leading finite difference of lattice-point counts.

    With ``extra_level`` one more dilation is counted so callers can check that
    the next finite difference vanishes.
    """
    if budget is None:
        budget = default_budget()
    if m.ground_size > budget:
        raise BudgetExceeded(
            f"ground set of size {m.ground_size} exceeds the oracle budget of {budget}"
        )
    dim = polytope_dimension(m)
    masks, ranks = _constraints(m)
    levels = range(dim + 2 if extra_level else dim + 1)

    def count(t):
        return kernels.count_lattice_points(m.ground_size, t, t * m.rank, masks, [t * r for r in ranks])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = tuple(pool.map(count, levels))
    else:
        counts = tuple(count(t) for t in levels)
    scaled = finite_difference(counts[: dim + 1])
    return OracleVolume(Fraction(scaled, factorial(dim)), scaled, dim, counts)


def finite_difference(values: Sequence[int]) -> int:
    """``sum (-1)^j C(D, j) values[D - j]`` with ``D = len(values) - 1``."""
    top = len(values) - 1
    return sum((-1) ** j * comb(top, j) * values[top - j] for j in range(top + 1))


def vertices(m: Matroid) -> list[tuple[int, ...]]:
    """Incidence vectors of the bases, sorted."""
    return sorted(
        tuple(1 if b >> i & 1 else 0 for i in range(m.ground_size)) for b in m.basis_masks
    )


def brute_force_count(m: Matroid, t: int) -> int:
    """Reference count: every box point, every subset constraint. Tiny inputs only."""
    total = t * m.rank
    count = 0

    def rec(prefix, rem, k):
        nonlocal count
        if k == m.ground_size:
            if rem == 0 and contains_lattice_point(m, prefix, t):
                count += 1
            return
        for v in range(0, min(t, rem) + 1):
            rec(prefix + [v], rem - v, k + 1)

    rec([], total, 0)
    return count

