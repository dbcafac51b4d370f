"""Pure-Python versions of the hot loops; same signatures as ``_kernels.pyx``."""

from __future__ import annotations


def rank_table(bases, ground_size):
    """Rank of every subset of ``range(ground_size)``, indexed by bitmask."""
    size = 1 << ground_size
    indep = bytearray(size)
    for b in bases:
        indep[b] = 1
    # downward closure: a set is independent iff it sits inside a basis
    for mask in range(size - 1, -1, -1):
        if indep[mask]:
            continue
        rest = ~mask & (size - 1)
        while rest:
            low = rest & -rest
            if indep[mask | low]:
                indep[mask] = 1
                break
            rest ^= low
    rank = [0] * size
    for mask in range(1, size):
        if indep[mask]:
            rank[mask] = mask.bit_count()
        else:
            best = 0
            m = mask
            while m:
                low = m & -m
                r = rank[mask ^ low]
                if r > best:
                    best = r
                m ^= low
            rank[mask] = best
    return rank


def exchange_violation(bases):
    """First ``(B1, B2, x)`` violating basis exchange, or ``None``."""
    family = set(bases)
    ordered = sorted(family)
    for b1 in ordered:
        for b2 in ordered:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            x_bits = only1
            while x_bits:
                x = x_bits & -x_bits
                x_bits ^= x
                base = b1 ^ x
                y_bits = only2
                found = False
                while y_bits:
                    y = y_bits & -y_bits
                    y_bits ^= y
                    if base | y in family:
                        found = True
                        break
                if not found:
                    return b1, b2, x.bit_length() - 1
    return None


def count_lattice_points(ground_size, t, total, masks, bounds):
    """Count integer ``x`` with ``0 <= x_i <= t``, ``sum x = total`` and ``x(F) <= bound`` per mask.

    Constraints are checked on partial sums as coordinates are fixed, which
    prunes early because every coordinate is non-negative.
    """
    m = ground_size
    if total < 0 or total > t * m:
        return 0
    by_elem = [[j for j, mask in enumerate(masks) if mask >> e & 1] for e in range(m)]
    partial = [0] * len(masks)
    bounds = list(bounds)

    def rec(k, rem):
        if k == m - 1:
            if rem > t:
                return 0
            for j in by_elem[k]:
                if partial[j] + rem > bounds[j]:
                    return 0
            return 1
        lo = max(0, rem - t * (m - k - 1))
        hi = min(t, rem)
        count = 0
        cons = by_elem[k]
        for v in range(lo, hi + 1):
            ok = True
            for j in cons:
                if partial[j] + v > bounds[j]:
                    ok = False
                    break
            if not ok:
                # larger v only makes partial sums larger
                break
            for j in cons:
                partial[j] += v
            count += rec(k + 1, rem - v)
            for j in cons:
                partial[j] -= v
        return count

    if m == 0:
        return 1 if total == 0 else 0
    return rec(0, total)
