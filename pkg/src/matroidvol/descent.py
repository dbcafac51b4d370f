"""Binary descent sequences, the prefix-dominance order and descent counts.

A sequence of length ``n + 1`` that starts with 1, ends with 0 and has
``d + 1`` ones is an element of the poset ``L_d(n)``. Descent counts are
exact Python integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, combinations
from math import comb
from typing import Iterable, Sequence


class InvalidSequence(ValueError):
    """Raised when bits do not describe an element of any ``L_d(n)``."""


@dataclass(frozen=True)
class BinarySequence:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) < 2:
            raise InvalidSequence("a descent sequence needs at least two bits")
        if any(b not in (0, 1) for b in bits):
            raise InvalidSequence(f"bits must be 0 or 1, got {bits}")
        if bits[0] != 1:
            raise InvalidSequence("sequence must start with 1")
        if bits[-1] != 0:
            raise InvalidSequence("sequence must end with 0")

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InvalidSequence(f"not a 0/1 string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.bits) - 1

    @property
    def d(self) -> int:
        return sum(self.bits) - 1

    def prefix_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.bits))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __len__(self) -> int:
        return len(self.bits)


def seq_new(bits: Iterable[int] | str) -> BinarySequence:
    """Validate ``bits`` and return the sequence; strings like ``"11010"`` are accepted."""
    if isinstance(bits, str):
        return BinarySequence.from_string(bits)
    return BinarySequence(tuple(bits))


def top(n: int, d: int) -> BinarySequence:
    """``1^{d+1} 0^{n-d}``, the maximum of ``L_d(n)``."""
    _check_nd(n, d)
    return BinarySequence((1,) * (d + 1) + (0,) * (n - d))


def bottom(n: int, d: int) -> BinarySequence:
    """``1 0^{n-d-1} 1^d 0``, the minimum of ``L_d(n)``."""
    _check_nd(n, d)
    return BinarySequence((1,) + (0,) * (n - d - 1) + (1,) * d + (0,))


def _check_nd(n: int, d: int) -> None:
    if n < 1 or not 0 <= d < n:
        raise ValueError(f"need n >= 1 and 0 <= d < n, got n={n}, d={d}")


def _same_poset(a: BinarySequence, b: BinarySequence) -> None:
    if (a.n, a.d) != (b.n, b.d):
        raise ValueError(
            f"sequences lie in different posets: L_{a.d}({a.n}) vs L_{b.d}({b.n})"
        )


def seq_leq(a: BinarySequence, b: BinarySequence) -> bool:
    """Prefix-sum dominance: every prefix of ``a`` has at most as many ones as ``b``'s."""
    _same_poset(a, b)
    return all(x <= y for x, y in zip(a.prefix_sums(), b.prefix_sums()))


def enumerate_sequences(n: int, d: int) -> list[BinarySequence]:
    """All ``C(n-1, d)`` elements of ``L_d(n)`` in lexicographic order of bits."""
    _check_nd(n, d)
    out = []
    for ones in combinations(range(1, n), d):
        bits = [0] * (n + 1)
        bits[0] = 1
        for i in ones:
            bits[i] = 1
        out.append(BinarySequence(tuple(bits)))
    out.sort(key=lambda s: s.bits)
    return out


def descent_sequence(word: Sequence[int]) -> BinarySequence:
    """Binary descent sequence of a permutation of ``1..n`` in one-line notation."""
    w = tuple(word)
    n = len(w)
    if n < 1 or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    inner = tuple(1 if w[i] > w[i + 1] else 0 for i in range(n - 1))
    return BinarySequence((1,) + inner + (0,))


@lru_cache(maxsize=None)
def _delta_bits(bits: tuple[int, ...]) -> int:
    # Prefix DP: ways[j] counts arrangements of the first i values where the
    # last one has relative rank j (0-based) among them.
    n = len(bits) - 1
    ways = [1]
    for i in range(1, n):
        size = len(ways) + 1
        if bits[i]:
            # descent: new relative rank j < old relative rank
            suffix = [0] * (size + 1)
            for j in range(size - 2, -1, -1):
                suffix[j] = suffix[j + 1] + ways[j]
            ways = [suffix[j] for j in range(size)]
        else:
            prefix = [0] * (size + 1)
            for j in range(size - 1):
                prefix[j + 1] = prefix[j] + ways[j]
            ways = [prefix[j] for j in range(size)]
    return sum(ways)


def delta(b: BinarySequence) -> int:
    """Number of permutations of ``[n]`` whose descent sequence is exactly ``b``."""
    return _delta_bits(b.bits)


def down_set(b: BinarySequence) -> list[BinarySequence]:
    """The order ideal ``{a in L_d(n) : a <= b}``, ``b`` included, in lexicographic order."""
    return [a for a in enumerate_sequences(b.n, b.d) if seq_leq(a, b)]


@lru_cache(maxsize=None)
def _delta_leq_bits(bits: tuple[int, ...]) -> int:
    b = BinarySequence(bits)
    return sum(delta(a) for a in down_set(b))


def delta_leq(b: BinarySequence) -> int:
    """Sum of :func:`delta` over the order ideal below ``b``."""
    return _delta_leq_bits(b.bits)


def dual_sequence(b: BinarySequence) -> BinarySequence:
    """The involution ``(b_0, b_{n-1}, ..., b_1, b_n)``."""
    bits = b.bits
    return BinarySequence((bits[0],) + bits[-2:0:-1] + (bits[-1],))


@lru_cache(maxsize=None)
def eulerian(n: int, d: int) -> int:
    """Eulerian number: permutations of ``[n]`` with exactly ``d`` descents."""
    _check_nd(n, d)
    k = d + 1
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


@dataclass(frozen=True)
class PartitionInBox:
    """A partition fitting in a ``rows x cols`` rectangle."""

    parts: tuple[int, ...]
    rows: int
    cols: int

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive (trailing zeros are suppressed)")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if len(parts) > self.rows or (parts and parts[0] > self.cols):
            raise ValueError(
                f"partition {parts} does not fit in a {self.rows}x{self.cols} box"
            )

    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.rows - len(self.parts))

    def contained_in(self, other: "PartitionInBox") -> bool:
        return all(x <= y for x, y in zip(self.padded(), other.padded()))

    @property
    def size(self) -> int:
        return sum(self.parts)


def to_partition(b: BinarySequence) -> PartitionInBox:
    """Young-lattice image: one part per interior 1, counting zeros strictly between it and position ``n``."""
    n, d = b.n, b.d
    bits = b.bits
    lam = []
    for i in range(1, n):
        if bits[i]:
            lam.append(sum(1 for k in range(i + 1, n) if bits[k] == 0))
    parts = tuple(p for p in lam if p > 0)
    return PartitionInBox(parts, rows=d, cols=n - d - 1)


def from_partition(p: PartitionInBox | Sequence[int], n: int, d: int) -> BinarySequence:
    """Inverse of :func:`to_partition` for the ``d x (n-d-1)`` box."""
    _check_nd(n, d)
    parts = tuple(p.parts if isinstance(p, PartitionInBox) else p)
    parts = tuple(x for x in parts if x != 0)
    box = PartitionInBox(parts, rows=d, cols=n - d - 1)
    bits = [0] * (n + 1)
    bits[0] = 1
    for j, lam in enumerate(box.padded(), start=1):
        bits[n - 1 - d + j - lam] = 1
    return BinarySequence(tuple(bits))
