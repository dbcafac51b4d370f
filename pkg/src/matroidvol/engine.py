"""Volumes of matroid base polytopes from anchored chains of cyclic flats.

For a connected loopless matroid on ``{0..n}`` of rank ``d+1`` every chain
``F`` of proper cyclic flats yields a descent sequence ``b_F`` in ``L_d(n)``
and the normalized volume is ``sum mu(F) * delta_leq(b_F) / n!``, the
weights ``mu`` coming from the refinement poset of chains with a bottom
element adjoined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from matroidvol.descent import BinarySequence, delta_leq, eulerian
from matroidvol.matroid import CyclicFlat, Matroid, PreconditionError, schubert


@dataclass(frozen=True)
class CyclicFlatChain:
    """Proper cyclic flats ``F_1 < ... < F_k``; the anchors ``{}`` and ``E`` are implicit."""

    flats: tuple[CyclicFlat, ...] = ()

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.flats)

    def __len__(self) -> int:
        return len(self.flats)

    def as_lists(self) -> list[list[int]]:
        return [sorted(f.elements) for f in self.flats]

    def refines(self, other: "CyclicFlatChain") -> bool:
        return set(other.masks) <= set(self.masks)


def _require_connected_loopless(m: Matroid) -> None:
    if m.ground_size < 2 or not 1 <= m.rank <= m.ground_size - 1:
        raise PreconditionError(
            f"need 1 <= rank <= ground_size - 1, got rank {m.rank} on {m.ground_size} elements"
        )
    if m.loops():
        raise PreconditionError("matroid has loops; delete them first")
    if not m.is_connected():
        raise PreconditionError("matroid is disconnected; decompose it first")


def make_chain(m: Matroid, flats: Iterable[Iterable[int]]) -> CyclicFlatChain:
    """Validate a chain of proper cyclic flats of ``m`` given as element lists."""
    cyclic = set(m.cyclic_flat_masks)
    out = []
    prev_rank = prev_null = 0
    prev_mask = 0
    for elems in flats:
        f = frozenset(elems)
        mask = sum(1 << e for e in f)
        if mask not in cyclic or mask in (0, m.full_mask):
            raise PreconditionError(f"{sorted(f)} is not a proper cyclic flat")
        if mask & prev_mask != prev_mask or mask == prev_mask:
            raise PreconditionError("chain members must strictly increase by inclusion")
        r = m.rank_mask(mask)
        null = len(f) - r
        if r <= prev_rank or null <= prev_null:
            raise PreconditionError("rank and nullity must strictly increase along the chain")
        out.append(CyclicFlat(f, r, mask))
        prev_rank, prev_null, prev_mask = r, null, mask
    if out and (m.rank <= prev_rank or m.ground_size - m.rank <= prev_null):
        raise PreconditionError("last flat must have smaller rank and nullity than the ground set")
    return CyclicFlatChain(tuple(out))


def chain_to_sequence(m: Matroid, chain: CyclicFlatChain) -> BinarySequence:
    """Blocks ``1^(rank increment) 0^(nullity increment)`` between consecutive anchored flats."""
    bits: list[int] = []
    prev_rank = prev_null = 0
    steps = [(f.rank, len(f) - f.rank) for f in chain.flats]
    steps.append((m.rank, m.ground_size - m.rank))
    for r, null in steps:
        if r <= prev_rank or null <= prev_null:
            raise PreconditionError("chain does not embed in L_d(n): rank/nullity not strictly increasing")
        bits += [1] * (r - prev_rank) + [0] * (null - prev_null)
        prev_rank, prev_null = r, null
    return BinarySequence(tuple(bits))


def sequence_to_chain(b: BinarySequence) -> list[frozenset[int]]:
    """Initial segments ``{0..i}`` ending at each position ``i`` where a 0 is followed by a 1."""
    bits = b.bits
    return [frozenset(range(i + 1)) for i in range(len(bits) - 1) if bits[i] == 0 and bits[i + 1] == 1]


def proper_cyclic_flats(m: Matroid) -> list[CyclicFlat]:
    full = m.full_mask
    return [f for f in m.cyclic_flats() if f.mask not in (0, full)]


def enumerate_chains(m: Matroid) -> list[CyclicFlatChain]:
    """Every chain of proper cyclic flats, empty chain first, in depth-first mask order."""
    flats = sorted(proper_cyclic_flats(m), key=lambda f: f.mask)
    out: list[CyclicFlatChain] = []

    def extend(prefix: tuple[CyclicFlat, ...]):
        out.append(CyclicFlatChain(prefix))
        last = prefix[-1].mask if prefix else 0
        for f in flats:
            if f.mask != last and f.mask & last == last:
                extend(prefix + (f,))

    extend(())
    return out


@dataclass
class ChainPoset:
    """Chains ordered by refinement, with weights ``-mu(bottom, F)`` in the poset with a bottom adjoined."""

    matroid: Matroid
    chains: list[CyclicFlatChain]
    mobius: dict[CyclicFlatChain, int]

    def leq(self, a: CyclicFlatChain, b: CyclicFlatChain) -> bool:
        return a.refines(b)

    @property
    def top(self) -> CyclicFlatChain:
        return CyclicFlatChain(())


def mobius_weights(chains: list[CyclicFlatChain]) -> dict[CyclicFlatChain, int]:
    """Möbius recursion from an adjoined bottom; returns the negated values."""
    keyed = [(frozenset(c.masks), c) for c in chains]
    # strictly finer chains are longer, so process longest first
    keyed.sort(key=lambda kc: -len(kc[0]))
    mu_from_bottom: dict[frozenset[int], int] = {}
    for key, _ in keyed:
        below = sum(v for other, v in mu_from_bottom.items() if key < other)
        mu_from_bottom[key] = -1 - below
    return {c: -mu_from_bottom[frozenset(c.masks)] for c in chains}


def build_chain_poset(m: Matroid) -> ChainPoset:
    _require_connected_loopless(m)
    chains = enumerate_chains(m)
    return ChainPoset(m, chains, mobius_weights(chains))


@dataclass(frozen=True)
class ChainTerm:
    chain: CyclicFlatChain
    sequence: BinarySequence
    mobius: int
    delta_leq: int


def chain_terms(m: Matroid) -> list[ChainTerm]:
    """One row per anchored chain: ``b_F``, its weight and ``delta_leq(b_F)``."""
    poset = build_chain_poset(m)
    rows = []
    for c in poset.chains:
        b = chain_to_sequence(m, c)
        rows.append(ChainTerm(c, b, poset.mobius[c], delta_leq(b)))
    return rows


def volume_connected(m: Matroid) -> Fraction:
    n = m.ground_size - 1
    total = sum(t.mobius * t.delta_leq for t in chain_terms(m) if t.mobius)
    if total <= 0:
        raise AssertionError(f"non-positive chain sum {total}; the matroid data is inconsistent")
    return Fraction(total, factorial(n))


def nonloop_components(m: Matroid) -> list[tuple[Matroid, tuple[int, ...]]]:
    """Connected components after deleting loops, each relabelled, with original labels."""
    loops = m.loops()
    out = []
    for comp in m.connected_components():
        if comp <= loops:
            continue
        out.append(m.restriction(comp))
    return out


def dimension(m: Matroid) -> int:
    """Dimension of the base polytope: ground size minus number of components."""
    return m.ground_size - len(m.connected_components())


def volume(m: Matroid) -> Fraction:
    """Normalized volume of ``P_M`` for any matroid, via the product over components."""
    result = Fraction(1)
    for comp, _ in nonloop_components(m):
        if comp.ground_size == 1:
            continue  # a coloop contributes a point
        result *= volume_connected(comp)
    return result


def normalized_numerator(m: Matroid, vol: Fraction) -> int:
    """``D! * vol`` with ``D`` the polytope dimension (``n! * vol`` when connected)."""
    scaled = vol * factorial(dimension(m))
    if scaled.denominator != 1:
        raise AssertionError(f"{vol} times {dimension(m)}! is not an integer")
    return scaled.numerator


# --- closed forms ------------------------------------------------------------

def schubert_volume(b: BinarySequence) -> Fraction:
    """``delta_leq(b) / n!``; requires the Schubert matroid of ``b`` to be connected."""
    if not schubert(b).is_connected():
        raise PreconditionError(f"Schubert matroid of {b} is disconnected")
    return Fraction(delta_leq(b), factorial(b.n))


def sparse_paving_volume(n: int, d: int, alpha: int) -> Fraction:
    """``(A(n,d) - alpha * C(n-1, d)) / n!`` for a connected sparse paving matroid."""
    if alpha < 0:
        raise PreconditionError("alpha must be non-negative")
    value = eulerian(n, d) - alpha * comb(n - 1, d)
    if value <= 0:
        raise PreconditionError(f"no connected sparse paving matroid has n={n}, d={d}, alpha={alpha}")
    return Fraction(value, factorial(n))


def relaxation_volume(m: Matroid, hyperplane: Iterable[int]) -> Fraction:
    """Volume after relaxing ``hyperplane``: ``volume(m) + C(n-1, d) / n!``."""
    h = list(hyperplane)
    if not m.is_circuit_hyperplane(h):
        raise PreconditionError(f"{sorted(h)} is not a circuit-hyperplane")
    _require_connected_loopless(m)
    n, d = m.ground_size - 1, m.rank - 1
    return volume(m) + Fraction(comb(n - 1, d), factorial(n))


def chain_from_sequence(m: Matroid, b: BinarySequence) -> CyclicFlatChain:
    """The chain ``F_b`` as a validated chain of ``m``."""
    return make_chain(m, [sorted(f) for f in sequence_to_chain(b)])

