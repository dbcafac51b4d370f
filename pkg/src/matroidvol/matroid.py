"""Small explicit matroids on ``{0, ..., m-1}`` stored as a family of basis bitmasks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from matroidvol import kernels
from matroidvol.descent import BinarySequence

# pair checks above this need an explicit ``validate=False``
EXCHANGE_CHECK_LIMIT = 10**8


class MatroidError(ValueError):
    """The input does not describe a matroid."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. relaxing a non circuit-hyperplane)."""


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def _sorted_elems(mask: int) -> list[int]:
    return sorted(from_mask(mask))


@dataclass(frozen=True)
class CyclicFlat:
    elements: frozenset[int]
    rank: int
    mask: int = field(repr=False, compare=False, default=-1)

    def __post_init__(self):
        if self.mask < 0:
            object.__setattr__(self, "mask", to_mask(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def nullity(self) -> int:
        return len(self.elements) - self.rank


@dataclass(frozen=True, eq=False)
class Matroid:
    """Matroid given by its bases. Construct through :meth:`from_bases` or the builders below."""

    ground_size: int
    basis_masks: frozenset[int]
    rank: int

    @classmethod
    def from_bases(
        cls, ground_size: int, bases: Iterable[Iterable[int]], validate: bool | None = None
    ) -> "Matroid":
        masks = set()
        for b in bases:
            b = list(b)
            if len(set(b)) != len(b):
                raise MatroidError(f"basis {b} repeats an element")
            for e in b:
                if not isinstance(e, int) or not 0 <= e < ground_size:
                    raise MatroidError(f"element {e!r} outside ground set of size {ground_size}")
            masks.add(to_mask(b))
        return cls.from_masks(ground_size, masks, validate=validate)

    @classmethod
    def from_masks(cls, ground_size: int, masks: Iterable[int], validate: bool | None = None) -> "Matroid":
        masks = frozenset(masks)
        if ground_size < 0:
            raise MatroidError("ground size must be non-negative")
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        if any(m >> ground_size for m in masks):
            raise MatroidError("basis element outside the ground set")
        sizes = {m.bit_count() for m in masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases have different sizes: {sorted(sizes)}")
        if validate is None:
            validate = len(masks) ** 2 <= EXCHANGE_CHECK_LIMIT
            if not validate:
                raise MatroidError(
                    f"{len(masks)} bases exceed the exchange-check limit; pass validate=False to skip it"
                )
        if validate:
            bad = kernels.exchange_violation(masks)
            if bad is not None:
                b1, b2, x = bad
                raise MatroidError(
                    f"basis exchange fails for {_sorted_elems(b1)}, {_sorted_elems(b2)} at element {x}"
                )
        return cls(ground_size, masks, sizes.pop())

    # --- basic data -----------------------------------------------------

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(range(self.ground_size))

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @property
    def bases(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in sorted(self.basis_masks)]

    def sorted_bases(self) -> list[list[int]]:
        return sorted(_sorted_elems(m) for m in self.basis_masks)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground_size == other.ground_size and self.basis_masks == other.basis_masks

    def __hash__(self):
        return hash((self.ground_size, self.basis_masks))

    def __repr__(self):
        return f"Matroid(ground_size={self.ground_size}, rank={self.rank}, bases={len(self.basis_masks)})"

    @cached_property
    def _ranks(self) -> list[int]:
        return kernels.rank_table(self.basis_masks, self.ground_size)

    def rank_mask(self, mask: int) -> int:
        return self._ranks[mask]

    def rank_of(self, subset: Iterable[int]) -> int:
        return self._ranks[self._mask_of(subset)]

    def _mask_of(self, subset: Iterable[int] | int) -> int:
        if isinstance(subset, int):
            return subset
        mask = to_mask(subset)
        if mask >> self.ground_size:
            raise ValueError("subset is not contained in the ground set")
        return mask

    # --- closure, flats, circuits ---------------------------------------

    def closure_mask(self, mask: int) -> int:
        r = self._ranks[mask]
        out = mask
        for e in range(self.ground_size):
            bit = 1 << e
            if not mask & bit and self._ranks[mask | bit] == r:
                out |= bit
        return out

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        return from_mask(self.closure_mask(self._mask_of(subset)))

    def is_flat(self, subset: Iterable[int] | int) -> bool:
        mask = self._mask_of(subset)
        return self.closure_mask(mask) == mask

    def is_independent(self, subset: Iterable[int] | int) -> bool:
        mask = self._mask_of(subset)
        return self._ranks[mask] == mask.bit_count()

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        ranks = self._ranks
        out = []
        for mask in range(1, 1 << self.ground_size):
            size = mask.bit_count()
            if ranks[mask] != size - 1:
                continue
            m = mask
            minimal = True
            while m:
                low = m & -m
                if ranks[mask ^ low] != size - 1:
                    minimal = False
                    break
                m ^= low
            if minimal:
                out.append(mask)
        return tuple(out)

    def circuits(self) -> list[frozenset[int]]:
        return [from_mask(c) for c in self.circuit_masks]

    def loops(self) -> frozenset[int]:
        covered = 0
        for b in self.basis_masks:
            covered |= b
        return from_mask(self.full_mask & ~covered)

    def coloops(self) -> frozenset[int]:
        common = self.full_mask
        for b in self.basis_masks:
            common &= b
        return from_mask(common)

    # --- connectivity ---------------------------------------------------

    @cached_property
    def _components(self) -> tuple[frozenset[int], ...]:
        parent = list(range(self.ground_size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuit_masks:
            elems = _sorted_elems(c)
            root = find(elems[0])
            for e in elems[1:]:
                other = find(e)
                if other != root:
                    parent[other] = root
        groups: dict[int, list[int]] = {}
        for e in range(self.ground_size):
            groups.setdefault(find(e), []).append(e)
        return tuple(sorted((frozenset(g) for g in groups.values()), key=min))

    def connected_components(self) -> list[frozenset[int]]:
        """Classes of "lie on a common circuit", ordered by smallest element."""
        return list(self._components)

    def is_connected(self) -> bool:
        return len(self._components) == 1

    # --- derived matroids -----------------------------------------------

    def dual(self) -> "Matroid":
        full = self.full_mask
        return Matroid(self.ground_size, frozenset(full & ~b for b in self.basis_masks),
                       self.ground_size - self.rank)

    def restriction(self, subset: Iterable[int]) -> tuple["Matroid", tuple[int, ...]]:
        """``M|F`` relabelled to ``0..|F|-1`` in increasing order, plus the original labels."""
        mask = self._mask_of(subset)
        labels = tuple(_sorted_elems(mask))
        r = self._ranks[mask]
        new = set()
        for b in self.basis_masks:
            inter = b & mask
            if inter.bit_count() == r:
                new.add(to_mask(i for i, e in enumerate(labels) if inter >> e & 1))
        return Matroid(len(labels), frozenset(new), r), labels

    def deletion(self, subset: Iterable[int]) -> tuple["Matroid", tuple[int, ...]]:
        return self.restriction(from_mask(self.full_mask & ~self._mask_of(subset)))

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Image under the bijection ``e -> perm[e]``."""
        if sorted(perm) != list(range(self.ground_size)):
            raise ValueError("relabelling must be a permutation of the ground set")
        new = frozenset(to_mask(perm[e] for e in from_mask(b)) for b in self.basis_masks)
        return Matroid(self.ground_size, new, self.rank)

    # --- cyclic flats and circuit-hyperplanes ---------------------------

    def _is_cyclic_mask(self, mask: int) -> bool:
        # no element of the set is a coloop of the restriction
        r = self._ranks[mask]
        m = mask
        while m:
            low = m & -m
            if self._ranks[mask ^ low] != r:
                return False
            m ^= low
        return True

    @cached_property
    def cyclic_flat_masks(self) -> tuple[int, ...]:
        return tuple(
            mask for mask in range(1 << self.ground_size)
            if self._is_cyclic_mask(mask) and self.closure_mask(mask) == mask
        )

    def cyclic_flats(self) -> list[CyclicFlat]:
        """All cyclic flats ordered by bitmask."""
        return [CyclicFlat(from_mask(m), self._ranks[m], m) for m in self.cyclic_flat_masks]

    def is_circuit_hyperplane(self, subset: Iterable[int] | int) -> bool:
        mask = self._mask_of(subset)
        r = self.rank - 1
        if mask.bit_count() != self.rank or self._ranks[mask] != r:
            return False
        # circuit: every one-element deletion is independent (rank r = size - 1)
        m = mask
        while m:
            low = m & -m
            if self._ranks[mask ^ low] != r:
                return False
            m ^= low
        return self.closure_mask(mask) == mask

    def circuit_hyperplane_masks(self) -> list[int]:
        out = []
        for c in self.circuit_masks:
            if c.bit_count() == self.rank and self._ranks[c] == self.rank - 1 and self.closure_mask(c) == c:
                out.append(c)
        return sorted(out)

    def circuit_hyperplanes(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self.circuit_hyperplane_masks()]

    def relax(self, hyperplane: Iterable[int]) -> "Matroid":
        mask = self._mask_of(hyperplane)
        if not self.is_circuit_hyperplane(mask):
            raise PreconditionError(f"{_sorted_elems(mask)} is not a circuit-hyperplane")
        return Matroid(self.ground_size, self.basis_masks | {mask}, self.rank)

    def is_sparse_paving(self) -> bool:
        hyper = set(self.circuit_hyperplane_masks())
        for combo in combinations(range(self.ground_size), self.rank):
            mask = to_mask(combo)
            if mask not in self.basis_masks and mask not in hyper:
                return False
        return True


# --- constructors ------------------------------------------------------------

def uniform(rank: int, ground_size: int) -> Matroid:
    if not 0 <= rank <= ground_size:
        raise MatroidError(f"no uniform matroid of rank {rank} on {ground_size} elements")
    masks = frozenset(to_mask(c) for c in combinations(range(ground_size), rank))
    return Matroid(ground_size, masks, rank)


def free_matroid(ground_size: int) -> Matroid:
    return uniform(ground_size, ground_size)


def graphic(vertices: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid; element ``i`` is ``edges[i]`` and bases are spanning forests."""
    edges = [tuple(e) for e in edges]
    for e in edges:
        if len(e) != 2 or not all(isinstance(v, int) and 0 <= v < vertices for v in e):
            raise MatroidError(f"bad edge {e} for a graph on {vertices} vertices")

    def merges(idx):
        # number of successful unions; equals len(idx) iff idx is a forest
        parent = list(range(vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = 0
        for i in idx:
            a, b = find(edges[i][0]), find(edges[i][1])
            if a != b:
                parent[a] = b
                count += 1
        return count

    rank = merges(range(len(edges)))
    masks = frozenset(
        to_mask(c) for c in combinations(range(len(edges)), rank) if merges(c) == rank
    )
    return Matroid(len(edges), masks, rank)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    shift = m1.ground_size
    masks = frozenset(a | (b << shift) for a in m1.basis_masks for b in m2.basis_masks)
    return Matroid(m1.ground_size + m2.ground_size, masks, m1.rank + m2.rank)


def sparse_paving(n: int, d: int, circuit_hyperplanes: Iterable[Iterable[int]]) -> Matroid:
    """Rank ``d+1`` on ``{0..n}``: every ``(d+1)``-set is a basis except the listed ones."""
    if n < 0 or not 0 <= d <= n:
        raise MatroidError(f"bad parameters n={n}, d={d}")
    hyper = []
    for h in circuit_hyperplanes:
        h = list(h)
        if len(set(h)) != d + 1 or any(not isinstance(e, int) or not 0 <= e <= n for e in h):
            raise MatroidError(f"{h} is not a {d + 1}-subset of 0..{n}")
        hyper.append(to_mask(h))
    if len(set(hyper)) != len(hyper):
        raise MatroidError("circuit-hyperplanes listed twice")
    for a, b in combinations(hyper, 2):
        if (a & b).bit_count() > d - 1:
            raise MatroidError(
                f"{_sorted_elems(a)} and {_sorted_elems(b)} share more than {d - 1} elements"
            )
    hyper_set = set(hyper)
    masks = frozenset(
        m for m in (to_mask(c) for c in combinations(range(n + 1), d + 1)) if m not in hyper_set
    )
    if not masks:
        raise MatroidError("no bases left")
    return Matroid(n + 1, masks, d + 1)


def schubert(b: BinarySequence) -> Matroid:
    """Coloop addition for each 1 and free extension for each 0, reading ``b`` left to right."""
    bases = {0}
    rank = 0
    for i, bit in enumerate(b.bits):
        new_bit = 1 << i
        if bit:
            bases = {B | new_bit for B in bases}
            rank += 1
        else:
            indep = set()
            for B in bases:
                m = B
                while m:
                    low = m & -m
                    indep.add(B ^ low)
                    m ^= low
            bases = bases | {I | new_bit for I in indep}
    return Matroid(len(b.bits), frozenset(bases), rank)


# --- JSON documents ----------------------------------------------------------

def from_document(doc: dict) -> Matroid:
    """Build a matroid from the JSON document schema used by the CLI."""
    if not isinstance(doc, dict):
        raise MatroidError("matroid document must be a JSON object")
    try:
        if "constructor" in doc:
            kind = doc["constructor"]
            params = doc.get("params", {})
            if kind == "uniform":
                return uniform(int(params["rank"]), int(params["ground_size"]))
            if kind == "schubert":
                return schubert(BinarySequence.from_string(str(params["bits"])))
            if kind == "graphic":
                return graphic(int(params["vertices"]), params["edges"])
            if kind == "sparse_paving":
                return sparse_paving(int(params["n"]), int(params["d"]), params["circuit_hyperplanes"])
            raise MatroidError(f"unknown constructor {kind!r}")
        if "bases" in doc:
            ground = doc.get("ground_size")
            if ground is None:
                raise MatroidError("document with explicit bases needs ground_size")
            return Matroid.from_bases(int(ground), doc["bases"])
    except KeyError as exc:
        raise MatroidError(f"missing parameter {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MatroidError):
            raise
        raise MatroidError(str(exc)) from None
    raise MatroidError("document needs either 'bases' or 'constructor'")


def to_document(m: Matroid) -> dict:
    return {"ground_size": m.ground_size, "bases": m.sorted_bases()}
