"""Invariant checks at small size, run by ``matroidvol selftest``."""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import comb, factorial
from typing import Callable

from matroidvol import engine
from matroidvol.descent import (
    delta, delta_leq, descent_sequence, dual_sequence, enumerate_sequences, eulerian, top,
)
from matroidvol.families import hypersimplices, schubert_matroids, sparse_paving_instances
from matroidvol.oracle import oracle_volume

MAX_N = 6


def check_descent_buckets(max_n: int = MAX_N) -> bool:
    for n in range(1, max_n + 1):
        buckets = Counter(str(descent_sequence(w)) for w in permutations(range(1, n + 1)))
        for d in range(n):
            seqs = enumerate_sequences(n, d)
            if any(buckets[str(b)] != delta(b) for b in seqs):
                return False
            if sum(delta(b) for b in seqs) != eulerian(n, d):
                return False
    return True


def check_duality_and_top(max_n: int = MAX_N) -> bool:
    for n in range(1, max_n + 1):
        for d in range(n):
            if delta_leq(top(n, d)) != eulerian(n, d):
                return False
            if d >= 1 and delta(top(n, d)) != comb(n - 1, d):
                return False
            if any(delta(b) != delta(dual_sequence(b)) for b in enumerate_sequences(n, d)):
                return False
    return True


def check_hypersimplices(max_n: int = MAX_N) -> bool:
    for n, d, u in hypersimplices(max_n):
        vol = engine.volume(u)
        if vol * factorial(n) != eulerian(n, d) or vol != oracle_volume(u).volume:
            return False
    return True


def check_schubert(max_n: int = MAX_N) -> bool:
    for b, s in schubert_matroids(max_n):
        if not s.is_connected():
            continue
        chain = engine.sequence_to_chain(b)
        if sorted(f.mask for f in engine.proper_cyclic_flats(s)) != sorted(sum(1 << e for e in f) for f in chain):
            return False
        if engine.chain_to_sequence(s, engine.chain_from_sequence(s, b)) != b:
            return False
        vol = engine.volume_connected(s)
        if vol != engine.schubert_volume(b) or vol != oracle_volume(s).volume:
            return False
    return True


def check_sparse_paving(max_n: int = MAX_N) -> bool:
    for inst in sparse_paving_instances(max_n):
        vol = engine.volume(inst.matroid)
        if vol != engine.sparse_paving_volume(inst.n, inst.d, inst.alpha):
            return False
        if vol != oracle_volume(inst.matroid).volume:
            return False
        for h in inst.hyperplanes:
            relaxed = inst.matroid.relax(h)
            if engine.volume(relaxed) != engine.relaxation_volume(inst.matroid, h):
                return False
    return True


def check_mobius_sums(max_n: int = MAX_N) -> bool:
    for inst in sparse_paving_instances(max_n):
        if sum(engine.build_chain_poset(inst.matroid).mobius.values()) != 1:
            return False
    for _, s in schubert_matroids(max_n):
        if s.is_connected() and sum(engine.build_chain_poset(s).mobius.values()) != 1:
            return False
    return True


CHECKS: dict[str, Callable[[], bool]] = {
    "descent buckets match permutation enumeration": check_descent_buckets,
    "duality, top-element and binomial identities": check_duality_and_top,
    "hypersimplex volumes (engine = oracle = Eulerian)": check_hypersimplices,
    "Schubert chains and volumes": check_schubert,
    "sparse paving closed form and relaxation": check_sparse_paving,
    "Mobius weights sum to one": check_mobius_sums,
}


def run() -> list[tuple[str, bool]]:
    results = []
    for name, fn in CHECKS.items():
        try:
            ok = bool(fn())
        except Exception:  # a crashing check is a failing check
            ok = False
        results.append((name, ok))
    return results
