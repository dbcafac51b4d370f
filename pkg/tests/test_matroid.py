from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matroidvol.descent import enumerate_sequences, seq_new, top
from matroidvol.engine import sequence_to_chain
from matroidvol.families import K4_EDGES, greedy_circuit_hyperplanes, sparse_paving_instances
from matroidvol.matroid import (
    Matroid,
    MatroidError,
    PreconditionError,
    direct_sum,
    free_matroid,
    from_document,
    graphic,
    schubert,
    sparse_paving,
    to_document,
    uniform,
)


def subsets(m):
    for k in range(m + 1):
        yield from (frozenset(c) for c in combinations(range(m), k))


def brute_rank(m, s):
    return max(len(b & s) for b in m.bases)


def exchange_holds(bases):
    bases = [frozenset(b) for b in bases]
    fam = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in fam for y in b2 - b1):
                    return False
    return True


class TestConstruction:
    def test_uniform(self):
        u = Matroid.from_bases(4, combinations(range(4), 2))
        assert u == uniform(2, 4)
        assert u.rank == 2

    def test_valid_small(self):
        m = Matroid.from_bases(3, [[0, 1], [1, 2]])
        assert m.coloops() == {1}

    def test_size_mismatch(self):
        with pytest.raises(MatroidError):
            Matroid.from_bases(3, [[0, 1], [2]])

    def test_exchange_violation(self):
        with pytest.raises(MatroidError, match="exchange"):
            Matroid.from_bases(4, [[0, 1], [2, 3]])

    def test_out_of_range(self):
        with pytest.raises(MatroidError):
            Matroid.from_bases(3, [[0, 3]])
        with pytest.raises(MatroidError):
            Matroid.from_bases(3, [])

    def test_k4(self, k4):
        assert len(k4.basis_masks) == 16  # 4^(4-2) spanning trees
        assert k4.rank == 3
        assert Matroid.from_bases(6, k4.sorted_bases()) == k4

    def test_uniform_count(self):
        assert len(uniform(3, 6).basis_masks) == 20

    def test_sparse_paving_one(self):
        assert len(sparse_paving(5, 2, [[0, 1, 2]]).basis_masks) == 19

    def test_sparse_paving_rejects_overlap(self):
        with pytest.raises(MatroidError):
            sparse_paving(5, 2, [[0, 1, 2], [0, 1, 3]])

    @pytest.mark.parametrize("n", range(1, 7))
    def test_constructors_are_matroids(self, n):
        for d in range(n):
            for b in enumerate_sequences(n, d):
                assert exchange_holds(schubert(b).bases)
            if d >= 1:
                fam = greedy_circuit_hyperplanes(n, d)
                assert exchange_holds(sparse_paving(n, d, fam).bases)

    def test_graphic_forest_with_loop_edge(self):
        g = graphic(3, [(0, 1), (1, 2), (2, 2)])
        assert g.loops() == {2}
        assert g.coloops() == {0, 1}


class TestRank:
    def test_basic(self, k4, triangles):
        assert k4.rank_of([]) == 0
        assert k4.rank_of(range(6)) == 3
        for t in triangles:
            assert k4.rank_of(t) == 2

    def test_matches_brute_force(self, k4):
        for s in subsets(6):
            assert k4.rank_of(s) == brute_rank(k4, s)

    @pytest.mark.parametrize("b", ["1101010", "1011000", "11100100"])
    def test_monotone_submodular(self, b):
        m = schubert(seq_new(b))
        ss = list(subsets(m.ground_size))
        for a in ss:
            for c in ss:
                ra, rc = m.rank_of(a), m.rank_of(c)
                assert m.rank_of(a | c) + m.rank_of(a & c) <= ra + rc
                if a <= c:
                    assert ra <= rc


class TestOperators:
    def test_closure(self, k4):
        assert uniform(2, 4).closure({0}) == {0}
        assert k4.closure({0, 1}) == {0, 1, 3}
        assert k4.is_flat({0, 1, 3})
        assert not k4.is_flat({0, 1})

    def test_uniform_circuits(self):
        for n in range(1, 7):
            for d in range(n):
                u = uniform(d + 1, n + 1)
                assert set(u.circuits()) == {frozenset(c) for c in combinations(range(n + 1), d + 2)}

    def test_circuits_brute(self, k4):
        dep = [s for s in subsets(6) if brute_rank(k4, s) < len(s)]
        minimal = {s for s in dep if not any(t < s for t in dep)}
        assert set(k4.circuits()) == minimal

    def test_loops_coloops(self):
        f = free_matroid(4)
        assert f.coloops() == set(range(4))
        assert f.loops() == set()
        m = Matroid.from_bases(3, [[0], [1]])
        assert m.loops() == {2}


class TestConnectivity:
    def test_examples(self, k4):
        assert uniform(2, 4).is_connected()
        assert k4.is_connected()
        s = direct_sum(uniform(1, 2), uniform(1, 2))
        assert s.connected_components() == [frozenset({0, 1}), frozenset({2, 3})]

    def test_loops_and_coloops_are_singletons(self):
        m = Matroid.from_bases(4, [[0, 1], [0, 2]])
        assert m.connected_components() == [frozenset({0}), frozenset({1, 2}), frozenset({3})]


class TestDerived:
    def test_dual_uniform(self):
        for n in range(1, 7):
            for d in range(n):
                assert uniform(d + 1, n + 1).dual() == uniform(n - d, n + 1)

    def test_dual_involution(self, k4):
        assert k4.dual().dual() == k4

    def test_restriction(self, k4, triangles):
        r, labels = k4.restriction(triangles[0])
        assert r == uniform(2, 3)
        assert labels == (0, 1, 3)

    def test_deletion(self, k4):
        d, labels = k4.deletion([5])
        assert labels == (0, 1, 2, 3, 4)
        assert d.rank == 3

    def test_relabel(self, k4):
        perm = [5, 4, 3, 2, 1, 0]
        assert k4.relabel(perm).relabel(perm) == k4


class TestCyclicFlats:
    def test_uniform(self):
        for n in range(1, 7):
            for d in range(n):
                flats = uniform(d + 1, n + 1).cyclic_flats()
                assert [f.elements for f in flats] == [frozenset(), frozenset(range(n + 1))]

    def test_k4(self, k4, triangles):
        flats = {f.elements: f.rank for f in k4.cyclic_flats()}
        expected = {frozenset(): 0, frozenset(range(6)): 3}
        expected.update({frozenset(t): 2 for t in triangles})
        assert flats == expected

    def test_members_are_flats_and_unions_of_circuits(self, k4):
        for m in [k4, schubert(seq_new("1101010")), sparse_paving(6, 2, greedy_circuit_hyperplanes(6, 2))]:
            circuits = m.circuits()
            for f in m.cyclic_flats():
                assert m.is_flat(f.elements)
                union = frozenset().union(*[c for c in circuits if c <= f.elements])
                assert union == f.elements

    def test_empty_not_cyclic_with_loop(self):
        m = Matroid.from_bases(3, [[0], [1]])
        assert frozenset() not in {f.elements for f in m.cyclic_flats()}

    @pytest.mark.parametrize("n", range(1, 8))
    def test_schubert_chain(self, n):
        for d in range(n):
            for b in enumerate_sequences(n, d):
                s = schubert(b)
                proper = [f.elements for f in s.cyclic_flats() if 0 < len(f) < n + 1]
                assert sorted(proper, key=len) == sequence_to_chain(b)


class TestCircuitHyperplanes:
    def test_k4(self, k4, triangles):
        assert set(k4.circuit_hyperplanes()) == {frozenset(t) for t in triangles}

    def test_relax_all(self, k4, triangles):
        m = k4
        count = len(m.basis_masks)
        for t in triangles:
            m = m.relax(t)
            count += 1
            assert len(m.basis_masks) == count and m.rank == 3
        assert m == uniform(3, 6)

    def test_relax_rejects(self, k4):
        with pytest.raises(PreconditionError):
            k4.relax([0, 1, 2])

    def test_sparse_paving(self, k4):
        assert uniform(3, 6).is_sparse_paving()
        assert k4.is_sparse_paving()
        assert not schubert(seq_new("1011000")).is_sparse_paving()

    @pytest.mark.parametrize("inst", sparse_paving_instances(6), ids=lambda i: f"n{i.n}d{i.d}a{i.alpha}")
    def test_sparse_paving_cyclic_flats(self, inst):
        m = inst.matroid
        expected = {frozenset(), m.ground_set} | {frozenset(h) for h in inst.hyperplanes}
        assert {f.elements for f in m.cyclic_flats()} == expected
        assert set(m.circuit_hyperplanes()) == {frozenset(h) for h in inst.hyperplanes}
        assert m.is_sparse_paving()

    def test_dual_swaps_hyperplanes(self, k4):
        # complements of circuit-hyperplanes are circuit-hyperplanes of the dual
        dual = k4.dual()
        assert set(dual.circuit_hyperplanes()) == {k4.ground_set - h for h in k4.circuit_hyperplanes()}


class TestSchubert:
    def test_uniform(self):
        for n in range(1, 7):
            for d in range(n):
                assert schubert(top(n, d)) == uniform(d + 1, n + 1)
        assert schubert(seq_new("10")) == uniform(1, 2)

    def test_11010(self):
        # every 3-subset except {0,1,2}, which is the rank-2 cyclic flat of the chain
        s = schubert(seq_new("11010"))
        expected = sorted(list(c) for c in combinations(range(5), 3) if set(c) != {0, 1, 2})
        assert s.sorted_bases() == expected
        assert s.rank_of({0, 1, 2}) == 2


class TestDocuments:
    def test_bases_round_trip(self, k4):
        assert from_document(to_document(k4)) == k4

    @pytest.mark.parametrize("doc, expected", [
        ({"constructor": "uniform", "params": {"rank": 3, "ground_size": 6}}, uniform(3, 6)),
        ({"constructor": "schubert", "params": {"bits": "11010"}}, schubert(seq_new("11010"))),
        ({"constructor": "graphic", "params": {"vertices": 4, "edges": [list(e) for e in K4_EDGES]}},
         graphic(4, K4_EDGES)),
        ({"constructor": "sparse_paving", "params": {"n": 5, "d": 2, "circuit_hyperplanes": [[0, 1, 2]]}},
         sparse_paving(5, 2, [[0, 1, 2]])),
    ])
    def test_constructors(self, doc, expected):
        assert from_document(doc) == expected

    @pytest.mark.parametrize("doc", [
        {}, {"bases": [[0]]}, {"constructor": "nope"}, {"constructor": "uniform", "params": {}},
        {"constructor": "schubert", "params": {"bits": "0110"}}, [1, 2],
    ])
    def test_invalid(self, doc):
        with pytest.raises(MatroidError):
            from_document(doc)


@st.composite
def small_matroids(draw):
    kind = draw(st.sampled_from(["uniform", "schubert", "sparse"]))
    n = draw(st.integers(min_value=1, max_value=6))
    d = draw(st.integers(min_value=0, max_value=n - 1))
    if kind == "uniform":
        return uniform(d + 1, n + 1)
    if kind == "schubert":
        return schubert(draw(st.sampled_from(enumerate_sequences(n, d))))
    fam = greedy_circuit_hyperplanes(n, d) if d >= 1 else []
    k = draw(st.integers(min_value=0, max_value=len(fam)))
    return sparse_paving(n, d, fam[:k])


@settings(max_examples=60, deadline=None)
@given(small_matroids(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(m, rnd):
    perm = list(range(m.ground_size))
    rnd.shuffle(perm)
    r = m.relabel(perm)
    assert len(r.circuits()) == len(m.circuits())
    assert sorted(f.rank for f in r.cyclic_flats()) == sorted(f.rank for f in m.cyclic_flats())
    assert exchange_holds(r.bases)
