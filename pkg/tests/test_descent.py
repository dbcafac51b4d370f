from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import permutation_buckets
from matroidvol.descent import (
    BinarySequence,
    InvalidSequence,
    PartitionInBox,
    bottom,
    delta,
    delta_leq,
    descent_sequence,
    down_set,
    dual_sequence,
    enumerate_sequences,
    eulerian,
    from_partition,
    seq_leq,
    seq_new,
    to_partition,
    top,
)


def brute_leq(a, b):
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


class TestSequence:
    def test_valid(self):
        b = seq_new([1, 1, 0, 1, 0])
        assert (b.n, b.d) == (4, 2)

    def test_smallest(self):
        b = seq_new([1, 0])
        assert (b.n, b.d) == (1, 0)

    @pytest.mark.parametrize("bits", [[0, 1, 1, 0], [1, 1], [1], [], [1, 2, 0], [0, 0]])
    def test_rejects(self, bits):
        with pytest.raises(InvalidSequence):
            seq_new(bits)

    def test_string_round_trip(self):
        assert str(seq_new("11010")) == "11010"
        with pytest.raises(InvalidSequence):
            seq_new("11x0")


class TestOrder:
    def test_bottom_below_top(self):
        for n in range(2, 8):
            for d in range(n):
                assert seq_leq(bottom(n, d), top(n, d))

    def test_examples(self):
        a, b = seq_new("10110"), seq_new("11010")
        assert seq_leq(a, b)
        assert not seq_leq(b, a)
        assert seq_leq(b, b)

    def test_mismatched_posets(self):
        with pytest.raises(ValueError):
            seq_leq(seq_new("1100"), seq_new("11010"))

    def test_top_bottom_are_extremes(self):
        for n in range(1, 8):
            for d in range(n):
                seqs = enumerate_sequences(n, d)
                assert all(seq_leq(bottom(n, d), s) and seq_leq(s, top(n, d)) for s in seqs)

    def test_matches_prefix_definition(self):
        seqs = enumerate_sequences(6, 3)
        for a in seqs:
            for b in seqs:
                assert seq_leq(a, b) == brute_leq(a.bits, b.bits)


class TestEnumerate:
    def test_small(self):
        assert [str(s) for s in enumerate_sequences(3, 1)] == ["1010", "1100"]
        assert [str(s) for s in enumerate_sequences(1, 0)] == ["10"]

    def test_counts_and_order(self):
        for n in range(1, 10):
            for d in range(n):
                seqs = enumerate_sequences(n, d)
                assert len(seqs) == comb(n - 1, d)
                assert [s.bits for s in seqs] == sorted(s.bits for s in seqs)
                assert all((s.n, s.d) == (n, d) for s in seqs)


class TestDescentSequence:
    @pytest.mark.parametrize("word, bits", [
        ((1, 2, 3), "1000"),
        ((3, 2, 1), "1110"),
        ((2, 1, 3), "1100"),
        ((1,), "10"),
    ])
    def test_examples(self, word, bits):
        assert str(descent_sequence(word)) == bits

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            descent_sequence((1, 1, 2))


class TestDelta:
    def test_examples(self):
        assert delta(seq_new("1100")) == 2 == comb(2, 1)
        assert delta(seq_new("1000")) == 1
        assert delta(seq_new("1010")) == 2  # 132 and 231

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_enumeration(self, n):
        buckets = permutation_buckets(n)
        for d in range(n):
            for b in enumerate_sequences(n, d):
                assert delta(b) == buckets[str(b)]
                assert delta_leq(b) == sum(buckets[str(a)] for a in enumerate_sequences(n, d)
                                           if brute_leq(a.bits, b.bits))

    def test_binomial_at_top(self):
        for n in range(2, 11):
            for d in range(1, n):
                assert delta(top(n, d)) == comb(n - 1, d)

    def test_big_integers(self):
        # sum over every descent class is n!
        n = 14
        from math import factorial
        assert sum(eulerian(n, d) for d in range(n)) == factorial(n)
        assert delta(top(n, 6)) == comb(n - 1, 6)

    def test_alternating_records(self):
        # brute-forced values for (10)^{k}; no closed form is asserted
        assert delta(seq_new("1010")) == 2
        assert delta(seq_new("101010")) == permutation_buckets(5)["101010"] == 16


class TestDeltaLeq:
    def test_examples(self):
        assert delta_leq(top(5, 2)) == 66
        assert delta_leq(seq_new("1010")) == 2
        for n in range(2, 8):
            for d in range(n):
                assert delta_leq(bottom(n, d)) == delta(bottom(n, d))

    def test_top_is_eulerian(self):
        for n in range(1, 10):
            for d in range(n):
                assert delta_leq(top(n, d)) == eulerian(n, d)


class TestDownSet:
    def test_examples(self):
        assert down_set(bottom(5, 2)) == [bottom(5, 2)]
        assert {str(s) for s in down_set(seq_new("11010"))} == {"11010", "10110"}
        for n in range(1, 8):
            for d in range(n):
                assert len(down_set(top(n, d))) == comb(n - 1, d)

    def test_sum_is_delta_leq(self):
        for b in enumerate_sequences(7, 3):
            assert sum(delta(a) for a in down_set(b)) == delta_leq(b)


class TestDual:
    def test_examples(self):
        assert str(dual_sequence(seq_new("11100"))) == "10110"
        for n in range(2, 8):
            for d in range(n):
                assert dual_sequence(top(n, d)) == bottom(n, d)
        assert dual_sequence(seq_new("11010")) == seq_new("11010")

    @pytest.mark.parametrize("n", range(1, 9))
    def test_involution_and_invariance(self, n):
        for d in range(n):
            for b in enumerate_sequences(n, d):
                assert dual_sequence(dual_sequence(b)) == b
                assert delta(dual_sequence(b)) == delta(b)


class TestEulerian:
    def test_values(self):
        assert eulerian(5, 2) == 66
        assert eulerian(4, 1) == 11
        assert all(eulerian(n, 0) == 1 for n in range(1, 10))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_partition_by_sequence(self, n):
        buckets = permutation_buckets(n)
        for d in range(n):
            by_descents = sum(v for k, v in buckets.items() if k.count("1") == d + 1)
            assert eulerian(n, d) == by_descents == sum(delta(b) for b in enumerate_sequences(n, d))


class TestPartition:
    def test_examples(self):
        assert to_partition(bottom(6, 3)).parts == ()
        assert to_partition(top(6, 3)).parts == (2, 2, 2)
        assert to_partition(seq_new("11010")).parts == (1,)
        assert to_partition(seq_new("1000")).parts == ()

    def test_box_rejection(self):
        with pytest.raises(ValueError):
            from_partition((3,), 4, 2)
        with pytest.raises(ValueError):
            from_partition((1, 1, 1), 4, 2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_order_isomorphism(self, n):
        for d in range(n):
            seqs = enumerate_sequences(n, d)
            parts = [to_partition(b) for b in seqs]
            assert len(set(parts)) == len(seqs)
            if d and n - d - 1:
                assert len(seqs) == comb(d + n - d - 1, d)  # partitions in a d x (n-d-1) box
            for b, p in zip(seqs, parts):
                assert from_partition(p, n, d) == b
            for a, pa in zip(seqs, parts):
                for b, pb in zip(seqs, parts):
                    assert seq_leq(a, b) == pa.contained_in(pb)

    def test_partition_type(self):
        with pytest.raises(ValueError):
            PartitionInBox((1, 2), rows=2, cols=3)


sequences = st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.integers(min_value=0, max_value=n - 1).flatmap(
        lambda d: st.sampled_from(enumerate_sequences(n, d))
    )
)


@given(sequences)
def test_dual_is_order_reversing_free_involution(b):
    assert dual_sequence(dual_sequence(b)) == b
    assert delta(b) == delta(dual_sequence(b))
    assert (dual_sequence(b).n, dual_sequence(b).d) == (b.n, b.d)


@given(sequences)
def test_partition_round_trip(b):
    p = to_partition(b)
    assert from_partition(p, b.n, b.d) == b
    assert p.size <= b.d * (b.n - b.d - 1)
