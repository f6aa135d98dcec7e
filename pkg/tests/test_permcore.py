"""Oracle statistics: golden values, exhaustive cross-checks, invariants."""

import random
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from runlab import permcore as pc


def exhaustive_longest_alt(word):
    """Independent oracle: scan all 2^n subsequences for the longest one
    alternating with a leading descent."""

    def alternates(seq):
        return all(
            seq[i] > seq[i + 1] if i % 2 == 0 else seq[i] < seq[i + 1]
            for i in range(len(seq) - 1)
        )

    n = len(word)
    best = 1 if n else 0
    for mask in range(1, 1 << n):
        sub = [word[i] for i in range(n) if mask >> i & 1]
        if len(sub) > best and alternates(sub):
            best = len(sub)
    return best


def interior_valleys(word):
    return sum(
        1
        for i in range(1, len(word) - 1)
        if word[i - 1] > word[i] < word[i + 1]
    )


perms_st = st.integers(1, 7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestPermutation:
    def test_validates_bijectivity(self):
        pc.Permutation([2, 1, 3])
        with pytest.raises(ValueError):
            pc.Permutation([1, 1, 2])
        with pytest.raises(ValueError):
            pc.Permutation([0, 1])

    def test_complement(self):
        assert pc.Permutation([2, 1, 4, 3, 5]).complement() == pc.Permutation(
            [4, 5, 2, 3, 1]
        )


class TestEnumeration:
    def test_sizes(self):
        assert len(list(pc.enumerate_sn(1))) == 1
        assert len(list(pc.enumerate_sn(3))) == 6
        assert sum(1 for _ in pc.enumerate_sn(8)) == 40320

    def test_lexicographic_and_deterministic(self):
        perms = [p.values for p in pc.enumerate_sn(3)]
        assert perms == sorted(perms)
        assert perms[0] == (1, 2, 3) and perms[-1] == (3, 2, 1)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            list(pc.enumerate_sn(0))
        with pytest.raises(ValueError):
            list(pc.enumerate_sn(11))


class TestStatistics:
    def test_reference_permutation_21435(self):
        p = pc.Permutation([2, 1, 4, 3, 5])
        assert pc.alternating_runs(p) == 4
        assert pc.interior_peaks(p) == 1
        assert pc.left_peaks(p) == 2

    def test_small_words(self):
        assert pc.alternating_runs([1, 2]) == 1
        assert pc.alternating_runs([1]) == 0
        assert pc.interior_peaks([1, 2, 3, 4]) == 0
        assert pc.left_peaks([1, 2, 3]) == 0
        assert pc.descents([1, 2, 3]) == 0
        assert pc.descents([2, 1]) == 1

    def test_altsubseq_small(self):
        assert pc.longest_alt_subseq([1, 2]) == 1
        assert pc.longest_alt_subseq([2, 1]) == 2

    @pytest.mark.parametrize("n", range(2, 9))
    def test_altsubseq_of_decreasing_word(self, n):
        # only one comparison of a strictly decreasing word can be a
        # descent-then-ascent chain, so the best subsequence is a pair
        word = list(range(n, 0, -1))
        assert pc.longest_alt_subseq(word) == 2
        assert exhaustive_longest_alt(word) == 2

    def test_altsubseq_matches_exhaustive_oracle_small(self):
        for n in range(1, 7):
            for word in permutations(range(1, n + 1)):
                assert pc.longest_alt_subseq(word) == exhaustive_longest_alt(word)

    @pytest.mark.parametrize("n", [7, 8, 9, 10])
    def test_altsubseq_matches_exhaustive_oracle_sampled(self, n):
        rng = random.Random(1000 + n)
        for _ in range(60):
            word = list(range(1, n + 1))
            rng.shuffle(word)
            assert pc.longest_alt_subseq(word) == exhaustive_longest_alt(word)


class TestDistributions:
    def test_runs_match_printed_rows(self):
        assert pc.distribution("runs", 4).counts == {1: 2, 2: 12, 3: 10}
        assert pc.distribution("runs", 5).counts == {1: 2, 2: 28, 3: 58, 4: 32}

    def test_peak_rows(self):
        assert pc.distribution("peaks", 2).counts == {0: 2}
        assert pc.distribution("peaks", 3).counts == {0: 4, 1: 2}
        assert pc.distribution("peaks", 4).counts == {0: 8, 1: 16}

    def test_left_peak_rows(self):
        assert pc.distribution("leftpeaks", 2).counts == {0: 1, 1: 1}
        assert pc.distribution("leftpeaks", 3).counts == {0: 1, 1: 5}

    def test_altsubseq_rows(self):
        assert pc.distribution("altsubseq", 2).counts == {1: 1, 2: 1}
        # expansion of (1+x)(2x + 28x^2 + 58x^3 + 32x^4)/2
        assert pc.distribution("altsubseq", 5).counts == {
            1: 1, 2: 15, 3: 43, 4: 45, 5: 16,
        }

    def test_descent_rows(self):
        assert pc.distribution("descents", 2).counts == {0: 1, 1: 1}
        assert pc.distribution("descents", 4).counts == {0: 1, 1: 11, 2: 11, 3: 1}

    def test_accepts_enum_or_string(self):
        assert (
            pc.distribution(pc.Stat.RUNS, 3).counts
            == pc.distribution("runs", 3).counts
        )

    @pytest.mark.parametrize("stat", list(pc.Stat))
    @pytest.mark.parametrize("n", range(1, 8))
    def test_totals_are_factorials(self, stat, n):
        assert pc.distribution(stat, n).total() == factorial(n)


class TestInvariants:
    @given(perms_st)
    def test_left_peaks_bracket_interior_peaks(self, word):
        pk = pc.interior_peaks(word)
        lpk = pc.left_peaks(word)
        if len(word) >= 2:
            assert pk <= lpk <= pk + 1

    @given(perms_st)
    def test_run_count_bounds(self, word):
        runs = pc.alternating_runs(word)
        n = len(word)
        if n >= 2:
            assert 1 <= runs <= n - 1

    @given(perms_st)
    def test_peaks_become_valleys_under_complement(self, word):
        p = pc.Permutation(word)
        assert pc.interior_peaks(p) == interior_valleys(p.complement().values)

    @given(perms_st)
    def test_dp_agrees_with_exhaustive_scan(self, word):
        assert pc.longest_alt_subseq(word) == exhaustive_longest_alt(word)
